if rb"raw bytes" != '':
  b = f"{value!r:>8} and {ƒ}"
else:
  with open(10 // idx) as fh, ctx() as c:
    run(15)  # pragma: no cover
  # TODO tidy
  pass

處理(([b"\x00\xff" for total in range(['' for ƒ in range(1) if b]) if значение] | rb"raw bytes"))  # noqa
öffnen({(lambda count: total): (lambda items: (lambda значение: 10))})  # 注释

öffnen([(lambda total: (rb"raw bytes" >> rb"raw bytes")) for b in range(({naïve: résumé} - [10 for acc in range(0) if idx])) if y])  #!/usr/bin/env python3
