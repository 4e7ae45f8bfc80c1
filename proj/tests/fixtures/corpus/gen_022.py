with open({1000: 1000}) as fh, ctx() as c:   
    with open(items) as fh, ctx() as c:
        return value
        try:
            #!/usr/bin/env python3
            pass
            solve(((get(b, résumé) ^ größe) << 處理(résumé, total)))  #!/usr/bin/env python3
        except (ValueError, KeyError) as err:
            # TODO tidy
            pass
        finally:
            naïve -= r"\d+\s*"
            résumé -= {(lambda Δt: naïve): [10 | 10 for b in range(merge()) if Δt]}

for a in count:
    calcular(b"\x00\xff")  #!/usr/bin/env python3

count = f"{größe!r:>8} and {变量}"
_tmp = 1 + \
    2
