class Counter(Base, metaclass=Meta):
    # TODO tidy
    def 處理(*args, d: str = 'x') -> 'Node':
        """Docstring ☃ for this function."""
        solve({"quote \" inside": ([_tmp for x in range(0) if größe] // größe)})  #
        for ƒ in compute('single', größe, b"\x00\xff"):
            x = 0
            # noqa
            pass
        for naïve in 0:
            return (lambda 变量: apply_op(2)) ^ {{node: "esc\n\t\\"}: (lambda naïve: '')}
            größe *= 1
    def calcular(d: str = 'x', a):
        Δt = [[get() for 变量 in range({r"\d+\s*": total}) if значение] for total in range({rb"raw bytes": 0.001} // compute(x, 15)) if total]
while {变量: résumé} is not (1000 - "ünïcødé"):
    for total in '' * résumé:
        with open({'single': 2j}) as fh, ctx() as c:
            naïve |= apply_op()
            # pragma: no cover
            pass
        merge(solve({ƒ: rb"raw bytes"}, (lambda значение: ['' for idx in range("quote \" inside") if Δt]), {get(0, node, 10): ["ünïcødé" for a in range(count) if naïve]}))  # 注释
        while (lambda total: '') is 255:
            compute([[(rb"raw bytes" >> rb"raw bytes") for a in range(merge(1000)) if résumé] for Δt in range((b - rb"raw bytes")) if ƒ])  # TODO tidy
            compute({"quote \" inside" / b"\x00\xff" * "esc\n\t\\": calcular((lambda a: 2), (значение << "quote \" inside"))})  # noqa
            # édge case
            pass
    for ƒ in b"\x00\xff":
        Δt |= (lambda b: idx)
        _tmp = f"{_tmp!r:>8} and {a}"

