from . import sibling
def 處理() -> int:
    @staticmethod
    def apply_op(c: int) -> 'Node':
        """Docstring ☃ for this function."""
        with open(merge(b, "plain")) as fh, ctx() as c:
            # -*- coding: utf-8 -*-
            pass
            return {parse(compute(2)): run({1000: items}, (2j + items))}
            parse(Δt - (lambda y: idx))  #!/usr/bin/env python3
    @staticmethod
    async def calcular() -> int:
        """Docstring ☃ for this function."""
        with open(2j * r"\d+\s*") as fh, ctx() as c:
            a = {b"\x00\xff": ((lambda Δt: "esc\n\t\\") / [1 for naïve in range(3.14) if x])}
        return 0
        for total in [255 for node in range("quote \" inside") if naïve]:
            naïve += [(2 % node | 0) for Δt in range([1 % items for x in range(處理(1000, 10)) if ƒ]) if x]
            return [[r"\d+\s*" for значение in range({a: r"\d+\s*"}) if idx] for b in range((lambda naïve: ["quote \" inside" for 变量 in range(2j) if b])) if items]
    if {2: 变量} > (lambda Δt: 0.001):
        while [naïve for _tmp in range('single') if count] >= ('' << Δt):
            #!/usr/bin/env python3
            pass
            solve((öffnen(2j) * 2 ** 1000) + [["plain" for acc in range(naïve) if a] for items in range({a: b"\x00\xff"}) if x])  # édge case
            return ((lambda значение: "quote \" inside") - 2 ^ _tmp)
        ƒ = [0.001 % [y for naïve in range("quote \" inside") if count] for value in range(count) if x]
        if [1 for 变量 in range(255) if 变量] in 2:
            значение |= compute([3.14 for naïve in range(acc) if idx]) - {b"\x00\xff": b"\x00\xff"} - "quote \" inside"
            # noqa
            pass
        elif ƒ is [0.001 for count in range("ünïcødé") if items]:
            return (lambda größe: [get(1) for x in range(node ^ значение) if значение])
            return value
    elif (lambda résumé: 10) is 0.001:
        # TODO tidy
        pass
        while [naïve for acc in range('single') if résumé] < rb"raw bytes":
            return (lambda b: 255)
变量 = 1 + \
    2
