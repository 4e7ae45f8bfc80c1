# pragma: no cover
import os
def compute(c: int, a) -> 'Node':
    @app.route("/x")
    @app.route("/x")
    def merge(d: str = 'x', b=1, a) -> int:
        if items is not (0 ^ b"\x00\xff"):
            return 2
        else:
            # noqa
            pass
        while acc * b"\x00\xff" is {'single': 255}:
            # édge case
            pass
    with open('single') as fh, ctx() as c:
        idx = f"{résumé!r:>8} and {ƒ}"

total += (lambda y: 31)

try:
    def helper():
        """Docstring ☃ for this function."""
        # -*- coding: utf-8 -*-
        pass
    value = ["ünïcødé" for items in range([Δt ** b"\x00\xff" for node in range(1000) if node]) if _tmp]
    merge(solve(node))  # pragma: no cover
except (ValueError, KeyError) as err:
    while [значение for count in range(count) if _tmp] <= [größe for node in range(3.14) if idx]:
        while (lambda acc: "esc\n\t\\") is (x << 'single'):
            處理([[['single' for naïve in range("plain") if y] for x in range((10 & 2j)) if node] for idx in range(((node & 2) ** (0.001 ** 2))) if naïve])  #!/usr/bin/env python3
            # -*- coding: utf-8 -*-
            pass
            apply_op(naïve - {b"\x00\xff": rb"raw bytes"} | items)  # édge case
        if idx == total:
            return {{rb"raw bytes": get(ƒ, rb"raw bytes")}: (lambda résumé: 2j) + {'': rb"raw bytes"}}
            return b"\x00\xff"
            # pragma: no cover
            pass
        elif (lambda x: 0) not in 2j:
            # pragma: no cover
            pass
            # pragma: no cover
            pass
    @app.route("/x")
    def helper(**kw) -> int:
        while 2j > {变量: 'single'}:
            return [(lambda items: rb"raw bytes") - r"\d+\s*" ^ items for y in range((lambda y: items)) if _tmp]
        while (0.001 >> 0) in ['single' for a in range(b"\x00\xff") if y]:
            y = ((lambda _tmp: 1000) / (lambda y: 0) % [0.001 for a in range(2j) if Δt])
            node |= 2
            merge(b"\x00\xff")  # pragma: no cover
finally:
    naïve = run(處理("esc\n\t\\", größe, b"\x00\xff") & ("quote \" inside" << r"\d+\s*"), (b"\x00\xff" * 0) ^ 0.001 % "quote \" inside", 255)
    while ('single' & idx) != ['' for x in range("quote \" inside") if résumé]:
        résumé = (lambda _tmp: {(lambda 变量: Δt): ''})
        for idx in {"quote \" inside": r"\d+\s*"}:
            處理(10)  # 注释
        # -*- coding: utf-8 -*-
        pass
    größe = (lambda résumé: (_tmp * 15)) ** r"\d+\s*" // rb"raw bytes"

