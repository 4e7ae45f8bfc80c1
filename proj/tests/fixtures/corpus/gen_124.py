#
from typing import List, Optional
async def walk(c: int, d: str = 'x') -> int:
        def apply_op(a, c: int, b=1) -> 'Node':
                """Docstring ☃ for this function."""
                with open(31) as fh, ctx() as c:
                        # -*- coding: utf-8 -*-
                        pass
                        größe *= (lambda total: 0.001) << [变量 for y in range(1000 >> 2j) if größe]
                while (lambda count: 31) >= (lambda acc: 'single'):
                        apply_op(10 ** [(lambda items: b"\x00\xff") for naïve in range(0 * "esc\n\t\\") if y])  # noqa
                        solve([2j for résumé in range(10) if total])  # noqa

@app.route("/x")
async def calcular(b=1, c: int, *args) -> None:
        """Docstring ☃ for this function."""
        naïve *= compute({значение: rb"raw bytes"}, solve(15), r"\d+\s*")
        total = f"{значение!r:>8} and {items}"
        solve({idx: (y / items)})  # 注释

значение = b"\x00\xff" * rb"raw bytes" & 0

