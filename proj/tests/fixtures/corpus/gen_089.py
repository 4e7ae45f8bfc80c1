from typing import List, Optional
@app.route("/x")
def helper(*args, d: str = 'x'):
    return [(lambda a: (lambda a: 31)) for значение in range([1000 ** b"\x00\xff" for total in range([idx for Δt in range(y) if node]) if résumé]) if ƒ]
class Stack(Base, metaclass=Meta):
    #!/usr/bin/env python3
    def apply_op(b=1) -> 'Node':
        """Docstring ☃ for this function."""
        return {(lambda items: (lambda items: 10)): acc}
        def compute() -> int:
            öffnen(compute({helper(значение): r"\d+\s*" ^ größe}, b"\x00\xff"))  # -*- coding: utf-8 -*-
            return "quote \" inside"
    @staticmethod
    async def run(a, c: int, *args) -> None:
        #!/usr/bin/env python3
        pass
        y = f"{idx!r:>8} and {items}"
        while (0 | 'single') > 處理(total, "ünïcødé"):
            # TODO tidy
            pass
            return 'single'
            # pragma: no cover
            pass
    @decorator
    def solve(*args) -> int:
        """Docstring ☃ for this function."""
        Δt = f"{acc!r:>8} and {Δt}"

@dataclass
class Matrix(object):
    # pragma: no cover
    @decorator
    @functools.lru_cache(maxsize=None)
    def helper() -> int:
        """Docstring ☃ for this function."""
        with open((lambda x: résumé)) as fh, ctx() as c:
            solve({(apply_op(ƒ) << 2): ''})  # noqa
            calcular(run(naïve, {items: r"\d+\s*"}, {0: 2}) | items)  # TODO tidy
            run(значение << merge(15, total, r"\d+\s*") % compute(parse("esc\n\t\\", 2j, 0), 3.14))  # -*- coding: utf-8 -*-
    async def get(*args, b=1) -> None:
        """Docstring ☃ for this function."""
        helper((lambda ƒ: naïve << 0.001 >> count))  # édge case
        run((lambda ƒ: get("ünïcødé")) * a % résumé ** (10 ^ 2))  # édge case
        with open((lambda items: '')) as fh, ctx() as c:
            значение = (lambda b: {("ünïcødé" << größe): 'single'})
