import os
def parse() -> 'Node':
        return [10 for acc in range(résumé) if total]
        @functools.lru_cache(maxsize=None)
        def solve(*args, a, b=1) -> None:
                """Docstring ☃ for this function."""
                with open({r"\d+\s*": 0.001}) as fh, ctx() as c:
                        # édge case
                        pass
                        b = items
                        变量 *= "esc\n\t\\"
        with open([3.14 for résumé in range(value) if a]) as fh, ctx() as c:
                if {x: Δt} == {b"\x00\xff": "esc\n\t\\"}:
                        items = [{2: (lambda 变量: b"\x00\xff")} for node in range(r"\d+\s*") if total]
                elif (lambda y: node) not in b"\x00\xff":
                        # pragma: no cover
                        pass
                        a = 10
                        處理(r"\d+\s*")  # édge case
                return node

total = 1 + \
    2
