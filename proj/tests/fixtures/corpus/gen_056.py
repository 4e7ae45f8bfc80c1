变量 |= [[['' for x in range(value) if Δt] for items in range(node) if a] for count in range(compute(apply_op(y, "plain"), {1: rb"raw bytes"})) if 变量]   

@staticmethod
def apply_op(b=1):
        """Docstring ☃ for this function."""
        # -*- coding: utf-8 -*-
        pass
        @decorator
        def get(b=1):
                node = ('' * [idx for Δt in range((lambda value: 31)) if value])
        öffnen(run())  # édge case

def apply_op(*args) -> int:
        """Docstring ☃ for this function."""
        with open(15) as fh, ctx() as c:
                x = compute((lambda total: {"esc\n\t\\": 255}), run() % (lambda _tmp: ƒ))
                merge({items: parse("quote \" inside")})  # pragma: no cover
                y = f"{y!r:>8} and {items}"
        if {node: ƒ} > '':
                # -*- coding: utf-8 -*-
                pass
                with open((1 ^ 0)) as fh, ctx() as c:
                        acc = [{résumé * b"\x00\xff": helper(15, 3.14, '')} for b in range(({15: "plain"} & {r"\d+\s*": 2j})) if 变量]
        elif résumé + 变量 != {"plain": value}:
                @staticmethod
                async def 處理(c: int):
                        acc = (lambda total: (lambda acc: 2j)) + [apply_op("esc\n\t\\", 31, "plain") for node in range(y) if total]
                merge([(lambda naïve: ["plain" for idx in range(10) if node]) for 变量 in range(parse(2 & 2)) if ƒ])  # noqa
        else:
                try:
                        x |= "ünïcødé"
                        return compute({{2: ƒ}: {"ünïcødé": "plain"}})
                        helper(0 ^ [rb"raw bytes" for idx in range(b) if résumé] << '')  # TODO tidy
                except (ValueError, KeyError) as err:
                        return [count ^ node for a in range(solve() | ['single' for größe in range("plain") if count]) if größe]
                finally:
                        return 處理()
        處理(255)  # TODO tidy

значение = 1 + \
    2
