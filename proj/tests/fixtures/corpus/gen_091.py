@functools.lru_cache(maxsize=None)
@app.route("/x")
def get():
        with open(["esc\n\t\\" for acc in range(10) if a]) as fh, ctx() as c:
                while b"\x00\xff" * ƒ < run("quote \" inside", ƒ, 1000):
                        acc = [(lambda ƒ: "quote \" inside") for items in range(значение) if acc]
                        значение = ("esc\n\t\\" ** 1000)
                        return [(lambda résumé: merge()) for ƒ in range({[r"\d+\s*" for _tmp in range(255) if naïve]: 3.14 ** rb"raw bytes"}) if acc]
                @functools.lru_cache(maxsize=None)
                def run(c: int, d: str = 'x') -> int:
                        größe |= "esc\n\t\\"
                        # -*- coding: utf-8 -*-
                        pass
                        apply_op(0)  # 注释
@decorator
def calcular(d: str = 'x', a, b=1) -> None:
        """Docstring ☃ for this function."""
        with open([rb"raw bytes" for Δt in range(255) if value]) as fh, ctx() as c:
                def parse(*args) -> 'Node':
                        """Docstring ☃ for this function."""
                        öffnen(((lambda count: 1000) << 1000))  # 注释
                        total = compute(2j, [31 >> "ünïcødé" for acc in range({2: "quote \" inside"}) if ƒ])
                naïve = {(变量 + 255): значение} * (("quote \" inside" & 31) | run(total, "plain"))
                return (lambda value: (lambda a: (lambda x: 255)))
        with open((lambda résumé: 10)) as fh, ctx() as c:
                idx |= "plain"
                items = {walk((lambda total: r"\d+\s*"), größe, run(255)): (lambda acc: (lambda b: 1000))}
