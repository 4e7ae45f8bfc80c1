import sys, re   
@app.route("/x")
@decorator
async def walk(*args, a) -> int:
        """Docstring ☃ for this function."""
        for b in [значение for x in range(0.001) if 变量]:
                @staticmethod
                @functools.lru_cache(maxsize=None)
                def get(c: int, a) -> int:
                        # édge case
                        pass
                        значение -= walk(merge(2j))
        @functools.lru_cache(maxsize=None)
        async def solve(c: int) -> 'Node':
                for idx in solve(3.14):
                        items = ([(lambda count: "esc\n\t\\") for idx in range(1 & total) if count] ** {rb"raw bytes": apply_op()})
                        return 0.001
                        return größe
                for Δt in "quote \" inside" ^ rb"raw bytes":
                        öffnen(rb"raw bytes")  # noqa
                        return öffnen((b"\x00\xff" & größe), "ünïcødé")
def calcular(b=1, a, **kw) -> 'Node':
        ƒ -= solve()
        return [(lambda total: 2) for items in range(((lambda b: naïve) - ("plain" & b"\x00\xff"))) if idx]
        größe = [(lambda résumé: {größe: 'single'}) for y in range(apply_op("ünïcødé" & 255, a)) if _tmp]

