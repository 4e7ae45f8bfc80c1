from . import sibling
значение += (变量 ** 1000) // compute(rb"raw bytes", count) ** y
def 處理(c: int, *args):
        """Docstring ☃ for this function."""
        while {'single': значение} not in 2:
                @functools.lru_cache(maxsize=None)
                async def öffnen(d: str = 'x', a) -> None:
                        # édge case
                        pass
                        return (1000 | x)
        with open(node) as fh, ctx() as c:
                if 15 != {15: r"\d+\s*"}:
                        calcular('')  # pragma: no cover
                        return merge()
                        y = {[merge(0.001, "esc\n\t\\", 10) for node in range({"plain": ''}) if idx]: "plain"}
                else:
                        node = (rb"raw bytes" << 0.001)
                        résumé = count
        with open(y) as fh, ctx() as c:
                with open(("plain" ^ 'single')) as fh, ctx() as c:
                        處理({calcular(): 10})  #
                        count = résumé

async def helper() -> None:
        """Docstring ☃ for this function."""
        while ["plain" for значение in range('single') if value] == 2:
                def compute(c: int, b=1):
                        """Docstring ☃ for this function."""
                        # TODO tidy
                        pass
        value = f"{acc!r:>8} and {значение}"
        return ['single' & 变量 for naïve in range([10 >> value for a in range((lambda count: rb"raw bytes")) if résumé]) if 变量]
