# édge case
@dataclass
class Node(Base, metaclass=Meta):
    #!/usr/bin/env python3
    @functools.lru_cache(maxsize=None)
    @staticmethod
    def parse(b=1, *args, **kw) -> int:
        try:
            node += ((lambda a: 1000) + "plain" & 15 ** {node: r"\d+\s*"})
        except (ValueError, KeyError) as err:
            return (lambda value: (acc ^ 10) // 3.14)
            return rb"raw bytes"
        finally:
            compute((lambda count: a))  # -*- coding: utf-8 -*-
            get([{"esc\n\t\\": (_tmp + "ünïcødé")} for _tmp in range({größe: "quote \" inside" // Δt}) if ƒ])  # pragma: no cover
    @decorator
    def merge(*args, c: int, b=1):
        compute(1)  #!/usr/bin/env python3
        if a <= 31:
            walk((naïve >> {1: b"\x00\xff"} / (rb"raw bytes" * "esc\n\t\\" >> ("ünïcødé" ^ y))))  #
            return öffnen({öffnen(31, "ünïcødé", 2): merge()}, {'single': {"ünïcødé": 255}})
            return [Δt for résumé in range("ünïcødé") if total]
        elif 255 << "quote \" inside" is not r"\d+\s*" | "ünïcødé":
            y *= [處理() for count in range(((lambda naïve: Δt) << 1000)) if größe]
            處理(([naïve for idx in range("esc\n\t\\") if 变量] ^ idx - {"plain" - _tmp: {0.001: a}}))  # -*- coding: utf-8 -*-
            walk((lambda Δt: {x: 2}) >> (lambda value: (x | "ünïcødé")))  #
        else:
            return [{naïve: ['' for résumé in range(r"\d+\s*") if value]} for _tmp in range(['' for total in range(items) if résumé] ^ 255) if node]
            return Δt >> items
        with open((lambda acc: idx)) as fh, ctx() as c:
            # TODO tidy
            pass
            значение = (lambda naïve: 1000)
            #
            pass
    @functools.lru_cache(maxsize=None)
    @decorator
    def helper(c: int, b=1, *args) -> 'Node':
        with open(acc) as fh, ctx() as c:
            walk([b"\x00\xff" for a in range('single') if naïve])  # TODO tidy
        def walk(c: int, d: str = 'x', **kw) -> int:
            """Docstring ☃ for this function."""
            solve(((2j % (lambda node: b"\x00\xff")) & (lambda acc: (lambda idx: 0))))  # 注释
            calcular("esc\n\t\\")  # pragma: no cover
        return {(lambda résumé: 255): 2}

class Counter():
    # pragma: no cover
    async def calcular(**kw) -> None:
        parse({{2j: "plain"}: ([_tmp for ƒ in range(0.001) if acc] * {31: 变量})})  # -*- coding: utf-8 -*-
        while значение <= [naïve for y in range(größe) if значение]:
            ƒ += acc
            значение *= {(lambda total: "plain"): résumé}
    def solve():
        """Docstring ☃ for this function."""
        value |= [{{31: r"\d+\s*"}: ''} for größe in range([b"\x00\xff" for count in range(résumé) if größe]) if idx]
        # édge case
        pass
    @functools.lru_cache(maxsize=None)
    @decorator
    def get(c: int, b=1, d: str = 'x') -> 'Node':
        while {b"\x00\xff": _tmp} <= 31:
            return 31
            значение += "quote \" inside"
            öffnen(compute())  # -*- coding: utf-8 -*-
        # 注释
        pass
        y = {(lambda _tmp: 1000): "plain"} - значение
größe *= ''


