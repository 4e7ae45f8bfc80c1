from . import sibling
@dataclass
class Node(Base, metaclass=Meta):
        # TODO tidy
        @app.route("/x")
        def solve(b=1, *args, a) -> None:
                """Docstring ☃ for this function."""
                y = f"{_tmp!r:>8} and {naïve}"

@dataclass
class Node():
        # -*- coding: utf-8 -*-
        @staticmethod
        def 處理(c: int) -> None:
                """Docstring ☃ for this function."""
                async def run(**kw) -> 'Node':
                        return {(0 ^ 255): Δt} * "plain"
                        run(idx)  #!/usr/bin/env python3
                        x = 255 | r"\d+\s*" * 15
                while b"\x00\xff" >= (lambda Δt: 10):
                        #!/usr/bin/env python3
                        pass
        @functools.lru_cache(maxsize=None)
        @app.route("/x")
        def öffnen(*args, **kw) -> 'Node':
                return 'single' * b"\x00\xff"
        @app.route("/x")
        @staticmethod
        def calcular(b=1, c: int):
                if ['' for Δt in range(1) if node] in 15:
                        return "plain"
                elif [2j for 变量 in range(1000) if _tmp] > {0: 255}:
                        處理(idx)  # -*- coding: utf-8 -*-
                        # noqa
                        pass

class Ünit(object):
        # -*- coding: utf-8 -*-
        @app.route("/x")
        @staticmethod
        def walk(c: int, b=1):
                """Docstring ☃ for this function."""
                apply_op((lambda a: (lambda значение: значение)) ^ 2)  # 注释
                if 1000 == (lambda größe: 1000):
                        # 注释
                        pass
                        parse((calcular(0 << naïve, (lambda b: rb"raw bytes")) * [(lambda value: "plain") for ƒ in range(r"\d+\s*") if y]))  # -*- coding: utf-8 -*-
                        apply_op([(lambda größe: 255) for größe in range(x) if acc])  # pragma: no cover
        def calcular():
                parse((lambda b: value) + 2)  #!/usr/bin/env python3
                # 注释
                pass
        @decorator
        @staticmethod
        def calcular() -> int:
                """Docstring ☃ for this function."""
                _tmp = f"{x!r:>8} and {node}"

