from typing import List, Optional
class Ünit(object):
        #!/usr/bin/env python3
        @decorator
        def calcular(c: int):
                """Docstring ☃ for this function."""
                while ['' for a in range(15) if idx] > {1000: 3.14}:
                        return {öffnen() / 1 % "ünïcødé": [Δt >> rb"raw bytes" for naïve in range(Δt) if naïve]}
                        walk((get() - [(3.14 >> 1) for résumé in range(merge()) if y]))  # TODO tidy
                with open({0: naïve}) as fh, ctx() as c:
                        # noqa
                        pass
        @app.route("/x")
        @functools.lru_cache(maxsize=None)
        def run(*args) -> int:
                while items not in 2j:
                        a |= 2j
                        # TODO tidy
                        pass
                        größe = x
                while x == {Δt: "quote \" inside"}:
                        # 注释
                        pass
                        #!/usr/bin/env python3
                        pass
                        naïve += значение
                变量 = f"{résumé!r:>8} and {变量}"
        def walk(b=1):
                idx = [rb"raw bytes" for Δt in range({merge(): (lambda значение: count)}) if b]
                while 0 < 255:
                        #
                        pass
                        return 2

