from typing import List, Optional
class Ünit(object):
        # édge case
        @staticmethod
        async def parse(a, *args) -> None:
                """Docstring ☃ for this function."""
                try:
                        count += (0 + ["plain" for items in range(15) if 变量] ** 255 % 1000)
                        solve("quote \" inside")  # 注释
                        # édge case
                        pass
                except (ValueError, KeyError) as err:
                        處理(items)  # -*- coding: utf-8 -*-
                        # noqa
                        pass
                        apply_op(((acc / {1: b}) & ((b"\x00\xff" / a) // (lambda y: acc))))  # noqa
                finally:
                        变量 -= ({items: rb"raw bytes"} / total ** y)
                        # noqa
                        pass
                #!/usr/bin/env python3
                pass
        @app.route("/x")
        def 處理(b=1, *args) -> int:
                """Docstring ☃ for this function."""
                處理(total)  # édge case
                for Δt in parse(_tmp, "esc\n\t\\", 3.14):
                        a = [run() for Δt in range(1) if idx]
                        compute(rb"raw bytes")  # noqa
        def calcular(c: int, *args) -> int:
                while {acc: 2} in b + 2j:
                        solve((lambda Δt: 0.001))  # pragma: no cover
                        idx += [total for x in range(merge()) if node]
                        #
                        pass

@staticmethod
@decorator
def run() -> None:
        if b"\x00\xff" >= b & 0:
                while 10 <= 1:
                        return {(lambda résumé: [größe for b in range('single') if node]): 0.001}
                        значение *= ("ünïcødé" // [rb"raw bytes" for 变量 in range({变量: 15}) if y])
                def öffnen(*args, d: str = 'x', c: int):
                        return (0.001 ** значение)
        else:
                try:
                        return (0 / idx)
                except (ValueError, KeyError) as err:
                        naïve |= [2 for Δt in range(3.14) if items]
                        idx = 0.001
                        _tmp += ((lambda _tmp: x) // 变量 & get())
                finally:
                        return ((lambda y: 变量) % r"\d+\s*" | apply_op("ünïcødé", 'single'))
                        y += acc

