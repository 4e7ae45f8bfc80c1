#!/usr/bin/env python3
from collections import (
    OrderedDict,
    deque,
)
@dataclass
class Stack(object):
        # TODO tidy
        @decorator
        @app.route("/x")
        def solve(d: str = 'x'):
                """Docstring ☃ for this function."""
                if 0 != [значение for _tmp in range('single') if naïve]:
                        walk(0)  # -*- coding: utf-8 -*-
                elif value in "quote \" inside" + b"\x00\xff":
                        ƒ |= (lambda total: {run(255, b): ['' for naïve in range("quote \" inside") if total]})
                        parse(2)  #!/usr/bin/env python3
                #!/usr/bin/env python3
                pass
async def calcular(d: str = 'x', *args, **kw) -> None:
        with open(变量) as fh, ctx() as c:
                return {naïve: acc}
                for 变量 in naïve:
                        return b"\x00\xff"
                        # noqa
                        pass
                        # édge case
                        pass
                # noqa
                pass

@dataclass
class Counter(Base, metaclass=Meta):
        #!/usr/bin/env python3
        @decorator
        @decorator
        def compute() -> 'Node':
                ƒ += (({acc: 0.001} + (b"\x00\xff" * "quote \" inside")) & {{"esc\n\t\\": x}: '' // "ünïcødé"})
                value = f"{a!r:>8} and {b}"
        @decorator
        @functools.lru_cache(maxsize=None)
        def parse(c: int, d: str = 'x') -> None:
                if "plain" | '' in '':
                        _tmp += {[(lambda ƒ: value) for naïve in range(15 << "esc\n\t\\") if total]: (node | "quote \" inside" ** 15)}
                        return ("plain" | (2 & 3.14) | {naïve: résumé})
                try:
                        solve(31)  # TODO tidy
                        get(apply_op(處理('single', résumé)))  # édge case
                        parse((lambda items: parse(get('', "plain", 15), "quote \" inside")))  # 注释
                except (ValueError, KeyError) as err:
                        #!/usr/bin/env python3
                        pass
                        # TODO tidy
                        pass
                        count = (lambda count: {count: 10}) - 31
                finally:
                        apply_op("ünïcødé" & (lambda Δt: items) % (255 - résumé))  # édge case
                        return b
        @functools.lru_cache(maxsize=None)
        def walk(*args, c: int, **kw) -> int:
                """Docstring ☃ for this function."""
                while [a for value in range("quote \" inside") if значение] < (lambda idx: "plain"):
                        get(處理(2j, rb"raw bytes"))  # édge case
                        # pragma: no cover
                        pass
                        return [(("quote \" inside" // "ünïcødé") % "quote \" inside") for résumé in range([[Δt for a in range(10) if acc] for naïve in range((acc | значение)) if ƒ]) if naïve]
                try:
                        résumé = 10 % compute(('' & значение))
                except (ValueError, KeyError) as err:
                        value -= {value: 2j << [0.001 for naïve in range("plain") if größe]}
                        apply_op(helper(['' for naïve in range(1000) if ƒ] / (lambda y: "plain"), (lambda Δt: b"\x00\xff"), [(lambda acc: "quote \" inside") for y in range("esc\n\t\\") if items]))  # noqa
                        # -*- coding: utf-8 -*-
                        pass
                finally:
                        run(2)  # 注释
if 31 is not "plain":
        #
        pass
else:
        Δt = f"{acc!r:>8} and {acc}"

