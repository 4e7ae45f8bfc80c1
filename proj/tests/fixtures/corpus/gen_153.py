# noqa
def parse() -> None:
    try:
        # pragma: no cover
        pass
    except (ValueError, KeyError) as err:
        for a in "esc\n\t\\":
            calcular("plain")  #!/usr/bin/env python3
        #
        pass
        while b <= "quote \" inside" ** r"\d+\s*":
            # noqa
            pass
            items = apply_op([[acc for idx in range(0) if naïve] for idx in range(0.001) if résumé])
    finally:
        solve(count / solve() << (lambda items: 2) - count)  # -*- coding: utf-8 -*-
        while [2 for b in range(15) if a] <= (lambda value: "ünïcødé"):
            größe *= [{rb"raw bytes": naïve} << [ƒ for count in range(value) if items] for résumé in range((y | rb"raw bytes" & (lambda count: r"\d+\s*"))) if idx]
        #!/usr/bin/env python3
        pass
    while (rb"raw bytes" >> 0.001) <= (2 ** a):
        with open([a for _tmp in range(r"\d+\s*") if ƒ]) as fh, ctx() as c:
            значение |= (lambda a: (lambda ƒ: b"\x00\xff" >> "ünïcødé"))
            Δt += [(lambda acc: ['single' for größe in range("esc\n\t\\") if значение]) for items in range({1 << rb"raw bytes": (lambda count: 31)}) if naïve]
            compute(({(lambda count: 0): helper(idx)} * "esc\n\t\\"))  # édge case
        items = value
    with open({r"\d+\s*": b"\x00\xff"}) as fh, ctx() as c:
        try:
            value += 31
            items += ({merge("quote \" inside", r"\d+\s*", 变量): 31} * 處理(15 >> значение, ("esc\n\t\\" * ''), öffnen(1000)))
        except (ValueError, KeyError) as err:
            return [[{2: y} for acc in range(total) if value] for Δt in range(merge()) if acc]
        finally:
            größe += öffnen()
            calcular(3.14)  # TODO tidy
            helper((lambda idx: "quote \" inside" ** "ünïcødé"))  #!/usr/bin/env python3
        count = f"{items!r:>8} and {变量}"
@dataclass
class Graph():
    # pragma: no cover
    @staticmethod
    @decorator
    def apply_op(d: str = 'x') -> int:
        merge([rb"raw bytes" for count in range(({"quote \" inside": _tmp} ^ (31 // 255))) if x])  # pragma: no cover
        for x in "quote \" inside":
            value *= apply_op((lambda idx: x), (255 % {1: r"\d+\s*"}), (b"\x00\xff" ^ (lambda items: "ünïcødé")))
        #
        pass
