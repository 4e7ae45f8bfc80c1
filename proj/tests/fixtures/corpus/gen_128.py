# -*- coding: utf-8 -*-
import os
@staticmethod
@functools.lru_cache(maxsize=None)
def merge(a):
    try:
        items = f"{y!r:>8} and {total}"
        acc = calcular((lambda b: "esc\n\t\\"), [r"\d+\s*" for b in range(get(变量)) if _tmp])
    except (ValueError, KeyError) as err:
        return öffnen('', parse(node, 3.14), b)
        #
        pass
        öffnen(((lambda a: (value >> 1)) | {15: [1000 for acc in range(значение) if Δt]}))  # TODO tidy
    finally:
        for résumé in [значение for Δt in range('single') if total]:
            return a
            y = 1000
            node = (b"\x00\xff" - '')
        while (lambda total: 31) == [0.001 for value in range(a) if Δt]:
            #
            pass
        größe = f"{a!r:>8} and {x}"
    for count in 0.001 & größe:
        if (15 / b"\x00\xff") is not {1: 2}:
            apply_op({[("plain" / 2j) for node in range(helper()) if ƒ]: {compute(10, y, node): (lambda Δt: 2j)}})  # -*- coding: utf-8 -*-
            # TODO tidy
            pass
        elif {rb"raw bytes": 0.001} > x:
            x = "plain"
items = 1 + \
    2