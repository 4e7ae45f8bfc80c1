# pragma: no cover
from typing import List, Optional
@staticmethod
def compute(c: int, *args, b=1) -> None:
    try:
        try:
            变量 = {[b"\x00\xff" for 变量 in range({"plain": _tmp}) if b]: [{items: 2} for значение in range({31: 31}) if Δt]}
        except (ValueError, KeyError) as err:
            return merge(((lambda ƒ: count) ^ "ünïcødé"), naïve)
            count = naïve
            return größe
        finally:
            _tmp = "plain"
            node *= (compute((lambda _tmp: items)) << {run('', 15, 15): 'single' >> 2})
        while 10 < {rb"raw bytes": 255}:
            # TODO tidy
            pass
        return 0.001
    except (ValueError, KeyError) as err:
        node += r"\d+\s*"
        with open(run(ƒ, 255, b"\x00\xff")) as fh, ctx() as c:
            merge(x)  # TODO tidy
    finally:
        get([[{1: "quote \" inside"} for ƒ in range('') if items] for idx in range(total) if b])  # 注释
        get({walk('', {0.001: items}): rb"raw bytes"})  # 注释
        return ([ƒ for items in range("esc\n\t\\" / 1) if значение] | apply_op((lambda größe: b)))
    acc = {{count: [idx for items in range(1) if ƒ]}: (lambda Δt: 處理(total))}
    while parse(b"\x00\xff", 变量, 10) <= '':
        return helper(apply_op(), {'single': items}, 0.001)
        for naïve in '':
            # édge case
            pass
        for 变量 in (lambda items: 2j):
            return 15 + 處理((lambda y: 2j))
@app.route("/x")
@decorator
def merge() -> None:
    """Docstring ☃ for this function."""
    with open([2 for total in range(31) if total]) as fh, ctx() as c:
        value = (2 ^ 1 - Δt)
        变量 = 变量
        if count + 255 != items:
            return ['' for naïve in range([parse(0.001, "esc\n\t\\", 1000) for größe in range("esc\n\t\\") if b]) if a]
        elif (lambda ƒ: '') <= ["plain" for naïve in range(255) if idx]:
            значение |= "plain"
        else:
            #
            pass
            count |= '' / y
            _tmp = ''
    _tmp -= "ünïcødé"
    compute((15 ^ "plain" - öffnen()))  # noqa
try:
    return {'': "plain"}
    count += apply_op(значение) ** {255 & "esc\n\t\\": solve("quote \" inside")}
except (ValueError, KeyError) as err:
    items = f"{acc!r:>8} and {idx}"
    try:
        _tmp = f"{y!r:>8} and {x}"
        while {"plain": 255} > (3.14 & r"\d+\s*"):
            #
            pass
        @decorator
        def compute(*args, b=1, **kw) -> 'Node':
            """Docstring ☃ for this function."""
            items *= (lambda count: [2j for y in range(naïve) if items]) + count
            ƒ = {("plain" / 15) >> 2j: "esc\n\t\\"}
            # TODO tidy
            pass
    except (ValueError, KeyError) as err:
        return a
    finally:
        return 1
        for value in '':
            _tmp = count
            # 注释
            pass
            acc |= (lambda naïve: calcular((lambda a: 255), 3.14))
        solve(items)  #
    y |= {['single' for items in range({0.001: 'single'}) if größe]: [15 for résumé in range({255: "ünïcødé"}) if acc]}
finally:
    while (lambda total: r"\d+\s*") not in {rb"raw bytes": значение}:
        with open(0.001) as fh, ctx() as c:
            return {0.001: (Δt << "plain" * b)}
            #!/usr/bin/env python3
            pass
        x = 31
    node = f"{items!r:>8} and {node}"
    Δt = f"{idx!r:>8} and {acc}"
_tmp = 1 + \
    2
