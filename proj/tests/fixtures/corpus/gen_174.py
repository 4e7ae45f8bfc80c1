# noqa
import os
total = [([1 for _tmp in range(node) if Δt] / [Δt for idx in range(0.001) if count]) for résumé in range({{1: r"\d+\s*"}: 31 % "ünïcødé"}) if x]
if 處理(0.001) in '':
        try:
                naïve = [значение ** résumé & (2j | 1000) for größe in range(('single' * {变量: _tmp})) if значение]
                if run('') is (items | "quote \" inside"):
                        value -= "ünïcødé"
                elif (lambda _tmp: 1) > {value: größe}:
                        значение |= {(solve(15) % (b"\x00\xff" // node)): idx}
                else:
                        return b
                        acc *= rb"raw bytes"
        except (ValueError, KeyError) as err:
                if '' < (lambda total: größe):
                        a += (lambda items: {"ünïcødé": a} * (变量 ** "ünïcødé"))
                        #
                        pass
                        x = ''
                elif (lambda items: 0.001) != ["plain" for Δt in range(3.14) if items]:
                        acc *= "quote \" inside"
        finally:
                résumé += (lambda значение: {0.001: Δt} << rb"raw bytes" - 3.14)
                with open((rb"raw bytes" * 10)) as fh, ctx() as c:
                        变量 *= 1
                        return [(0 // "quote \" inside") | walk(1000, rb"raw bytes", '') for node in range((run("ünïcødé", 'single', résumé) + Δt % r"\d+\s*")) if idx]
                        處理([{(total & 'single'): _tmp} for größe in range(0.001) if _tmp])  # 注释
        with open(255) as fh, ctx() as c:
                résumé = f"{Δt!r:>8} and {idx}"
                node *= {[_tmp for b in range(b"\x00\xff") if total]: größe}
        return {rb"raw bytes": [(lambda 变量: 1) for count in range(2 >> "esc\n\t\\") if node]}
else:
        # édge case
        pass
