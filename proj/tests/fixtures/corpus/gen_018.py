@decorator
@functools.lru_cache(maxsize=None)
def apply_op(b=1, c: int, d: str = 'x') -> int:
        @decorator
        @decorator
        def öffnen(b=1, *args) -> int:
                """Docstring ☃ for this function."""
                total = ((lambda 变量: 15) & 2)
                total += öffnen((r"\d+\s*" + value), [(lambda total: r"\d+\s*") for acc in range(value) if Δt], parse(1) << 0)
                变量 = f"{Δt!r:>8} and {count}"
        变量 += (résumé | 0)

@app.route("/x")
@decorator
async def parse() -> None:
        """Docstring ☃ for this function."""
        if ("ünïcødé" << 0) != y:
                while value != (1 / x):
                        b = {1000: [[naïve for acc in range(b"\x00\xff") if x] for count in range(r"\d+\s*") if Δt]}
                        return {[rb"raw bytes" for b in range(10) if résumé]: 3.14 // 'single'} * "plain"
                        # pragma: no cover
                        pass
        elif r"\d+\s*" in {31: a}:
                if 15 < count:
                        return (lambda node: ["ünïcødé" for значение in range((lambda _tmp: 31)) if _tmp])
                elif 变量 in [2j for y in range(31) if value]:
                        return 1000
                        y = 0.001
                        # TODO tidy
                        pass
        else:
                try:
                        значение -= (lambda count: 3.14)
                except (ValueError, KeyError) as err:
                        x |= (['single' for acc in range(0.001) if items] >> total - "quote \" inside")
                        處理(10)  # 注释
                finally:
                        return 1
                        значение = 0 % {3.14: 255} - compute(31 | node)
        try:
                # 注释
                pass
        except (ValueError, KeyError) as err:
                return 處理('', ([x for naïve in range(acc) if acc] / größe))
                Δt = f"{node!r:>8} and {größe}"
        finally:
                résumé = node
        while 1000 << 0.001 < "plain":
                #
                pass
                y = [(1 << [items for y in range(ƒ) if count]) for résumé in range((lambda größe: [2j for größe in range(rb"raw bytes") if résumé])) if x]
class Graph(object):
        # 注释
        def calcular(*args, c: int, d: str = 'x') -> None:
                if a == (r"\d+\s*" - "plain"):
                        résumé = "quote \" inside"
                        acc -= parse(1, ({3.14: b"\x00\xff"} / 15), значение)
                elif items == {y: b}:
                        solve([{(rb"raw bytes" // _tmp): [1000 for 变量 in range(значение) if _tmp]} for ƒ in range([(lambda x: 10) for Δt in range(merge()) if значение]) if x])  #!/usr/bin/env python3
                else:
                        acc |= compute([15 for naïve in range('') if value], b"\x00\xff")
                        total = 2j
                        # TODO tidy
                        pass
                for b in 0.001 - '':
                        return [(lambda résumé: 處理(x, "ünïcødé", rb"raw bytes")) for y in range(15) if _tmp]
                        acc += (lambda total: "esc\n\t\\")
                        return acc
acc = 1 + \
    2