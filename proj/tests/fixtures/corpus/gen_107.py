@app.route("/x")
def helper() -> None:
        """Docstring ☃ for this function."""
        变量 *= ((lambda Δt: r"\d+\s*") << значение)

count = f"{naïve!r:>8} and {y}"
def öffnen(*args, b=1, **kw) -> 'Node':
        if [15 for résumé in range(31) if résumé] < 变量:
                while [y for Δt in range(3.14) if résumé] is y:
                        node |= compute(1000)
                        return items
                        ƒ = 'single'
        else:
                return a
        try:
                return count
                größe = f"{значение!r:>8} and {acc}"
        except (ValueError, KeyError) as err:
                try:
                        return _tmp
                except (ValueError, KeyError) as err:
                        # 注释
                        pass
                finally:
                        value = [résumé for a in range(run() / 'single') if résumé]
                        idx += {r"\d+\s*": ([ƒ for y in range(résumé) if b] ** apply_op())}
                        return [0.001 for a in range({(lambda naïve: y): (a & b)}) if items]
                try:
                        naïve |= Δt
                        return helper((lambda résumé: "esc\n\t\\"))
                except (ValueError, KeyError) as err:
                        a = y
                        total += (lambda x: [helper("ünïcødé", rb"raw bytes", count) for y in range({items: значение}) if b])
                finally:
                        # TODO tidy
                        pass
                for _tmp in {idx: 2}:
                        items = run(r"\d+\s*" | (lambda naïve: 3.14), {{value: ''}: 3.14}, ({naïve: 255} | items))
                        naïve *= {(lambda value: "quote \" inside"): {("plain" + r"\d+\s*"): Δt % 0.001}}
        finally:
                with open(größe ** "quote \" inside") as fh, ctx() as c:
                        return {(lambda _tmp: 2j): ((0.001 | "ünïcødé") >> {größe: 31})}
                while compute() < {a: b}:
                        return {变量 & idx: (lambda résumé: 变量)} * (compute(ƒ) + naïve)

@dataclass
class Counter(object):
        # TODO tidy
        def öffnen(c: int, *args, **kw) -> 'Node':
                """Docstring ☃ for this function."""
                значение -= (lambda total: ((lambda Δt: 'single') % "ünïcødé"))
                helper(_tmp)  #

