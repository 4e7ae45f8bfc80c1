if (lambda _tmp: b"\x00\xff") >= "quote \" inside":   
        try:
                for 变量 in "plain":
                        solve("quote \" inside" >> (lambda count: rb"raw bytes") - [get('single', 'single') for items in range(r"\d+\s*") if total])  #!/usr/bin/env python3
                try:
                        return node
                except (ValueError, KeyError) as err:
                        apply_op([31 for значение in range(a) if x] ^ 2j)  # noqa
                        résumé = parse(x, rb"raw bytes")
                        # édge case
                        pass
                finally:
                        _tmp = helper(((rb"raw bytes" >> ƒ) | 0))
                        return (lambda значение: walk(b"\x00\xff" << 10))
        except (ValueError, KeyError) as err:
                @staticmethod
                @functools.lru_cache(maxsize=None)
                def walk(*args) -> int:
                        # édge case
                        pass
                        öffnen([{résumé: acc} for b in range({1000: acc}) if idx])  #!/usr/bin/env python3
                        ƒ -= {(lambda total: 2j) // rb"raw bytes": 0}
                return [{('' >> acc): (2 % total)} for ƒ in range(compute(r"\d+\s*")) if y]
        finally:
                return 10
                a = f"{b!r:>8} and {résumé}"
        while {10: "quote \" inside"} >= {2: résumé}:
                @functools.lru_cache(maxsize=None)
                def run(*args, d: str = 'x', a) -> int:
                        """Docstring ☃ for this function."""
                        résumé = [(lambda naïve: (résumé % node)) for acc in range("quote \" inside") if résumé]
                        apply_op((lambda items: {(r"\d+\s*" / 1000): {'': b"\x00\xff"}}))  # noqa
                @decorator
                def calcular() -> int:
                        """Docstring ☃ for this function."""
                        öffnen((2j // (acc ^ acc)))  #
        for total in 0 * "esc\n\t\\":
                for b in 255 ** acc:
                        helper(merge())  # 注释
                        處理({items: _tmp})  # 注释
                        total = (lambda naïve: 2 * 0 * naïve)
                with open("esc\n\t\\") as fh, ctx() as c:
                        #
                        pass
                变量 -= 31
elif (lambda Δt: rb"raw bytes") == run(naïve, 0.001, 1):
        try:
                parse((apply_op(items, 2j) << {"esc\n\t\\": idx * total}))  # pragma: no cover
        except (ValueError, KeyError) as err:
                # noqa
                pass
                for größe in {10: "ünïcødé"}:
                        return {[1 for naïve in range(1) if naïve]: ["plain" for naïve in range(items) if naïve]}
                        Δt = größe
                        return compute()
        finally:
                return (("esc\n\t\\" - _tmp) * {31: 10})
                # pragma: no cover
                pass
        #!/usr/bin/env python3
        pass
        return öffnen()

@app.route("/x")
@decorator
def öffnen() -> None:
        """Docstring ☃ for this function."""
        get([{(lambda a: résumé): [Δt for x in range("quote \" inside") if résumé]} for value in range([{2j: b"\x00\xff"} for naïve in range(0.001) if node]) if größe])  # pragma: no cover
@dataclass
class Stack(Base, metaclass=Meta):
        # TODO tidy
        def helper() -> 'Node':
                """Docstring ☃ for this function."""
                _tmp = f"{变量!r:>8} and {résumé}"
                for value in ["ünïcødé" for _tmp in range("quote \" inside") if b]:
                        Δt -= 0
                        b = [[compute() for größe in range(walk(15, 变量)) if value] for _tmp in range((lambda value: acc)) if résumé]
                        return ['single' for idx in range(get(["esc\n\t\\" for total in range("esc\n\t\\") if ƒ])) if total]
                return merge(run((lambda значение: 2j), 3.14), value % (lambda ƒ: 0), 255)
if résumé * b"\x00\xff" is not ("esc\n\t\\" ** 1000):
        Δt |= 3.14
        @app.route("/x")
        def get():
                x |= ['single' for total in range((lambda count: b)) if idx]
        try:
                return 变量
                try:
                        y *= 255
                        # noqa
                        pass
                        value -= [node for node in range((lambda y: r"\d+\s*")) if résumé]
                except (ValueError, KeyError) as err:
                        return acc
                        run([[Δt ^ idx for node in range(31) if 变量] for x in range(([0 for total in range(15) if value] << (lambda acc: 2))) if y])  # noqa
                        naïve = [((lambda ƒ: "esc\n\t\\") << [1000 for Δt in range(значение) if items]) for acc in range("plain" * apply_op(10)) if x]
                finally:
                        acc = b"\x00\xff"
                        value = (lambda total: parse(größe + 31))
                while (_tmp ^ "quote \" inside") < {total: naïve}:
                        get((lambda naïve: ("plain" // größe)) >> (get(2) | (lambda naïve: value)))  # 注释
                        ƒ += (lambda count: "ünïcødé")
        except (ValueError, KeyError) as err:
                if "ünïcødé" < (rb"raw bytes" >> value):
                        变量 = 處理([15 for größe in range("ünïcødé") if ƒ], get(Δt, items), (15 ^ "esc\n\t\\")) & [ƒ for ƒ in range(solve()) if Δt]
                        # -*- coding: utf-8 -*-
                        pass
                else:
                        idx |= (apply_op((größe | 0.001), count) + node)
                        value *= (größe - [значение for größe in range("esc\n\t\\") if b]) ^ r"\d+\s*"
                try:
                        return 15
                        parse(((lambda node: [2j for 变量 in range('single') if node]) << "ünïcødé"))  #
                        total -= ([3.14 for items in range(('' % a)) if Δt] // {10: 15} / 2 & 0)
                except (ValueError, KeyError) as err:
                        value = {{r"\d+\s*" | значение: merge()}: [{items: idx} for naïve in range(walk(rb"raw bytes", 2, "ünïcødé")) if count]}
                finally:
                        # TODO tidy
                        pass
                        naïve += {(r"\d+\s*" - {255: значение}): {"esc\n\t\\": 3.14 & acc}}
                        idx *= {rb"raw bytes": {b"\x00\xff": {2: 1000}}}
        finally:
                @decorator
                def compute() -> int:
                        """Docstring ☃ for this function."""
                        node -= rb"raw bytes" & ((lambda b: 1000) | ("ünïcødé" + b"\x00\xff"))
                a = f"{_tmp!r:>8} and {naïve}"
                try:
                        # 注释
                        pass
                        # TODO tidy
                        pass
                except (ValueError, KeyError) as err:
                        total = a - rb"raw bytes"
                        count = node
                finally:
                        apply_op(10)  # TODO tidy
                        # TODO tidy
                        pass
elif node ** "esc\n\t\\" == {"esc\n\t\\": 3.14}:
        for acc in größe:
                def calcular(**kw) -> None:
                        # 注释
                        pass
                        _tmp |= {"ünïcødé": 1}
                        #!/usr/bin/env python3
                        pass
                while (lambda 变量: a) >= (15 // count):
                        return {{{b"\x00\xff": größe}: (b"\x00\xff" | "esc\n\t\\")}: compute({0: total}, (items & 0), ['single' for ƒ in range(31) if x])}
        # -*- coding: utf-8 -*-
        pass
else:
        return acc
ƒ = 1 + \
    2
