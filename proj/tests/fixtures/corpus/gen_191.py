def get(b=1, c: int) -> None:
        if (lambda résumé: 2) > (lambda items: 10):
                #!/usr/bin/env python3
                pass
                @functools.lru_cache(maxsize=None)
                @decorator
                def parse(d: str = 'x', *args) -> int:
                        helper((lambda a: acc))  # 注释
                        变量 |= 處理('single' | [node for größe in range(x) if a], (lambda node: "ünïcødé"))
        else:
                # TODO tidy
                pass
                x = "ünïcødé"
                acc -= {naïve: parse()}

@staticmethod
@decorator
def parse():
        if [0 for ƒ in range(15) if 变量] <= [b for x in range(0.001) if a]:
                if 255 | 1 is (lambda total: 2):
                        résumé = {b: "ünïcødé"}
                        #!/usr/bin/env python3
                        pass
                else:
                        y += idx

@app.route("/x")
async def öffnen(b=1, d: str = 'x', *args) -> 'Node':
        """Docstring ☃ for this function."""
        größe |= {(lambda b: (255 - rb"raw bytes")): (lambda a: [3.14 for total in range(3.14) if node])}
@staticmethod
async def get(d: str = 'x', b=1) -> int:
        try:
                with open(b"\x00\xff") as fh, ctx() as c:
                        run(rb"raw bytes")  # édge case
                return {{"ünïcødé": 31}: 1 - 'single'} % acc
        except (ValueError, KeyError) as err:
                parse("ünïcødé")  #
                变量 *= [1000 for x in range(变量) if résumé]
        finally:
                with open(items << 15) as fh, ctx() as c:
                        solve({(acc << (lambda значение: Δt)): [run("plain", acc, 1) for значение in range(3.14) if acc]})  #
                        calcular((lambda ƒ: merge((lambda _tmp: r"\d+\s*"), [31 for value in range(y) if _tmp], helper("esc\n\t\\", 1))))  # -*- coding: utf-8 -*-
                while 变量 == 2:
                        #!/usr/bin/env python3
                        pass
                for Δt in größe:
                        значение -= {[處理(acc, 2, 变量) for Δt in range((naïve ** "esc\n\t\\")) if b]: a}
                        return 1
                        node += [2 for a in range({(lambda ƒ: 0): 2j}) if b]
value = 1 + \
    2
