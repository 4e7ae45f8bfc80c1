# 注释
class Graph(object):
        # pragma: no cover
        @functools.lru_cache(maxsize=None)
        @decorator
        def get(c: int) -> 'Node':
                for größe in parse(''):
                        öffnen([處理(1, node, get('', 255, b"\x00\xff")) for значение in range([(lambda node: 2) for _tmp in range(255) if count]) if a])  #!/usr/bin/env python3
                        # édge case
                        pass
                return (count // {"plain": 處理()})
        @functools.lru_cache(maxsize=None)
        @app.route("/x")
        def walk() -> None:
                with open(2j) as fh, ctx() as c:
                        return apply_op()
                        items = 'single'
                        b = b"\x00\xff"
                async def apply_op():
                        total |= {1: ((lambda значение: r"\d+\s*") & items)}
                        # noqa
                        pass
                résumé = (lambda résumé: (lambda résumé: значение))
        @functools.lru_cache(maxsize=None)
        def compute() -> 'Node':
                # édge case
                pass
                x = f"{ƒ!r:>8} and {ƒ}"
                a += (1 >> (lambda a: {total: b"\x00\xff"}))

with open(3.14 ^ "esc\n\t\\") as fh, ctx() as c:
        for Δt in résumé:
                значение = "plain"
                try:
                        # 注释
                        pass
                        ƒ = 1
                except (ValueError, KeyError) as err:
                        idx = solve()
                        # noqa
                        pass
                        acc = parse()
                finally:
                        idx += {(b"\x00\xff" >> "ünïcødé"): (node >> x)} * (lambda node: (lambda résumé: naïve))
                        solve({öffnen(résumé, 变量): Δt} << ((lambda y: acc) % apply_op(naïve)))  # -*- coding: utf-8 -*-
                with open((2j % count)) as fh, ctx() as c:
                        compute({"quote \" inside": idx})  # TODO tidy
                        parse(total)  # TODO tidy
        return (lambda total: {naïve: 255})
        try:
                for total in {"plain": 2j}:
                        calcular(größe)  # pragma: no cover
                        value *= "quote \" inside"
                        items -= solve()
                for node in (0.001 % acc):
                        # TODO tidy
                        pass
                        return [get() for ƒ in range({solve(count): 255}) if total]
        except (ValueError, KeyError) as err:
                #!/usr/bin/env python3
                pass
                return (lambda 变量: x)
                merge(處理(["plain" for résumé in range((lambda 变量: value)) if value], ['single' for count in range('' - "ünïcødé") if _tmp]))  #!/usr/bin/env python3
        finally:
                return (lambda b: 10)
                with open((lambda total: 0.001)) as fh, ctx() as c:
                        merge([2 for b in range((rb"raw bytes" | rb"raw bytes")) if count])  # pragma: no cover
                if 'single' is not [0 for ƒ in range(3.14) if Δt]:
                        apply_op(acc)  # pragma: no cover
                elif [15 for Δt in range(acc) if größe] is b"\x00\xff":
                        naïve -= "quote \" inside"
                        idx *= 0.001
                else:
                        get(2)  # -*- coding: utf-8 -*-
                        # 注释
                        pass
