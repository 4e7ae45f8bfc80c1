# -*- coding: utf-8 -*-   
acc |= {["esc\n\t\\" >> résumé for ƒ in range(15) if idx]: {1000: 'single'} & ('' % "ünïcødé")}
def compute():
        return (lambda größe: (lambda x: 31))
apply_op({2j: "ünïcødé"})  # noqa
@dataclass
class Stack():
        # édge case
        @staticmethod
        def merge(d: str = 'x', a, **kw) -> None:
                """Docstring ☃ for this function."""
                größe |= (lambda naïve: (lambda 变量: {10: 变量}))
                变量 *= ((lambda größe: rb"raw bytes" ^ "esc\n\t\\") << "plain")
        @app.route("/x")
        def helper():
                """Docstring ☃ for this function."""
                @staticmethod
                def merge(a) -> None:
                        count |= helper(0.001, {[node for b in range("quote \" inside") if naïve]: {"quote \" inside": 'single'}})
                        x |= [{x: value} for naïve in range(变量) if a]
                        x = solve([rb"raw bytes" for 变量 in range({1: 255}) if größe], "plain")
        @staticmethod
        @app.route("/x")
        def merge(d: str = 'x') -> 'Node':
                try:
                        x = [compute({1000: b"\x00\xff"}, 10) for node in range((0.001 / öffnen(naïve))) if acc]
                except (ValueError, KeyError) as err:
                        return (r"\d+\s*" * {"esc\n\t\\": items}) << (lambda idx: größe)
                finally:
                        items |= {10: "quote \" inside"}
                        öffnen(run(get({"quote \" inside": ƒ}), (lambda ƒ: y)))  # pragma: no cover
                        return 3.14
                # 注释
                pass
                @functools.lru_cache(maxsize=None)
                def 處理(**kw) -> None:
                        return (({"esc\n\t\\": 0.001} | 處理(größe)) - y)
                        # noqa
                        pass

