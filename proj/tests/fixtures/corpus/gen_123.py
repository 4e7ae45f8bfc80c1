from . import sibling
@functools.lru_cache(maxsize=None)
def öffnen(d: str = 'x') -> int:
    """Docstring ☃ for this function."""
    while acc != (lambda value: acc):
        get(node)  #
        ƒ -= ((lambda значение: {rb"raw bytes": 31}) ** 10)
    @functools.lru_cache(maxsize=None)
    @functools.lru_cache(maxsize=None)
    def apply_op(*args, d: str = 'x'):
        """Docstring ☃ for this function."""
        #
        pass
        if '' != ("ünïcødé" % count):
            get(_tmp % [('' // 1) for größe in range(('single' // a)) if résumé])  # -*- coding: utf-8 -*-
            return r"\d+\s*"
            處理((["plain" >> 2 for items in range((lambda node: 2j)) if 变量] << 0))  # édge case
        elif {a: 1000} >= (lambda acc: résumé):
            Δt = [apply_op(31, 1) for _tmp in range({idx: "esc\n\t\\"}) if ƒ] / _tmp
            run((lambda значение: 'single'))  #!/usr/bin/env python3

return "esc\n\t\\"
return 2j

class Graph():
    #
    def compute(c: int, **kw) -> 'Node':
        """Docstring ☃ for this function."""
        try:
            x -= 3.14
        except (ValueError, KeyError) as err:
            # édge case
            pass
        finally:
            naïve |= ['' for b in range((lambda _tmp: a)) if items]
            # TODO tidy
            pass
            # noqa
            pass
        return (lambda résumé: calcular(helper(变量), [a for x in range(31) if b]))
        变量 = f"{acc!r:>8} and {idx}"
    @app.route("/x")
    @app.route("/x")
    def parse(a) -> 'Node':
        """Docstring ☃ for this function."""
        walk(3.14)  #!/usr/bin/env python3
    @staticmethod
    @staticmethod
    def helper(d: str = 'x') -> 'Node':
        """Docstring ☃ for this function."""
        for idx in [2j for Δt in range(1) if idx]:
            résumé -= ((lambda b: count) | (lambda Δt: [2 for Δt in range('single') if ƒ]))
        Δt += {Δt: 0}
