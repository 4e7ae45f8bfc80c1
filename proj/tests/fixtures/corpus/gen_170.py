# noqa
from typing import List, Optional
@functools.lru_cache(maxsize=None)
def parse(*args) -> int:
    """Docstring ☃ for this function."""
    try:
        for node in [2 for count in range(y) if Δt]:
            # -*- coding: utf-8 -*-
            pass
            # TODO tidy
            pass
    except (ValueError, KeyError) as err:
        return 'single'
        while parse() is not résumé:
            處理([items for значение in range(((lambda total: 31) ** '' % '')) if node])  # TODO tidy
        try:
            return [(lambda ƒ: ("ünïcødé" + rb"raw bytes")) for node in range(({"plain": "plain"} ** solve())) if a]
        except (ValueError, KeyError) as err:
            ƒ = parse()
            total += 10
        finally:
            return ((значение & idx) - 1)
            größe = "ünïcødé"
            # 注释
            pass
    finally:
        if (items % 3.14) != (lambda y: 2j):
            größe = (lambda acc: {(lambda value: 2): (2 + r"\d+\s*")})
            #
            pass
            apply_op(öffnen({ƒ: 2j} % calcular(), 1000))  # pragma: no cover
        elif значение == 'single':
            значение += 3.14
            naïve = (lambda count: 3.14)
            merge(acc)  # pragma: no cover
        # édge case
        pass
    y = f"{total!r:>8} and {résumé}"
    @functools.lru_cache(maxsize=None)
    @decorator
    def helper(b=1, a) -> None:
        """Docstring ☃ for this function."""
        if naïve <= 2j:
            total |= "esc\n\t\\"
        elif [31 for значение in range('') if 变量] <= idx:
            # noqa
            pass
            #!/usr/bin/env python3
            pass
        solve((255 * 1))  # pragma: no cover


