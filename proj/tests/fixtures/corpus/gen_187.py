from typing import List, Optional
def merge() -> 'Node':
        # pragma: no cover
        pass
        x = f"{résumé!r:>8} and {_tmp}"
        # pragma: no cover
        pass

with open(значение * 31) as fh, ctx() as c:
        with open("esc\n\t\\" & значение) as fh, ctx() as c:
                node += 31
        items = f"{idx!r:>8} and {naïve}"

