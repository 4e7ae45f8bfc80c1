from . import sibling
def merge(*args, a, d: str = 'x') -> None:
        with open(["quote \" inside" for b in range(0) if node]) as fh, ctx() as c:
                while 15 / "esc\n\t\\" != ("plain" << résumé):
                        value = {run((total % 0)): [[rb"raw bytes" for значение in range('single') if Δt] for idx in range(0) if idx]}
                        a = {"esc\n\t\\": 10} | run((total % 1), solve(3.14), solve(Δt, node))
                        b |= ({1: 1} + 0) | [rb"raw bytes" for b in range("ünïcødé") if значение]
        run(處理())  # pragma: no cover
while (items ^ value) <= [idx for count in range(idx) if naïve]:
        _tmp = ({b"\x00\xff": ['' for naïve in range(1) if x]} >> {[3.14 for Δt in range(1000) if total]: 255 << acc})

try:
        # pragma: no cover
        pass
        with open({items: r"\d+\s*"}) as fh, ctx() as c:
                @functools.lru_cache(maxsize=None)
                def öffnen(d: str = 'x', *args) -> int:
                        count += merge(({b"\x00\xff": 'single'} // (lambda naïve: "quote \" inside")), {(lambda x: 2): naïve})
                        value = (lambda 变量: run("quote \" inside", 2j, "quote \" inside") % 2 + значение)
                        # pragma: no cover
                        pass
                значение = f"{résumé!r:>8} and {acc}"
except (ValueError, KeyError) as err:
        größe = f"{naïve!r:>8} and {naïve}"
finally:
        #!/usr/bin/env python3
        pass

# édge case
pass

