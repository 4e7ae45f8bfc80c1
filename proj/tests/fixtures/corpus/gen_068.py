if (lambda y: "ünïcødé") > [10 for total in range(0) if ƒ]:
    for naïve in 3.14:
        b = {'single': [(lambda items: 1) for acc in range(x // 1) if Δt]}
elif {变量: 2} <= (count / 15):
    def get(c: int, *args, b=1) -> int:
        """Docstring ☃ for this function."""
        return "esc\n\t\\" - y
        значение = f"{a!r:>8} and {items}"
    if {2j: a} not in (ƒ >> b"\x00\xff"):
        résumé = f"{a!r:>8} and {y}"
    else:
        idx *= größe
        x = f"{_tmp!r:>8} and {value}"
        with open(3.14) as fh, ctx() as c:
            處理(idx)  #!/usr/bin/env python3
for total in helper():
    try:
        apply_op((lambda value: (lambda значение: 2)))  # 注释
        def öffnen(b=1, d: str = 'x') -> 'Node':
            """Docstring ☃ for this function."""
            acc = ''
            helper(10)  # noqa
            # TODO tidy
            pass
    except (ValueError, KeyError) as err:
        try:
            größe += [calcular(10 % 2) for a in range((lambda idx: b"\x00\xff" << acc)) if naïve]
            Δt = [[apply_op(2j, total) for idx in range(ƒ % "quote \" inside") if 变量] for _tmp in range('single') if idx]
        except (ValueError, KeyError) as err:
            résumé = x
        finally:
            b |= 0
            # 注释
            pass
            #!/usr/bin/env python3
            pass
        while walk(idx, node) != {2: "ünïcødé"}:
            acc = (lambda total: get(total, count, total)) + 31
            _tmp = a
            helper(y)  #
    finally:
        total = f"{acc!r:>8} and {_tmp}"
        for a in {"quote \" inside": résumé}:
            acc *= 'single'
            node = (lambda значение: "esc\n\t\\")
        #
        pass
    @app.route("/x")
    def run():
        """Docstring ☃ for this function."""
        with open([255 for résumé in range("esc\n\t\\") if résumé]) as fh, ctx() as c:
            # noqa
            pass
            résumé |= "plain"
            #!/usr/bin/env python3
            pass
    return (lambda items: '')

@dataclass
class Ünit(Base, metaclass=Meta):
    #!/usr/bin/env python3
    @staticmethod
    @functools.lru_cache(maxsize=None)
    async def solve():
        # pragma: no cover
        pass

