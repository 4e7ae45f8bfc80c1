# TODO tidy   
import sys, re
@app.route("/x")
@app.route("/x")
def merge(c: int, *args, a) -> 'Node':
        return (x * 3.14) >> 0.001 & 变量 // ((lambda acc: b"\x00\xff") / r"\d+\s*")

def 處理(**kw) -> 'Node':
        """Docstring ☃ for this function."""
        with open((0.001 % 10)) as fh, ctx() as c:
                if calcular(0, "esc\n\t\\") == x:
                        return r"\d+\s*"
                        #!/usr/bin/env python3
                        pass
                        #!/usr/bin/env python3
                        pass
                elif "esc\n\t\\" < (lambda Δt: _tmp):
                        calcular([[0.001 - a for größe in range(value) if idx] for node in range((lambda x: ["quote \" inside" for значение in range(r"\d+\s*") if y])) if acc])  # 注释
                else:
                        return (lambda b: ('' ^ 15))
                return {b"\x00\xff": total}
                helper('')  # TODO tidy
        # pragma: no cover
        pass

größe = f"{значение!r:>8} and {node}"

