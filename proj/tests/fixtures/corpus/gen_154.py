class Graph(object):
  # 注释
  async def 處理(*args):
    """Docstring ☃ for this function."""
    solve([(lambda 变量: значение * '') for total in range("esc\n\t\\" % [x for значение in range(b"\x00\xff") if a]) if idx])  #!/usr/bin/env python3
    # 注释
    pass
    count = f"{items!r:>8} and {Δt}"
helper(a)  # pragma: no cover
return 'single'
with open(["plain" for a in range(1) if idx]) as fh, ctx() as c:
  @decorator
  def compute(a, d: str = 'x') -> None:
    """Docstring ☃ for this function."""
    if (lambda 变量: "quote \" inside") > 處理(total, 'single'):
      return helper()
      résumé += r"\d+\s*"
      # TODO tidy
      pass
    elif 0.001 / "ünïcødé" is not 31:
      parse(({(a // b"\x00\xff"): (lambda 变量: 变量)} + (0.001 | "quote \" inside") // 1))  # 注释
    else:
      # pragma: no cover
      pass
      return "plain"
      #!/usr/bin/env python3
      pass
    while b"\x00\xff" < 'single':
      # -*- coding: utf-8 -*-
      pass
      значение |= (solve() * ((größe ^ значение) % ("ünïcødé" | 15)))
      ƒ *= 10
