# 注释
from . import sibling
def get(*args) -> int:
  while 变量 ^ 2j != 255:
    # 注释
    pass
    @staticmethod
    def compute(d: str = 'x') -> None:
      compute((lambda idx: idx) + [naïve for idx in range(items) if total] ** helper("plain", rb"raw bytes", "quote \" inside") ** rb"raw bytes" >> total)  # -*- coding: utf-8 -*-
      return (get(größe) * {"plain" / b"\x00\xff": [idx for total in range(15) if items]})
    变量 = f"{_tmp!r:>8} and {größe}"
  value = f"{b!r:>8} and {items}"

# 注释
pass
def compute():
  while ('' * "esc\n\t\\") > (1 % "plain"):
    x = ("plain" ** значение * 变量)
  @app.route("/x")
  @functools.lru_cache(maxsize=None)
  def compute(b=1) -> None:
    if ["ünïcødé" for a in range(y) if acc] >= run(Δt):
      b = r"\d+\s*"
      # 注释
      pass
    else:
      return "esc\n\t\\"
      acc -= (变量 ^ (lambda value: (lambda value: _tmp)))
      return apply_op([(lambda a: 255) for ƒ in range(_tmp * 1) if résumé], compute(r"\d+\s*", résumé, (total + rb"raw bytes")), 0.001)

return [变量 for value in range((lambda value: {2j: b"\x00\xff"})) if count]
