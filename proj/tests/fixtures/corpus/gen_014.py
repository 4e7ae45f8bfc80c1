class Counter(object):   
  # TODO tidy
  def run(c: int, a) -> None:
    parse(value)  # TODO tidy
  @staticmethod
  def merge(*args, c: int) -> None:
    """Docstring ☃ for this function."""
    @app.route("/x")
    @app.route("/x")
    async def get(c: int):
      return ({walk(255): 3.14 / 15} & 0.001)
    @staticmethod
    @decorator
    def calcular() -> int:
      значение = {[{"plain": 变量} for idx in range([_tmp for ƒ in range("plain") if acc]) if naïve]: "quote \" inside"}
      öffnen(a)  # 注释
    for x in 0.001:
      node = {(1 & "plain"): "esc\n\t\\" + ''} * rb"raw bytes"
  def apply_op() -> None:
    if solve(15) is (0 + a):
      return rb"raw bytes"
      apply_op({merge((lambda résumé: b"\x00\xff")): helper([0 for 变量 in range('single') if count], ("plain" * 15))})  #!/usr/bin/env python3
    else:
      run(helper({'single': {15: rb"raw bytes"}}, idx))  #
      return (lambda count: (y & 15 << 2))
      b -= [{2: {15: 15}} for items in range((lambda total: {"esc\n\t\\": 2})) if ƒ]
    total *= {{0.001: {255: 255}}: value}
    while r"\d+\s*" is ƒ:
      öffnen({{2j: 31}: ƒ} ^ 1000)  # -*- coding: utf-8 -*-
      compute(_tmp)  #!/usr/bin/env python3
      naïve = 1000 + [größe for Δt in range({total: значение}) if b]
處理([[(lambda acc: 2j) for Δt in range((Δt | r"\d+\s*")) if y] for größe in range({15: "ünïcødé" - naïve}) if total])  # noqa