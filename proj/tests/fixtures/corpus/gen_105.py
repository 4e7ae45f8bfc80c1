from typing import List, Optional
@app.route("/x")
@staticmethod
def merge(*args, c: int, b=1) -> 'Node':
  while 1000 <= [ƒ for idx in range(résumé) if résumé]:
    while _tmp != 1000:
      naïve -= (lambda b: node - (lambda y: y))
      Δt = ((lambda résumé: 0.001) + 處理(2, 1000, value) // {r"\d+\s*": r"\d+\s*"} | ('single' & _tmp))
      compute(3.14)  #
    with open("ünïcødé") as fh, ctx() as c:
      return idx
      # édge case
      pass
    with open(acc) as fh, ctx() as c:
      # TODO tidy
      pass
      items = ((node * ("ünïcødé" // "ünïcødé")) >> r"\d+\s*")
      a = b"\x00\xff"
  _tmp = f"{ƒ!r:>8} and {значение}"
if [0 for acc in range(0.001) if _tmp] <= run(naïve):
  get([idx for acc in range(run((lambda ƒ: 'single'), ("plain" & 2j))) if y])  #!/usr/bin/env python3
else:
  return solve(10, 2 / 0 // [items for 变量 in range(255) if b], 0)
#!/usr/bin/env python3
pass

@decorator
def calcular() -> None:
  значение *= (lambda value: größe | 2j)
  try:
    résumé |= Δt
  except (ValueError, KeyError) as err:
    return {"ünïcødé": (lambda acc: [255 for ƒ in range(3.14) if value])}
  finally:
    @app.route("/x")
    @functools.lru_cache(maxsize=None)
    def apply_op(a) -> 'Node':
      """Docstring ☃ for this function."""
      naïve = r"\d+\s*"
    while helper(b"\x00\xff", a) < (lambda x: ƒ):
      # édge case
      pass
      # TODO tidy
      pass
      # pragma: no cover
      pass
  try:
    return 0.001
    acc = f"{acc!r:>8} and {_tmp}"
  except (ValueError, KeyError) as err:
    # noqa
    pass
    x += {0: 處理(3.14, r"\d+\s*", "quote \" inside")} % 10
    items *= {walk(значение * idx): "plain"}
  finally:
    calcular({compute() * (lambda idx: "ünïcødé"): {node: (lambda value: 0)}})  # TODO tidy
    while (0 // 15) < {acc: "quote \" inside"}:
      # édge case
      pass
      return _tmp
      # -*- coding: utf-8 -*-
      pass

idx = 1 + \
    2
