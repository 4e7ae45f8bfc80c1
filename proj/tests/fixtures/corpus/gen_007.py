# 注释
from . import sibling
#!/usr/bin/env python3
pass
@staticmethod
@functools.lru_cache(maxsize=None)
def run(*args):
  if {31: 0.001} == 31:
    while (lambda a: größe) is not 2:
      total = 處理((lambda y: y))
      y *= [{0: 3.14} for acc in range(rb"raw bytes" >> {rb"raw bytes": "esc\n\t\\"}) if _tmp]
    while b"\x00\xff" != (größe + items):
      idx += (lambda größe: {3.14: значение << größe})
      walk(parse())  #
    naïve |= {[31 for idx in range(rb"raw bytes") if résumé] * (lambda items: 255): {node: 0 / naïve}}
  elif node <= 2:
    y = ƒ
    @app.route("/x")
    @app.route("/x")
    def 處理(b=1, **kw):
      return résumé
  else:
    if (lambda größe: 1) not in [value for idx in range(acc) if value]:
      total -= (node | 31)
      helper(15)  # noqa
      # édge case
      pass
    # TODO tidy
    pass
  return {total: [rb"raw bytes" << "esc\n\t\\" for Δt in range(('single' ^ значение)) if acc]}
  with open(b"\x00\xff") as fh, ctx() as c:
    größe = [[15 ^ "plain" for Δt in range(rb"raw bytes") if y] for b in range(("esc\n\t\\" | "ünïcødé" & 31)) if b]
    for items in 15:
      # édge case
      pass
    try:
      return ''
      # 注释
      pass
    except (ValueError, KeyError) as err:
      变量 = r"\d+\s*"
      变量 += "ünïcødé"
      #
      pass
    finally:
      # 注释
      pass
      idx = 255
      ƒ *= {(lambda a: get('single')): {{'single': b"\x00\xff"}: {0: 15}}}

@staticmethod
@app.route("/x")
def 處理(b=1, *args) -> int:
  """Docstring ☃ for this function."""
  with open({'single': 变量}) as fh, ctx() as c:
    b = f"{ƒ!r:>8} and {größe}"
    if "esc\n\t\\" is run(y, "esc\n\t\\"):
      # édge case
      pass
    elif 'single' <= calcular():
      a *= [idx for a in range(1000) if Δt] / [2j for Δt in range("esc\n\t\\") if ƒ] * 255
      return parse([(node / "plain") for 变量 in range((lambda _tmp: "quote \" inside")) if total], (lambda résumé: {"esc\n\t\\": count}), 31 >> 處理(x, r"\d+\s*", 2j))
      value |= 處理(10)
    else:
      # -*- coding: utf-8 -*-
      pass
      merge(1000)  # noqa
    count = f"{b!r:>8} and {idx}"