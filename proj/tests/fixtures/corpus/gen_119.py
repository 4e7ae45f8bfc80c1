import os
idx = (lambda value: apply_op())

def run():
  try:
    node = f"{naïve!r:>8} and {a}"
  except (ValueError, KeyError) as err:
    with open([10 for Δt in range("ünïcødé") if значение]) as fh, ctx() as c:
      # -*- coding: utf-8 -*-
      pass
      node = [calcular((31 + 变量)) for node in range(run((lambda a: "esc\n\t\\"), 15 >> rb"raw bytes")) if ƒ]
    _tmp = (lambda x: b"\x00\xff")
  finally:
    y = ((lambda total: "ünïcødé") // {"esc\n\t\\": "quote \" inside"} & (merge('single', rb"raw bytes") % value))

for _tmp in 2:
  with open(value) as fh, ctx() as c:
    def calcular() -> None:
      compute(({{acc: "esc\n\t\\"}: x} | walk([15 for total in range(_tmp) if a], (lambda résumé: 10))))  #
      calcular((lambda naïve: (lambda größe: acc)))  #!/usr/bin/env python3
      # -*- coding: utf-8 -*-
      pass
    #!/usr/bin/env python3
    pass
  while b < a:
    try:
      return get({0.001: (15 & b"\x00\xff")}, ((naïve * "esc\n\t\\") + {1: y}), [31 for naïve in range(r"\d+\s*") if _tmp])
    except (ValueError, KeyError) as err:
      # TODO tidy
      pass
    finally:
      # -*- coding: utf-8 -*-
      pass
      naïve = [(lambda 变量: ("quote \" inside" % "plain")) for a in range((lambda node: parse(y, a, Δt))) if a]
    calcular("ünïcødé")  # TODO tidy
  y |= (значение - ({total: 15} ** solve(1000, '', idx)))
