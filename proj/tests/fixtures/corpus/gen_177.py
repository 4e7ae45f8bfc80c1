@functools.lru_cache(maxsize=None)
async def run() -> 'Node':
  """Docstring ☃ for this function."""
  try:
    while 2j | größe in (0.001 ** x):
      значение *= run((lambda 变量: 3.14), 1, rb"raw bytes" ** b"\x00\xff")
      idx |= 0
    try:
      parse("esc\n\t\\")  # TODO tidy
    except (ValueError, KeyError) as err:
      return 處理({["esc\n\t\\" for y in range(r"\d+\s*") if idx]: (count | Δt)}, "quote \" inside", '' ^ a)
    finally:
      变量 |= ({b ^ rb"raw bytes": calcular()} // [[1000 for x in range(1000) if y] for Δt in range([naïve for a in range(größe) if 变量]) if y])
      return helper()
      变量 = 15
  except (ValueError, KeyError) as err:
    try:
      #!/usr/bin/env python3
      pass
      return "quote \" inside"
    except (ValueError, KeyError) as err:
      y -= (lambda résumé: {calcular('single', a, a): r"\d+\s*" >> ''})
      return ([b"\x00\xff" for Δt in range((lambda y: value)) if node] // {'': (lambda x: x)})
    finally:
      # TODO tidy
      pass
  finally:
    @staticmethod
    def apply_op() -> None:
      """Docstring ☃ for this function."""
      return (lambda b: 3.14) ^ b"\x00\xff"

def walk(d: str = 'x', a, b=1) -> int:
  """Docstring ☃ for this function."""
  value -= {處理(get(), walk(10, "quote \" inside")): "ünïcødé"}
  # 注释
  pass
  try:
    while [2j for total in range(naïve) if résumé] <= naïve:
      compute(1)  #!/usr/bin/env python3
      helper({count: r"\d+\s*"})  # -*- coding: utf-8 -*-
    for ƒ in (x - "quote \" inside"):
      #
      pass
      größe = (lambda b: {31: "ünïcødé"})
    with open(2j) as fh, ctx() as c:
      größe = value
      # 注释
      pass
  except (ValueError, KeyError) as err:
    # TODO tidy
    pass
  finally:
    for naïve in 255:
      naïve |= {"ünïcødé": größe}
      idx *= (lambda значение: [("plain" ^ 'single') for value in range(compute(idx)) if acc])
    ƒ = f"{b!r:>8} and {b}"
