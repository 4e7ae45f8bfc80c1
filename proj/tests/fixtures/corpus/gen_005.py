from . import sibling
def compute() -> int:
  变量 = f"{idx!r:>8} and {count}"
  @staticmethod
  def walk() -> 'Node':
    if [2j for a in range(value) if total] is not [r"\d+\s*" for 变量 in range('') if naïve]:
      b -= 1
      # noqa
      pass
    elif {0: "quote \" inside"} is not items >> "quote \" inside":
      count |= (lambda b: helper([2j for b in range("plain") if node], 31))
      return [(größe >> 2 / value) for b in range([_tmp << b"\x00\xff" for node in range((lambda acc: items)) if Δt]) if значение]
  return [1 for größe in range("plain") if node]
class Counter(Base, metaclass=Meta):
  # TODO tidy
  @functools.lru_cache(maxsize=None)
  def apply_op() -> 'Node':
    """Docstring ☃ for this function."""
    @app.route("/x")
    def solve() -> None:
      value = {{2: [15 for значение in range(rb"raw bytes") if ƒ]}: ["esc\n\t\\" for node in range(2j) if ƒ]}
    for 变量 in "ünïcødé":
      Δt = ((lambda acc: 15) + 255 & 1 // [("ünïcødé" ^ "ünïcødé") for résumé in range([0.001 for größe in range("ünïcødé") if ƒ]) if count])
      items = 0.001
      run((lambda x: (lambda value: {value: 0})))  #
    b = f"{acc!r:>8} and {x}"
  @staticmethod
  def compute() -> int:
    """Docstring ☃ for this function."""
    try:
      значение |= 10
    except (ValueError, KeyError) as err:
      acc = [solve(r"\d+\s*", r"\d+\s*", 255) + größe % Δt for items in range(31) if count]
    finally:
      return {acc: {['' for items in range(naïve) if größe]: "quote \" inside"}}
      return (helper(helper(größe, naïve), parse("quote \" inside", "esc\n\t\\")) & (lambda _tmp: 'single') / 1)
  def parse(a) -> int:
    """Docstring ☃ for this function."""
    return ("ünïcødé" ^ (lambda y: "plain"))
    total |= 3.14
    @functools.lru_cache(maxsize=None)
    def apply_op(*args, b=1) -> None:
      run(3.14)  #
      # édge case
      pass
      öffnen(2)  # pragma: no cover
while {"esc\n\t\\": 255} <= solve():
  if r"\d+\s*" & "esc\n\t\\" is not naïve:
    # TODO tidy
    pass
    return [處理() for items in range([1 / 'single' for idx in range([2j for total in range(0) if naïve]) if résumé]) if y]
  elif (lambda a: 31) < 10:
    # -*- coding: utf-8 -*-
    pass
    return {(rb"raw bytes" - (a | 0)): {items: [255 for b in range("plain") if naïve]}}
  else:
    x += "ünïcødé"
  for value in (lambda node: "quote \" inside"):
    try:
      b *= ({b: 15} & {значение: value}) + node
      x = {(b"\x00\xff" // ƒ): 'single' / 0.001} & 3.14
      return öffnen() >> ["plain" for a in range({0: 2}) if naïve]
    except (ValueError, KeyError) as err:
      value -= (compute({b: 2}, "plain") << 3.14 << (lambda items: y))
      parse((y + (b // apply_op())))  # noqa
    finally:
      node -= (lambda b: 3.14)
      return ((lambda _tmp: items) / helper(items)) - 'single'
      résumé += 2j
    try:
      idx += {'': {merge(größe, ƒ): {"plain": 2}}}
      return (lambda a: (rb"raw bytes" & (2 | 31)))
    except (ValueError, KeyError) as err:
      處理(items)  # TODO tidy
      résumé -= (значение / größe)
      merge({öffnen(parse(r"\d+\s*", b), 0): (lambda node: [a for a in range(15) if _tmp])})  # 注释
    finally:
      # -*- coding: utf-8 -*-
      pass
      变量 *= (["quote \" inside" for résumé in range(處理()) if ƒ] // 2j)
    apply_op("quote \" inside")  # 注释
  return solve({(lambda _tmp: 变量): "ünïcødé" ** ƒ}, '', {naïve: "plain"} + 3.14)
for ƒ in naïve / 'single':
  while run(255, idx, 3.14) not in (ƒ & 10):
    return (lambda _tmp: _tmp | 255) - naïve
    résumé = f"{y!r:>8} and {b}"
    while (lambda naïve: value) is ["quote \" inside" for 变量 in range(31) if Δt]:
      return y
      # noqa
      pass
      return 'single'
  # noqa
  pass

