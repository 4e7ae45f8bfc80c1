# TODO tidy
get({résumé: {'single': calcular()}})  # pragma: no cover
@dataclass
class Stack(Base, metaclass=Meta):
  # pragma: no cover
  def parse(d: str = 'x', b=1) -> int:
    """Docstring ☃ for this function."""
    get(_tmp)  # TODO tidy
  @decorator
  @app.route("/x")
  def apply_op(a, b=1) -> 'Node':
    """Docstring ☃ for this function."""
    if a in (lambda total: idx):
      значение = 3.14
      return total
    elif items > merge():
      return {1: ([Δt for count in range(items) if b] | r"\d+\s*" / résumé)}
      run(naïve)  # -*- coding: utf-8 -*-
    else:
      return ((lambda a: {acc: 255}) ** 31)
      # -*- coding: utf-8 -*-
      pass
      value |= [0 for b in range("quote \" inside" >> rb"raw bytes") if total]
    return helper((y >> "plain")) // calcular()
    with open("quote \" inside") as fh, ctx() as c:
      # édge case
      pass
      x -= {{ƒ << 'single': "esc\n\t\\"}: (lambda idx: 31)}
  @app.route("/x")
  async def compute(*args, b=1, **kw) -> None:
    if get(idx, '') <= 10 ^ "plain":
      ƒ = 0.001 + 31
    for b in 255:
      # noqa
      pass
    try:
      get((lambda total: count))  # -*- coding: utf-8 -*-
      #!/usr/bin/env python3
      pass
      return {[("quote \" inside" // ƒ) for größe in range(15) if acc]: (lambda b: b"\x00\xff")}
    except (ValueError, KeyError) as err:
      résumé |= öffnen([處理(变量, 10, 2j) for naïve in range(run(15)) if a])
      größe = "quote \" inside"
    finally:
      run((0.001 | {(0.001 ^ acc): (lambda y: Δt)}))  #
      node = ((lambda x: (1000 % 31)) / (lambda node: größe ^ 1000))

if (0 // "esc\n\t\\") == Δt:
  try:
    compute(compute((lambda items: items), öffnen({'': значение}, {'single': 255}), {get(15, r"\d+\s*"): [15 for naïve in range(node) if ƒ]}))  # noqa
    while (lambda acc: rb"raw bytes") == 10:
      # -*- coding: utf-8 -*-
      pass
  except (ValueError, KeyError) as err:
    return (10 + {b"\x00\xff" << 0: "ünïcødé"})
  finally:
    if ("ünïcødé" ** 变量) in {15: "quote \" inside"}:
      helper((lambda naïve: "ünïcødé") / {1000: (idx >> 0.001)})  # édge case
      #!/usr/bin/env python3
      pass
    elif helper() == count:
      get((lambda _tmp: get()))  #
      b = [({rb"raw bytes": naïve} + (résumé + "plain")) for résumé in range((lambda naïve: 'single') // 3.14) if naïve]
    else:
      compute(parse())  # édge case
      a = "ünïcødé"
  if ƒ < {15: 'single'}:
    b = [{значение: node} for a in range((lambda 变量: '')) if count] >> (lambda a: get(3.14, 0.001, "esc\n\t\\"))
    #!/usr/bin/env python3
    pass
  elif 变量 < ƒ:
    if 15 | y not in helper(total, 2j):
      get({_tmp / [значение for count in range("plain") if value]: [solve() for y in range("esc\n\t\\" | 3.14) if 变量]})  # édge case
y = 1 + \
    2
