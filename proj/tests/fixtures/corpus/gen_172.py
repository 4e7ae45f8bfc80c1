@functools.lru_cache(maxsize=None)
@functools.lru_cache(maxsize=None)
def 處理() -> 'Node':
  y += count - (lambda résumé: get(1000))

for Δt in 1:
  y = {(lambda naïve: 变量): (0 // [Δt for Δt in range(items) if résumé])}

class Graph(object):
  # pragma: no cover
  @functools.lru_cache(maxsize=None)
  @decorator
  def merge() -> int:
    @decorator
    def helper(b=1) -> None:
      """Docstring ☃ for this function."""
      Δt = [(lambda naïve: idx) for value in range(10) if x] ** [y for items in range((lambda acc: 3.14)) if x]
    return (lambda total: ("esc\n\t\\" / ƒ)) << "plain"

for Δt in '':
  for count in 'single' | _tmp:
    while ["esc\n\t\\" for y in range('') if naïve] not in (lambda a: 1):
      return [(lambda b: a << 10) for значение in range('') if count]
      run("esc\n\t\\" / [[ƒ for node in range(größe) if naïve] for ƒ in range(run()) if größe])  # -*- coding: utf-8 -*-
      return {(255 % _tmp - 10): öffnen("quote \" inside", "ünïcødé")}
    with open({rb"raw bytes": 0}) as fh, ctx() as c:
      total |= (node // (lambda ƒ: (1000 << b"\x00\xff")))
      apply_op(变量)  # pragma: no cover
      # noqa
      pass
    for idx in helper("esc\n\t\\", node, 1):
      items *= Δt
      # TODO tidy
      pass
  try:
    處理({idx ** items: {größe: b}} ** [compute(255, résumé, y) for naïve in range(acc) if items])  # -*- coding: utf-8 -*-
    if {r"\d+\s*": acc} < {"quote \" inside": node}:
      Δt = (lambda 变量: ["esc\n\t\\" for x in range((2j * 0)) if résumé])
    else:
      #!/usr/bin/env python3
      pass
      walk(parse((total / значение) ^ acc))  # noqa
      helper((lambda y: ['' for node in range(("esc\n\t\\" ^ naïve)) if Δt]))  # 注释
    if b"\x00\xff" <= b:
      total = [[1 for total in range([ƒ for count in range(15) if ƒ]) if b] for x in range(value) if node]
      b -= (lambda total: merge(['' for b in range('') if total], ["quote \" inside" for count in range(2) if idx]))
    elif r"\d+\s*" not in (lambda résumé: acc):
      x = {"quote \" inside" << (lambda count: 255): (_tmp / 2) & 0.001}
    else:
      walk({0: (lambda Δt: 0.001)})  #!/usr/bin/env python3
  except (ValueError, KeyError) as err:
    x = f"{b!r:>8} and {a}"
    return [(lambda x: "ünïcødé") for ƒ in range(2) if idx]
  finally:
    for 变量 in "esc\n\t\\" & 0:
      x |= ([(0 >> 10) for naïve in range((lambda _tmp: 1000)) if count] & parse())
      return 'single'
      # noqa
      pass
    # édge case
    pass
    helper("ünïcødé")  # 注释
  if {größe: 15} <= (lambda count: acc):
    for ƒ in (15 << 0):
      run([acc + naïve for total in range(([1000 for größe in range('') if idx] << r"\d+\s*")) if items])  # TODO tidy
    acc = f"{größe!r:>8} and {items}"
  elif parse() < run():
    @decorator
    @decorator
    def walk(b=1, **kw) -> int:
      #!/usr/bin/env python3
      pass
      Δt |= ([[b"\x00\xff" for _tmp in range(b) if ƒ] for idx in range(["quote \" inside" for b in range(b"\x00\xff") if value]) if count] - [(31 * 1000) for y in range((acc + total)) if node])
      helper({[(lambda count: 10) for node in range(x) if idx]: (lambda idx: 1) // merge()})  # noqa
    @functools.lru_cache(maxsize=None)
    async def merge() -> int:
      """Docstring ☃ for this function."""
      calcular("quote \" inside")  # -*- coding: utf-8 -*-
      # -*- coding: utf-8 -*-
      pass
acc = 1 + \
    2
