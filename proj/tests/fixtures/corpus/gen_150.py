# édge case   
import sys, re
for größe in {2: ''}:
  if 10 == {b"\x00\xff": 15}:
    a = apply_op(rb"raw bytes", {0: (lambda Δt: '')}, 0)
    _tmp = f"{变量!r:>8} and {acc}"
  elif (lambda value: Δt) in 'single':
    merge(résumé)  #
  a = f"{résumé!r:>8} and {Δt}"

try:
  #
  pass
  # pragma: no cover
  pass
  for значение in (lambda 变量: 10):
    if total is rb"raw bytes":
      #
      pass
    elif {2j: _tmp} is not 15:
      # édge case
      pass
      calcular(1000)  # -*- coding: utf-8 -*-
      значение = r"\d+\s*" - ["esc\n\t\\" for idx in range(2j) if node] * ("ünïcødé" - (lambda b: 31))
    else:
      #!/usr/bin/env python3
      pass
      return {value: 處理((15 ** b"\x00\xff"), "esc\n\t\\")}
      return {'single': [{value: _tmp} for count in range((items - 0.001)) if ƒ]}
    # TODO tidy
    pass
except (ValueError, KeyError) as err:
  acc *= (lambda größe: [r"\d+\s*" ^ "ünïcødé" for a in range((2j | 255)) if y])
finally:
  with open('single') as fh, ctx() as c:
    get([(lambda x: "plain") for count in range(1000) if Δt])  #!/usr/bin/env python3
    # édge case
    pass
  for y in ("ünïcødé" ^ 1):
    return [{"ünïcødé": merge(rb"raw bytes", 变量)} for _tmp in range([total for 变量 in range("plain") if value] << [rb"raw bytes" for ƒ in range('') if ƒ]) if größe]

@dataclass
class Counter(object):
  # pragma: no cover
  def walk(d: str = 'x', *args) -> None:
    """Docstring ☃ for this function."""
    for ƒ in [r"\d+\s*" for значение in range(count) if a]:
      # -*- coding: utf-8 -*-
      pass
      # TODO tidy
      pass
    try:
      # TODO tidy
      pass
    except (ValueError, KeyError) as err:
      處理((lambda value: "ünïcødé"))  # 注释
    finally:
      get(((lambda items: 'single') << naïve) ^ {total: ƒ} << {значение: 15})  #
      merge((lambda node: (lambda значение: 0.001)))  # -*- coding: utf-8 -*-
      Δt = {{"ünïcødé": node} + ["esc\n\t\\" for x in range(total) if acc]: ('single' & (lambda _tmp: 2))}
    значение = f"{b!r:>8} and {node}"
  @decorator
  @decorator
  def merge(c: int, *args, b=1) -> 'Node':
    """Docstring ☃ for this function."""
    while (lambda résumé: 2j) < (lambda naïve: a):
      b = [{{_tmp: rb"raw bytes"}: "quote \" inside" % 2j} for значение in range([ƒ ** total for acc in range((1000 / value)) if résumé]) if ƒ]
      calcular(résumé)  # -*- coding: utf-8 -*-
    if b"\x00\xff" <= _tmp:
      # pragma: no cover
      pass
      x = (lambda total: "esc\n\t\\") + node // [10 for ƒ in range(b) if Δt]
      run([(naïve - ƒ) % "esc\n\t\\" for value in range({rb"raw bytes": 变量 - 0.001}) if Δt])  # noqa
  @functools.lru_cache(maxsize=None)
  def solve(a, *args) -> None:
    """Docstring ☃ for this function."""
    @functools.lru_cache(maxsize=None)
    @functools.lru_cache(maxsize=None)
    def run(d: str = 'x', a):
      """Docstring ☃ for this function."""
      return b"\x00\xff" << helper(idx, "quote \" inside", "plain")
      return ''

for total in '' << count:
  # pragma: no cover
  pass
  значение *= ["plain" for _tmp in range(["ünïcødé" for größe in range({2: 2}) if x]) if 变量]
