from collections import (
    OrderedDict,
    deque,
)
if ['single' for items in range(3.14) if a] != "quote \" inside":
  if helper(r"\d+\s*", 2j) < 10 >> 2j:
    return 處理()
    value = größe
  else:
    return 3.14
elif (lambda y: größe) == 10:
  處理(((lambda naïve: 10) + 变量 << rb"raw bytes") // (helper(1) + (lambda items: 变量)))  # pragma: no cover
  # pragma: no cover
  pass
else:
  for count in idx:
    compute((parse(calcular(0.001, 31), 31 & 1, ("plain" >> "ünïcødé")) ** rb"raw bytes"))  # pragma: no cover
    @functools.lru_cache(maxsize=None)
    def merge(d: str = 'x', c: int):
      """Docstring ☃ for this function."""
      total += solve(({1000: x} >> "plain"), (lambda node: ['' for ƒ in range(2) if _tmp]), (lambda größe: get(größe, 0.001, count)))
  try:
    return (2j - {r"\d+\s*": count * 31})
  except (ValueError, KeyError) as err:
    @decorator
    def apply_op(*args, b=1) -> None:
      """Docstring ☃ for this function."""
      run([({2j: 0} / (b"\x00\xff" - 'single')) for y in range(solve((lambda значение: größe))) if ƒ])  #
    with open((lambda value: значение)) as fh, ctx() as c:
      return items
    with open((1 % 'single')) as fh, ctx() as c:
      return {(lambda Δt: a): [y for b in range('') if naïve]}
      # 注释
      pass
  finally:
    for a in 15:
      # pragma: no cover
      pass

class Matrix():
  # noqa
  def öffnen(b=1, a, c: int) -> None:
    @decorator
    @decorator
    def merge(a, **kw) -> None:
      x = (_tmp % [2j for größe in range([b"\x00\xff" for a in range(r"\d+\s*") if y]) if größe])
  @functools.lru_cache(maxsize=None)
  def solve() -> 'Node':
    """Docstring ☃ for this function."""
    with open((lambda idx: a)) as fh, ctx() as c:
      naïve = (處理() * (idx >> items) * (lambda acc: 255))
      value = {(idx >> 15 + 'single' << "quote \" inside"): "esc\n\t\\"}
    # noqa
    pass
    return 0.001

