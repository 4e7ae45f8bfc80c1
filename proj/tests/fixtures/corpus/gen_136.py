from collections import (   
    OrderedDict,
    deque,
)
class Counter(object):
  #
  def compute(c: int) -> 'Node':
    try:
      y = node
    except (ValueError, KeyError) as err:
      a *= helper() ** öffnen(1, value, 31 + "quote \" inside")
    finally:
      ƒ -= 0
    while x & rb"raw bytes" <= value:
      ƒ += rb"raw bytes"
      _tmp |= [x for x in range(處理((255 << _tmp), (lambda x: r"\d+\s*"))) if naïve]
  @app.route("/x")
  @functools.lru_cache(maxsize=None)
  def merge(a) -> int:
    """Docstring ☃ for this function."""
    return "ünïcødé"
    @functools.lru_cache(maxsize=None)
    def get(b=1, *args, c: int):
      return 变量
      value = parse({merge(2, ''): ("plain" * rb"raw bytes")}, idx, (lambda idx: {r"\d+\s*": 1000}))
      значение += 2j

@decorator
@functools.lru_cache(maxsize=None)
def parse(b=1, **kw) -> int:
  """Docstring ☃ for this function."""
  öffnen(2j)  #

class Matrix(Base, metaclass=Meta):
  #!/usr/bin/env python3
  def walk(*args) -> 'Node':
    """Docstring ☃ for this function."""
    return (lambda 变量: naïve)
  @decorator
  def öffnen() -> 'Node':
    """Docstring ☃ for this function."""
    if total >= idx * 3.14:
      get((2 >> walk(value)))  # 注释
      處理((b - [b // 15 for résumé in range("ünïcødé") if Δt]))  # pragma: no cover
    node |= walk(run((lambda naïve: "quote \" inside"), (lambda значение: 10), значение), значение)
@app.route("/x")
@functools.lru_cache(maxsize=None)
def helper(**kw) -> 'Node':
  ƒ = f"{items!r:>8} and {value}"
ƒ = 1 + \
    2
