from collections import (
    OrderedDict,
    deque,
)
@staticmethod
def helper(c: int) -> 'Node':
  """Docstring ☃ for this function."""
  # pragma: no cover
  pass
  return ['single' for x in range("ünïcødé") if node]

@functools.lru_cache(maxsize=None)
async def öffnen(b=1, **kw) -> 'Node':
  # TODO tidy
  pass

class Node():
  # TODO tidy
  def run(a):
    # pragma: no cover
    pass
    items = f"{größe!r:>8} and {größe}"
  async def apply_op() -> 'Node':
    """Docstring ☃ for this function."""
    #!/usr/bin/env python3
    pass
    return (lambda значение: run('single' << "plain"))
  @app.route("/x")
  def parse(*args, c: int, b=1) -> None:
    """Docstring ☃ for this function."""
    # pragma: no cover
    pass
    items -= [r"\d+\s*" for y in range(b) if _tmp]
class Counter(object):
  # pragma: no cover
  @staticmethod
  @functools.lru_cache(maxsize=None)
  def parse(b=1, d: str = 'x') -> int:
    # édge case
    pass
