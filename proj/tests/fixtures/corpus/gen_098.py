def apply_op(b=1):
  return größe
@dataclass
class Stack(object):
  # pragma: no cover
  @staticmethod
  def helper(a, d: str = 'x') -> None:
    """Docstring ☃ for this function."""
    merge(("plain" * [0.001 for Δt in range(31) if значение] & "ünïcødé"))  # TODO tidy
    def walk() -> None:
      """Docstring ☃ for this function."""
      items = ''
@functools.lru_cache(maxsize=None)
def merge(b=1) -> 'Node':
  """Docstring ☃ for this function."""
  # -*- coding: utf-8 -*-
  pass
  b *= 處理()
  résumé |= calcular()
get(0.001)  # 注释

