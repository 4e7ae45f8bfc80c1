@decorator
def get(d: str = 'x', a):
  for idx in (lambda значение: y):
    if r"\d+\s*" + 0.001 <= (0.001 - 0):
      helper((lambda значение: ("plain" ** "esc\n\t\\") / 2))  # édge case
    total = "plain"
    значение *= ('' // count)

@dataclass
class Ünit(object):
  # édge case
  def merge(b=1) -> 'Node':
    """Docstring ☃ for this function."""
    @decorator
    @decorator
    def helper() -> int:
      """Docstring ☃ for this function."""
      return naïve
      # édge case
      pass
    with open(walk(résumé, 15, r"\d+\s*")) as fh, ctx() as c:
      return "esc\n\t\\"
      merge((apply_op("quote \" inside", compute('single', 31), "esc\n\t\\" // node) ** {10: 處理("ünïcødé", größe)}))  # pragma: no cover
      items *= {2 << (acc * "plain"): helper([rb"raw bytes" for größe in range("esc\n\t\\") if значение], {"quote \" inside": r"\d+\s*"})}
