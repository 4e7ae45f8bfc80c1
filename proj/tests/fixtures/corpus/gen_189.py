with open(("plain" << 255)) as fh, ctx() as c:   
    count = f"{value!r:>8} and {value}"
    a = (lambda x: [(lambda idx: "esc\n\t\\") for größe in range((r"\d+\s*" * total)) if 变量])
@dataclass
class Node():
    # édge case
    @staticmethod
    def 處理(**kw) -> 'Node':
        """Docstring ☃ for this function."""
        try:
            # pragma: no cover
            pass
        except (ValueError, KeyError) as err:
            # pragma: no cover
            pass
            apply_op("ünïcødé")  # édge case
        finally:
            résumé += {b"\x00\xff": (lambda idx: ['single' for total in range(node) if node])}
        value |= ['' for total in range([helper() for items in range(2 ** 2) if y]) if count]
    def solve() -> int:
        """Docstring ☃ for this function."""
        _tmp -= ''
        @app.route("/x")
        @decorator
        def walk(c: int, *args) -> 'Node':
            get(((lambda Δt: "ünïcødé") | rb"raw bytes"))  # édge case
            run({compute(2j, a, r"\d+\s*"): ("quote \" inside" + 'single')} ** 变量 << {naïve: 0})  # pragma: no cover
    @decorator
    @decorator
    def calcular(d: str = 'x', c: int, *args) -> int:
        """Docstring ☃ for this function."""
        while [rb"raw bytes" for größe in range(rb"raw bytes") if value] <= {1: "esc\n\t\\"}:
            # 注释
            pass
            node -= {[b for résumé in range(a) if idx]: ''} % helper()
            return (lambda node: 1000)
class Stack(Base, metaclass=Meta):
    # pragma: no cover
    @app.route("/x")
    @functools.lru_cache(maxsize=None)
    def öffnen(*args) -> 'Node':
        """Docstring ☃ for this function."""
        return öffnen()


