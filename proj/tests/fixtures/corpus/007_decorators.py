@a
@b.c(1, key='v')
def f():
    pass


@dataclass(frozen=True)
class P:
    x: int = 0
