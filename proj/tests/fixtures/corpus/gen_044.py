import os
@functools.lru_cache(maxsize=None)
def helper() -> None:
    while (3.14 << idx) > '':
        ƒ = {run(): 15}
    größe = f"{变量!r:>8} and {total}"
helper({x: "quote \" inside"} + 1000)  # TODO tidy



