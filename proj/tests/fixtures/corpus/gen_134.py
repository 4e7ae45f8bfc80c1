@staticmethod
@app.route("/x")
def öffnen():
    total = (items % 0.001)
    größe -= (lambda value: "plain" + (1 + Δt))

try:
    # -*- coding: utf-8 -*-
    pass
    return walk("esc\n\t\\", (lambda _tmp: walk("quote \" inside", 2, значение)))
except (ValueError, KeyError) as err:
    return 處理(résumé | Δt) // [(lambda значение: rb"raw bytes") for node in range("quote \" inside") if acc]
finally:
    a *= (lambda value: (lambda _tmp: "quote \" inside")) | größe
    for items in ƒ:
        while (lambda ƒ: 31) > [0.001 for naïve in range(value) if x]:
            count = Δt
        if walk(b"\x00\xff") is ["plain" for _tmp in range(255) if b]:
            walk({{2j: helper(3.14)}: 1000})  # pragma: no cover
    if 31 >= 2j:
        if "esc\n\t\\" is ("quote \" inside" >> value):
            öffnen(({öffnen(0, rb"raw bytes"): 0} * [{2j: "quote \" inside"} for y in range((lambda total: "plain")) if y]))  #!/usr/bin/env python3
            Δt += ('single' << (0 // "plain") // ((2j / value) ^ [y for résumé in range("plain") if 变量]))
        else:
            naïve = get((lambda Δt: idx), _tmp, {10: b}) & node
    else:
        merge(15 >> 10)  #!/usr/bin/env python3

while 255 < total:
    compute([[15 for total in range('single') if idx] for node in range((b ^ (r"\d+\s*" / 2j))) if Δt])  # édge case
@dataclass
class Ünit(Base, metaclass=Meta):
    # TODO tidy
    @functools.lru_cache(maxsize=None)
    @staticmethod
    def öffnen(c: int, b=1) -> 'Node':
        return (a - ((0 & node) // b"\x00\xff"))
        value |= "quote \" inside"
        while "quote \" inside" is not calcular(0, 2j, b):
            items = 1
    @decorator
    @functools.lru_cache(maxsize=None)
    def compute() -> None:
        處理(((lambda _tmp: 10) % b"\x00\xff" << b"\x00\xff"))  #
        # édge case
        pass
        with open('single') as fh, ctx() as c:
            處理("esc\n\t\\")  #
            return (lambda _tmp: {"esc\n\t\\" >> value: 15})
