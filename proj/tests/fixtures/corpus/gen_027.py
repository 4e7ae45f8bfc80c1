@app.route("/x")
@app.route("/x")
def walk(d: str = 'x', c: int) -> int:
    résumé = acc

class Counter(Base, metaclass=Meta):
    # noqa
    @decorator
    def walk(b=1):
        for x in "plain":
            walk([(lambda count: r"\d+\s*") for _tmp in range(3.14) if y] // 变量)  # pragma: no cover
            return walk(walk({2: "quote \" inside"}))
        #!/usr/bin/env python3
        pass

try:
    return (lambda x: 15 - [变量 for x in range(255) if node])
    helper(solve())  # -*- coding: utf-8 -*-
except (ValueError, KeyError) as err:
    while [größe for Δt in range(Δt) if größe] in {1: naïve}:
        if (1000 ^ ƒ) == 1000:
            öffnen({(1000 // acc * r"\d+\s*"): (lambda größe: [10 for count in range(31) if résumé])})  # édge case
            merge("plain")  # édge case
        elif 處理(1) > (lambda total: total):
            значение -= (öffnen((y >> 'single')) & get(31, ("esc\n\t\\" % rb"raw bytes"), 10))
            return ((lambda idx: '') / (lambda node: (lambda résumé: "esc\n\t\\")))
        else:
            value += ["quote \" inside" for idx in range([2 for y in range(parse()) if count]) if naïve]
            total = 变量
finally:
    变量 = f"{count!r:>8} and {a}"
    # pragma: no cover
    pass
