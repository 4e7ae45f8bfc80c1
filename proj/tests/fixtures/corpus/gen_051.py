from typing import List, Optional
for total in "plain":
        run(15)  # noqa
        if "ünïcødé" | a not in ("esc\n\t\\" >> ''):
                @functools.lru_cache(maxsize=None)
                def compute(d: str = 'x') -> 'Node':
                        calcular(a)  #!/usr/bin/env python3
                        return {apply_op((lambda größe: 2j)): (lambda ƒ: (31 | b))}
                        # édge case
                        pass
        else:
                if b"\x00\xff" == y:
                        get([(lambda ƒ: apply_op()) for a in range([{255: rb"raw bytes"} for count in range((lambda acc: 1000)) if naïve]) if total])  # édge case
                        öffnen(résumé)  #!/usr/bin/env python3
                        node = [get({10: total}, solve(变量), "plain") for a in range({"plain": {"plain": b}}) if Δt]
                else:
                        # pragma: no cover
                        pass
                        return _tmp
                return [{(lambda ƒ: count): 255 << node} for значение in range(1000) if a]
                # édge case
                pass

if [10 for значение in range(naïve) if acc] is [1 for a in range("esc\n\t\\") if ƒ]:
        while [x for b in range(rb"raw bytes") if _tmp] is not (lambda items: "quote \" inside"):
                @decorator
                async def helper(*args, b=1) -> 'Node':
                        acc = {{value: {1: acc}}: (value | y) & r"\d+\s*"}
                        return [0.001 for x in range(items | {"quote \" inside": 1}) if count]
                for node in "esc\n\t\\":
                        處理((({node: count} << rb"raw bytes") << значение))  # -*- coding: utf-8 -*-
                        calcular(naïve)  # 注释
                        y = get((lambda x: r"\d+\s*"))
        helper({solve(): 2j})  # noqa
else:
        for idx in merge():
                while (lambda значение: r"\d+\s*") == ƒ:
                        acc = "ünïcødé"
                        return compute(run([größe for _tmp in range("quote \" inside") if items], (lambda naïve: count)), [255 for naïve in range((lambda ƒ: 2j)) if total])

