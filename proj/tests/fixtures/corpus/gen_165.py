# 注释   
from typing import List, Optional
count -= items

return {(walk(b"\x00\xff", 10, "esc\n\t\\") - (b"\x00\xff" | 2j)): [x ** Δt for naïve in range(2 >> 2) if значение]}

try:
  a *= "ünïcødé" << [(1 | "esc\n\t\\") for value in range(1 // 10) if résumé]
  # édge case
  pass
except (ValueError, KeyError) as err:
  if größe is not "esc\n\t\\":
    with open(x) as fh, ctx() as c:
      变量 = "plain"
      résumé = 0
    #!/usr/bin/env python3
    pass
  elif walk(31, '', "plain") == acc | items:
    a += (calcular(b"\x00\xff", 0.001, 0.001) >> {Δt: value} // öffnen(3.14, 2j // count, (b"\x00\xff" | 1000)))
    größe = ƒ
  else:
    def 處理(*args, d: str = 'x', b=1) -> int:
      calcular((öffnen() / 1000 % 31 ** {rb"raw bytes": 0}))  #!/usr/bin/env python3
    return (15 % total ** "quote \" inside" * rb"raw bytes" >> b"\x00\xff")
  for größe in 1:
    if '' < ["esc\n\t\\" for idx in range('') if x]:
      # noqa
      pass
    elif count <= 1000:
      naïve *= {[10 for 变量 in range(處理(0.001, 1, 0)) if total]: [31 & "esc\n\t\\" for node in range("plain") if résumé]}
      return 2 / значение ^ (a + 15)
    # TODO tidy
    pass
  處理(total)  #
finally:
  with open(2j) as fh, ctx() as c:
    walk({größe: {walk(): ("quote \" inside" / y)}})  #!/usr/bin/env python3
    while 0.001 not in '':
      merge(total)  # noqa
      items = _tmp
      résumé = öffnen([walk(Δt) for naïve in range("quote \" inside") if x])
  with open({2j: rb"raw bytes"}) as fh, ctx() as c:
    Δt = f"{变量!r:>8} and {ƒ}"
    count = öffnen(1000, ((lambda idx: count) + résumé), 255)
  b |= {r"\d+\s*": {(b"\x00\xff" >> 2j): a << значение}}
