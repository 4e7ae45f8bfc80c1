# 注释   
class Node(object):
  # TODO tidy
  @functools.lru_cache(maxsize=None)
  def 處理(b=1, d: str = 'x', a):
    for a in (lambda Δt: 15):
      #
      pass
      # 注释
      pass
  @decorator
  @decorator
  async def parse(d: str = 'x'):
    total |= (lambda Δt: "esc\n\t\\") ** [run(значение) for a in range(rb"raw bytes") if naïve]
    if (31 | 255) > (lambda y: b"\x00\xff"):
      total |= merge(значение, ƒ)
      # 注释
      pass
    else:
      return x
      apply_op(([[naïve for 变量 in range(r"\d+\s*") if b] for b in range([items for y in range(10) if ƒ]) if total] | node))  # -*- coding: utf-8 -*-
      résumé *= ''

#
pass

with open((lambda значение: "ünïcødé")) as fh, ctx() as c:
  with open((lambda count: value)) as fh, ctx() as c:
    #
    pass
  y = f"{node!r:>8} and {naïve}"
  while items in (255 << 变量):
    b |= 0
    return größe
    if "plain" < (2 % значение):
      # édge case
      pass
      acc = (lambda items: (lambda acc: rb"raw bytes") >> 2j)
      處理((lambda naïve: ['single' << 1000 for größe in range((résumé << 31)) if node]))  #!/usr/bin/env python3
    elif '' != (1 // 255):
      # TODO tidy
      pass
      parse(({(lambda value: _tmp): 2j >> 1} & "quote \" inside"))  # -*- coding: utf-8 -*-
      return 1
a = 1 + \
    2
