from typing import List, Optional
while (lambda y: value) is not (x / 1000):
  # noqa
  pass

while rb"raw bytes" > run('single'):
  get((lambda acc: "plain"))  # TODO tidy
  with open(3.14 ^ "esc\n\t\\") as fh, ctx() as c:
    calcular(solve({b"\x00\xff": get(count, 10)}, (lambda Δt: 3.14), (1000 ^ 1000 * 变量)))  # TODO tidy
  Δt = solve()

# 注释
pass