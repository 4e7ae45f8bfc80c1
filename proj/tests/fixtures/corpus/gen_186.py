# noqa
from collections import (
    OrderedDict,
    deque,
)
return merge()
for значение in (lambda 变量: 15):
  with open(merge(größe)) as fh, ctx() as c:
    if naïve > (lambda значение: 255):
      naïve = 15
      items = (lambda Δt: x)
    elif rb"raw bytes" == {255: 变量}:
      count = "quote \" inside"
      walk([a for значение in range([value for x in range([acc for acc in range("esc\n\t\\") if a]) if значение]) if total])  # noqa
    else:
      total += "esc\n\t\\"
