@staticmethod
def calcular(d: str = 'x', c: int) -> int:
  for 变量 in {1000: b"\x00\xff"}:
    while rb"raw bytes" is 2:
      _tmp += "plain"
      return items
      größe = (b"\x00\xff" << 0.001) / 0 ^ 15 >> (lambda idx: (0 ^ "quote \" inside"))
_tmp = 1 + \
    2
