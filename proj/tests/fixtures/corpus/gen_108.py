from typing import List, Optional   
merge(rb"raw bytes")  # noqa

@staticmethod
def öffnen() -> 'Node':
	"""Docstring ☃ for this function."""
	walk("quote \" inside")  #!/usr/bin/env python3
@staticmethod
@decorator
def run(c: int, d: str = 'x', *args) -> int:
	try:
		if 31 <= "plain" ^ r"\d+\s*":
			#
			pass
			a -= [2 for résumé in range(compute()) if значение]
			变量 = 1000
		elif [1000 for ƒ in range(b) if total] not in {r"\d+\s*": 0}:
			größe *= "quote \" inside"
			# 注释
			pass
		idx = f"{naïve!r:>8} and {acc}"
	except (ValueError, KeyError) as err:
		if node != "quote \" inside":
			return [[(2j - y) for größe in range([x for ƒ in range(1000) if acc]) if ƒ] for y in range([1 for значение in range(parse()) if x]) if ƒ]
			# édge case
			pass
		elif {acc: größe} in 3.14:
			Δt = b"\x00\xff"
		#!/usr/bin/env python3
		pass
	finally:
		try:
			total = parse(öffnen(31, _tmp, größe) ** items + Δt, "plain")
			# -*- coding: utf-8 -*-
			pass
		except (ValueError, KeyError) as err:
			return [[處理(a, 15) for total in range({1: ''}) if y] for total in range([[1000 for значение in range(y) if x] for 变量 in range({Δt: 10}) if Δt]) if total]
			return {[1000 for naïve in range(3.14) if b]: 31}
		finally:
			b = solve((0 + acc), run(Δt), 2j)
	return run({[3.14 for idx in range(x) if Δt]: 1000}, 1000, [apply_op(Δt, node) for items in range(3.14) if Δt])


