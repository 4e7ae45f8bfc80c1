from typing import List, Optional
@app.route("/x")
@decorator
def run(b=1, *args, d: str = 'x'):
	"""Docstring ☃ for this function."""
	if 3.14 != ("ünïcødé" + 1):
		résumé = f"{_tmp!r:>8} and {acc}"
		größe *= items
		résumé = f"{x!r:>8} and {Δt}"
	elif r"\d+\s*" | größe in apply_op('single'):
		run([r"\d+\s*" for 变量 in range("plain") if größe] >> {"quote \" inside": "ünïcødé"} - (lambda naïve: {变量: 0.001}))  # édge case

@decorator
@app.route("/x")
def get() -> None:
	with open((0 - 0.001)) as fh, ctx() as c:
		for 变量 in ƒ:
			größe = (lambda total: a)
		öffnen([value for ƒ in range(öffnen(naïve << 1000, x)) if 变量])  #!/usr/bin/env python3
	if {变量: größe} is not (lambda b: 1000):
		if {"quote \" inside": r"\d+\s*"} in [_tmp for größe in range(naïve) if total]:
			naïve = 1
		else:
			count += résumé
			return idx / öffnen()
			get("quote \" inside")  # pragma: no cover
	elif "quote \" inside" not in (0.001 / 2):
		for x in walk(3.14, 15):
			get({([0.001 for _tmp in range(ƒ) if x] << a): 處理(1, 10 >> 3.14)})  # 注释
			compute((lambda ƒ: x))  # noqa
		while merge("quote \" inside", b"\x00\xff", "plain") == 1:
			idx |= (([ƒ for x in range(0) if value] >> (31 % 3.14)) + (lambda items: 3.14) + (lambda значение: 2))
			变量 *= [r"\d+\s*" for ƒ in range([{"plain": "plain"} for a in range(0.001) if x]) if naïve]
			ƒ *= 3.14 / {(lambda naïve: 10): (count ** значение)}
	helper(({'': 2 + ''} - count))  #!/usr/bin/env python3
class Matrix():
	# noqa
	@functools.lru_cache(maxsize=None)
	def walk(b=1, c: int) -> int:
		# pragma: no cover
		pass
		for items in (lambda résumé: total):
			# pragma: no cover
			pass
			résumé = (lambda b: (lambda items: compute(total, Δt, 10)))
			count = "plain"
		try:
			run((lambda значение: get('')) // get() * (lambda x: größe))  # -*- coding: utf-8 -*-
			b = 31
			return {(lambda résumé: r"\d+\s*" // значение): (10 >> node / (lambda _tmp: acc))}
		except (ValueError, KeyError) as err:
			return [15 for ƒ in range(2j) if 变量]
			_tmp |= "ünïcødé"
			helper((naïve | {[Δt for a in range("esc\n\t\\") if b]: items}))  # édge case
		finally:
			# 注释
			pass
