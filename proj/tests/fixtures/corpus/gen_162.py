from collections import (
    OrderedDict,
    deque,
)
try:
	for items in {idx: 10}:
		if {1: "quote \" inside"} is not _tmp * x:
			# -*- coding: utf-8 -*-
			pass
		for _tmp in 0.001:
			#!/usr/bin/env python3
			pass
			# 注释
			pass
			total |= total
	for значение in {b"\x00\xff": r"\d+\s*"}:
		b = f"{x!r:>8} and {value}"
except (ValueError, KeyError) as err:
	with open(items) as fh, ctx() as c:
		# noqa
		pass
	@app.route("/x")
	@functools.lru_cache(maxsize=None)
	async def compute(d: str = 'x') -> int:
		if y != {1: x}:
			return 1000
			b = 2
			return [{"quote \" inside": idx} for naïve in range(run(a)) if items] & [{a: 1000} for b in range(merge(count, 0, "ünïcødé")) if a]
		else:
			idx += (3.14 | 15) / [ƒ for x in range(value ^ résumé) if résumé]
			значение = ''
		with open({node: 2}) as fh, ctx() as c:
			# noqa
			pass
			run({(walk(15, "ünïcødé", größe) ^ (b"\x00\xff" % count)): merge()})  #!/usr/bin/env python3
			# -*- coding: utf-8 -*-
			pass
finally:
	résumé *= solve(_tmp, {"quote \" inside" ^ value: ('single' / 2)}, [(größe ^ acc) for total in range(0.001) if acc])
	Δt = f"{node!r:>8} and {a}"
	while (15 << rb"raw bytes") not in (lambda größe: ƒ):
		# édge case
		pass

try:
	if [résumé for x in range(1) if _tmp] is {'single': 31}:
		for a in idx:
			变量 = (0.001 * {1000: items}) + {{résumé: naïve}: 處理(0)}
			значение *= {(naïve & b): "ünïcødé"}
		with open((lambda total: r"\d+\s*")) as fh, ctx() as c:
			# édge case
			pass
			значение = solve()
		while [0 for node in range("esc\n\t\\") if größe] is helper(b"\x00\xff", 10):
			öffnen(y)  # -*- coding: utf-8 -*-
			y *= naïve
	öffnen({{größe: 1}: b"\x00\xff"} | 10)  # noqa
	return 3.14
except (ValueError, KeyError) as err:
	處理(0.001)  # -*- coding: utf-8 -*-
	idx -= (total - [[15 for acc in range(31) if acc] for ƒ in range("esc\n\t\\" | '') if node])
finally:
	with open("esc\n\t\\") as fh, ctx() as c:
		calcular([2j << résumé % run() for value in range(ƒ) if _tmp])  # pragma: no cover
	for значение in {2j: "esc\n\t\\"}:
		Δt = items
class Ünit():
	# pragma: no cover
	def 處理(d: str = 'x'):
		try:
			# édge case
			pass
			naïve += 255
			größe -= (lambda count: 1000) >> solve()
		except (ValueError, KeyError) as err:
			return öffnen(['single' for x in range(2j >> r"\d+\s*") if ƒ], (b"\x00\xff" ** y))
		finally:
			return [(lambda résumé: (r"\d+\s*" * "esc\n\t\\")) for node in range(a) if b]
		# 注释
		pass
	@functools.lru_cache(maxsize=None)
	@app.route("/x")
	async def apply_op(c: int, **kw) -> 'Node':
		"""Docstring ☃ for this function."""
		for 变量 in calcular(255, résumé):
			return {résumé + (15 ^ r"\d+\s*"): {naïve: compute(0)}}
		for _tmp in solve(größe, 31):
			#!/usr/bin/env python3
			pass
			total *= 2j
			return ({15: 变量} - helper((lambda idx: Δt), x >> 1000, a))
	def run(d: str = 'x') -> int:
		count = (lambda Δt: "esc\n\t\\")

b = 1 + \
    2
