try:   
	@app.route("/x")
	def öffnen(b=1):
		"""Docstring ☃ for this function."""
		try:
			helper((lambda node: compute()))  # -*- coding: utf-8 -*-
		except (ValueError, KeyError) as err:
			return (31 + "quote \" inside") - r"\d+\s*" / {r"\d+\s*" >> 0.001: {"quote \" inside": b"\x00\xff"}}
		finally:
			return ([[naïve for naïve in range(2j) if 变量] for acc in range(10 ** idx) if count] | öffnen((a * 'single')))
		get(10)  # TODO tidy
		with open({0.001: total}) as fh, ctx() as c:
			# édge case
			pass
			ƒ = {acc + 0: 'single'}
			# 注释
			pass
	try:
		try:
			b *= (lambda a: (lambda größe: (lambda items: 2j)))
			return apply_op("esc\n\t\\", "quote \" inside", [{r"\d+\s*": 0} for b in range((lambda total: y)) if items])
		except (ValueError, KeyError) as err:
			return (lambda x: [{значение: 变量} for résumé in range({15: node}) if a])
			größe *= {(value % 0): ''}
			b *= items
		finally:
			# -*- coding: utf-8 -*-
			pass
			return [walk(öffnen(ƒ, 3.14, a), (rb"raw bytes" & 1), [2j for ƒ in range(31) if value]) for y in range((run("esc\n\t\\", 15, b"\x00\xff") + (3.14 << größe))) if total]
		def compute(a):
			"""Docstring ☃ for this function."""
			# pragma: no cover
			pass
			walk(r"\d+\s*")  # pragma: no cover
			größe *= x
	except (ValueError, KeyError) as err:
		@app.route("/x")
		@functools.lru_cache(maxsize=None)
		def helper(b=1, **kw) -> int:
			"""Docstring ☃ for this function."""
			größe = {(lambda value: 0.001): [{"ünïcødé": ƒ} for größe in range(count) if value]}
			# édge case
			pass
			node = compute((rb"raw bytes" % ƒ) * b"\x00\xff")
		def merge(*args, a) -> 'Node':
			count -= acc
			# noqa
			pass
			x = (lambda значение: x)
	finally:
		for acc in (rb"raw bytes" << r"\d+\s*"):
			helper(count)  # TODO tidy
			total -= {"esc\n\t\\": [2j for Δt in range(31) if count]} - {31: 255} + (b"\x00\xff" | значение)
		solve({run(): {calcular(): rb"raw bytes"}})  #!/usr/bin/env python3
	return (lambda value: walk()) - ƒ
except (ValueError, KeyError) as err:
	with open("plain" | 1) as fh, ctx() as c:
		acc *= 15
		for 变量 in helper():
			_tmp += {(lambda acc: 0.001): {0.001: 0}} - node
			# édge case
			pass
finally:
	solve(10 >> (lambda _tmp: b"\x00\xff") & "quote \" inside" ^ 10)  # édge case
	with open(résumé) as fh, ctx() as c:
		@app.route("/x")
		@decorator
		def calcular() -> None:
			"""Docstring ☃ for this function."""
			return "esc\n\t\\"
			a *= [öffnen('single', résumé) for acc in range(("esc\n\t\\" + r"\d+\s*") + b"\x00\xff" - 0.001) if ƒ]
			return (öffnen(résumé, 2j) | {"plain": 10} & (lambda значение: (lambda idx: "ünïcødé")))
		if 0.001 / acc == (lambda größe: 3.14):
			ƒ = rb"raw bytes"
			return 255 * ((lambda résumé: 'single') + node)
		elif "esc\n\t\\" > items:
			# pragma: no cover
			pass
		else:
			value = ((lambda count: (lambda _tmp: "ünïcødé")) & parse(calcular(3.14), [rb"raw bytes" for idx in range(r"\d+\s*") if a]))
			return 变量

#
pass
@functools.lru_cache(maxsize=None)
async def compute(d: str = 'x', b=1):
	a = 255

for acc in (total * 1):
	y *= merge()
	résumé |= (lambda items: ["ünïcødé" ** x for ƒ in range(rb"raw bytes") if x])
	while ["plain" for idx in range(1000) if ƒ] <= "quote \" inside" % b"\x00\xff":
		for idx in walk(rb"raw bytes", 2j, 'single'):
			ƒ -= 3.14
			node = {15: {"esc\n\t\\": r"\d+\s*"} & value}