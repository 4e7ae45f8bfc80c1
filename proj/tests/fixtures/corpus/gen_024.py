try:
	if 变量 not in {"esc\n\t\\": 'single'}:
		for Δt in r"\d+\s*":
			return ((lambda _tmp: (lambda x: 1000)) << items)
	with open(3.14 ^ rb"raw bytes") as fh, ctx() as c:
		for x in walk(größe, items):
			acc *= ((lambda y: 2j) // "quote \" inside")
			solve({parse(value, (lambda _tmp: value), a): _tmp})  # pragma: no cover
			helper((lambda total: ["ünïcødé" for 变量 in range(1) if x]))  #!/usr/bin/env python3
		if (x << rb"raw bytes") != 0:
			# édge case
			pass
		elif 處理() == [Δt for y in range(r"\d+\s*") if résumé]:
			a |= "plain"
			naïve += ([255 for größe in range(rb"raw bytes") if ƒ] - (lambda acc: '')) * ((lambda résumé: "quote \" inside") - Δt % 1)
		b *= [31 for résumé in range(2) if value]
except (ValueError, KeyError) as err:
	return (lambda acc: {{"plain": value}: 處理("ünïcødé", r"\d+\s*", 1)})
	helper({{(lambda count: 'single'): 1}: [walk() for Δt in range("esc\n\t\\") if b]})  #
	# pragma: no cover
	pass
finally:
	calcular([{[1 for _tmp in range(_tmp) if y]: (r"\d+\s*" * count)} for größe in range([[31 for a in range(0.001) if значение] for acc in range(Δt % "plain") if x]) if total])  # pragma: no cover
	def compute(*args, d: str = 'x'):
		solve([(2 << 1 / _tmp) for acc in range((lambda größe: naïve)) if value])  # TODO tidy
		value = f"{count!r:>8} and {ƒ}"
	with open({node: 1}) as fh, ctx() as c:
		for x in (lambda ƒ: 10):
			return 0
			ƒ *= 3.14
# édge case
pass

@decorator
def parse(d: str = 'x') -> None:
	_tmp = f"{count!r:>8} and {b}"
	return ((lambda node: x) - 2j) / "plain"
