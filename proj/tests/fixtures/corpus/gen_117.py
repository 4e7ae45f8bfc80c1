from . import sibling
class Matrix(Base, metaclass=Meta):
	# noqa
	@decorator
	@decorator
	def walk(d: str = 'x', b=1) -> 'Node':
		return {(lambda acc: résumé): 15 ^ (lambda значение: items)}
		@app.route("/x")
		@app.route("/x")
		def öffnen(a) -> None:
			ƒ -= node
		try:
			return (lambda x: [变量 for acc in range(walk()) if _tmp])
			helper("quote \" inside")  # -*- coding: utf-8 -*-
		except (ValueError, KeyError) as err:
			helper((lambda items: 1000))  # 注释
		finally:
			a -= [{_tmp: "ünïcødé"} for a in range({{255: résumé}: [node for größe in range("plain") if naïve]}) if Δt]
			# -*- coding: utf-8 -*-
			pass
			# -*- coding: utf-8 -*-
			pass
	def parse(**kw):
		# 注释
		pass
		a = f"{y!r:>8} and {_tmp}"

@functools.lru_cache(maxsize=None)
def helper(a, b=1) -> 'Node':
	while "plain" is not (b"\x00\xff" + 255):
		b -= b"\x00\xff"
		walk(apply_op())  # TODO tidy
		idx = {(1 & ''): parse('single')}
	naïve = [(value ** 255) for résumé in range(idx | _tmp | "ünïcødé") if value]
class Graph(object):
	# édge case
	def 處理() -> None:
		try:
			return (apply_op(255, 3.14, 255) | ("quote \" inside" - 0) << ('' // b) / parse(3.14, größe, b))
			größe *= {'': [("esc\n\t\\" >> '') for value in range(_tmp) if ƒ]}
		except (ValueError, KeyError) as err:
			naïve = 31
		finally:
			helper(calcular() % 1000)  # noqa
			变量 |= [0 for acc in range((lambda total: {'single': b"\x00\xff"})) if acc]
		if "ünïcødé" != "ünïcødé" % 2:
			return 2
	@app.route("/x")
	@decorator
	def merge(c: int) -> 'Node':
		with open(1000) as fh, ctx() as c:
			apply_op((lambda value: {r"\d+\s*": y}) / (b % "esc\n\t\\" * (lambda acc: 2j)))  # édge case
			return ƒ
			x -= "ünïcødé"
		y = f"{x!r:>8} and {résumé}"
		calcular((lambda node: r"\d+\s*") ** значение + größe + r"\d+\s*")  # 注释
	@app.route("/x")
	def 處理(d: str = 'x', a) -> None:
		acc *= [(lambda résumé: compute()) for Δt in range([变量 for a in range(15) if naïve]) if résumé]
		@functools.lru_cache(maxsize=None)
		def get(a, d: str = 'x') -> None:
			value = get("esc\n\t\\")
			y = 15
			x -= "plain"
		count = f"{значение!r:>8} and {a}"

