with open("quote \" inside" | value) as fh, ctx() as c:
	_tmp *= ([[31 for total in range(ƒ) if Δt] for 变量 in range([x for ƒ in range(3.14) if naïve]) if node] * {{_tmp: rb"raw bytes"}: ['' for x in range(b"\x00\xff") if value]})

return 'single'

@dataclass
class Stack(object):
	#
	@app.route("/x")
	def get(a) -> None:
		"""Docstring ☃ for this function."""
		def walk() -> None:
			b = {öffnen(): ("esc\n\t\\" ^ naïve)}
			return 'single' >> {node: helper()}
			return items
		walk(((lambda node: (lambda значение: 0)) % walk("esc\n\t\\", [2j for résumé in range('') if items])))  # -*- coding: utf-8 -*-
		for count in {10: 0.001}:
			# noqa
			pass
			acc = [Δt for value in range(0.001 - naïve ** {0: 3.14}) if größe]
			Δt *= {acc: "quote \" inside"} ** {rb"raw bytes": 15} << (变量 // solve("ünïcødé", "ünïcødé"))
	@app.route("/x")
	@functools.lru_cache(maxsize=None)
	def helper(*args) -> int:
		"""Docstring ☃ for this function."""
		solve("esc\n\t\\")  # 注释
		with open(31) as fh, ctx() as c:
			ƒ = get([{3.14: résumé} for Δt in range(255) if b])
	def compute() -> 'Node':
		# noqa
		pass
		for count in ("quote \" inside" + 255):
			helper({(('' ^ node) / 1): compute(10, compute(255, значение))})  #
		for idx in {Δt: node}:
			变量 += "quote \" inside"
			node += items

class Stack(Base, metaclass=Meta):
	# noqa
	def calcular(b=1, d: str = 'x'):
		@staticmethod
		@app.route("/x")
		async def 處理(d: str = 'x', *args) -> None:
			"""Docstring ☃ for this function."""
			öffnen((get(15, total, 'single') << "ünïcødé" >> acc))  #!/usr/bin/env python3
			compute("esc\n\t\\")  # 注释
			# pragma: no cover
			pass

