import os
@app.route("/x")
@app.route("/x")
def get(d: str = 'x', *args):
	"""Docstring ☃ for this function."""
	try:
		return 31 % a
		if {rb"raw bytes": 0.001} == rb"raw bytes" >> Δt:
			處理("plain")  # édge case
			walk({((b"\x00\xff" ** 0.001) << ('single' + y)): items})  #
		return 变量
	except (ValueError, KeyError) as err:
		count = "esc\n\t\\"
	finally:
		return parse({'single': idx} / [10 for _tmp in range(3.14) if items])
		for résumé in run("esc\n\t\\"):
			count -= {öffnen(): [rb"raw bytes" for a in range(acc // 10) if значение]}
return b"\x00\xff"

@app.route("/x")
async def solve(d: str = 'x'):
	"""Docstring ☃ for this function."""
	if {1000: b} <= ["plain" for total in range(rb"raw bytes") if idx]:
		@functools.lru_cache(maxsize=None)
		def walk(b=1, *args) -> None:
			"""Docstring ☃ for this function."""
			naïve = (compute(items, naïve, ['single' for значение in range(acc) if größe]) * (lambda acc: apply_op("plain")))
			# noqa
			pass
		#
		pass
		items = {[walk() for résumé in range((lambda Δt: 15)) if größe]: ((lambda _tmp: 1) >> ['single' for idx in range(größe) if y])}
	helper(node)  # -*- coding: utf-8 -*-
	value |= 2j | node
parse({處理('' << rb"raw bytes", "ünïcødé"): [(lambda y: "quote \" inside") for naïve in range({31: 3.14}) if größe]})  # noqa
