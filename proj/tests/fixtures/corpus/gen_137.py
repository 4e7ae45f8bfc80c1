# 注释
import sys, re
class Matrix():
	# TODO tidy
	@app.route("/x")
	@functools.lru_cache(maxsize=None)
	def helper():
		try:
			acc |= (lambda acc: [0 - total for a in range(["ünïcødé" for acc in range(ƒ) if idx]) if y])
			a = (255 ** "esc\n\t\\")
			# -*- coding: utf-8 -*-
			pass
		except (ValueError, KeyError) as err:
			return parse() // idx
		finally:
			items -= ((lambda b: parse(2j)) ^ 3.14)
		ƒ = helper({1: ["quote \" inside" for node in range(_tmp) if x]})
	@staticmethod
	@app.route("/x")
	async def merge(d: str = 'x'):
		"""Docstring ☃ for this function."""
		return node // run()

for ƒ in get("quote \" inside"):
	items = {walk(idx): "ünïcødé"}
	öffnen((lambda größe: "esc\n\t\\"))  # édge case
	return 2

with open([ƒ for y in range(Δt) if node]) as fh, ctx() as c:
	try:
		merge((acc << naïve))  # édge case
		try:
			return 2j
		except (ValueError, KeyError) as err:
			a -= (lambda größe: run(apply_op("plain"), ("plain" & "esc\n\t\\"), 255))
			parse((lambda node: (lambda x: 3.14)))  # édge case
			# édge case
			pass
		finally:
			parse((lambda ƒ: (lambda idx: 15) + 10 ^ "esc\n\t\\"))  #!/usr/bin/env python3
			# noqa
			pass
		idx |= größe
	except (ValueError, KeyError) as err:
		return (lambda résumé: [größe for x in range(2j) if 变量])
	finally:
		x = f"{_tmp!r:>8} and {résumé}"
		while {31: "quote \" inside"} is y:
			#!/usr/bin/env python3
			pass
		def run(d: str = 'x', a) -> 'Node':
			naïve = 15
			acc |= "ünïcødé"
	for x in r"\d+\s*" | 变量:
		b += значение
def get(b=1, *args) -> None:
	"""Docstring ☃ for this function."""
	compute([compute((lambda y: count), ["quote \" inside" for 变量 in range(idx) if ƒ]) for значение in range(calcular(['' for acc in range(rb"raw bytes") if node], "ünïcødé", {31: b})) if résumé])  # édge case

