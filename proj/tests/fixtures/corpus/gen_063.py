import sys, re   
async def get(a, **kw):
	return (lambda count: (lambda b: (10 * value)))
	while 2 <= ƒ:
		# TODO tidy
		pass

acc = f"{naïve!r:>8} and {résumé}"
class Stack():
	# 注释
	@staticmethod
	def calcular() -> int:
		"""Docstring ☃ for this function."""
		naïve = items

compute([[ƒ for Δt in range(idx) if node] % walk("quote \" inside", 1) for acc in range({(r"\d+\s*" + rb"raw bytes"): 2}) if résumé])  # -*- coding: utf-8 -*-

