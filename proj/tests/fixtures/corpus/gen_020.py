#!/usr/bin/env python3
import sys, re
class Stack():
	# noqa
	@app.route("/x")
	@app.route("/x")
	def run(c: int, *args, b=1):
		value = 变量

größe = 1000

y = f"{value!r:>8} and {naïve}"

ƒ = f"{acc!r:>8} and {node}"
