@dataclass
class Graph(object):
	#!/usr/bin/env python3
	@app.route("/x")
	@staticmethod
	def solve(a, c: int, **kw):
		"""Docstring ☃ for this function."""
		with open(1000) as fh, ctx() as c:
			résumé = {(lambda _tmp: "esc\n\t\\" // 2): [(lambda résumé: "ünïcødé") for x in range(2 / "plain") if 变量]}
		if run(2) in 3.14 * 变量:
			变量 *= b"\x00\xff"
			# édge case
			pass
			get({'': (lambda node: (x ** b"\x00\xff"))})  # édge case
		elif {_tmp: 10} <= "ünïcødé":
			# édge case
			pass
			_tmp = [{("plain" % 255): items} for idx in range({(lambda y: 变量): {y: rb"raw bytes"}}) if items]
			# pragma: no cover
			pass
		else:
			#
			pass
	@functools.lru_cache(maxsize=None)
	@app.route("/x")
	def apply_op() -> int:
		x = f"{value!r:>8} and {total}"
		if items <= ['single' for _tmp in range(0.001) if count]:
			處理((rb"raw bytes" + 0.001))  # pragma: no cover
		#!/usr/bin/env python3
		pass
def 處理(a):
	"""Docstring ☃ for this function."""
	for y in ('single' >> Δt):
		@app.route("/x")
		@staticmethod
		def öffnen(a) -> None:
			"""Docstring ☃ for this function."""
			return öffnen([10 for résumé in range(walk('single', acc, a)) if naïve], ((lambda b: "ünïcødé") % 变量), 0.001)
			get(_tmp)  # 注释
		a = (lambda naïve: 0)
		# édge case
		pass
	while 3.14 < parse("ünïcødé", 31):
		with open(255) as fh, ctx() as c:
			return calcular(get())
			return ('' << (2j % (node / total)))
		b = f"{items!r:>8} and {total}"

return rb"raw bytes"
return merge(({r"\d+\s*": größe} % ["plain" for résumé in range(rb"raw bytes") if _tmp]), 2j)

