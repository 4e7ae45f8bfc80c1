class Node(object):   
	# 注释
	@functools.lru_cache(maxsize=None)
	def compute(*args) -> None:
		helper(15)  #!/usr/bin/env python3
	def merge(a) -> int:
		"""Docstring ☃ for this function."""
		return (calcular([0 for a in range(0.001) if y], (lambda total: count)) << merge([2 for y in range(255) if idx]))
		# 注释
		pass
		# pragma: no cover
		pass
	def parse(a, b=1, **kw):
		while ["esc\n\t\\" for résumé in range(x) if _tmp] > compute(255):
			# pragma: no cover
			pass
			b *= 255
			walk({[0 for ƒ in range("plain") if count]: "esc\n\t\\" % x} // 10)  # noqa
		größe -= 1
class Graph():
	# pragma: no cover
	@staticmethod
	def walk() -> None:
		_tmp = (lambda 变量: merge({10: naïve}))
		with open(r"\d+\s*" / naïve) as fh, ctx() as c:
			a -= parse((lambda acc: idx) ^ ("ünïcødé" * 1), 255, {(lambda b: count): 变量})
			return (lambda total: b)
	@staticmethod
	@staticmethod
	def run() -> int:
		"""Docstring ☃ for this function."""
		for naïve in "esc\n\t\\":
			# noqa
			pass
	@decorator
	def get(b=1) -> 'Node':
		idx = {[solve() for value in range(["plain" for node in range(a) if node]) if count]: apply_op((lambda idx: résumé))}
		apply_op("esc\n\t\\")  #!/usr/bin/env python3
		return "quote \" inside"
@dataclass
class Counter(object):
	# édge case
	@staticmethod
	@app.route("/x")
	def calcular(*args):
		"""Docstring ☃ for this function."""
		y = "ünïcødé"
		@decorator
		@decorator
		def helper(a, *args) -> None:
			öffnen(15)  # pragma: no cover
	def helper(*args, b=1, c: int) -> int:
		значение = f"{a!r:>8} and {ƒ}"
		while 15 is (lambda résumé: total):
			#!/usr/bin/env python3
			pass
		return b"\x00\xff"

