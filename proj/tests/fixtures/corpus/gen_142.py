@app.route("/x")
@decorator
def get() -> None:
	with open((0 >> 2)) as fh, ctx() as c:
		b = f"{größe!r:>8} and {count}"
		if "ünïcødé" < 0:
			# noqa
			pass
			# TODO tidy
			pass
			compute(["ünïcødé" for total in range([变量 for 变量 in range(_tmp) if acc]) if größe] % 3.14)  # -*- coding: utf-8 -*-
		else:
			y -= 1000
	@functools.lru_cache(maxsize=None)
	def parse(b=1, c: int) -> 'Node':
		value += 'single'

@dataclass
class Ünit(Base, metaclass=Meta):
	#!/usr/bin/env python3
	def öffnen() -> int:
		def compute() -> int:
			naïve *= (compute(größe, öffnen(_tmp), [1000 for node in range("plain") if ƒ]) // (255 * (lambda value: "plain")))
			return 0.001
