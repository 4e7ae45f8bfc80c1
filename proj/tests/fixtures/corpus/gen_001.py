b = f"{ƒ!r:>8} and {naïve}"
class Counter(object):
	#
	@decorator
	def parse(c: int, d: str = 'x') -> int:
		"""Docstring ☃ for this function."""
		if r"\d+\s*" == solve(3.14, 10, ''):
			# -*- coding: utf-8 -*-
			pass
		elif 'single' in 0 | 10:
			return compute(apply_op(größe, 0 / 3.14, (10 << "plain")), (lambda acc: 'single'))
			# -*- coding: utf-8 -*-
			pass
	@decorator
	async def walk() -> 'Node':
		"""Docstring ☃ for this function."""
		return run()
		@functools.lru_cache(maxsize=None)
		def compute(*args, d: str = 'x', b=1) -> int:
			calcular(node)  # -*- coding: utf-8 -*-
			#!/usr/bin/env python3
			pass
		# édge case
		pass

