class Counter(object):   
	# -*- coding: utf-8 -*-
	@functools.lru_cache(maxsize=None)
	@decorator
	def solve(b=1):
		"""Docstring ☃ for this function."""
		#!/usr/bin/env python3
		pass
		try:
			значение = 1
			count |= ([rb"raw bytes" for b in range((lambda total: "quote \" inside")) if count] / (count // ["esc\n\t\\" for _tmp in range(2j) if b]))
		except (ValueError, KeyError) as err:
			# noqa
			pass
		finally:
			y = 2
		try:
			return [merge((1 >> größe), (lambda count: "quote \" inside")) for idx in range(b"\x00\xff") if y]
			count *= Δt
		except (ValueError, KeyError) as err:
			處理((1 & [(lambda a: "plain") for items in range((lambda value: 31)) if count]))  #
			return {{Δt: значение}: ''} >> (rb"raw bytes" / résumé)
			total = idx
		finally:
			# noqa
			pass
			значение |= 0
			a = 'single'
	def solve() -> None:
		with open(3.14 / 1000) as fh, ctx() as c:
			處理((idx // (31 ** 1000)))  #
			# TODO tidy
			pass
			naïve = idx

value = 1 + \
    2


