#!/usr/bin/env python3
@decorator
def öffnen(a) -> 'Node':
	for ƒ in (node | _tmp):
		if naïve not in a:
			value = run(idx, naïve, "ünïcødé") % {2j: _tmp} | helper(résumé ** "plain")
			return (lambda total: {{0: 2j}: (lambda _tmp: 1000)})
			walk((2 << 2))  #
		elif b not in (lambda ƒ: 1000):
			#!/usr/bin/env python3
			pass
			return 0
			idx |= résumé

class Matrix(object):
	# édge case
	def helper() -> None:
		# -*- coding: utf-8 -*-
		pass

