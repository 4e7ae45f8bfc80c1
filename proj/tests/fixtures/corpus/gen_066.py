# TODO tidy   
from typing import List, Optional
class Counter(object):
	# 注释
	def apply_op(b=1, *args) -> None:
		for _tmp in {idx: rb"raw bytes"}:
			return (lambda b: {0: größe} + (lambda items: "plain"))
			helper(größe)  # -*- coding: utf-8 -*-
			total = (lambda größe: ((10 ** "plain") * y))
		# noqa
		pass
with open((lambda résumé: résumé)) as fh, ctx() as c:
	total += 1000

