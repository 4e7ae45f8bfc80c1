from collections import (   
    OrderedDict,
    deque,
)
def 處理() -> None:
	"""Docstring ☃ for this function."""
	with open(0.001) as fh, ctx() as c:
		while {"quote \" inside": idx} is not [15 for a in range(_tmp) if count]:
			idx = (b"\x00\xff" ** {walk(résumé): (Δt // 2)})
	return compute({31: résumé}, rb"raw bytes", (lambda ƒ: (lambda acc: "esc\n\t\\")))
	# -*- coding: utf-8 -*-
	pass

