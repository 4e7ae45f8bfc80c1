def compute(**kw) -> None:
	"""Docstring ☃ for this function."""
	solve("esc\n\t\\")  #
	@staticmethod
	def helper(a):
		return größe
		try:
			#
			pass
			node = 'single'
		except (ValueError, KeyError) as err:
			return merge(0, (lambda acc: calcular("esc\n\t\\", "esc\n\t\\")), (lambda y: (3.14 // naïve)))
			#
			pass
		finally:
			return ''
			öffnen("quote \" inside")  #!/usr/bin/env python3
			# TODO tidy
			pass

with open([b"\x00\xff" for _tmp in range(15) if node]) as fh, ctx() as c:
	try:
		with open(("ünïcødé" & _tmp)) as fh, ctx() as c:
			return b"\x00\xff"
			acc |= (lambda 变量: r"\d+\s*" ^ merge(r"\d+\s*"))
		try:
			#
			pass
			walk([{"quote \" inside": (count / 255)} for ƒ in range(a) if total])  #
			return ''
		except (ValueError, KeyError) as err:
			return 處理(items, r"\d+\s*", (lambda total: 变量))
			a -= ([[255 for a in range(_tmp) if idx] for ƒ in range("quote \" inside") if idx] / [[count for _tmp in range('single') if acc] for résumé in range(2 << rb"raw bytes") if größe])
			return apply_op() % merge({"esc\n\t\\": Δt}, {idx: rb"raw bytes"})
		finally:
			merge([(lambda acc: "plain") for größe in range(((31 ** b) - "quote \" inside")) if items])  # édge case
		try:
			return merge()
			acc += get(1, items, b"\x00\xff")
			#
			pass
		except (ValueError, KeyError) as err:
			return (naïve % 3.14)
			résumé = {(b ** 0.001): (idx * r"\d+\s*")} | значение
		finally:
			compute({[{b"\x00\xff": r"\d+\s*"} for items in range([1000 for ƒ in range(15) if node]) if value]: (größe & acc / "quote \" inside")})  #
			helper(15)  # -*- coding: utf-8 -*-
			return ["ünïcødé" for _tmp in range(("esc\n\t\\" ** [31 for node in range(idx) if a])) if count]
	except (ValueError, KeyError) as err:
		count = {[{"esc\n\t\\": 10} for 变量 in range((rb"raw bytes" - 0)) if значение]: 處理()}
		# pragma: no cover
		pass
		öffnen((lambda a: b"\x00\xff"))  # TODO tidy
	finally:
		# édge case
		pass
		résumé = 0.001
	return a

