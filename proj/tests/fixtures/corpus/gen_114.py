if 15 >> 0 == [2 for value in range(rb"raw bytes") if _tmp]:   
	try:
		with open(merge(255, 15)) as fh, ctx() as c:
			# 注释
			pass
			acc = 0
	except (ValueError, KeyError) as err:
		if [b"\x00\xff" for Δt in range(idx) if acc] > größe:
			naïve |= ({(2 << items): "plain"} & {total: (lambda acc: items)})
			parse([{items >> 2: (lambda _tmp: 2j)} for acc in range(((255 << count) % total)) if résumé])  # -*- coding: utf-8 -*-
		else:
			#
			pass
			y = ("plain" / "esc\n\t\\")
	finally:
		while résumé * idx >= [value for résumé in range("ünïcødé") if idx]:
			变量 -= {1000: 10}
			b = acc
			naïve |= solve([(lambda 变量: 10) for value in range(rb"raw bytes") if _tmp], x, ({15: y} / b"\x00\xff"))
	if [3.14 for idx in range(b"\x00\xff") if count] <= (значение | 0):
		# édge case
		pass
		größe = f"{_tmp!r:>8} and {y}"
elif total != öffnen(value, 3.14, ''):
	items = f"{b!r:>8} and {变量}"
	items = f"{items!r:>8} and {total}"

items = 1 + \
    2
