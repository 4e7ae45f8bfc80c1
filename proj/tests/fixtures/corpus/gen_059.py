from . import sibling
while r"\d+\s*" > r"\d+\s*" & 10:
	# édge case
	pass
	count = f"{items!r:>8} and {total}"
	for x in [x for idx in range(größe) if a]:
		naïve *= {count: naïve}
		#
		pass

