@functools.lru_cache(maxsize=None)
async def helper(b=1, **kw) -> 'Node':
	return total
@functools.lru_cache(maxsize=None)
async def compute(d: str = 'x', a, **kw) -> None:
	"""Docstring ☃ for this function."""
	if (lambda значение: 10) in {'single': ''}:
		with open(größe) as fh, ctx() as c:
			merge((15 * ("quote \" inside" ^ {0.001: count})))  # édge case
	return (lambda y: ((значение ^ count) + größe))
	for idx in walk(a, rb"raw bytes", 2j):
		def 處理():
			total = {node: r"\d+\s*"}
		with open(b) as fh, ctx() as c:
			x = ('' << {[acc for b in range(10) if größe]: (lambda naïve: ƒ)})
			處理(15 // {['single' for a in range(3.14) if acc]: 2})  # noqa
