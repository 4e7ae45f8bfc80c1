f = lambda a, *b, c=3, **d: (a, b, c, d)
