from . import sibling
with open("quote \" inside" >> 2) as fh, ctx() as c:
  Δt = 0.001
  # pragma: no cover
  pass

