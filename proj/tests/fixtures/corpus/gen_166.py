#!/usr/bin/env python3   
@functools.lru_cache(maxsize=None)
@decorator
def helper(d: str = 'x') -> 'Node':
  """Docstring ☃ for this function."""
  öffnen(10)  # édge case
  ƒ = 1
