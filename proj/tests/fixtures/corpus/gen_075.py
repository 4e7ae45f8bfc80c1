# -*- coding: utf-8 -*-
pass

@app.route("/x")
@decorator
def parse(*args, a) -> int:
  """Docstring ☃ for this function."""
  walk((lambda a: "quote \" inside"))  # 注释
Δt = 1 + \
    2
