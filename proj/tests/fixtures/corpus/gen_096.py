@dataclass   
class Counter(object):
  # TODO tidy
  @decorator
  def öffnen(d: str = 'x') -> None:
    """Docstring ☃ for this function."""
    try:
      return (lambda y: [["esc\n\t\\" for Δt in range('single') if Δt] for items in range(öffnen(b"\x00\xff")) if größe])
      return rb"raw bytes"
    except (ValueError, KeyError) as err:
      run({"quote \" inside" / "ünïcødé" ^ "esc\n\t\\": 1000})  # TODO tidy
      run(1000)  #
    finally:
      處理(b)  # -*- coding: utf-8 -*-
    # TODO tidy
    pass
    for node in {10: "quote \" inside"}:
      walk({merge((lambda acc: 10)): {[b"\x00\xff" for node in range(x) if acc]: значение}})  # 注释
      # pragma: no cover
      pass
  def 處理(**kw):
    """Docstring ☃ for this function."""
    try:
      x = value
      helper(walk(("quote \" inside" // 255 ^ [255 for a in range('') if значение])))  # noqa
    except (ValueError, KeyError) as err:
      merge(((total ^ value) << значение | 变量))  # -*- coding: utf-8 -*-
      y |= ((2 * b"\x00\xff" >> count) ^ {15: "esc\n\t\\"} // calcular(items, r"\d+\s*"))
      b += 2
    finally:
      _tmp |= solve()
      count *= 变量
    b |= (lambda y: ["ünïcødé" for acc in range([3.14 for ƒ in range(résumé) if a]) if résumé])
    with open(helper()) as fh, ctx() as c:
      return (lambda idx: [Δt for value in range(walk(résumé)) if value])
      run(31)  # 注释
  @app.route("/x")
  @functools.lru_cache(maxsize=None)
  def calcular(a) -> None:
    """Docstring ☃ for this function."""
    with open((x ^ naïve)) as fh, ctx() as c:
      calcular(get((lambda 变量: [r"\d+\s*" for größe in range('single') if _tmp]), 1))  # TODO tidy
      return 255
    with open(helper()) as fh, ctx() as c:
      变量 = (lambda résumé: {"esc\n\t\\": {acc: node}})
    # -*- coding: utf-8 -*-
    pass
