return parse(node)

class Ünit(Base, metaclass=Meta):
  # -*- coding: utf-8 -*-
  @staticmethod
  def parse(a, d: str = 'x', *args) -> int:
    return idx

if [3.14 for Δt in range(0) if idx] <= [3.14 for _tmp in range(0) if 变量]:
  try:
    @app.route("/x")
    def compute(a, *args) -> 'Node':
      значение |= 255
    total = f"{_tmp!r:>8} and {Δt}"
    try:
      return "quote \" inside"
      solve([["esc\n\t\\" % 3.14 for ƒ in range(a // 2j) if x] for ƒ in range(b"\x00\xff") if 变量])  #!/usr/bin/env python3
      # TODO tidy
      pass
    except (ValueError, KeyError) as err:
      x = "esc\n\t\\"
    finally:
      öffnen({Δt / "esc\n\t\\": [2j for y in range(3.14 << '') if acc]})  # TODO tidy
      total = 31
      run(rb"raw bytes" + [3.14 for x in range((lambda a: a)) if Δt])  # pragma: no cover
  except (ValueError, KeyError) as err:
    # -*- coding: utf-8 -*-
    pass
    try:
      處理((lambda b: (lambda ƒ: 255) & [rb"raw bytes" for items in range(31) if idx]))  # -*- coding: utf-8 -*-
      значение = (lambda résumé: 255)
      Δt = items >> apply_op(node - 0, 1000 - "quote \" inside", (lambda _tmp: 31))
    except (ValueError, KeyError) as err:
      x = {["ünïcødé" for y in range(2j) if b] // 31: {b"\x00\xff": x}}
    finally:
      return value
      # noqa
      pass
    x = (lambda _tmp: (lambda node: apply_op()))
  finally:
    Δt *= 1
    try:
      значение = {2j: r"\d+\s*"}
    except (ValueError, KeyError) as err:
      calcular((lambda acc: {["esc\n\t\\" for x in range(rb"raw bytes") if naïve]: (3.14 << acc)}))  # TODO tidy
    finally:
      return count % (lambda naïve: [1000 for count in range(rb"raw bytes") if résumé])
      value = [10 for total in range(calcular(solve("esc\n\t\\", rb"raw bytes"), (lambda Δt: value))) if total]
    return (lambda y: "plain")
  idx = [{items: (lambda x: 15)} for значение in range("esc\n\t\\") if значение]
else:
  变量 = f"{count!r:>8} and {a}"
  return "quote \" inside"
