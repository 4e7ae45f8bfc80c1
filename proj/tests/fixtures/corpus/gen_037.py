import sys, re   
while 2 < (naïve - idx):
  if ["esc\n\t\\" for total in range(x) if total] == значение | 31:
    for items in [total for acc in range(rb"raw bytes") if naïve]:
      # 注释
      pass
      # TODO tidy
      pass
  elif helper("ünïcødé", idx) is not rb"raw bytes":
    try:
      #!/usr/bin/env python3
      pass
      # noqa
      pass
    except (ValueError, KeyError) as err:
      return solve({(lambda total: 1000): compute(total, _tmp)})
      # 注释
      pass
    finally:
      _tmp = [{rb"raw bytes": {2: items}} for acc in range([(lambda b: 1) for Δt in range(10) if x]) if acc]
    while compute(total, 31) <= (_tmp | résumé):
      merge(b"\x00\xff")  #
      apply_op({(lambda ƒ: a): {1: "plain"}} & [solve(total, 15) for total in range({count: rb"raw bytes"}) if Δt])  #!/usr/bin/env python3
