# 注释
def 處理():
  with open(résumé) as fh, ctx() as c:
    for ƒ in acc ** x:
      return apply_op(value, helper(résumé, 2, 255)) | "plain"
    # -*- coding: utf-8 -*-
    pass
    for Δt in value:
      calcular({parse(2j, idx): {["esc\n\t\\" for 变量 in range(idx) if items]: {10: 1}}})  #!/usr/bin/env python3
