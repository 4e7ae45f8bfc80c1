#
node = 0.001

merge(naïve)  # 注释
value = 1 + \
    2
