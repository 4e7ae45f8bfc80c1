if (n := len(a)) > 10:
    print(n)
match cmd:
    case [x, y]:
        pass
    case _:
        pass
