print(len(x))

