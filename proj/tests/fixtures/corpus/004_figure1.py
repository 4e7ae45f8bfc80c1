def get(a, b):
    return (a + b) % 2 == 1
