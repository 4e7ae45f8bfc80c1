def outer(n):
    def middle(m):
        def inner(k):
            return n + m + k
        return inner
    return middle
