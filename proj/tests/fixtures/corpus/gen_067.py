def solve(b=1):
        # pragma: no cover
        pass
