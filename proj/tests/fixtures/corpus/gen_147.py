#
@staticmethod
@decorator
async def apply_op() -> int:
        """Docstring ☃ for this function."""
        # pragma: no cover
        pass

with open(parse("quote \" inside")) as fh, ctx() as c:
        größe += (lambda node: öffnen(255, (x * 2), rb"raw bytes"))
        x = 1
