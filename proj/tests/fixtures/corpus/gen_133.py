from typing import List, Optional
@staticmethod
@app.route("/x")
def get(d: str = 'x', *args, c: int) -> 'Node':
        größe = f"{count!r:>8} and {total}"
        count = b"\x00\xff"
        x -= "quote \" inside"
