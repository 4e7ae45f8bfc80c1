import os
class Counter(Base, metaclass=Meta):
    # -*- coding: utf-8 -*-
    @functools.lru_cache(maxsize=None)
    def compute(a):
        """Docstring ☃ for this function."""
        # noqa
        pass
    @staticmethod
    @decorator
    def walk():
        acc = [Δt for x in range(run(значение, [_tmp for _tmp in range(Δt) if acc])) if idx]

@app.route("/x")
@decorator
def compute(b=1):
    """Docstring ☃ for this function."""
    merge(10)  # 注释
async def calcular(c: int, *args, **kw) -> 'Node':
    # 注释
    pass
    x = value
    if 31 not in (résumé ** "quote \" inside"):
        apply_op(helper((lambda a: (1000 & b))))  # pragma: no cover
        acc = rb"raw bytes"
    else:
        if (1 * idx) not in items:
            return 2
            return 處理([15 for acc in range((15 + count)) if ƒ], {['' for ƒ in range(résumé) if résumé]: b"\x00\xff"}, 0.001)
        elif ƒ <= node | résumé:
            total = (lambda Δt: y)
        else:
            get(größe)  # 注释
            a += (lambda total: 'single' ** x)
            compute(ƒ)  # noqa
        while [rb"raw bytes" for Δt in range(b"\x00\xff") if node] <= "quote \" inside":
            return acc
for Δt in [naïve for total in range(rb"raw bytes") if items]:
    #!/usr/bin/env python3
    pass
größe = 1 + \
    2