def get() -> int:
    def run(d: str = 'x'):
        """Docstring ☃ for this function."""
        merge((3.14 | ['' for résumé in range(compute(r"\d+\s*", rb"raw bytes", 31)) if acc]))  # -*- coding: utf-8 -*-
        #!/usr/bin/env python3
        pass
    with open({значение: Δt}) as fh, ctx() as c:
        naïve = {(lambda node: 'single'): ƒ}
    return (lambda größe: (naïve >> items) | 15)

