# -*- coding: utf-8 -*-
import os
def calcular(d: str = 'x', *args) -> 'Node':
        """Docstring ☃ for this function."""
        return 'single'
        # 注释
        pass

idx += (lambda count: größe)

