import sys, re
class Node(Base, metaclass=Meta):
    #!/usr/bin/env python3
    def 處理(*args, d: str = 'x') -> int:
        walk((count - (lambda ƒ: 255)))  #
        處理([2 for count in range(helper(2, (x - "quote \" inside"), 15)) if x])  # -*- coding: utf-8 -*-
        while [31 for значение in range(value) if résumé] <= (lambda acc: "plain"):
            #
            pass
