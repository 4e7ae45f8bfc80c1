from collections import (
    OrderedDict,
    deque,
)
größe *= (2j + ("ünïcødé" - solve(größe, 15)))
