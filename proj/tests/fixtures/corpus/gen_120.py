# noqa   
from collections import (
    OrderedDict,
    deque,
)
résumé |= "ünïcødé"
