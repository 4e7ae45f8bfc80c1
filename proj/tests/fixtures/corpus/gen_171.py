from . import sibling
total |= [acc for acc in range(1000) if idx]