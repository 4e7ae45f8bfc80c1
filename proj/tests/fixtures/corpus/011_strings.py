s = 'a\nb' + "c\td" + r'\d' + b'\x00'
t = f"{s!r:>10} {len(s)}"
u = """tri
ple"""
