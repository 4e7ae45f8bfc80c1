#!/usr/bin/env python3
"""Regenerates tests/fixtures/corpus/ (deterministic; seed fixed below).

The corpus mixes hand-written edge cases with randomly assembled programs:
unicode identifiers, comments, decorators, nested definitions, string
prefixes and escapes, tabs, CRLF and mixed line endings, missing final
newlines, empty and whitespace-only files.
"""
import os
import random
import shutil

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "corpus")

NAMES = ["a", "b", "x", "y", "total", "count", "items", "value", "idx", "node",
         "résumé", "größe", "变量", "ƒ", "Δt", "naïve", "значение", "_tmp", "acc"]
FUNCS = ["get", "compute", "solve", "helper", "run", "parse", "merge", "walk",
         "calcular", "處理", "öffnen", "apply_op"]
CLASSES = ["Node", "Stack", "Counter", "Matrix", "Ünit", "Graph"]
OPS = ["+", "-", "*", "//", "%", "**", "<<", ">>", "&", "|", "^", "/"]
CMPS = ["<", "<=", ">", ">=", "==", "!=", "in", "not in", "is", "is not"]
COMMENTS = ["# TODO tidy", "# noqa", "# 注释", "# édge case", "#", "# pragma: no cover",
            "# -*- coding: utf-8 -*-", "#!/usr/bin/env python3"]
STRINGS = ['"plain"', "'single'", '"esc\\n\\t\\\\"', 'r"\\d+\\s*"', 'b"\\x00\\xff"',
           '"""doc\nstring"""', "'''multi\n  line'''", 'u"unicode ☃"', '"quote \\" inside"',
           'rb"raw bytes"', '"ünïcødé"', "''"]


def name(r):
    return r.choice(NAMES)


def expr(r, depth=0):
    k = r.randrange(9 if depth < 3 else 3)
    if k == 0:
        return name(r)
    if k == 1:
        return str(r.choice([0, 1, 2, 10, 255, 1_000, 3.14, 1e-3, 0x1F, 0o17, 2j]))
    if k == 2:
        return r.choice(STRINGS[:5] + STRINGS[8:])
    if k == 3:
        return f"{expr(r, depth + 1)} {r.choice(OPS)} {expr(r, depth + 1)}"
    if k == 4:
        return f"({expr(r, depth + 1)} {r.choice(OPS)} {expr(r, depth + 1)})"
    if k == 5:
        args = ", ".join(expr(r, depth + 1) for _ in range(r.randrange(4)))
        return f"{r.choice(FUNCS)}({args})"
    if k == 6:
        return f"[{expr(r, depth + 1)} for {name(r)} in range({expr(r, depth + 1)}) if {name(r)}]"
    if k == 7:
        return f"{{{expr(r, depth + 1)!s}: {expr(r, depth + 1)}}}".replace("!s", "")
    return f"(lambda {name(r)}: {expr(r, depth + 1)})"


def cond(r):
    return f"{expr(r, 2)} {r.choice(CMPS)} {expr(r, 2)}"


def stmt(r, ind, depth):
    pad = ind * depth
    k = r.randrange(12 if depth < 3 else 5)
    if k == 0:
        return [f"{pad}{name(r)} = {expr(r)}"]
    if k == 1:
        return [f"{pad}{name(r)} {r.choice(['+=', '-=', '*=', '|='])} {expr(r)}"]
    if k == 2:
        return [f"{pad}return {expr(r)}"]
    if k == 3:
        return [f"{pad}{r.choice(FUNCS)}({expr(r)})  {r.choice(COMMENTS)}"]
    if k == 4:
        return [f"{pad}{r.choice(COMMENTS)}", f"{pad}pass"]
    if k == 5:
        lines = [f"{pad}if {cond(r)}:"] + block(r, ind, depth + 1)
        if r.random() < 0.5:
            lines += [f"{pad}elif {cond(r)}:"] + block(r, ind, depth + 1)
        if r.random() < 0.5:
            lines += [f"{pad}else:"] + block(r, ind, depth + 1)
        return lines
    if k == 6:
        return [f"{pad}for {name(r)} in {expr(r, 2)}:"] + block(r, ind, depth + 1)
    if k == 7:
        return [f"{pad}while {cond(r)}:"] + block(r, ind, depth + 1)
    if k == 8:
        return ([f"{pad}try:"] + block(r, ind, depth + 1) +
                [f"{pad}except (ValueError, KeyError) as err:"] + block(r, ind, depth + 1) +
                [f"{pad}finally:"] + block(r, ind, depth + 1))
    if k == 9:
        return [f"{pad}with open({expr(r, 2)}) as fh, ctx() as c:"] + block(r, ind, depth + 1)
    if k == 10:
        return funcdef(r, ind, depth)
    return [f"{pad}{name(r)} = f\"{{{name(r)}!r:>8}} and {{{name(r)}}}\""]


def block(r, ind, depth):
    lines = []
    for _ in range(r.randrange(1, 4)):
        lines += stmt(r, ind, depth)
    return lines


def funcdef(r, ind, depth):
    pad = ind * depth
    lines = []
    for _ in range(r.randrange(3)):
        deco = r.choice(["staticmethod", "functools.lru_cache(maxsize=None)", "decorator", 'app.route("/x")'])
        lines.append(f"{pad}@{deco}")
    params = ", ".join(r.sample(["a", "b=1", "*args", "c: int", "**kw", "d: str = 'x'"], r.randrange(4)))
    params = params.replace("**kw, ", "").replace("*args, **kw", "*args, **kw")
    ret = r.choice(["", " -> int", " -> None", " -> 'Node'"])
    asyn = "async " if r.random() < 0.15 else ""
    lines.append(f"{pad}{asyn}def {r.choice(FUNCS)}({params}){ret}:")
    if r.random() < 0.4:
        lines.append(f'{pad}{ind}"""Docstring ☃ for this function."""')
    lines += block(r, ind, depth + 1)
    return lines


def classdef(r, ind):
    lines = []
    if r.random() < 0.4:
        lines.append("@dataclass")
    lines.append(f"class {r.choice(CLASSES)}({r.choice(['', 'object', 'Base, metaclass=Meta'])}):")
    lines.append(f"{ind}{r.choice(COMMENTS)}")
    for _ in range(r.randrange(1, 4)):
        lines += funcdef(r, ind, 1)
    return lines


def program(r):
    ind = r.choice(["    ", "  ", "\t", "        "])
    lines = []
    if r.random() < 0.3:
        lines.append(r.choice(COMMENTS))
    if r.random() < 0.5:
        lines.append(r.choice(["import os", "import sys, re", "from typing import List, Optional",
                               "from . import sibling", "from collections import (\n    OrderedDict,\n    deque,\n)"]))
    for _ in range(r.randrange(1, 5)):
        k = r.randrange(4)
        if k == 0:
            lines += classdef(r, ind)
        elif k == 1:
            lines += funcdef(r, ind, 0)
        else:
            lines += stmt(r, ind, 0)
        if r.random() < 0.5:
            lines.append("")
    text = "\n".join(lines)
    # line continuation and trailing whitespace
    if r.random() < 0.2:
        text += f"\n{name(r)} = 1 + \\\n    2"
    if r.random() < 0.2:
        text = text.replace("\n", "   \n", 1)
    ending = r.random()
    if ending < 0.15:
        text = text.replace("\n", "\r\n")
    elif ending < 0.25:
        parts = text.split("\n")
        text = "".join(p + (r.choice(["\n", "\r\n"]) if i < len(parts) - 1 else "")
                       for i, p in enumerate(parts))
    tail = r.random()
    if tail < 0.7:
        text += "\r\n" if ending < 0.15 else "\n"
    elif tail < 0.8:
        text += "\n\n\n"
    return text


HANDWRITTEN = {
    "000_empty.py": "",
    "001_newline_only.py": "\n",
    "002_whitespace_only.py": "\n\n   \n\t\n",
    "003_comment_only.py": "# just a comment\n",
    "004_figure1.py": "def get(a, b):\n    return (a + b) % 2 == 1\n",
    "005_no_final_newline.py": "x = 1\ny = x + 2",
    "006_unicode_idents.py": "变量 = 1\nrésumé = 变量 * 2  # 注释\ndef ƒ(Δt):\n    return Δt ** 2\n",
    "007_decorators.py": "@a\n@b.c(1, key='v')\ndef f():\n    pass\n\n\n@dataclass(frozen=True)\nclass P:\n    x: int = 0\n",
    "008_nested_defs.py": "def outer(n):\n    def middle(m):\n        def inner(k):\n            return n + m + k\n        return inner\n    return middle\n",
    "009_crlf.py": "def f(x):\r\n    if x:\r\n        return 1\r\n    return 0\r\n",
    "010_mixed_endings.py": "a = 1\r\nb = 2\nc = 3\r\nd = 4\n",
    "011_strings.py": "s = 'a\\nb' + \"c\\td\" + r'\\d' + b'\\x00'\nt = f\"{s!r:>10} {len(s)}\"\nu = \"\"\"tri\nple\"\"\"\n",
    "012_trailing_paren.py": "print(len(x))\n\n",
    "013_ends_with_anonymous.py": "foo()",
    "014_ends_with_anonymous_gap.py": "foo(  )\n  \n",
    "015_tabs.py": "if True:\n\tx = 1\n\tif x:\n\t\ty = 2\n",
    "016_line_continuation.py": "total = 1 + \\\n    2 + \\\n    3\n",
    "017_comprehensions.py": "xs = [i * i for i in range(10) if i % 2]\nd = {k: v for k, v in zip(a, b)}\ng = (x for x in xs)\ns = {*xs}\n",
    "018_async.py": "import asyncio\n\nasync def main():\n    async with lock:\n        await asyncio.sleep(1)\n    async for x in gen():\n        yield x\n",
    "019_walrus_match.py": "if (n := len(a)) > 10:\n    print(n)\nmatch cmd:\n    case [x, y]:\n        pass\n    case _:\n        pass\n",
    "020_leading_blank.py": "\n\n\nx = 1\n",
    "021_semicolons.py": "a = 1; b = 2; c = a + b\n",
    "022_global_nonlocal.py": "def f():\n    global g\n    x = 0\n    def h():\n        nonlocal x\n        x += 1\n    return h\n",
    "023_lambda_default.py": "f = lambda a, *b, c=3, **d: (a, b, c, d)\n",
    "024_slices.py": "y = x[1:2, ::3, ...]\nz = x[-1]\n",
    "025_try_star.py": "try:\n    pass\nexcept* ValueError:\n    pass\n",
    "026_class_bases.py": "class A(B, C, metaclass=M):\n    '''doc'''\n    x = 1\n    def m(self):\n        return self.x\n",
    "027_operators.py": "r = a - b * c\nq = (a - b) * c\nw = not a and b or c\nv = a if b else c\n",
    "028_emoji_string.py": "msg = \"héllo wörld 🎉\"\n",
    "029_assert_raise.py": "assert x > 0, 'positive'\nraise ValueError('bad') from None\n",
}


def main():
    if os.path.isdir(OUT):
        shutil.rmtree(OUT)
    os.makedirs(OUT)
    for fname, text in HANDWRITTEN.items():
        with open(os.path.join(OUT, fname), "wb") as f:
            f.write(text.encode("utf-8"))
    r = random.Random(20240613)
    for i in range(200):
        with open(os.path.join(OUT, f"gen_{i:03d}.py"), "wb") as f:
            f.write(program(r).encode("utf-8"))


if __name__ == "__main__":
    main()
