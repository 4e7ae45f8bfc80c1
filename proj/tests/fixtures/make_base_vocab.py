#!/usr/bin/env python3
"""Regenerates tests/fixtures/base_vocab.json.

Test fixture only: learns a small byte-level BPE merge table (no
pre-tokenization, same as the segmenter) from part of the fixture corpus.
Token strings use the GPT-2 byte-to-unicode escape.
"""
import collections
import glob
import json
import os

HERE = os.path.dirname(os.path.abspath(__file__))
NUM_MERGES = 300


def byte_alphabet():
    direct = (list(range(ord("!"), ord("~") + 1)) + list(range(0xA1, 0xAD)) +
              list(range(0xAE, 0x100)))
    table, n = {}, 0
    for b in range(256):
        if b in direct:
            table[b] = chr(b)
        else:
            table[b] = chr(256 + n)
            n += 1
    return table


def main():
    files = sorted(glob.glob(os.path.join(HERE, "corpus", "gen_*.py")))[:100]
    seqs = [[bytes([b]) for b in open(f, "rb").read()] for f in files]
    tokens = [bytes([b]) for b in range(256)]
    merges = []
    for _ in range(NUM_MERGES):
        counts = collections.Counter()
        for s in seqs:
            for a, b in zip(s, s[1:]):
                counts[(a, b)] += 1
        if not counts:
            break
        # most frequent pair; ties broken by byte order for determinism
        (a, b), c = max(counts.items(), key=lambda kv: (kv[1], [-x for x in kv[0][0] + kv[0][1]]))
        if c < 2:
            break
        merges.append((a, b))
        if a + b not in tokens:
            tokens.append(a + b)
        for i, s in enumerate(seqs):
            out, j = [], 0
            while j < len(s):
                if j + 1 < len(s) and s[j] == a and s[j + 1] == b:
                    out.append(a + b)
                    j += 2
                else:
                    out.append(s[j])
                    j += 1
            seqs[i] = out
    alpha = byte_alphabet()
    esc = lambda t: "".join(alpha[x] for x in t)
    doc = {"tokens": [esc(t) for t in tokens], "merges": [[esc(a), esc(b)] for a, b in merges]}
    with open(os.path.join(HERE, "base_vocab.json"), "w", encoding="utf-8") as f:
        json.dump(doc, f, ensure_ascii=False, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main()
