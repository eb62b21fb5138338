#!/usr/bin/env python3
"""Extract a small, self-consistent subset of WordNet 3.0 for tests.

Usage: make_wordnet_fixture.py WORDNET_DIR OUT_DIR lemma.pos [lemma.pos ...]

Every synset of each requested lemma is copied verbatim (original offsets are
kept). Index lines are regenerated for every lemma that appears in a copied
synset, listing only the copied synsets, so the subset is referentially closed.
"""
import os
import sys

POS_FILE = {"n": "noun", "v": "verb", "a": "adj", "r": "adv"}
HEADER = ("  Subset of WordNet 3.0 extracted for unit tests.\n"
          "  WordNet 3.0 Copyright 2006 by Princeton University. All rights reserved.\n")


def read_index(path):
    out = {}
    with open(path, encoding="utf-8") as f:
        for line in f:
            if line.startswith(" "):
                continue
            parts = line.split()
            p_cnt = int(parts[3])
            ptrs = parts[4:4 + p_cnt]
            rest = parts[4 + p_cnt:]
            out[parts[0]] = (ptrs, rest[2:])
    return out


def read_data(path):
    out = {}
    with open(path, encoding="utf-8") as f:
        for line in f:
            if line.startswith(" "):
                continue
            out[line.split(" ", 1)[0]] = line
    return out


def main():
    wn, dst = sys.argv[1], sys.argv[2]
    wanted = [a.rsplit(".", 1) for a in sys.argv[3:]]
    os.makedirs(dst, exist_ok=True)
    index = {p: read_index(f"{wn}/index.{f}") for p, f in POS_FILE.items()}
    data = {p: read_data(f"{wn}/data.{f}") for p, f in POS_FILE.items()}
    keep = {p: {} for p in POS_FILE}
    for lemma, pos in wanted:
        for off in index[pos][lemma][1]:
            keep[pos][off] = data[pos][off]
    for pos, fname in POS_FILE.items():
        lemmas = {}
        for off, line in sorted(keep[pos].items()):
            head = line.split("|")[0].split()
            w_cnt = int(head[3], 16)
            for k in range(w_cnt):
                word = head[4 + 2 * k].lower()
                if word.endswith(")") and "(" in word:
                    word = word[:word.index("(")]
                lemmas.setdefault(word, set()).add(off)
        with open(f"{dst}/data.{fname}", "w", encoding="utf-8") as f:
            f.write(HEADER)
            for off in sorted(keep[pos]):
                f.write(keep[pos][off])
        with open(f"{dst}/index.{fname}", "w", encoding="utf-8") as f:
            f.write(HEADER)
            for word in sorted(lemmas):
                full = index[pos].get(word)
                order = full[1] if full else sorted(lemmas[word])
                offs = [o for o in order if o in lemmas[word]]
                ptrs = full[0] if full else []
                f.write(f"{word} {pos} {len(offs)} {len(ptrs)} "
                        + "".join(p + " " for p in ptrs)
                        + f"{len(offs)} 0 " + " ".join(offs) + "  \n")


if __name__ == "__main__":
    main()
