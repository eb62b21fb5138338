#!/usr/bin/env python3
"""Derive data/verb_transitivity.tsv from WordNet 3.0 verb frames.

Usage: make_verb_transitivity.py WORDNET_DIR OUT [N]   (needs the wordfreq package)

A verb is transitive when its most frequent sense licenses a frame with a
direct object. Intransitive verbs get the preposition fixed by frames 12/13/27,
else that of their most frequent "verb_prep" collocation in WordNet.
"""
import sys
import wordfreq

TRANSITIVE_FRAMES = {8, 9, 10, 11, 14, 15, 16, 17, 18, 19, 20, 21, 24, 25, 26, 30, 31}
PREPS = ["to", "at", "on", "in", "for", "with", "from", "about", "into", "of", "upon", "over", "after"]


def main():
    wn, out = sys.argv[1], sys.argv[2]
    limit = int(sys.argv[3]) if len(sys.argv) > 3 else 2000
    index = {}
    with open(f"{wn}/index.verb", encoding="utf-8") as f:
        for line in f:
            if line.startswith(" "):
                continue
            parts = line.split()
            lemma = parts[0]
            p_cnt = int(parts[3])
            rest = parts[4 + p_cnt:]
            tagsense = int(rest[1])
            offsets = rest[2:]
            index[lemma] = (offsets, tagsense)
    frames = {}
    with open(f"{wn}/data.verb", encoding="utf-8") as f:
        for line in f:
            if line.startswith(" "):
                continue
            head = line.split("|")[0].split()
            off = head[0]
            w_cnt = int(head[3], 16)
            pos = 4 + 2 * w_cnt
            p_cnt = int(head[pos])
            pos += 1 + 4 * p_cnt
            f_cnt = int(head[pos]) if pos < len(head) else 0
            nums = set()
            for k in range(f_cnt):
                nums.add(int(head[pos + 2 + 3 * k]))
            frames[off] = nums

    verbs = []
    for w in wordfreq.top_n_list("en", 60000):
        if w in index and w.isalpha():
            verbs.append(w)
        if len(verbs) >= limit:
            break

    with open(out, "w", encoding="utf-8") as f:
        f.write("# verb\ttransitivity\tpreposition\n")
        for v in verbs:
            first = index[v][0][0]
            fr = frames.get(first, set())
            if fr & TRANSITIVE_FRAMES:
                f.write(f"{v}\ttransitive\t-\n")
                continue
            prep = "-"
            if fr & {12, 27}:
                prep = "to"
            elif 13 in fr:
                prep = "on"
            else:
                best = -1
                for p in PREPS:
                    entry = index.get(f"{v}_{p}")
                    if entry and entry[1] > best:
                        best, prep = entry[1], p
            f.write(f"{v}\tintransitive\t{prep}\n")


if __name__ == "__main__":
    main()
