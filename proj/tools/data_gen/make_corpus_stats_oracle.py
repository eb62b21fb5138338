#!/usr/bin/env python3
"""Independent per-category counts for the bundled mini-corpus.

Word counts: whitespace tokens containing a letter or digit. Edit counts:
sacrebleu's tercom-compatible TER (no punctuation, case-insensitive), wordy
sentence against the first reference. Prints the values pinned in the
acceptance binary.
"""
import collections
import json
import pathlib
import re

from sacrebleu.metrics import TER

ROOT = pathlib.Path(__file__).resolve().parents[2]
ORDER = ["I", "II", "III", "IV", "V", "VI", "VII"]


def words(s):
    return sum(1 for t in s.split() if re.search(r"[A-Za-z0-9]", t))


def main():
    ter = TER(no_punct=True, case_sensitive=False)
    rows = [json.loads(l) for l in (ROOT / "data" / "mini_corpus.jsonl").read_text().splitlines() if l]
    groups = collections.defaultdict(list)
    for r in rows:
        edits = ter.sentence_score(r["wordy"], [r["concise"][0]]).num_edits
        groups[r["category"]].append((words(r["wordy"]), words(r["concise"][0]), edits))
    groups["All"] = [x for c in ORDER for x in groups[c]]
    for c in ORDER + ["All"]:
        g = groups[c]
        n = len(g)
        print(f'{{"{c}", {n}, {sum(x[0] for x in g)}.0 / {n}, {sum(x[1] for x in g)}.0 / {n}, '
              f'{sum(x[2] for x in g)}.0 / {n}}},')


if __name__ == "__main__":
    main()
