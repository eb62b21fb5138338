#!/usr/bin/env python3
"""Stand-in bridge: flat parses and word-overlap similarity."""
import json
import sys
import time


def flat_parse(text):
    words = text.split()
    rows = []
    for i, w in enumerate(words, 1):
        head, rel = (0, "root") if i == 1 else (1, "dep")
        rows.append(f"{i}\t{w}\t{w.lower()}\tX\t_\t_\t{head}\t{rel}\t_\t_")
    return "\n".join(rows) + "\n\n" if rows else ""


def main():
    print(json.dumps({"model": "fake-overlap-1"}), flush=True)
    for line in sys.stdin:
        req = json.loads(line)
        rid = req.get("id", "?")
        if req.get("text") == "__error__":
            resp = {"id": rid, "error": "refused"}
        elif req.get("text") == "__badid__":
            resp = {"id": "nope", "conllu": ""}
        elif req.get("text") == "__hang__":
            time.sleep(5)
            continue
        elif req["kind"] == "parse":
            resp = {"id": rid, "conllu": flat_parse(req["text"])}
        else:
            a, b = set(req["a"].split()), set(req["b"].split())
            resp = {"id": rid, "score": len(a & b) / max(1, len(a | b))}
        print(json.dumps(resp), flush=True)


if __name__ == "__main__":
    main()
