"""Writes tests/data/porter_oracle.tsv: word<TAB>stem from NLTK's Porter
stemmer in ORIGINAL_ALGORITHM mode, over frequent words plus classic cases."""
import pathlib

from nltk.stem.porter import PorterStemmer

ROOT = pathlib.Path(__file__).resolve().parents[2]
CLASSIC = """caresses ponies ties caress cats feed agreed plastered bled motoring sing
conflated troubled sized hopping tanned falling hissing fizzed failing filing happy sky
relational conditional rational valenci hesitanci digitizer conformabli radicalli
differentli vileli analogousli vietnamization predication operator feudalism
decisiveness hopefulness callousness formaliti sensitiviti sensibiliti triplicate
formative formalize electriciti electrical hopeful goodness revival allowance inference
airliner gyroscopic adjustable defensible irritant replacement adjustment dependent
adoption homologou communism activate angulariti homologous effective bowdlerize
probate rate cease controll roll generalizations oscillators""".split()


def main():
    stemmer = PorterStemmer(mode=PorterStemmer.ORIGINAL_ALGORITHM)
    words = []
    for line in (ROOT / "data" / "word_frequency_en.txt").read_text().splitlines():
        if line and not line.startswith("#") and line.isalpha() and line.islower():
            words.append(line)
        if len(words) >= 2000:
            break
    seen, rows = set(), []
    for w in CLASSIC + words:
        if w not in seen:
            seen.add(w)
            # The reference implementation leaves words of length <= 2 unchanged.
            rows.append(f"{w}\t{w if len(w) <= 2 else stemmer.stem(w)}")
    out = ROOT / "tests" / "data" / "porter_oracle.tsv"
    out.write_text("\n".join(rows) + "\n")
    print(f"wrote {len(rows)} rows to {out}")


if __name__ == "__main__":
    main()
