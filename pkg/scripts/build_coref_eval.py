#!/usr/bin/env python3
"""Regenerate the bundled pronoun-resolution evaluation set.

The rows come from generate_coref_dataset with a pinned seed, so the
file is reproducible; it is bundled so evaluation does not depend on
the generator staying byte-stable across refactors.
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from parley.gazetteer import default_gazetteer
from parley.synthdata import generate_coref_dataset, save_dataset

OUT = Path(__file__).resolve().parent.parent / "src/parley/data/synth/coref_eval.jsonl"


def main() -> int:
    rows = generate_coref_dataset(default_gazetteer(), n=60, seed=23)
    OUT.parent.mkdir(parents=True, exist_ok=True)
    save_dataset(OUT, rows)
    negatives = sum(1 for r in rows if not r["bindings"])
    pairs = sum(1 for r in rows if len(r["bindings"]) == 2)
    print(f"wrote {len(rows)} rows to {OUT} ({pairs} two-pronoun, {negatives} pleonastic)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
