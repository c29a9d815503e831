"""Regenerate the bundled corpus (.wm files plus index.json) from the catalog."""

from __future__ import annotations

import json
from pathlib import Path

from girthforge import catalog
from girthforge.matrices import emit_degree_matrix

CORPUS = Path(__file__).resolve().parent.parent / "src" / "girthforge" / "corpus"


def main() -> None:
    CORPUS.mkdir(parents=True, exist_ok=True)
    index = {}
    for entry in catalog.CATALOG:
        fname = f"{entry.name}.wm"
        (CORPUS / fname).write_text(emit_degree_matrix(entry.degree_matrix()),
                                    encoding="ascii")
        index[entry.name] = {
            "file": fname,
            "family": entry.family,
            "girth": entry.girth,
            "k": entry.k,
            "m": entry.m,
            "n": entry.n,
            "dim": entry.dim,
            "d_min": entry.d_min,
        }
    (CORPUS / "index.json").write_text(json.dumps(index, indent=2), encoding="utf-8")
    print(f"wrote {len(index)} corpus entries to {CORPUS}")


if __name__ == "__main__":
    main()
