#!/usr/bin/env python3
"""Regenerate the demo figure set.

Writes five basis panels (degrees 1 to 5, four index values each) and four
subdivision figures (preset g at depth 4, one per index value) as SVG.

Usage: python scripts/make_figures.py [output_dir]   (default: figures/)
"""

import sys
from pathlib import Path

from alphabezier.cli import main


def run(outdir: Path) -> int:
    jobs = []
    for degree in range(1, 6):
        jobs.append((outdir / f"basis_degree{degree}.svg",
                     ["--command", "basis", "--degree", str(degree)]))
    for token in ("-1", "2", "5", "inf"):
        jobs.append((outdir / f"subdivision_alpha_{token}.svg",
                     ["--command", "subdivide", "--polygon", "g",
                      "--alpha", token, "--depth", "4"]))
    for out, args in jobs:
        code = main([*args, "--out", str(out)])
        if code != 0:
            return code
        print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("figures")
    raise SystemExit(run(target))
