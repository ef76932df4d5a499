"""Write the data behind the walk/path count figures and the delta-measure figure as CSV.

Usage:
    python scripts/figure_data.py OUTDIR

Produces:
    counts_complete10.csv   walks and paths 0->1 in K10 by length
    counts_karate.csv       walks and paths 0->1 in the karate graph by length
    delta_karate.csv        path and walk delta for k = 0..17
"""

import sys
from pathlib import Path

from pathdist.cli import main as cli


def emit(outdir, name, argv):
    target = outdir / name
    code = cli(argv + ["--output", str(target)])
    if code:
        raise SystemExit(code)
    print(target)


def main():
    outdir = Path(sys.argv[1] if len(sys.argv) > 1 else "figure_data")
    outdir.mkdir(parents=True, exist_ok=True)
    emit(outdir, "counts_complete10.csv",
         ["pairdist", "--graph", "builtin:complete:10", "-s", "0", "-t", "1", "--limit", "9", "--include-walks"])
    emit(outdir, "counts_karate.csv",
         ["pairdist", "--graph", "builtin:karate", "-s", "0", "-t", "1", "--limit", "18", "--include-walks"])
    emit(outdir, "delta_karate.csv",
         ["converge", "--graph", "builtin:karate", "-s", "0", "-t", "1", "--k-max", "17"])


if __name__ == "__main__":
    main()
