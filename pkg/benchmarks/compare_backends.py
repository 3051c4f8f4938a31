"""Time the compiled and pure-Python engines on the ambiguous grammars.

    python benchmarks/compare_backends.py --lengths 12,24,48,72,96 --reps 3

Each backend runs ``memotab bench`` in its own process (the engine is picked
at import time) and the medians are printed side by side.
"""

import argparse
import csv
import io
import os
import subprocess
import sys


def bench(backend, grammars, lengths, reps):
    env = dict(os.environ, MEMOTAB_BACKEND=backend)
    cmd = [sys.executable, "-m", "memotab", "bench", "--grammars", grammars, "--lengths", lengths, "--reps", str(reps)]
    proc = subprocess.run(cmd, capture_output=True, text=True, env=env)
    if proc.returncode != 0:
        sys.exit(f"{backend} backend failed:\n{proc.stderr}")
    rows = list(csv.DictReader(io.StringIO(proc.stdout)))
    return {(r["grammar"], int(r["n"])): float(r["seconds"]) for r in rows}


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--grammars", default="sm,sml,smml")
    p.add_argument("--lengths", default="12,24,48,72,96")
    p.add_argument("--reps", type=int, default=3)
    args = p.parse_args()

    py = bench("python", args.grammars, args.lengths, args.reps)
    ext = bench("ext", args.grammars, args.lengths, args.reps)
    print(f"{'grammar':<8}{'n':>5}{'python s':>12}{'ext s':>12}{'speedup':>9}")
    for key in py:
        g, n = key
        speedup = py[key] / ext[key] if ext[key] > 0 else float("nan")
        print(f"{g:<8}{n:>5}{py[key]:>12.4f}{ext[key]:>12.4f}{speedup:>8.1f}x")


if __name__ == "__main__":
    main()
