"""Compare the compiled rational backend against the pure-Python fallback.

The package selects gmpy2's mpq at import when available and falls back
to fractions.Fraction otherwise.  This script times one representative
exact workload under each backend in separate interpreters (the choice
is made at import time) and prints a small table.

Run from the repository root:  python3 benchmarks/bench_backends.py
"""

import os
import subprocess
import sys

WORKLOAD = r"""
import time

t0 = time.perf_counter()

from grassdesign import (
    certificate_antipodal,
    column_family,
    great_antipodal,
    hook_family,
    is_T_design,
    lp_bound,
)
from grassdesign.partitions import binom, column_shape, enumerate_up_to_weight
from grassdesign.scalars import BACKEND
from grassdesign.zonal import harmonic_dim, zonal_james_constantine

# kernel construction sweep (interpolation solves dominate)
for m in (2, 3):
    for n in range(2 * m, 9):
        for mu in enumerate_up_to_weight(m, 4):
            k = zonal_james_constantine(mu, n)
            assert k.expansion.at_ones() == harmonic_dim(mu, n)

# exact design verification of the largest bundled configuration
s = great_antipodal(3, 6)
assert is_T_design(s, column_family(3) + hook_family(3)).design

# certificate assembly and bound
for n in (6, 7, 8):
    assert lp_bound(certificate_antipodal(3, n)).bound == binom(n, 3)

print(f"{BACKEND} {time.perf_counter() - t0:.3f}")
"""


def run(backend: str):
    env = dict(os.environ, GRASSDESIGN_BACKEND=backend)
    out = subprocess.run(
        [sys.executable, "-c", WORKLOAD],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    name, seconds = out.stdout.split()
    return name, float(seconds)


def main():
    results = []
    for backend in ("gmpy2", "fraction"):
        try:
            results.append(run(backend))
        except subprocess.CalledProcessError as exc:
            print(f"{backend}: failed\n{exc.stderr}", file=sys.stderr)
    if not results:
        sys.exit(1)
    print(f"{'backend':<10} {'seconds':>8}")
    for name, seconds in results:
        print(f"{name:<10} {seconds:>8.3f}")
    if len(results) == 2:
        print(f"speedup   {results[1][1] / results[0][1]:>8.2f}x")


if __name__ == "__main__":
    main()
