"""Capacity bounds and the curve data behind the three bound figures.

Everything here is a closed-form scalar formula; the point of the demo
is to show what the numbers mean and to write the CSV files an external
plotting tool would consume.
"""

import math
import pathlib

from graphqec import (
    capacity_from_finite_coding,
    capacity_lower_bound_small_noise,
    emit_curves,
    error_exponent_curve,
    error_threshold,
    ideal_capacity,
    region_boundaries,
)

OUT = pathlib.Path(__file__).resolve().parent / "out"
OUT.mkdir(exist_ok=True)

print("=" * 70)
print("1. How small is a 'small' error?")
print("=" * 70)

print("a channel within this cb-distance of the identity still has")
print("positive quantum capacity (strict threshold vs eps/e shortcut):")
for eps in (0.001, 0.01, 0.05, 0.1):
    strict, simple = error_threshold(eps)
    print(f"  eps={eps:<6}: strict {strict:.6f}   eps/e {simple:.6f}   "
          f"ratio {simple / strict:.4f}")

print()
print("=" * 70)
print("2. Capacity lower bounds")
print("=" * 70)

print("ideal qubit channel capacity:", ideal_capacity(2), "bit/use")
for eps in (0.001, 0.01, 0.1):
    threshold, q_lower = capacity_lower_bound_small_noise(2, eps)
    print(f"  cb-dist < {threshold:.2e}  =>  Q >= {q_lower:.4f} bits/use")

print("\nfrom a finite coding scheme (p=2, k=1) with residual error delta:")
for delta in (1e-6, 1e-3, 1e-2):
    print(f"  delta={delta:<8}: Q >= {capacity_from_finite_coding(2, 1, delta):.4f}")

print()
print("=" * 70)
print("3. Rate region boundaries at a glance (d=2)")
print("=" * 70)

print(f"{'eps':>6} {'singleton':>10} {'hamming':>10} {'random-graph':>13}")
for eps in (0.0, 0.02, 0.05, 0.08, 0.12, 0.18):
    s, h, r = region_boundaries(2, eps)
    fmt = lambda x: "   -  " if x is None else f"{x:.4f}"
    print(f"{eps:>6} {fmt(s):>10} {fmt(h):>10} {fmt(r):>13}")
print("allowed coding rates mu sit below each curve; the random-graph")
print("achievability curve is the innermost, the singleton the outermost")

print()
print("=" * 70)
print("4. Error exponents")
print("=" * 70)

grid = [0.05, 0.10, 0.15]
print("lambda lower bounds (nats/use) by coding error delta:")
print(f"{'c (bits/use)':>14} " + " ".join(f"{d:>10}" for d in ("1e-3", "1e-4", "1e-5", "1e-6")))
curves = {d: error_exponent_curve(2, 1, d, grid) for d in (1e-3, 1e-4, 1e-5, 1e-6)}
for i, eps in enumerate(grid):
    c = curves[1e-3][i].c
    row = " ".join(f"{curves[d][i].lambda_nats:>10.4f}" for d in (1e-3, 1e-4, 1e-5, 1e-6))
    print(f"{c:>14.4f} {row}")

print()
print("=" * 70)
print("5. CSV emission for external plotting")
print("=" * 70)

for kind, name in [
    ("threshold-fig", "threshold.csv"),
    ("rate-region-fig", "rate_region.csv"),
    ("exponent-fig", "error_exponent.csv"),
]:
    csv = emit_curves(kind, d=2, p=2, k=1, deltas=(1e-3, 1e-4, 1e-5, 1e-6))
    path = OUT / name
    path.write_text(csv)
    print(f"wrote {path} ({len(csv.splitlines()) - 1} rows)")
