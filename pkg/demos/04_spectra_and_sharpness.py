#!/usr/bin/env python3
"""Exact SRG spectra and the Lichnerowicz comparison min kappa vs lambda2.

The normalized Laplacian of a strongly regular graph has exactly three
eigenvalues with closed forms in the parameters; they are kept as exact
quadratic irrationalities and only compared to curvature rationally.
Sweeping the catalog shows which graphs attain min kappa = lambda2, and
turns up one more sharp graph than the usual beta >= alpha classification
lists: the 4x4 rook's graph.
"""

from llycurv import (
    catalog,
    classify_regularity,
    enumerate_sharp_candidates,
    lichnerowicz_report,
    numerical_lambda2,
    srg_spectrum,
)

print("closed-form spectra vs numerics on the catalog SRGs")
print()
for entry in catalog():
    rc = classify_regularity(entry.graph)
    if not rc.is_strongly_regular:
        continue
    s = srg_spectrum(rc.params)
    numeric = numerical_lambda2(entry.graph)
    gap = abs(numeric - s.lambda2.to_float())
    print(
        f"{entry.name:18s} lambda2 = {s.lambda2}  mult (1,{s.m2},{s.m3})"
        f"  |closed - numeric| = {gap:.1e}"
    )

print()
print("Lichnerowicz sharpness (min kappa = lambda2?) for beta >= alpha:")
print()
for entry in catalog():
    rc = classify_regularity(entry.graph)
    if not rc.is_strongly_regular or rc.params.beta < rc.params.alpha:
        continue
    rep = lichnerowicz_report(entry.graph)
    lam = rep.lambda2_exact
    lam_text = str(lam.as_fraction()) if lam.is_rational else f"~{rep.lambda2_float:.4f}"
    print(
        f"{entry.name:18s} min kappa = {str(rep.min_kappa):5s}"
        f"  lambda2 = {lam_text:8s}  sharp: {rep.sharp}"
    )

print()
print("rook(4) = L2(4) comes out sharp: beta = alpha = 2 and min kappa = 2/3 =")
print("lambda2.  Classification lists for beta >= alpha usually stop at L2(3) =")
print("P(9); the computation says L2(4) belongs there too.")

print()
print("parameter tuples that could be sharp with beta >= alpha (closed filters):")
for cand in enumerate_sharp_candidates(max_alpha=12, max_k=6):
    print(f"  family ({cand.family}) {cand.params.as_tuple()}")
