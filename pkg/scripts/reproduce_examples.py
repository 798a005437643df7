#!/usr/bin/env python3
"""Print the curvature classes, integral curvature and diameter bounds for the
named example families: paths, dumbbells, binary trees, the pendant hexagon
and complete graphs.

    python scripts/reproduce_examples.py
"""

from fractions import Fraction

from intcurv.bounds import diameter_bound_lly
from intcurv.curvature import curvature_profile, integral_curvature
from intcurv.graph import (
    all_pairs_distances,
    binary_tree_graph,
    complete_graph,
    dumbbell_graph,
    path_graph,
    pendant_hexagon_graph,
)
from intcurv.rational import format_rational
from intcurv.report import to_table


def row(name, g, kappa0):
    dm = all_pairs_distances(g)
    prof = curvature_profile(g, dm)
    integral = integral_curvature(g, prof, kappa0).value
    return {
        "graph": name,
        "n": g.n,
        "kappa classes": " ".join(format_rational(k) for k in prof.thresholds()),
        "kappa0": format_rational(kappa0),
        "I": format_rational(integral),
        "diam bound": diameter_bound_lly(kappa0, integral),
        "diam": dm.diameter,
    }


def main():
    rows = [row(f"P_{n}", path_graph(n), Fraction(1)) for n in range(3, 11)]
    for m in range(3, 7):
        rows.append(row(f"dumbbell m={m}", dumbbell_graph(m), Fraction((m - 1) ** 2 + 1, m * (m - 1))))
    rows += [row(f"T_{m}", binary_tree_graph(m), Fraction(2, 3)) for m in range(1, 5)]
    rows.append(row("pendant hexagon", pendant_hexagon_graph(), Fraction(2, 3)))
    for m in range(3, 7):
        rows.append(row(f"K_{m}", complete_graph(m), Fraction(m, m - 1)))
    print(to_table(rows), end="")


if __name__ == "__main__":
    main()
