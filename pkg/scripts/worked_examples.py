"""Recompute the worked examples from the data/ directory and print them."""

from pathlib import Path

from tropwick import delta_matroid as dm
from tropwick.bitsets import format_subset, parse_subset
from tropwick.formats import format_plucker, format_wick, parse_matrix
from tropwick.linear_spaces import is_isotropical
from tropwick.realization import (
    chart_matrix,
    plucker_coordinates,
    plucker_valuation_from_rowspace,
    wick_pfaffians,
    wick_valuation_from_rowspace,
)

DATA = Path(__file__).resolve().parent.parent / "data"


def load(name):
    return parse_matrix((DATA / name).read_text())


def chart_example():
    M = load("matrix_n4_chart.txt")
    J = parse_subset("3", 4)
    chart = chart_matrix(M, J)
    pf = wick_pfaffians(chart)
    print("chart J = {3}, det P =", chart.denominator)
    for S in ("2", "124"):
        print(f"  pf(A on {format_subset(parse_subset(S, 4) ^ J, 4)}) = {pf[parse_subset(S, 4)]}")
    print(format_wick(wick_valuation_from_rowspace(M, J)))


def delta_matroid_example():
    p = wick_valuation_from_rowspace(load("matrix_n3.txt"))
    M = p.matroid()
    show = lambda xs: " ".join(format_subset(x, 3, True) for x in sorted(xs))
    print("bases     ", " ".join(format_subset(B, 3) for B in M.sorted_bases()))
    print("circuits  ", show(dm.circuits(M)))
    print("cocircuits", show(dm.cocircuits(M)))
    print("dual bases", " ".join(format_subset(B, 3) for B in dm.dual(M).sorted_bases()))
    print("edges     ", sorted(dm.polytope_edge_vectors(M)))
    print()


def witness_pair():
    M1, M2 = load("matrix_u1.txt"), load("matrix_u2.txt")
    print("equal Wick valuations:", wick_valuation_from_rowspace(M1) == wick_valuation_from_rowspace(M2))
    P1, P2 = plucker_coordinates(M1), plucker_coordinates(M2)
    for S in sorted(P1):
        if P1[S].is_zero() != P2[S].is_zero():
            print(f"  minor at {format_subset(S, 4, True)}: {P1[S]} vs {P2[S]}")
    for name, M in (("U1", M1), ("U2", M2), ("n=2", load("matrix_n2_isotropical.txt"))):
        print(f"  {name} isotropical:", is_isotropical(plucker_valuation_from_rowspace(M)))
    print(format_plucker(plucker_valuation_from_rowspace(load("matrix_n2_isotropical.txt"))))


if __name__ == "__main__":
    chart_example()
    delta_matroid_example()
    witness_pair()
