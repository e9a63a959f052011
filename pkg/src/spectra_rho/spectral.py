"""Graph-level spectral quantities: the three matrices, energy, the
all-negatives-equal-minus-two property (written `rho` throughout), and the
line-graph / signless-Laplacian spectrum bridge.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .eigen import (
    DEFAULT_GROUPING,
    Spectrum,
    spectrum_from_values,
    sym_eigen,
)
from .graphs import Graph, is_bipartite

MATRIX_KINDS = ("adjacency", "laplacian", "signless_laplacian")

#: eigenvalues closer to -2 than this count as "equal to -2"
RHO_TOL = 1e-6


@dataclass(frozen=True)
class RhoVerdict:
    """Do all negative adjacency eigenvalues equal -2?

    `vacuous` marks graphs with no negative eigenvalue at all; they satisfy
    the property trivially and some callers (the census) exclude them.  The
    tolerance that decided the verdict is recorded for auditability.
    """

    holds: bool
    negative_eigen_count: int
    positive_eigen_count: int
    multiplicity_of_minus2: int
    worst_deviation: float
    vacuous: bool
    tolerance: float = RHO_TOL
    expected_minus2: int | None = None
    minus2_rule_holds: bool | None = None

    def to_json(self) -> dict:
        return dict(self.__dict__)


@dataclass(frozen=True)
class EnergyReport:
    """Sum of |eigenvalue| over the adjacency spectrum, with both one-sided
    forms (they agree because the trace is zero)."""

    energy: float
    via_positive: float
    via_negative: float

    def to_json(self) -> dict:
        return dict(self.__dict__)


def matrix_of(G: Graph, kind: str = "adjacency") -> np.ndarray:
    if kind not in MATRIX_KINDS:
        raise ValueError(f"matrix kind must be one of {MATRIX_KINDS}, got {kind!r}")
    A = np.zeros((G.n, G.n), dtype=np.int64)
    for i, j in G.edges():
        A[i, j] = A[j, i] = 1
    if kind == "adjacency":
        return A
    D = np.diag(np.array(G.degrees(), dtype=np.int64))
    return D - A if kind == "laplacian" else D + A


@lru_cache(maxsize=8192)
def spectrum_of(G: Graph, kind: str = "adjacency") -> Spectrum:
    if G.n == 0:
        return Spectrum((), DEFAULT_GROUPING)
    return sym_eigen(matrix_of(G, kind))


def energy(G: Graph) -> EnergyReport:
    spec = spectrum_of(G, "adjacency")
    total = sum(abs(v) * m for v, m in spec.entries)
    pos = 2.0 * sum(v * m for v, m in spec.entries if v > 0)
    neg = -2.0 * sum(v * m for v, m in spec.entries if v < 0)
    return EnergyReport(energy=total, via_positive=pos, via_negative=neg)


def inertia(G: Graph, zero_tol: float = RHO_TOL) -> tuple[int, int, int]:
    """(positive, zero, negative) eigenvalue counts of the adjacency matrix."""
    spec = spectrum_of(G, "adjacency")
    pos = sum(m for v, m in spec.entries if v > zero_tol)
    neg = sum(m for v, m in spec.entries if v < -zero_tol)
    return pos, G.n - pos - neg, neg


def check_rho(
    G: Graph, line_root: Graph | None = None, tol: float = RHO_TOL
) -> RhoVerdict:
    """Verdict on "all negative eigenvalues equal -2".

    When `line_root` is supplied (and G is its line graph), the verdict also
    reports whether the -2 multiplicity matches m - n + 1 for a bipartite
    root and m - n otherwise.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    spec = spectrum_of(G, "adjacency")
    negatives = [(v, m) for v, m in spec.entries if v < -tol]
    neg_count = sum(m for _, m in negatives)
    pos_count = sum(m for v, m in spec.entries if v > tol)
    mult2 = sum(m for v, m in spec.entries if abs(v + 2.0) <= tol)
    worst = max((abs(v + 2.0) for v, _ in negatives), default=0.0)
    holds = all(abs(v + 2.0) <= tol for v, _ in negatives)
    expected = rule = None
    if line_root is not None:
        n, m = line_root.n, line_root.m
        expected = max(0, m - n + 1) if is_bipartite(line_root) else max(0, m - n)
        rule = expected == mult2
    return RhoVerdict(
        holds=holds,
        negative_eigen_count=neg_count,
        positive_eigen_count=pos_count,
        multiplicity_of_minus2=mult2,
        worst_deviation=worst,
        vacuous=neg_count == 0,
        tolerance=tol,
        expected_minus2=expected,
        minus2_rule_holds=rule,
    )


def line_spectrum_via_Q(G: Graph) -> Spectrum:
    """Adjacency spectrum of L(G) assembled from the signless Laplacian of G:
    m - n extra copies of -2 joined with Sp_Q(G) - 2.

    For m < n the deficit is reconciled by removing n - m of the -2 values
    that Sp_Q(G) - 2 necessarily contains (one per tree component).
    """
    n, m = G.n, G.m
    if n == 0:
        return Spectrum((), DEFAULT_GROUPING)
    q = spectrum_of(G, "signless_laplacian")
    values = [v - 2.0 for v, mult in q.entries for _ in range(mult)]
    if m >= n:
        values.extend([-2.0] * (m - n))
    else:
        for _ in range(n - m):
            best = min(range(len(values)), key=lambda i: abs(values[i] + 2.0))
            if abs(values[best] + 2.0) > q.grouping_tol:
                raise RuntimeError(
                    f"cannot trim {n - m} copies of -2: nearest value {values[best]}"
                )
            values.pop(best)
    return spectrum_from_values(values, q.grouping_tol)


def is_hyperenergetic(G: Graph) -> bool:
    """Energy strictly above the complete-graph value 2(n-1)."""
    return energy(G).energy > 2.0 * (G.n - 1) + 1e-9


def q_min(G: Graph) -> float:
    return spectrum_of(G, "signless_laplacian").min_value


def spectral_radius(G: Graph) -> float:
    return spectrum_of(G, "adjacency").max_value


def rho_report_json(G: Graph, verdict: RhoVerdict) -> dict:
    from .graph6 import encode

    return {"graph": G.name, "graph6": encode(G), "verdict": verdict.to_json()}


def energy_report_json(G: Graph, report: EnergyReport) -> dict:
    from .graph6 import encode

    return {"graph": G.name, "graph6": encode(G), "energy": report.to_json()}
