"""Equitable partitions and the two quotient-matrix families of an H-join.

The integer quotients (A, L, Q against a partition) are generally
non-symmetric; their symmetric counterparts carry sqrt(n_i n_j) entries.
That the two families are cospectral is a theorem this module verifies by
computing both sides through genuinely different engines: exact integer
characteristic polynomials with Sturm root isolation on one side, Jacobi on
the other.  The non-symmetric spectra are never obtained via a similarity
transform to the symmetric variant.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .eigen import (
    exact_char_poly,
    reconstruct_coefficients,
    roots_spectrum,
    spectra_match,
    spectrum_from_values,
    sym_eigen,
    Spectrum,
)
from .graphs import Graph, HJoin
from .reporting import TheoremReport
from .spectral import spectrum_of


class PartitionError(ValueError):
    pass


class EquitabilityError(ValueError):
    pass


class StructureError(ValueError):
    pass


class RegularityError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    """Ordered list of disjoint vertex blocks covering 0..n-1."""

    blocks: tuple[tuple[int, ...], ...]

    @staticmethod
    def of(blocks) -> "Partition":
        return Partition(tuple(tuple(sorted(b)) for b in blocks))

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def validate(self, n: int) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise PartitionError("empty block")
            for v in block:
                if not (0 <= v < n):
                    raise PartitionError(f"vertex {v} out of range for order {n}")
                if v in seen:
                    raise PartitionError(f"vertex {v} appears in two blocks")
                seen.add(v)
        if len(seen) != n:
            raise PartitionError("blocks do not cover the vertex set")


def coarsest_equitable_partition(G: Graph) -> Partition:
    """Iterated splitting by neighbour counts, from the one-block partition.

    Blocks of the result are ordered by their smallest vertex.
    """
    block_of = [0] * G.n
    while True:
        signatures = []
        for v in range(G.n):
            counts: dict[int, int] = {}
            for u in G.neighbors(v):
                counts[block_of[u]] = counts.get(block_of[u], 0) + 1
            signatures.append((block_of[v], tuple(sorted(counts.items()))))
        ranking = {s: i for i, s in enumerate(sorted(set(signatures)))}
        new = [ranking[s] for s in signatures]
        if new == block_of:
            break
        block_of = new
    groups: dict[int, list[int]] = {}
    for v, b in enumerate(block_of):
        groups.setdefault(b, []).append(v)
    ordered = sorted(groups.values(), key=lambda blk: blk[0])
    return Partition.of(ordered)


def is_equitable(G: Graph, part: Partition):
    """(True, c table) when every vertex of block i has the same number of
    neighbours in block j; (False, None) otherwise."""
    part.validate(G.n)
    p = len(part.blocks)
    membership = [0] * G.n
    for b, block in enumerate(part.blocks):
        for v in block:
            membership[v] = b
    table = [[0] * p for _ in range(p)]
    for i, block in enumerate(part.blocks):
        rows = []
        for v in block:
            counts = [0] * p
            for u in G.neighbors(v):
                counts[membership[u]] += 1
            rows.append(counts)
        if any(r != rows[0] for r in rows[1:]):
            return False, None
        table[i] = rows[0]
    return True, [row[:] for row in table]


@dataclass(frozen=True)
class QuotientSet:
    """The six quotient matrices of an equitable partition.

    Integer matrices are stored as nested tuples; the symmetric variants
    (present only when the partition is a genuine H-join structure with
    regular blocks and complete-or-empty cross edges) are float arrays.
    """

    a_pi: tuple[tuple[int, ...], ...]
    d_pi: tuple[int, ...]
    l_pi: tuple[tuple[int, ...], ...]
    q_pi: tuple[tuple[int, ...], ...]
    abar_pi: tuple[tuple[int, ...], ...]
    block_sizes: tuple[int, ...]
    internal_degrees: tuple[int, ...] | None
    a_h: np.ndarray | None
    l_h: np.ndarray | None
    q_h: np.ndarray | None

    @property
    def has_hjoin_structure(self) -> bool:
        return self.a_h is not None

    def h_matrices(self):
        if not self.has_hjoin_structure:
            raise StructureError(
                "symmetric quotient variants need regular blocks and "
                "complete-or-empty cross edges"
            )
        return self.a_h, self.l_h, self.q_h

    def row_sums_off_diagonal(self) -> tuple[int, ...]:
        q = self.q_pi
        return tuple(sum(row) - row[i] for i, row in enumerate(q))

    def to_json(self) -> dict:
        def mat(m):
            return [list(row) for row in m]

        def hmat(m):
            if m is None:
                return None
            return [
                [int(x) if float(x).is_integer() else repr(float(x)) for x in row]
                for row in m.tolist()
            ]

        return {
            "a_pi": mat(self.a_pi),
            "d_pi": list(self.d_pi),
            "l_pi": mat(self.l_pi),
            "q_pi": mat(self.q_pi),
            "abar_pi": mat(self.abar_pi),
            "block_sizes": list(self.block_sizes),
            "hjoin_structure": self.has_hjoin_structure,
            "a_h": hmat(self.a_h),
            "l_h": hmat(self.l_h),
            "q_h": hmat(self.q_h),
        }


def _hjoin_structure(G: Graph, part: Partition, table):
    """Internal degrees when each block induces a regular subgraph and the
    graph between any two blocks is complete or empty; None otherwise."""
    p = len(part.blocks)
    sizes = part.sizes
    degrees = []
    for i, block in enumerate(part.blocks):
        internal = table[i][i]
        members = set(block)
        for v in block:
            if sum(1 for u in G.neighbors(v) if u in members) != internal:
                return None
        degrees.append(internal)
    for i in range(p):
        for j in range(p):
            if i != j and table[i][j] not in (0, sizes[j]):
                return None
    return tuple(degrees)


def quotient_matrices(G: Graph, part: Partition) -> QuotientSet:
    ok, table = is_equitable(G, part)
    if not ok:
        raise EquitabilityError("partition is not equitable")
    p = len(part.blocks)
    sizes = part.sizes
    a_pi = tuple(tuple(row) for row in table)
    d_pi = tuple(sum(row) for row in table)
    l_pi = tuple(
        tuple((d_pi[i] if i == j else 0) - a_pi[i][j] for j in range(p))
        for i in range(p)
    )
    q_pi = tuple(
        tuple((d_pi[i] if i == j else 0) + a_pi[i][j] for j in range(p))
        for i in range(p)
    )
    abar_pi = tuple(
        tuple(sizes[j] - (1 if i == j else 0) - a_pi[i][j] for j in range(p))
        for i in range(p)
    )
    internal = _hjoin_structure(G, part, table)
    a_h = l_h = q_h = None
    if internal is not None:
        a_h = np.zeros((p, p))
        l_h = np.zeros((p, p))
        q_h = np.zeros((p, p))
        for i in range(p):
            a_h[i, i] = a_pi[i][i]
            l_h[i, i] = l_pi[i][i]
            q_h[i, i] = q_pi[i][i]
            for j in range(i + 1, p):
                if a_pi[i][j]:
                    w = math.sqrt(sizes[i] * sizes[j])
                    a_h[i, j] = a_h[j, i] = w
                    l_h[i, j] = l_h[j, i] = -w
                    q_h[i, j] = q_h[j, i] = w
    return QuotientSet(
        a_pi=a_pi,
        d_pi=d_pi,
        l_pi=l_pi,
        q_pi=q_pi,
        abar_pi=abar_pi,
        block_sizes=sizes,
        internal_degrees=internal,
        a_h=a_h,
        l_h=l_h,
        q_h=q_h,
    )


def join_partition(join: HJoin) -> Partition:
    return Partition.of(join.blocks)


def exact_quotient_spectrum(matrix, tol: float = 1e-8) -> Spectrum:
    """Spectrum of an integer (possibly non-symmetric) quotient matrix via
    the exact characteristic polynomial and Sturm isolation."""
    return roots_spectrum(exact_char_poly(matrix), tol)


def verify_quotient_spectra_equal(join: HJoin, tol: float = 1e-8) -> TheoremReport:
    """Check that the integer quotients and their symmetric variants have the
    same spectra, matrix family by matrix family."""
    report = TheoremReport(
        theorem_id="quotient-spectra-equal",
        inputs=[join.graph.name or "h-join"],
    )
    for part_graph in join.parts:
        degs = part_graph.degrees()
        if degs and min(degs) != max(degs):
            raise StructureError(f"part {part_graph!r} is not regular")
    part = join_partition(join)
    qs = quotient_matrices(join.graph, part)
    if not qs.has_hjoin_structure:
        raise StructureError("input is not an H-join of regular parts")
    pairs = [
        ("adjacency", qs.a_pi, qs.a_h),
        ("laplacian", qs.l_pi, qs.l_h),
        ("signless", qs.q_pi, qs.q_h),
    ]
    for label, integer_matrix, symmetric_matrix in pairs:
        exact = exact_quotient_spectrum(integer_matrix)
        numeric = sym_eigen(symmetric_matrix)
        ok, worst = spectra_match(exact, numeric, tol)
        report.check(f"{label}_spectrum", worst, tol)
        report.expect(f"{label}_multiplicities", ok, f"worst deviation {worst}")
        # coefficient route: the symmetric variant has irrational entries, so
        # compare its numerically reconstructed characteristic polynomial
        # against the exact integer one
        recon = reconstruct_coefficients(numeric.expanded())
        exact_coeffs = exact_char_poly(integer_matrix).coeffs
        worst_rel = max(
            abs(r - e) / max(1.0, abs(e)) for r, e in zip(recon, exact_coeffs)
        )
        report.check(f"{label}_char_poly_rel", worst_rel, 1e-6)
        report.computed[f"{label}_exact"] = exact
        report.computed[f"{label}_numeric"] = numeric
    return report


def hjoin_signless_spectrum(join: HJoin) -> Spectrum:
    """Signless-Laplacian spectrum of an H-join assembled from its parts:
    each part contributes its Q-spectrum minus one copy of twice its degree,
    shifted by its off-diagonal quotient row sum; the quotient spectrum
    supplies the rest."""
    for part_graph in join.parts:
        degs = part_graph.degrees()
        if degs and min(degs) != max(degs):
            raise RegularityError(f"part {part_graph!r} is not regular")
    part = join_partition(join)
    qs = quotient_matrices(join.graph, part)
    row_sums = qs.row_sums_off_diagonal()
    values: list[float] = []
    for i, H in enumerate(join.parts):
        r = H.degrees()[0] if H.n else 0
        part_spec = spectrum_of(H, "signless_laplacian").without_one(
            2.0 * r, tol=1e-6
        )
        values.extend(v + row_sums[i] for v in part_spec.expanded())
    values.extend(exact_quotient_spectrum(qs.q_pi).expanded())
    scale = max([1.0] + [abs(v) for v in values])
    return spectrum_from_values(values, 1e-8 * scale)


@dataclass(frozen=True)
class CospectralityWitness:
    same_quotient: bool
    cospectral: bool
    complements_cospectral: bool
    spectra: tuple[Spectrum, Spectrum]
    complement_spectra: tuple[Spectrum, Spectrum]

    def to_json(self) -> dict:
        return {
            "same_quotient": self.same_quotient,
            "cospectral": self.cospectral,
            "complements_cospectral": self.complements_cospectral,
            "spectra": [s.to_json() for s in self.spectra],
            "complement_spectra": [s.to_json() for s in self.complement_spectra],
        }


def quotient_cospectrality_witness(
    j1: HJoin, j2: HJoin, tol: float = 1e-8
) -> CospectralityWitness:
    """Compare two H-joins over the same pattern: equal quotient matrices
    transfer cospectrality to the complements even when the joins themselves
    are not cospectral."""
    from .graphs import complement

    if j1.pattern != j2.pattern:
        raise StructureError("joins must share the same labelled pattern")
    if tuple(p.n for p in j1.parts) != tuple(p.n for p in j2.parts):
        raise StructureError("part orders differ")
    q1 = quotient_matrices(j1.graph, join_partition(j1))
    q2 = quotient_matrices(j2.graph, join_partition(j2))
    same_quotient = q1.a_pi == q2.a_pi
    s1 = spectrum_of(j1.graph)
    s2 = spectrum_of(j2.graph)
    c1 = spectrum_of(complement(j1.graph))
    c2 = spectrum_of(complement(j2.graph))
    return CospectralityWitness(
        same_quotient=same_quotient,
        cospectral=spectra_match(s1, s2, tol)[0],
        complements_cospectral=spectra_match(c1, c2, tol)[0],
        spectra=(s1, s2),
        complement_spectra=(c1, c2),
    )


#: regular building blocks for the randomized corpus
CORPUS_PARTS = ("complete(2)", "complete(3)", "cycle(4)", "cycle(5)",
                "cycle(6)", "complete(4)", "union(cycle(3),cycle(3))")

DEFAULT_CORPUS_SEED = 20240923


def random_hjoin_corpus(count: int, seed: int = DEFAULT_CORPUS_SEED):
    """Seeded stream of H-joins: random pattern of order 2..5, parts drawn
    from the regular pool (orders <= 6)."""
    from .families import build_from_text
    from .graphs import h_join

    pool = [build_from_text(t) for t in CORPUS_PARTS]
    rng = random.Random(seed)
    for _ in range(count):
        p = rng.randint(2, 5)
        edges = [(i, j) for i in range(p) for j in range(i + 1, p) if rng.random() < 0.6]
        pattern = Graph.from_edges(p, edges, f"pattern{p}")
        parts = [rng.choice(pool) for _ in range(p)]
        yield h_join(pattern, parts)
