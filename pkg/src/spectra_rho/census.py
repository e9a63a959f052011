"""Exhaustive small-graph enumeration up to isomorphism.

Canonical forms are exact: colour refinement fixes an isomorphism-invariant
ordered cell structure, then the minimum adjacency encoding over all
cell-respecting relabellings is taken.  Enumeration walks every labelled
graph on n vertices, discards labellings that are not locally minimal under
vertex transpositions (the class minimum always survives), and dedupes the
survivors by canonical form.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .graphs import Graph, SizeLimitError, is_connected

#: connected graphs on n vertices up to isomorphism, n = 1..7
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}

ENUMERATION_CAP = 7


def refinement_colors(G: Graph) -> tuple[int, ...]:
    """Stable colour refinement: colour = (old colour, neighbour colours)."""
    colors = list(G.degrees())
    while True:
        sigs = []
        for v in range(G.n):
            nbr = tuple(sorted(colors[u] for u in G.neighbors(v)))
            sigs.append((colors[v], nbr))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return tuple(colors)
        colors = new


def _cells(colors: tuple[int, ...]) -> list[list[int]]:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    return [cells[c] for c in sorted(cells)]


def _encode(G: Graph, perm) -> int:
    """Upper-triangle bits of the relabelled graph packed into one int.

    perm[v] is the new position of vertex v; bit order is row-major over
    the new labels, most significant first, so integer order is lex order.
    """
    n = G.n
    inv = [0] * n
    for v, p in enumerate(perm):
        inv[p] = v
    code = 0
    for i in range(n):
        ri = G.rows[inv[i]]
        for j in range(i + 1, n):
            code = (code << 1) | ((ri >> inv[j]) & 1)
    return code


@lru_cache(maxsize=200000)
def canonical_form(G: Graph) -> bytes:
    """Minimal adjacency-bit encoding over cell-respecting relabellings."""
    n = G.n
    if n == 0:
        return b"\x00"
    cells = _cells(refinement_colors(G))
    positions = []
    start = 0
    for cell in cells:
        positions.append(list(range(start, start + len(cell))))
        start += len(cell)
    best = None
    perm = [0] * n

    def assign(idx: int):
        nonlocal best
        if idx == len(cells):
            code = _encode(G, perm)
            if best is None or code < best:
                best = code
            return
        cell, slots = cells[idx], positions[idx]
        for arrangement in permutations(slots):
            for v, p in zip(cell, arrangement):
                perm[v] = p
            assign(idx + 1)

    assign(0)
    nbits = n * (n - 1) // 2
    return bytes([n]) + best.to_bytes((nbits + 7) // 8 or 1, "big")


def graph_from_canonical(form: bytes) -> Graph:
    """Rebuild the canonically labelled graph from its form bytes."""
    n = form[0]
    if n == 0:
        return Graph(0, ())
    nbits = n * (n - 1) // 2
    code = int.from_bytes(form[1:], "big")
    rows = [0] * n
    pos = nbits - 1
    for i in range(n):
        for j in range(i + 1, n):
            if (code >> pos) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))


def _pair_index(n: int):
    """Bit position of each edge (i, j), i < j, inside an n-vertex mask."""
    idx = {}
    for k, (i, j) in enumerate(combinations(range(n), 2)):
        idx[(i, j)] = k
    return idx


def _graph_from_mask(n: int, mask: int, idx) -> Graph:
    rows = [0] * n
    for (i, j), k in idx.items():
        if (mask >> k) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def _transposition_bit_maps(n: int, idx):
    """For every transposition (a b): bit source position per target bit."""
    maps = []
    for a in range(n):
        for b in range(a + 1, n):
            perm = list(range(n))
            perm[a], perm[b] = b, a
            src = []
            for i, j in combinations(range(n), 2):
                pi, pj = perm[i], perm[j]
                if pi > pj:
                    pi, pj = pj, pi
                src.append(idx[(pi, pj)])
            maps.append(src)
    return maps


def _locally_minimal_masks(n: int, idx, shard_count: int = 1) -> list[int]:
    """Masks not beaten by any single vertex transposition.

    Vectorised over contiguous mask ranges; the result is independent of the
    shard count because each mask is judged in isolation.
    """
    nbits = n * (n - 1) // 2
    total = 1 << nbits
    dtype = np.uint32 if nbits <= 31 else np.uint64
    shard_count = max(1, shard_count)
    bounds = [total * s // shard_count for s in range(shard_count + 1)]
    tmaps = _transposition_bit_maps(n, idx)
    out: list[int] = []
    for lo, hi in zip(bounds, bounds[1:]):
        masks = np.arange(lo, hi, dtype=dtype)
        keep = np.ones(masks.shape, dtype=bool)
        for src in tmaps:
            permuted = np.zeros_like(masks)
            for target_bit, source_bit in enumerate(src):
                if source_bit == target_bit:
                    permuted |= masks & dtype(1 << target_bit)
                else:
                    bit = (masks >> dtype(source_bit)) & dtype(1)
                    permuted |= bit << dtype(target_bit)
            keep &= permuted >= masks
        out.extend(int(v) for v in masks[keep])
    return out


@lru_cache(maxsize=8)
def enumerate_connected(n: int, shard_count: int = 1) -> tuple[Graph, ...]:
    """All connected graphs of order n up to isomorphism (1 <= n <= 7).

    Representatives are the canonical labellings, in deterministic order.
    The class count is checked against the known sequence.
    """
    if not (1 <= n <= ENUMERATION_CAP):
        raise SizeLimitError(f"enumeration supports 1 <= n <= {ENUMERATION_CAP}")
    if n == 1:
        return (Graph(1, (0,)),)
    idx = _pair_index(n)
    seen: set[bytes] = set()
    for mask in _locally_minimal_masks(n, idx, shard_count):
        G = _graph_from_mask(n, mask, idx)
        if not is_connected(G):
            continue
        seen.add(canonical_form(G))
    reps = tuple(graph_from_canonical(f) for f in sorted(seen))
    if len(reps) != CONNECTED_COUNTS[n]:
        raise RuntimeError(
            f"enumeration self-check failed at n={n}: "
            f"{len(reps)} classes vs expected {CONNECTED_COUNTS[n]}"
        )
    return reps


def connected_census(n_max: int) -> list[Graph]:
    out: list[Graph] = []
    for n in range(1, n_max + 1):
        out.extend(enumerate_connected(n))
    return out


def find_line_rho_graphs(n_max: int) -> list[Graph]:
    """Connected graphs of order <= n_max whose line graph has all negative
    eigenvalues equal to -2.

    Graphs whose line graph has no negative eigenvalue at all (only K_1 and
    K_2 qualify at this scale) are excluded: the verdict would hold only
    vacuously, and the census is about graphs where -2 actually occurs.
    """
    from .spectral import check_rho
    from .graphs import line_graph

    out = []
    for G in connected_census(n_max):
        L = line_graph(G)
        verdict = check_rho(L)
        if verdict.holds and verdict.negative_eigen_count > 0:
            out.append(G)
    return out


def min_order_connected_complement(n_max: int = 7):
    """Smallest order where a connected graph has a connected complement and
    a line graph with all negative eigenvalues -2; returns (order, witnesses).
    """
    from .graphs import complement

    for n in range(1, n_max + 1):
        witnesses = [
            G for G in find_line_rho_graphs_of_order(n) if is_connected(complement(G))
        ]
        if witnesses:
            return n, witnesses
    raise RuntimeError(f"no qualifying graph up to order {n_max}")


def find_line_rho_graphs_of_order(n: int) -> list[Graph]:
    from .spectral import check_rho
    from .graphs import line_graph

    out = []
    for G in enumerate_connected(n):
        verdict = check_rho(line_graph(G))
        if verdict.holds and verdict.negative_eigen_count > 0:
            out.append(G)
    return out
