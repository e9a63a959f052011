"""Parametric graph families and the compact text form used by the CLI.

Text forms look like ``turan(6,3)``, ``kanp(6,2)``, ``cat(4,3,4)``,
``petersen`` or ``union(cycle(3),cycle(3))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, ParameterDomainError, disjoint_union


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()
    subspecs: tuple["FamilySpec", ...] = ()

    def __str__(self):
        if self.subspecs:
            inner = ",".join(str(s) for s in self.subspecs)
        else:
            inner = ",".join(str(p) for p in self.params)
        return f"{self.family}({inner})"


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P_{n}")


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(
        n, [(i, (i + 1) % n) for i in range(n)], f"C_{n}"
    )


def complete(n: int) -> Graph:
    _require(n >= 0, f"complete needs n >= 0, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2), f"K_{n}")


def empty_graph(n: int) -> Graph:
    _require(n >= 0, f"empty needs n >= 0, got {n}")
    return Graph(n, (0,) * n, f"E_{n}")


def complete_multipartite(*sizes: int) -> Graph:
    _require(len(sizes) >= 1, "complete multipartite needs at least one part")
    _require(all(s >= 1 for s in sizes), f"part sizes must be >= 1, got {sizes}")
    bounds = []
    start = 0
    for s in sizes:
        bounds.append(range(start, start + s))
        start += s
    edges = []
    for a in range(len(sizes)):
        for b in range(a + 1, len(sizes)):
            edges.extend((u, v) for u in bounds[a] for v in bounds[b])
    name = "K_{%s}" % ",".join(str(s) for s in sizes)
    return Graph.from_edges(start, edges, name)


def complete_bipartite(a: int, b: int) -> Graph:
    _require(a >= 1 and b >= 1, f"complete bipartite needs a,b >= 1, got ({a},{b})")
    return complete_multipartite(a, b)


def turan(n: int, r: int) -> Graph:
    """Complete r-partite graph on n vertices with balanced part sizes."""
    _require(r >= 1, f"turan needs r >= 1, got r={r}")
    _require(n >= r, f"turan needs n >= r, got (n,r)=({n},{r})")
    big, rem = divmod(n, r)
    sizes = [big + 1] * rem + [big] * (r - rem)
    G = complete_multipartite(*sizes)
    return G.with_name(f"T_{r}({n})")


def kanp(n: int, p: int) -> Graph:
    """K_n with p distinct edges at vertex 0 removed (Ka_n(p))."""
    _require(n >= 3, f"kanp needs n >= 3, got n={n}")
    _require(0 <= p <= n - 1, f"kanp needs 0 <= p <= n-1, got (n,p)=({n},{p})")
    edges = [(u, v) for u, v in combinations(range(n), 2) if not (u == 0 and v <= p)]
    return Graph.from_edges(n, edges, f"Ka_{n}({p})")


def caterpillar(*pendants: int) -> Graph:
    """Path of len(pendants) spine vertices; pendants[i] leaves on spine i."""
    t = len(pendants)
    _require(t >= 1, "caterpillar needs at least one spine vertex")
    _require(all(a >= 0 for a in pendants), f"pendant counts must be >= 0, got {pendants}")
    edges = [(i, i + 1) for i in range(t - 1)]
    nxt = t
    for i, a in enumerate(pendants):
        for _ in range(a):
            edges.append((i, nxt))
            nxt += 1
    name = "C(%s)" % ",".join(str(a) for a in pendants)
    return Graph.from_edges(nxt, edges, name)


def petersen() -> Graph:
    """Kneser graph on the 2-subsets of a 5-set, lexicographic labelling."""
    subsets = list(combinations(range(5), 2))
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if not set(subsets[i]) & set(subsets[j])
    ]
    return Graph.from_edges(10, edges, "Petersen")


def hypercube(d: int) -> Graph:
    _require(d >= 0, f"cube needs d >= 0, got {d}")
    n = 1 << d
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)]
    return Graph.from_edges(n, edges, f"Q_{d}")


def circulant(n: int, connections) -> Graph:
    _require(n >= 1, f"circulant needs n >= 1, got {n}")
    edges = set()
    for v in range(n):
        for s in connections:
            u = (v + s) % n
            if u != v:
                edges.add((min(u, v), max(u, v)))
    name = f"Ci_{n}({','.join(str(s) for s in sorted(set(connections)))})"
    return Graph.from_edges(n, sorted(edges), name)


_ARITY = {
    "path": (1, 1),
    "cycle": (1, 1),
    "complete": (1, 1),
    "empty": (1, 1),
    "complete_bipartite": (2, 2),
    "complete_multipartite": (1, None),
    "turan": (2, 2),
    "kanp": (2, 2),
    "caterpillar": (1, None),
    "petersen": (0, 0),
    "cube": (1, 1),
}

_ALIASES = {
    "kbip": "complete_bipartite",
    "kmulti": "complete_multipartite",
    "cat": "caterpillar",
    "union": "disjoint_union",
    "disjoint-union": "disjoint_union",
    "complete-bipartite": "complete_bipartite",
    "complete-multipartite": "complete_multipartite",
    "ka_n_p": "kanp",
}

_BUILDERS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "empty": empty_graph,
    "complete_bipartite": complete_bipartite,
    "complete_multipartite": complete_multipartite,
    "turan": turan,
    "kanp": kanp,
    "caterpillar": caterpillar,
    "petersen": petersen,
    "cube": hypercube,
}


def build(spec: FamilySpec) -> Graph:
    family = _ALIASES.get(spec.family, spec.family)
    if family == "disjoint_union":
        if not spec.subspecs:
            raise ParameterDomainError("disjoint union needs at least one part")
        return disjoint_union(*(build(s) for s in spec.subspecs))
    builder = _BUILDERS.get(family)
    if builder is None:
        raise ParameterDomainError(f"unknown family '{spec.family}'")
    lo, hi = _ARITY[family]
    k = len(spec.params)
    if k < lo or (hi is not None and k > hi):
        want = str(lo) if lo == hi else f"{lo}+" if hi is None else f"{lo}..{hi}"
        raise ParameterDomainError(
            f"family '{spec.family}' takes {want} parameters, got {k}"
        )
    return builder(*spec.params)


def parse_family(text: str) -> FamilySpec:
    """Parse a compact family spec such as ``turan(6,3)`` (may nest unions)."""
    spec, rest = _parse_spec(text.strip())
    if rest:
        raise ParameterDomainError(f"trailing text {rest!r} in family spec {text!r}")
    _check_known(spec)
    return spec


def _check_known(spec: FamilySpec) -> None:
    family = _ALIASES.get(spec.family, spec.family)
    if family != "disjoint_union" and family not in _BUILDERS:
        raise ParameterDomainError(f"unknown family '{spec.family}'")
    for sub in spec.subspecs:
        _check_known(sub)


def build_from_text(text: str) -> Graph:
    return build(parse_family(text))


def _parse_spec(text: str):
    i = 0
    while i < len(text) and (text[i].isalnum() or text[i] in "_-"):
        i += 1
    name = text[:i]
    if not name:
        raise ParameterDomainError(f"expected a family name at {text!r}")
    rest = text[i:]
    if not rest.startswith("("):
        return FamilySpec(name.lower()), rest
    depth, j = 0, 0
    for j, ch in enumerate(rest):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                break
    if depth != 0:
        raise ParameterDomainError(f"unbalanced parentheses in {text!r}")
    inner = rest[1:j]
    remaining = rest[j + 1 :]
    args = _split_top_level(inner)
    if any("(" in a for a in args) or name.lower() in ("union", "disjoint-union"):
        subs = tuple(_parse_single(a) for a in args if a)
        return FamilySpec(name.lower(), (), subs), remaining
    params = []
    for a in args:
        if not a:
            continue
        try:
            params.append(int(a))
        except ValueError:
            raise ParameterDomainError(
                f"parameter {a!r} of family {name!r} is not an integer"
            ) from None
    return FamilySpec(name.lower(), tuple(params)), remaining


def _parse_single(text: str) -> FamilySpec:
    spec, rest = _parse_spec(text.strip())
    if rest:
        raise ParameterDomainError(f"trailing text {rest!r} in {text!r}")
    return spec


def _split_top_level(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return parts


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ParameterDomainError(message)
