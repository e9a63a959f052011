"""Command-line front end.

Subcommands: build, spectrum, energy, rho, quotient, verify, census,
equi-pair.  Graphs come from a compact family spec (``turan(6,3)``), a
graph6 string, or a file of graph6 lines.  Exit codes: 0 success / all
applicable checks pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import graph6
from .eigen import spectra_match
from .families import build_from_text, circulant, complete, cycle, hypercube
from .families import complete_bipartite, petersen
from .graphs import (
    Graph,
    ParameterDomainError,
    disjoint_union,
    h_join,
    line_graph_tower,
)
from .quotient import (
    Partition,
    coarsest_equitable_partition,
    quotient_matrices,
)
from .spectral import (
    check_rho,
    energy,
    energy_report_json,
    rho_report_json,
    spectrum_of,
)
from .theorems import REGISTRY, run_checks

USAGE_ERROR = 2

#: every theorem id the suite knows must be runnable from here
VERIFY_BINDINGS = (
    "quotient-spectra-equal",
    "iterated-rho-edge-degree",
    "iterated-rho-min-degree",
    "hjoin-line-rho",
    "vertex-deletion-rho",
    "path-join-rho",
    "kan-rho",
    "min-degree4-rho",
    "half-order-degree-rho",
    "turan-rho",
    "regular-complement-rho",
    "complement-line-regular-rho",
    "hyperenergetic-iterated",
    "complement-two-positive",
    "complement-equienergetic-iff",
    "complement-hyperenergetic",
    "ebd-energies",
    "independence-bounds",
)

MATRIX_ALIASES = {
    "A": "adjacency",
    "adjacency": "adjacency",
    "L": "laplacian",
    "laplacian": "laplacian",
    "Q": "signless_laplacian",
    "signless_laplacian": "signless_laplacian",
}


class CliError(Exception):
    pass


def _load_graph(text: str) -> Graph:
    """Family spec or graph6 string.

    A '(' marks an explicit family spec (valid graph6 never contains one).
    Bare words are tried as parameterless family names first (``petersen``),
    then as graph6.
    """
    stripped = text.strip()
    if "(" in stripped:
        try:
            return build_from_text(stripped)
        except ParameterDomainError as exc:
            raise CliError(str(exc)) from exc
    try:
        return build_from_text(stripped)
    except ParameterDomainError:
        pass
    try:
        return graph6.decode(stripped)
    except graph6.Graph6FormatError as exc:
        raise CliError(f"not a family spec or graph6 string: {text!r} ({exc})") from exc


def _graphs_from_args(args) -> list[Graph]:
    graphs = []
    if getattr(args, "graph", None):
        graphs.append(_load_graph(args.graph))
    if getattr(args, "graph_file", None):
        try:
            with open(args.graph_file) as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {args.graph_file}: {exc}") from exc
        try:
            graphs.extend(graph6.read_lines(text))
        except graph6.Graph6FormatError as exc:
            raise CliError(str(exc)) from exc
    if not graphs:
        raise CliError("supply --graph or --graph-file")
    return graphs


def _emit(args, record: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(record))
    else:
        print(text)


def cmd_build(args) -> int:
    for G in _graphs_from_args(args):
        _emit(args, {"graph": G.name, "graph6": graph6.encode(G),
                     "order": G.n, "size": G.m}, graph6.encode(G))
    return 0


def cmd_spectrum(args) -> int:
    kind = MATRIX_ALIASES[args.matrix]
    for G in _graphs_from_args(args):
        spec = spectrum_of(G, kind)
        _emit(
            args,
            {"graph": G.name, "graph6": graph6.encode(G), "matrix": kind,
             "spectrum": spec.to_json()},
            str(spec),
        )
    return 0


def cmd_energy(args) -> int:
    for G in _graphs_from_args(args):
        report = energy(G)
        _emit(args, energy_report_json(G, report), f"{report.energy:.10g}")
    return 0


def cmd_rho(args) -> int:
    if args.tol <= 0:
        raise CliError(f"--tol must be positive, got {args.tol}")
    failures = 0
    for G in _graphs_from_args(args):
        tower = line_graph_tower(G, args.k)
        target = tower[args.k]
        root = tower[args.k - 1] if args.k >= 1 else None
        verdict = check_rho(target, line_root=root, tol=args.tol)
        record = rho_report_json(G, verdict)
        record["k"] = args.k
        _emit(args, record, f"{'holds' if verdict.holds else 'fails'} "
                            f"(worst deviation {verdict.worst_deviation:.3e})")
        failures += 0 if verdict.holds else 1
    return 1 if failures else 0


def _parse_partition(text: str, n: int) -> Partition:
    try:
        blocks = [
            tuple(int(tok) for tok in chunk.split(",") if tok.strip() != "")
            for chunk in text.split("|")
        ]
    except ValueError as exc:
        raise CliError(f"malformed partition {text!r}") from exc
    part = Partition.of(blocks)
    part.validate(n)
    return part


def cmd_quotient(args) -> int:
    for G in _graphs_from_args(args):
        part = (
            _parse_partition(args.partition, G.n)
            if args.partition
            else coarsest_equitable_partition(G)
        )
        qs = quotient_matrices(G, part)
        record = {"graph": G.name, "graph6": graph6.encode(G),
                  "blocks": [list(b) for b in part.blocks]}
        record.update(qs.to_json())
        _emit(args, record,
              json.dumps(record) if args.format == "json" else
              f"blocks {record['blocks']}\nA_pi {record['a_pi']}\n"
              f"L_pi {record['l_pi']}\nQ_pi {record['q_pi']}")
    return 0


def cmd_verify(args) -> int:
    if args.only:
        unknown = [t for t in args.only if t not in REGISTRY]
        if unknown:
            raise CliError(
                f"unknown theorem id(s) {unknown}; known: {', '.join(REGISTRY)}"
            )
        ids = args.only
    elif args.all:
        ids = list(VERIFY_BINDINGS)
    else:
        raise CliError("pass --all or --only <theorem-id>")
    reports = run_checks(ids)
    if args.seed is not None:
        from .quotient import random_hjoin_corpus, verify_quotient_spectra_equal

        for join in random_hjoin_corpus(args.random_joins, seed=args.seed):
            report = verify_quotient_spectra_equal(join)
            report.notes.append(f"randomized corpus, seed {args.seed}")
            reports.append(report)
    bad = 0
    for report in reports:
        if args.format == "json":
            print(json.dumps(report.to_json()))
        else:
            print(f"{report.status:13s} {report.theorem_id:32s} "
                  f"{', '.join(report.inputs)}")
        if report.hypothesis_check and not report.passed:
            bad += 1
    return 1 if bad else 0


def cmd_census(args) -> int:
    from .census import (
        connected_census,
        enumerate_connected,
        find_line_rho_graphs,
        min_order_connected_complement,
    )
    from .graphs import is_isomorphic

    if args.min_complement:
        order, witnesses = min_order_connected_complement()
        for W in witnesses:
            print(graph6.encode(W))
        print(json.dumps({"order": order, "count": len(witnesses),
                          "named_matches": []}))
        return 0
    if args.line_rho:
        graphs = find_line_rho_graphs(args.max_order)
        named = {
            "C_4": cycle(4), "K_4": complete(4),
            "K_{3,2}": complete_bipartite(3, 2), "K_5": complete(5),
            "K_{4,2}": complete_bipartite(4, 2),
            "K_{3,3}": complete_bipartite(3, 3), "K_6": complete(6),
        }
        matches = []
        for G in graphs:
            print(graph6.encode(G))
            for name, H in named.items():
                if G.n == H.n and G.m == H.m and is_isomorphic(G, H):
                    matches.append(name)
        print(json.dumps({"order": args.max_order, "count": len(graphs),
                          "named_matches": matches}))
        return 0
    graphs = (
        list(enumerate_connected(args.order, args.shards))
        if args.order
        else connected_census(args.max_order)
    )
    for G in graphs:
        print(graph6.encode(G))
    print(json.dumps({"order": args.order or args.max_order,
                      "count": len(graphs), "named_matches": []}))
    return 0


#: non-cospectral regular graphs of equal order and degree (by (order, degree))
REGULAR_PAIR_TABLE = {
    (6, 2): (lambda: cycle(6), lambda: disjoint_union(cycle(3), cycle(3))),
    (6, 3): (lambda: complete_bipartite(3, 3), lambda: _prism(3)),
    (8, 2): (lambda: cycle(8), lambda: disjoint_union(cycle(4), cycle(4))),
    (8, 3): (lambda: hypercube(3), lambda: circulant(8, (1, 4))),
    (10, 2): (lambda: cycle(10), lambda: disjoint_union(cycle(5), cycle(5))),
    (10, 3): (lambda: petersen(), lambda: _prism(5)),
}


def _prism(k: int) -> Graph:
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return Graph.from_edges(2 * k, edges, f"prism_{k}")


def equi_pair(order: int, degree: int):
    """Two joins with equal line-graph energies but different spectra, built
    from the regular-pair table; returns (graph6 pair, certificate dict)."""
    entry = REGULAR_PAIR_TABLE.get((order, degree))
    if entry is None:
        supported = sorted(REGULAR_PAIR_TABLE)
        raise CliError(
            f"no regular pair of order {order} and degree {degree} in the "
            f"table; supported (order, degree): {supported}"
        )
    h1, h2 = entry[0](), entry[1]()
    j1 = h_join(complete(2), [complete(2), h1]).graph
    j2 = h_join(complete(2), [complete(2), h2]).graph
    from .graphs import line_graph

    e1 = energy(line_graph(j1)).energy
    e2 = energy(line_graph(j2)).energy
    s1, s2 = spectrum_of(j1), spectrum_of(j2)
    same_spec, _ = spectra_match(s1, s2, 1e-3)
    if abs(e1 - e2) > 1e-6 or same_spec:
        raise CliError(
            f"table pair ({order},{degree}) failed certification: "
            f"energies {e1} vs {e2}, cospectral={same_spec}"
        )
    certificate = {
        "line_energies": [e1, e2],
        "energy_gap": abs(e1 - e2),
        "spectra_differ": not same_spec,
        "spectra": [s1.to_json(), s2.to_json()],
    }
    return (graph6.encode(j1), graph6.encode(j2)), certificate


def cmd_equi_pair(args) -> int:
    (g1, g2), certificate = equi_pair(args.order, args.degree)
    print(g1)
    print(g2)
    print(json.dumps(certificate))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectra-rho",
        description="spectral toolkit for line graphs and the all-negatives"
                    "-equal-minus-two property",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_args(p):
        p.add_argument("--graph", help="family spec like 'turan(6,3)' or a graph6 string")
        p.add_argument("--graph-file", help="file with one graph6 string per line")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("build", help="construct a graph and print its graph6")
    add_graph_args(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("spectrum", help="eigenvalues of A, L or Q")
    add_graph_args(p)
    p.add_argument("--matrix", choices=sorted(MATRIX_ALIASES), default="A")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("energy", help="sum of absolute adjacency eigenvalues")
    add_graph_args(p)
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("rho", help="are all negative eigenvalues equal to -2?")
    add_graph_args(p)
    p.add_argument("--k", type=int, default=0,
                   help="check the k-th iterated line graph (default: the graph)")
    p.add_argument("--tol", type=float, default=1e-6,
                   help="how close to -2 counts as equal (default 1e-6)")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("quotient", help="quotient matrices of a partition")
    add_graph_args(p)
    p.add_argument("--partition",
                   help="blocks as '0,1|2,3,4' (default: coarsest equitable)")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("verify", help="run the theorem verification suite")
    p.add_argument("--all", action="store_true")
    p.add_argument("--only", nargs="+", metavar="THEOREM-ID")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int,
                   help="also run the randomized quotient corpus with this seed")
    p.add_argument("--random-joins", type=int, default=20,
                   help="size of the randomized corpus when --seed is given")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="small-graph enumeration and searches")
    p.add_argument("--order", type=int, help="enumerate exactly this order")
    p.add_argument("--max-order", type=int, default=6)
    p.add_argument("--shards", type=int,
                   default=int(os.environ.get("SPECTRA_RHO_SHARDS", "1")),
                   help="independent label-space shards (or SPECTRA_RHO_SHARDS)")
    p.add_argument("--line-rho", action="store_true",
                   help="graphs whose line graph has the -2 property")
    p.add_argument("--min-complement", action="store_true",
                   help="least order with a connected complement witness")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("equi-pair",
                       help="emit two equienergetic, non-cospectral joins")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_equi_pair)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ParameterDomainError, graph6.Graph6FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
