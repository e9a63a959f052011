"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; every tolerance and runtime bound is asserted here, not just logged.
"""

import time
import warnings
from contextlib import contextmanager

import numpy as np

from spectra_rho.eigen import (
    ComplexResidueWarning,
    exact_char_poly,
    gershgorin_intervals,
    in_gershgorin_union,
    roots_spectrum,
    spectra_match,
    spectrum_from_values,
    sym_eigen,
)
from spectra_rho.families import (
    caterpillar,
    complete,
    complete_multipartite,
    cycle,
    hypercube,
    kanp,
    petersen,
    turan,
)
from spectra_rho.graphs import (
    complement,
    disjoint_union,
    h_join,
    independence_number,
    is_bipartite,
    line_graph,
)
from spectra_rho.quotient import (
    Partition,
    exact_quotient_spectrum,
    quotient_matrices,
    random_hjoin_corpus,
    verify_quotient_spectra_equal,
)
from spectra_rho.spectral import (
    RHO_TOL,
    energy,
    inertia,
    line_spectrum_via_Q,
    spectrum_of,
)
from spectra_rho.theorems import (
    check_complement_line_regular_rho,
    check_complement_structure,
    check_half_order_degree_rho,
    check_hjoin_line_rho,
    check_iterated_rho_edge_degree,
    check_iterated_rho_min_degree,
    check_kan_rho,
    check_min_deg4_rho,
    check_path_join_rho,
    check_regular_complement_rho,
    check_turan_rho,
)


@contextmanager
def criterion(num: int, description: str):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"\nACCEPTANCE {num:2d} [{description}]: FAIL")
        raise
    elapsed = time.perf_counter() - start
    print(f"\nACCEPTANCE {num:2d} [{description}]: PASS ({elapsed:.2f}s)")


def assert_runtime(elapsed: float, bound: float, what: str):
    assert elapsed < bound, f"{what} took {elapsed:.1f}s, budget {bound}s"


def test_criterion_01_turan_printed_q_spectra():
    printed = {
        (3, 6): [(8.0, 1), (4.0, 3), (2.0, 2)],
        (3, 7): [(9.2745, 1), (5.0, 2), (4.0, 2), (3.0, 1), (1.7251, 1)],
        (3, 8): [(10.6056, 1), (6.0, 1), (5.0, 4), (3.3944, 1), (2.0, 1)],
        (4, 5): [(7.3723, 1), (3.0, 3), (1.6277, 1)],
    }
    with criterion(1, "Turan printed Q-spectra"):
        start = time.perf_counter()
        for (r, n), expected in printed.items():
            spec = spectrum_of(turan(n, r), "signless_laplacian")
            assert [m for _, m in spec.entries] == [m for _, m in expected], (r, n)
            for (value, _), (target, _) in zip(spec.entries, expected):
                assert abs(value - target) <= 5e-4, (r, n, value, target)
        assert_runtime(time.perf_counter() - start, 1.0, "criterion 1")


def test_criterion_02_kan_quotient_family():
    with criterion(2, "Ka_n(n-4) quotient matrices and spectra"):
        start = time.perf_counter()
        for n in range(6, 13):
            G = kanp(n, n - 4)
            part = Partition.of([(0,), tuple(range(n - 3, n)), tuple(range(1, n - 3))])
            qs = quotient_matrices(G, part)
            assert qs.q_pi == ((3, 3, 0), (1, n + 1, n - 4), (0, 3, 2 * n - 7)), n
            disc = (4 * n * (n - 7) + 73) ** 0.5
            closed = sorted(
                [n - 0.5 + disc / 2, float(n - 2), n - 0.5 - disc / 2], reverse=True
            )
            exact = exact_quotient_spectrum(qs.q_pi)
            assert all(
                abs(a - b) <= 1e-8 for a, b in zip(closed, exact.expanded())
            ), n
            predicted_full = spectrum_from_values(
                [float(n - 2)] * 2 + [float(n - 3)] * (n - 5) + exact.expanded(),
                1e-8 * n,
            )
            ok, worst = spectra_match(
                predicted_full, spectrum_of(G, "signless_laplacian"), 1e-8
            )
            assert ok, (n, worst)
        assert_runtime(time.perf_counter() - start, 1.0, "criterion 2")


def test_criterion_03_quotient_routes_at_scale():
    with criterion(3, "two quotient routes agree on 100 random H-joins"):
        start = time.perf_counter()
        count = 0
        for join in random_hjoin_corpus(100):
            report = verify_quotient_spectra_equal(join, tol=1e-8)
            assert report.passed, report.to_json()
            count += 1
        assert count == 100
        assert_runtime(time.perf_counter() - start, 10.0, "criterion 3")


def test_criterion_04_line_bridge_census(census_by_order):
    with criterion(4, "line/signless-Laplacian bridge on all orders <= 7"):
        start = time.perf_counter()
        for n in range(1, 8):
            for G in census_by_order[n]:
                via_q = line_spectrum_via_Q(G)
                direct = spectrum_of(line_graph(G))
                ok, worst = spectra_match(via_q, direct, 1e-8)
                assert ok, (n, G.rows, worst)
                m = G.m
                expected = (
                    max(0, m - n + 1) if is_bipartite(G) else max(0, m - n)
                )
                assert direct.multiplicity_near(-2.0, RHO_TOL) == expected
        assert_runtime(time.perf_counter() - start, 300.0, "criterion 4")


def test_criterion_05_census(census_by_order):
    from spectra_rho.census import find_line_rho_graphs, min_order_connected_complement
    from spectra_rho.families import complete_bipartite
    from spectra_rho.graphs import is_connected, is_isomorphic

    with criterion(5, "census of 13 plus the unique order-7 witness"):
        start = time.perf_counter()
        found = find_line_rho_graphs(6)
        assert len(found) == 13
        named = [
            cycle(4), complete(4), complete_bipartite(3, 2), complete(5),
            complete_bipartite(4, 2), complete_bipartite(3, 3), complete(6),
        ]
        for H in named:
            assert any(
                G.n == H.n and G.m == H.m and is_isomorphic(G, H) for G in found
            ), H.name
        order, witnesses = min_order_connected_complement()
        assert (order, len(witnesses)) == (7, 1)
        assert is_connected(complement(witnesses[0]))
        assert_runtime(time.perf_counter() - start, 300.0, "criterion 5")


def test_criterion_06_theorem_checks():
    with criterion(6, "the ten core verification checks"):
        start = time.perf_counter()
        reports = [
            check_iterated_rho_edge_degree(caterpillar(4, 3, 4), 2),
            check_iterated_rho_min_degree(petersen(), 2),
            check_hjoin_line_rho(complete(2), [complete(2), cycle(6)], 2),
            check_path_join_rho(3, 3, 2),
            check_kan_rho(8, 2, 1),
            check_turan_rho(5, 10, 1),
            check_min_deg4_rho(complete_multipartite(2, 2, 2), 2),
            check_half_order_degree_rho(complete(6), 2),
            check_regular_complement_rho(petersen(), 1),
            check_complement_line_regular_rho(hypercube(3), 1),
        ]
        for report in reports:
            assert report.hypothesis_check, report.theorem_id
            assert report.passed, (report.theorem_id, report.to_json())
            for name, residual in report.residuals.items():
                assert abs(residual) <= report.tolerances[name], (
                    report.theorem_id, name,
                )
        assert_runtime(time.perf_counter() - start, 60.0, "criterion 6")


def test_criterion_07_complement_structure():
    with criterion(7, "complements have two positive eigenvalues + energy law"):
        for G in (complete(6), complete_multipartite(2, 2, 2)):
            report = check_complement_structure(G, (1, 2))
            assert report.hypothesis_check and report.passed, report.to_json()
            for k in (1, 2):
                positives = report.computed[f"positives_k{k}"]
                assert len(positives) == 2, (G.name, k, positives)
                residual = report.residuals[f"complement_energy_k{k}"]
                assert abs(residual) <= report.tolerances[f"complement_energy_k{k}"]


def test_criterion_08_ebd_energies(census_by_order):
    with criterion(8, "extended bipartite double energies and spectrum law"):
        for G, expected in ((complete(4), 20.0), (complete(6), 66.0)):
            L = line_graph(G)
            from spectra_rho.graphs import extended_bipartite_double

            actual = energy(extended_bipartite_double(L)).energy
            assert abs(actual - expected) <= 1e-6, (G.name, actual)
            prev_n, prev_m = G.n, G.m
            assert abs(2 * (3 * prev_m - 2 * prev_n) - expected) < 1e-12
        from spectra_rho.graphs import extended_bipartite_double

        for n in range(1, 7):
            for G in census_by_order[n]:
                spec = spectrum_of(G)
                predicted = spec.shifted(1.0).merged_with(spec.negated().shifted(-1.0))
                doubled = spectrum_of(extended_bipartite_double(G))
                ok, worst = spectra_match(predicted, doubled, 1e-8)
                assert ok, (n, G.rows, worst)


def test_criterion_09_equienergetic_pair():
    with criterion(9, "certified equienergetic non-cospectral pair"):
        j1 = h_join(complete(2), [complete(2), cycle(6)]).graph
        j2 = h_join(
            complete(2), [complete(2), disjoint_union(cycle(3), cycle(3))]
        ).graph
        e1 = energy(line_graph(j1)).energy
        e2 = energy(line_graph(j2)).energy
        assert abs(e1 - e2) <= 1e-6
        c1 = energy(complement(line_graph(j1))).energy
        c2 = energy(complement(line_graph(j2))).energy
        assert abs(c1 - c2) <= 1e-6
        s1 = spectrum_of(j1).expanded()
        s2 = spectrum_of(j2).expanded()
        assert max(abs(a - b) for a, b in zip(s1, s2)) > 1e-3


def test_criterion_10_independence_bounds(census_by_order):
    from spectra_rho.census import find_line_rho_graphs

    with criterion(10, "independence bounds over the qualifying census"):
        qualifying = find_line_rho_graphs(6)
        assert len(qualifying) == 13
        for G in qualifying:
            L = line_graph(G)
            comp = complement(L)
            neg = inertia(L)[2]
            assert independence_number(L) <= G.n, G.rows
            assert independence_number(comp) <= neg + 1, G.rows


def test_criterion_11_eigensolver_oracle_suite():
    with criterion(11, "Jacobi vs exact engine on 200 random matrices"):
        rng = np.random.default_rng(20240923)
        for trial in range(200):
            d = int(rng.integers(1, 11))
            upper = rng.integers(-5, 6, size=(d, d))
            M = np.triu(upper) + np.triu(upper, 1).T
            spec, raw, vectors = sym_eigen(M, want_vectors=True)
            with warnings.catch_warnings():
                warnings.simplefilter("error", ComplexResidueWarning)
                exact = roots_spectrum(exact_char_poly(M))
            ok, worst = spectra_match(spec, exact, 1e-8)
            assert ok, (trial, M.tolist(), worst)
            intervals = gershgorin_intervals(M)
            for value in spec.expanded():
                assert in_gershgorin_union(value, intervals), (trial, value)
            fro = max(float(np.linalg.norm(M)), 1e-30)
            Mf = M.astype(float)
            for k in range(d):
                residual = float(
                    np.linalg.norm(Mf @ vectors[:, k] - raw[k] * vectors[:, k])
                )
                assert residual <= 1e-8 * fro, (trial, k, residual)
