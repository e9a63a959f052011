"""Each verification check: a passing instance and an inapplicable one."""

import pytest

from spectra_rho.families import (
    caterpillar,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    hypercube,
    path,
    petersen,
)
from spectra_rho.graphs import (
    disjoint_union,
    h_join,
    line_graph,
    line_graph_tower,
)
from spectra_rho.spectral import energy, spectrum_of
from spectra_rho.theorems import (
    REGISTRY,
    check_complement_hyperenergetic,
    check_complement_line_regular_rho,
    check_complement_structure,
    check_ebd_energies,
    check_equienergetic_complement_iff,
    check_half_order_degree_rho,
    check_hjoin_line_rho,
    check_hyperenergetic_iterated,
    check_independence_bounds,
    check_iterated_rho_edge_degree,
    check_iterated_rho_min_degree,
    check_kan_rho,
    check_min_deg4_rho,
    check_path_join_rho,
    check_regular_complement_rho,
    check_turan_rho,
    check_vertex_deletion_rho,
    run_checks,
)


class TestIteratedEdgeDegree:
    def test_caterpillar(self):
        report = check_iterated_rho_edge_degree(caterpillar(4, 3, 4), 2)
        assert report.passed
        # energy at level 2 equals 4(n_2 - n_1) = 4(30 - 13)
        assert report.predicted["energy_k2"] == pytest.approx(68.0)

    def test_k4_three_levels(self):
        report = check_iterated_rho_edge_degree(complete(4), 3)
        assert report.passed

    def test_p4_inapplicable(self):
        report = check_iterated_rho_edge_degree(path(4), 2)
        assert report.status == "inapplicable"

    def test_growth_cap_gives_partial_report(self, monkeypatch):
        import spectra_rho.theorems as theorems

        monkeypatch.setattr(theorems, "GROWTH_CAP", 15)
        report = check_iterated_rho_edge_degree(complete(4), 3)
        # level 2 (12 vertices) completes, level 3 (36) is over the cap
        assert report.passed
        assert "rho_k2" in report.computed and "rho_k3" not in report.computed
        assert any("partial" in note for note in report.notes)


class TestIteratedMinDegree:
    def test_petersen(self):
        report = check_iterated_rho_min_degree(petersen(), 2)
        assert report.passed
        assert report.predicted["energy_k2"] == pytest.approx(4 * (30 - 15))

    def test_k33(self):
        assert check_iterated_rho_min_degree(complete_bipartite(3, 3), 2).passed

    def test_c6_inapplicable(self):
        assert check_iterated_rho_min_degree(cycle(6), 2).status == "inapplicable"


class TestHJoinLine:
    def test_k4_as_join(self):
        report = check_hjoin_line_rho(complete(2), [complete(2), complete(2)], 1)
        assert report.passed

    def test_join_with_added_edges(self):
        report = check_hjoin_line_rho(
            complete(2), [complete(2), cycle(6)], 1, supergraph_edges=[(2, 4), (3, 6)]
        )
        assert report.passed
        join_order = 8
        join_size = 1 + 6 + 12
        assert report.predicted["supergraph_energy"] == pytest.approx(
            4 * (join_size + 2 - join_order)
        )

    def test_k1_pattern_inapplicable(self):
        report = check_hjoin_line_rho(complete(1), [complete(2)], 1)
        assert report.status == "inapplicable"

    def test_zero_levels_requested(self):
        # only the quotient-side facts remain meaningful at k_max = 0
        report = check_hjoin_line_rho(complete(2), [complete(2), complete(2)], 0)
        assert report.passed

    def test_existing_supergraph_edge_inapplicable(self):
        report = check_hjoin_line_rho(
            complete(2), [complete(2), cycle(6)], 1, supergraph_edges=[(0, 1)]
        )
        assert report.status == "inapplicable"

    def test_irregular_part_inapplicable(self):
        report = check_hjoin_line_rho(complete(2), [path(3), complete(2)], 1)
        assert report.status == "inapplicable"


class TestVertexDeletion:
    def test_single_deletion(self):
        report = check_vertex_deletion_rho(complete(2), [cycle(5), cycle(5)], 1, 1)
        assert report.passed
        assert "deleted vertices [0]" in report.notes[0]
        assert any("all single-vertex deletions" in n for n in report.notes)

    def test_double_deletion(self):
        report = check_vertex_deletion_rho(complete(2), [cycle(6), cycle(6)], 2, 1)
        assert report.passed
        assert "deleted vertices [0, 6]" in report.notes[0]

    def test_matching_parts_inapplicable(self):
        report = check_vertex_deletion_rho(complete(2), [complete(2), cycle(5)], 1, 1)
        assert report.status == "inapplicable"

    def test_small_parts_inapplicable_for_multi(self):
        report = check_vertex_deletion_rho(complete(2), [cycle(3), cycle(3)], 2, 1)
        assert report.status == "inapplicable"


class TestPathJoin:
    def test_3_3(self):
        assert check_path_join_rho(3, 3, 1).passed

    def test_4_3_two_levels(self):
        assert check_path_join_rho(4, 3, 2).passed

    def test_2_3_inapplicable(self):
        assert check_path_join_rho(2, 3, 1).status == "inapplicable"


class TestKan:
    def test_n6(self):
        report = check_kan_rho(6, 2, 1)
        assert report.passed
        assert report.computed["quotient"] == ((3, 3, 0), (1, 7, 2), (0, 3, 5))
        spec = report.computed["quotient_spectrum"]
        assert [round(v, 8) for v, _ in spec.entries] == [9, 4, 2]

    def test_n8(self):
        report = check_kan_rho(8, 2, 1)
        assert report.passed
        assert report.computed["quotient"] == ((3, 3, 0), (1, 9, 4), (0, 3, 9))

    def test_p_out_of_range(self):
        assert check_kan_rho(6, 3, 1).status == "inapplicable"


class TestMinDeg4:
    def test_line_of_k5(self):
        assert check_min_deg4_rho(line_graph(complete(5)), 1).passed

    def test_octahedron_two_levels(self):
        assert check_min_deg4_rho(complete_multipartite(2, 2, 2), 2).passed

    def test_k4_inapplicable(self):
        assert check_min_deg4_rho(complete(4), 1).status == "inapplicable"


class TestHalfOrderDegree:
    def test_k6(self):
        report = check_half_order_degree_rho(complete(6), 1)
        assert report.passed
        assert report.predicted["line_energy"] == pytest.approx(36.0)
        # closed form: level-one spectrum is {8, 2^5, -2^9}
        spec = spectrum_of(line_graph(complete(6)))
        assert [(round(v, 9), m) for v, m in spec.entries] == [(8, 1), (2, 5), (-2, 9)]

    def test_octahedron(self):
        report = check_half_order_degree_rho(complete_multipartite(2, 2, 2), 1)
        assert report.passed
        assert report.predicted["line_energy"] == pytest.approx(24.0)

    def test_c8_inapplicable(self):
        assert check_half_order_degree_rho(cycle(8), 1).status == "inapplicable"


class TestTuran:
    def test_exceptional_t36(self):
        report = check_turan_rho(3, 6, 1)
        assert report.passed
        assert not report.computed["strict_bound_holds"]

    def test_exceptional_t37_counterexample(self):
        report = check_turan_rho(3, 7, 1)
        assert report.passed
        assert any("counterexample" in n for n in report.notes)

    def test_exceptional_t45(self):
        assert check_turan_rho(4, 5, 1).passed

    def test_regular_case(self):
        assert check_turan_rho(5, 10, 1).passed

    def test_inapplicable(self):
        assert check_turan_rho(3, 5, 1).status == "inapplicable"


class TestRegularComplement:
    def test_petersen(self):
        report = check_regular_complement_rho(petersen(), 1)
        assert report.passed
        predicted = report.predicted["line_complement_spectrum"]
        assert [(round(v, 9), m) for v, m in predicted.entries] == [
            (10, 1), (5, 4), (2, 5), (-2, 20),
        ]

    def test_circulant_on_12(self):
        from spectra_rho.families import circulant

        report = check_regular_complement_rho(circulant(12, (1, 6)), 1)
        assert report.passed

    def test_k4_inapplicable(self):
        assert check_regular_complement_rho(complete(4), 1).status == "inapplicable"


class TestComplementLineRegular:
    def test_c8(self):
        assert check_complement_line_regular_rho(cycle(8), 1).passed

    def test_cube(self):
        report = check_complement_line_regular_rho(hypercube(3), 1)
        assert report.passed
        predicted = report.predicted["line_spectrum"]
        assert [(round(v, 9), m) for v, m in predicted.entries] == [
            (12, 1), (6, 5), (4, 3), (2, 3), (-2, 30),
        ]

    def test_perfect_matching_degree_one(self):
        # r = 1 exercises the signed-multiset cancellation in the closed form
        matching = disjoint_union(*[complete(2) for _ in range(4)])
        assert check_complement_line_regular_rho(matching, 1).passed

    def test_k4_inapplicable(self):
        assert check_complement_line_regular_rho(complete(4), 1).status == "inapplicable"


class TestHyperenergetic:
    def test_k4(self):
        report = check_hyperenergetic_iterated(complete(4), 2)
        assert report.passed
        assert report.computed["energy_k2"] == pytest.approx(24.0)

    def test_caterpillar(self):
        assert check_hyperenergetic_iterated(caterpillar(4, 3, 4), 2).passed

    def test_c6_inapplicable(self):
        assert check_hyperenergetic_iterated(cycle(6), 2).status == "inapplicable"


class TestComplementStructure:
    def test_k4_degenerate_coincidence(self):
        report = check_complement_structure(complete(4), (1,))
        assert report.passed
        assert any("coincide" in n for n in report.notes)
        # complement of L(K_4) is a perfect matching: energy 6 = 2*1 + 8/2
        assert report.computed["complement_energy_k1"] == pytest.approx(6.0)

    def test_k6(self):
        report = check_complement_structure(complete(6), (1, 2))
        assert report.passed
        # complement of L(K_6) has radius 6 and nine +1 eigenvalues
        assert report.computed["complement_energy_k1"] == pytest.approx(2 * 6 + 18)

    def test_rho_failure_inapplicable(self):
        assert check_complement_structure(path(4), (1,)).status == "inapplicable"


class TestEquienergeticIff:
    def test_k6(self):
        report = check_equienergetic_complement_iff(complete(6), 1)
        assert report.passed
        assert report.computed["negative_count"] == 9

    def test_quotient_pair(self):
        g1 = h_join(complete(2), [complete(2), cycle(6)]).graph
        g2 = h_join(
            complete(2), [complete(2), disjoint_union(cycle(3), cycle(3))]
        ).graph
        report = check_equienergetic_complement_iff(g1, 1, others=[g2])
        assert report.passed
        (r1, e1), (r2, e2) = report.computed["peer_radius_energy"]
        assert abs(r1 - r2) < 1e-8 and abs(e1 - e2) < 1e-6

    def test_inapplicable(self):
        assert check_equienergetic_complement_iff(path(4), 1).status == "inapplicable"


class TestComplementHyperenergetic:
    def test_k4_level3_qualifies(self):
        report = check_complement_hyperenergetic(complete(4), 3)
        assert report.passed
        assert report.computed["qualifying_levels"] >= 1

    def test_caterpillar(self):
        assert check_complement_hyperenergetic(caterpillar(4, 3, 4), 2).passed

    def test_c6_inapplicable(self):
        assert check_complement_hyperenergetic(cycle(6), 2).status == "inapplicable"


class TestEbdEnergies:
    def test_k4(self):
        report = check_ebd_energies(complete(4), 1)
        assert report.passed
        assert report.predicted["ebd_line_energy"] == pytest.approx(20.0)

    def test_k6(self):
        report = check_ebd_energies(complete(6), 1)
        assert report.passed
        assert report.predicted["ebd_line_energy"] == pytest.approx(66.0)

    def test_inapplicable(self):
        assert check_ebd_energies(path(4), 1).status == "inapplicable"


class TestIndependenceBounds:
    def test_k4(self):
        report = check_independence_bounds(complete(4), 1)
        assert report.passed
        assert report.computed["alpha_line"] == 2
        assert report.computed["alpha_complement"] == 3

    def test_k33(self):
        report = check_independence_bounds(complete_bipartite(3, 3), 1)
        assert report.passed
        assert report.computed["alpha_line"] == 3

    def test_inapplicable(self):
        assert check_independence_bounds(cycle(5), 1).status == "inapplicable"


class TestSuite:
    def test_equal_order_size_graphs_share_level_energies(self):
        # prism and K_{3,3}: both 3-regular on 6 vertices
        from spectra_rho.cli import _prism

        a = complete_bipartite(3, 3)
        b = _prism(3)
        for k in (2, 3):
            ta = line_graph_tower(a, k)
            tb = line_graph_tower(b, k)
            assert ta[k].n == tb[k].n
            ea, eb = energy(ta[k]).energy, energy(tb[k]).energy
            assert abs(ea - eb) <= 1e-6 * ta[k].n

    def test_run_checks_all_pass(self):
        reports = run_checks()
        for report in reports:
            assert not (report.hypothesis_check and not report.passed), (
                report.theorem_id,
                report.to_json(),
            )

    def test_unknown_id_rejected(self):
        with pytest.raises(KeyError):
            run_checks(["no-such-theorem"])

    def test_registry_reports_have_unique_meaningful_ids(self):
        for theorem_id, runner in REGISTRY.items():
            for report in runner():
                assert report.theorem_id == theorem_id
