from itertools import islice

import pytest

from conftest import load_fixture
from nbzagreb import (
    Graph,
    canonical_form,
    degree_profile,
    encode_graph6,
    enumerate_connected,
    find_equality_graphs,
    coefficient_sign_grid,
    parse_graph6,
    path_graph,
    verify_all,
)
from nbzagreb._bulk import graph6_of_mask, mask_of_edges
from nbzagreb.errors import ForbiddenAlpha, NTooLarge, UnknownBoundSource

LABELED_CONNECTED = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728}
CLASSES_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}


class TestEnumerate:
    @pytest.mark.parametrize("n,count", sorted(LABELED_CONNECTED.items()))
    def test_labeled_counts(self, n, count):
        assert sum(1 for _ in enumerate_connected(n)) == count

    @pytest.mark.parametrize("n,count", sorted(CLASSES_CONNECTED.items()))
    def test_class_counts(self, n, count):
        assert sum(1 for _ in enumerate_connected(n, dedup=True)) == count

    def test_n3_labeled_graphs(self):
        graphs = list(enumerate_connected(3))
        assert len(graphs) == 4  # three labeled paths and one triangle
        assert sum(1 for g in graphs if g.m == 3) == 1

    def test_every_yield_is_connected_and_unique(self):
        seen = set()
        for g in enumerate_connected(4):
            key = g.adjacency
            assert key not in seen
            seen.add(key)

    @pytest.mark.parametrize("n", [0, 8, 9])
    def test_size_limits(self, n):
        with pytest.raises(NTooLarge):
            next(enumerate_connected(n))

    def test_n9_rejected_even_with_override(self):
        with pytest.raises(NTooLarge):
            next(enumerate_connected(9, allow_n8=True))


class TestCanonicalForm:
    def test_idempotent(self):
        for g in enumerate_connected(5, dedup=True):
            c = canonical_form(g)
            assert canonical_form(c).adjacency == c.adjacency

    def test_relabeling_invariant(self):
        # the same path labeled two ways
        a = path_graph(4)
        b = parse_graph6(encode_graph6(a))
        shuffled = Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)])
        assert canonical_form(a).adjacency == canonical_form(shuffled).adjacency
        assert canonical_form(b).adjacency == canonical_form(a).adjacency

    def test_dedup_representatives_are_canonical(self):
        for g in islice(enumerate_connected(6, dedup=True), 30):
            assert canonical_form(g).adjacency == g.adjacency

    def test_mask_graph6_matches_encoder(self):
        g = load_fixture("figure2.edges")
        mask = mask_of_edges(g.n, g.edges())
        assert graph6_of_mask(g.n, mask) == encode_graph6(g)


class TestVerifyAll:
    def test_small_sweep_passes(self):
        report = verify_all(4, [2.0, 0.5])
        assert report.failure_count == 0
        assert report.failures == ()
        assert report.graphs_checked == 44
        assert report.graphs_checked_by_n == {1: 1, 2: 1, 3: 4, 4: 38}
        assert report.checks_run["m1_identity"] == 44
        assert report.checks_run["coefficient_sign_grid"] > 0

    def test_congruence_all_skipped_at_n3(self):
        # no 3-vertex graph satisfies the congruence-bound preconditions
        report = verify_all(3, [0.5])
        assert report.failure_count == 0
        assert report.checks_run["nm_bound_congruence"] == 0
        skipped = sum(report.skips["nm_bound_congruence"].values())
        assert skipped == report.graphs_checked

    def test_single_vertex_sweep(self):
        report = verify_all(1, [2.0])
        assert report.graphs_checked == 1
        assert report.failure_count == 0
        assert report.checks_run["nm_reconstruct_secant"] == 0
        assert report.skips["spectral_chain"] == {"no_edges": 1}

    def test_engines_agree(self):
        alphas = [-1.0, 0.5, 2.0, 3.0]
        bulk = verify_all(5, alphas, engine="bulk")
        scalar = verify_all(5, alphas, engine="scalar")
        assert bulk.graphs_checked_by_n == scalar.graphs_checked_by_n
        assert bulk.checks_run == scalar.checks_run
        assert bulk.skips == scalar.skips
        assert bulk.failures == scalar.failures == ()

    def test_parallel_matches_sequential(self):
        seq = verify_all(4, [2.0, 0.5], jobs=1)
        par = verify_all(4, [2.0, 0.5], jobs=2)
        assert seq.graphs_checked == par.graphs_checked
        assert seq.checks_run == par.checks_run
        assert seq.skips == par.skips
        assert seq.failures == par.failures

    def test_skip_reasons_are_named(self):
        report = verify_all(4, [2.0])
        for reasons in report.skips.values():
            for reason, count in reasons.items():
                assert reason
                assert count > 0

    def test_validation(self):
        with pytest.raises(NTooLarge):
            verify_all(9, [2.0])
        with pytest.raises(NTooLarge):
            verify_all(8, [2.0])  # needs allow_n8
        with pytest.raises(ForbiddenAlpha):
            verify_all(3, [1.0])
        with pytest.raises(ValueError):
            verify_all(3, [])
        with pytest.raises(ValueError):
            verify_all(3, [2.0], engine="quantum")
        with pytest.raises(ValueError):
            verify_all(3, [2.0], tolerance=0.0)

    def test_report_to_dict_shape(self):
        doc = verify_all(3, [2.0]).to_dict()
        assert doc["graphs_checked"] == 6
        assert set(doc) == {
            "n_range", "alpha_set", "engine", "jobs", "tolerance",
            "graphs_checked", "graphs_checked_by_n", "checks_run", "skips",
            "failure_count", "failures", "elapsed",
        }


class TestCoefficientSignGrid:
    def test_full_grid_has_no_violations(self):
        evaluations, violations = coefficient_sign_grid([-1.0, 0.5, 2.0])
        assert violations == []
        assert evaluations > 0

    def test_evaluation_count(self):
        # per (p, q): (q - p - 1) secant and (q - p - 1) unit coefficients
        evaluations, _ = coefficient_sign_grid([2.0], p_max=4)
        # pairs: (1,2):0+0, (1,3):1+1, (1,4):2+2, (2,3):0+0, (2,4):1+1, (3,4):0+0
        assert evaluations == 8


class TestFindEqualityGraphs:
    def test_unit_form_returns_p4(self):
        records = find_equality_graphs(4, 2.0, "unit")
        p4 = encode_graph6(canonical_form(path_graph(4)))
        assert p4 in [r.graph for r in records]
        path_record = next(r for r in records if r.graph == p4)
        assert path_record.structural_match
        assert path_record.slack == 0.0

    def test_congruence_form_returns_figure2(self):
        fig2 = encode_graph6(canonical_form(load_fixture("figure2.edges")))
        records = find_equality_graphs(5, 2.0, "congruence")
        assert fig2 in [r.graph for r in records]
        assert all(r.structural_match for r in records)

    def test_secant_form_is_bi_supported(self):
        for n in (4, 5):
            for record in find_equality_graphs(n, 2.0, "secant"):
                p = degree_profile(parse_graph6(record.graph))
                assert len(p.nbr_hist) == 2

    def test_records_sorted_and_tight(self):
        records = find_equality_graphs(5, 2.0, "secant")
        names = [r.graph for r in records]
        assert names == sorted(names)
        # alpha = 2 keeps everything in exact float integers
        assert all(r.slack == 0.0 for r in records)

    def test_unknown_source(self):
        with pytest.raises(UnknownBoundSource):
            find_equality_graphs(4, 2.0, "bogus")

    def test_size_limit(self):
        with pytest.raises(NTooLarge):
            find_equality_graphs(9, 2.0, "secant")
