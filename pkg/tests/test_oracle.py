import pytest

import opturan as op
from opturan.oracle import catalan

from helpers import brute_max_ckfree


class TestTriangulations:
    def test_counts(self):
        for n, expect in ((4, 2), (5, 5), (6, 14), (7, 42), (8, 132)):
            assert sum(1 for _ in op.triangulations(n)) == expect == catalan(n - 2)

    def test_no_duplicates(self):
        seen = set()
        for t in op.triangulations(7):
            key = tuple(sorted(c for b in t.blocks for c in b.chords))
            assert key not in seen
            seen.add(key)

    def test_all_edge_maximal(self):
        for n in range(3, 8):
            for t in op.triangulations(n):
                assert op.is_edge_maximal(t)
                assert t.graph.e == 2 * n - 3

    def test_symmetry_filter_keeps_representatives(self):
        full = {tuple(sorted(t.blocks[0].chords)) for t in op.triangulations(6)}
        reps = list(op.triangulations(6, symmetry=True))
        assert 0 < len(reps) < len(full)

    def test_too_small(self):
        with pytest.raises(ValueError):
            next(op.triangulations(2))


class TestMaxCkfree:
    def test_fan4_k3(self):
        count, witness = op.max_ckfree_edges(op.fan(4), 3)
        assert count == 4
        assert op.find_cycle_of_length(op.make_graph(4, witness), 3) is None

    def test_fan4_k5(self):
        count, _ = op.max_ckfree_edges(op.fan(4), 5)
        assert count == 5  # no 5-cycle fits in 4 vertices

    def test_requires_triangulation(self):
        c4 = op.recognize_outerplanar(
            op.make_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        )
        with pytest.raises(ValueError):
            op.max_ckfree_edges(c4, 3)

    def test_matches_subset_bruteforce(self):
        # every triangulation of small polygons, full 2^e sweep as the oracle
        for n in (4, 5, 6):
            for k in (3, 4, 5):
                swept = max(op.max_ckfree_edges(t, k)[0] for t in op.triangulations(n))
                assert swept == brute_max_ckfree(n, k), (n, k)

    def test_ten_gon_k4_at_most_15(self):
        some = next(op.triangulations(10))
        count, _ = op.max_ckfree_edges(some, 4)
        assert count <= 15


class TestExactEx:
    def test_n2(self):
        r = op.exact_ex(2, 7)
        assert r.value == 1 and r.witness.e == 1

    def test_known_small_values(self):
        assert op.exact_ex(4, 3).value == 4
        assert op.exact_ex(10, 4).value == 15

    def test_witness_validity(self):
        for n in range(2, 9):
            for k in (3, 4, 5):
                r = op.exact_ex(n, k)
                w = r.witness
                assert w.e == r.value
                assert not op.has_cycle_of_length(w, k)
                emb = op.recognize_outerplanar(w)  # witness must be outerplanar
                assert k not in op.cycle_length_set(emb)
                assert op.bound_holds(r.value, k, n).holds

    def test_matches_subset_bruteforce(self):
        for n in range(2, 8):
            for k in (3, 4, 5):
                assert op.exact_ex(n, k).value == brute_max_ckfree(n, k), (n, k)

    def test_monotone_in_n(self):
        for k in (3, 4, 5, 6):
            values = [op.exact_ex(n, k).value for n in range(2, 10)]
            assert all(a <= b for a, b in zip(values, values[1:]))

    def test_cap_refusal(self):
        with pytest.raises(op.OracleCapError) as err:
            op.exact_ex(12, 5)
        assert "16796" in str(err.value)  # cost estimate included

    def test_cap_can_be_raised(self):
        assert op.exact_ex(8, 11, cap=8).value == 13  # k > n: full triangulation

    def test_symmetry_consistent(self):
        for k in (3, 4, 5):
            a = op.exact_ex(8, k, symmetry=False)
            b = op.exact_ex(8, k, symmetry=True)
            assert a.value == b.value

    def test_parallel_consistent(self):
        for k in (3, 5):
            a = op.exact_ex(7, k, jobs=1)
            b = op.exact_ex(7, k, jobs=2)
            assert a.value == b.value
            assert a.witness == b.witness

    def test_deterministic_witness(self):
        a = op.exact_ex(7, 4)
        b = op.exact_ex(7, 4)
        assert a.witness == b.witness and a.value == b.value
