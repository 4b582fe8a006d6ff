import pytest

from braidmcg import homology as hom
from braidmcg.homology import GeneratorSpec, HomologyError
from braidmcg.oracle import boundary_matrix, integral_torsion_free_check, oracle_homology


def x(i):
    return GeneratorSpec(2, "x", i)


def y(p, i):
    return GeneratorSpec(p, "y", i)


class TestGenerators:
    def test_degrees_and_weights(self):
        assert (x(1).degree, x(1).weight) == (1, 2)
        assert (x(3).degree, x(3).weight) == (7, 8)
        lam = GeneratorSpec(3, "lambda")
        assert (lam.degree, lam.weight) == (1, 2)
        assert (y(3, 1).degree, y(3, 1).weight) == (5, 6)
        assert GeneratorSpec(3, "by", 1).degree == 4

    def test_parse(self):
        assert hom.parse_generator(2, "x3") == x(3)
        assert hom.parse_generator(5, "y2") == y(5, 2)

    def test_bad_prime(self):
        with pytest.raises(HomologyError):
            GeneratorSpec(4, "y", 1)
        with pytest.raises(HomologyError):
            hom.fp_dims(4, 2, 3)


class TestPresentations:
    def test_f2_examples(self):
        assert [m.label for m in hom.f2_basis(2, 5)] == ["1", "x1"]
        assert hom.f2_dims(2, 3) == (1, 1, 0, 0)
        assert hom.f2_dims(1, 3) == (1, 0, 0, 0)
        assert sorted(m.label for m in hom.f2_basis(4, 3)) == sorted(["1", "x1", "x1^2", "x2"])
        assert hom.f2_dims(4, 3) == (1, 1, 1, 1)

    def test_fp_examples(self):
        assert [m.label for m in hom.fp_basis(3, 3, 5)] == ["1", "lambda"]
        assert hom.fp_dims(6, 3, 5) == (1, 1, 0, 0, 1, 1)
        for m in range(2, 12):
            assert hom.fp_dims(m, 5, 3)[1] == 1

    def test_rational(self):
        assert hom.rational_dims(5, 4) == (1, 1, 0, 0, 0)
        assert hom.rational_dims(1, 2) == (1, 0, 0)
        assert hom.rational_dims(2, 2) == (1, 1, 0)

    def test_poincare_string(self):
        assert hom.poincare_string((1, 1, 0, 2)) == "1 + t + 2t^3"

    def test_q_on_generator(self):
        assert hom.q_on_generator(2, x(1)) == x(2)
        assert hom.q_on_generator(3, GeneratorSpec(3, "lambda")) == y(3, 1)
        assert hom.q_on_generator(3, y(3, 1)) == y(3, 2)
        for i in range(1, 6):
            assert hom.q_on_generator(2, x(i)).degree == 2 * x(i).degree + 1
        with pytest.raises(HomologyError):
            hom.q_on_generator(3, GeneratorSpec(3, "by", 1))

    def test_nonvanishing(self):
        assert hom.nonvanishing_in_source(2, x(2), 4)
        assert not hom.nonvanishing_in_source(2, x(3), 4)
        assert not hom.nonvanishing_in_source(3, y(3, 1), 5)


class TestOracle:
    def test_d_squared_zero(self):
        for m in range(2, 9):
            assert integral_torsion_free_check(m)

    def test_small_boundaries(self):
        # B_2 = Z: the single 1-cell is a cycle
        assert boundary_matrix(2, 1) == ((0,),)
        # B_3: W_{12}/W_1 = W_{12}/W_2 = 1 + q + q^2, which is 1 at q = -1, so d e_12 = e_2 - e_1
        assert boundary_matrix(3, 2) == ((-1,), (1,))

    def test_limits(self):
        with pytest.raises(ValueError):
            oracle_homology(9, 2)
        with pytest.raises(ValueError):
            oracle_homology(0, 2)

    @pytest.mark.parametrize("m", range(1, 7))
    def test_rational_agreement(self, m):
        assert oracle_homology(m, 0, 6) == hom.rational_dims(m, 6)

    @pytest.mark.parametrize("m", range(1, 7))
    def test_f2_agreement(self, m):
        assert oracle_homology(m, 2, 6) == hom.f2_dims(m, 6)

    @pytest.mark.parametrize("p", [3, 5])
    @pytest.mark.parametrize("m", range(1, 7))
    def test_fp_agreement(self, m, p):
        assert oracle_homology(m, p, 6) == hom.fp_dims(m, p, 6)

    @pytest.mark.parametrize("p", [0, 2, 3])
    def test_agreement_m7_m8(self, p):
        for m in (7, 8):
            assert oracle_homology(m, p) == hom.dims(m, p, m - 1)

    def test_example(self):
        assert oracle_homology(4, 2, 3) == (1, 1, 1, 1)
        for m in range(2, 7):
            for p in (2, 3, 5):
                assert oracle_homology(m, p)[1] == 1

    @pytest.mark.parametrize("p", [0, 2, 3, 5])
    def test_stabilization(self, p):
        for d in range(0, 4):
            values = {oracle_homology(m, p, d)[d] for m in range(2 * d + 2, 9)}
            assert len(values) == 1, (p, d, values)


class TestRanges:
    def test_stable_range(self):
        assert hom.stable_range(10) == 6
        assert hom.stable_range(1) == 0
        assert hom.stable_range(4) == 2

    def test_nonorientable(self):
        assert hom.nonorientable_stable_range(9) == (2, 3)
        assert hom.nonorientable_stable_range(3) == (0, 1)
        assert hom.nonorientable_stable_range(0) == (0, 0)


class TestThresholds:
    def test_stable_kill(self):
        assert hom.stable_kill_threshold(2, x(2)) == 6
        assert hom.stable_kill_threshold(3, y(3, 1)) == 9
        assert hom.stable_kill_threshold(2, x(1)) == 3

    def test_stable_kill_matches_closed_forms(self):
        for i in range(1, 8):
            assert hom.stable_kill_threshold(2, x(i)) == -(-(3 * 2 ** i - 1) // 2)
            for p in (3, 5, 7):
                assert hom.stable_kill_threshold(p, y(p, i)) == -(-(6 * p ** i - 1) // 2)

    def test_operadic(self):
        assert hom.operadic_threshold(2, x(1)) == 3
        assert hom.operadic_threshold(3, y(3, 1)) == 6
        assert hom.operadic_threshold(5, y(5, 1)) == 15
        for i in range(1, 6):
            assert hom.operadic_threshold(2, x(i)) == 3 * 2 ** (i - 1)
            assert hom.operadic_threshold(5, y(5, i)) == 3 * 5 ** i
            assert hom.operadic_threshold(7, y(7, i)) == 2 * 7 ** i

    def test_h1_start(self):
        assert [hom.h1_vanishes_from(p) for p in (2, 3, 5, 7, 11)] == [3, 2, 3, 2, 2]

    def test_geometric(self):
        assert hom.geometric_threshold(2, 1) == 7
        assert hom.geometric_threshold(3, 1) == 8
        assert hom.geometric_recurrence(3, 1) == 8

    def test_geometric_closed_form_matches_recurrence(self):
        for p in (2, 3, 5, 7):
            for i in range(0, 6):
                assert hom.geometric_threshold(p, i) == hom.geometric_recurrence(p, i)


class TestReports:
    def test_geometric_paper_view_g16(self):
        rep = hom.vanishing_report("geometric", 2, 16, view="paper")
        assert rep.undetermined == ["x3", "x4", "x5"]
        assert rep.labels("zero") == ["x1", "x2"]

    def test_geometric_paper_view_range(self):
        for g in range(31, 65):
            rep = hom.vanishing_report("geometric", 2, g, view="paper")
            assert len(rep.undetermined) == 3, g

    def test_combined_view_g16(self):
        rep = hom.vanishing_report("geometric", 2, 16)
        assert rep.undetermined == ["x4", "x5"]
        assert rep.m == 34

    @pytest.mark.parametrize("embedding", hom.EMBEDDINGS)
    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_consistency(self, embedding, p):
        for g in range(2, 70):
            for view in ("paper", "combined"):
                rep = hom.vanishing_report(embedding, p, g, view)
                for e in rep.entries:
                    assert not (e.status == "absent" and e.killed_by)
                    assert (e.status == "zero") == (e.nonzero_in_source and bool(e.killed_by))
                    for name in e.killed_by:
                        assert g >= e.thresholds[name]

    def test_operadic_p3_g6(self):
        rep = hom.vanishing_report("operadic", 3, 6)
        status = {e.generator.label: e.status for e in rep.entries}
        assert status["y1"] == "zero"

    def test_operadic_p7_g2(self):
        rep = hom.vanishing_report("operadic", 7, 2)
        ys = [e for e in rep.entries if e.generator.kind == "y"]
        assert ys and all(e.status == "absent" for e in ys)
        assert not any(label.startswith("y") for label in rep.undetermined)

    def test_unknown_embedding(self):
        with pytest.raises(HomologyError):
            hom.vanishing_report("bogus", 2, 5)

    def test_json(self):
        data = hom.vanishing_report("geometric", 2, 16, view="paper").to_json()
        assert data["undetermined"] == ["x3", "x4", "x5"]
        assert data["source_strands"] == 34


class TestH1:
    def test_orientable(self):
        assert hom.h1_table("gamma", 2, 1).value == "Z/10"
        assert hom.h1_table("gamma", 2, 2).value == "Z/10"
        for g in range(3, 10):
            assert hom.h1_table("gamma", g, 1).value == "0"

    def test_nonorientable(self):
        for g in range(7, 12):
            assert hom.h1_table("n", g, coefficients=2).value == "F2"
            assert hom.h1_table("n", g).value == "Z/2"
        assert hom.h1_table("n", 7, coefficients=3).value == "0"

    def test_coefficients(self):
        assert hom.h1_table("gamma", 2, 1, 5).value == "F5"
        assert hom.h1_table("gamma", 2, 1, 3).value == "0"
        assert hom.h1_table("gamma", 2, 1, 0).value == "0"

    def test_uncovered(self):
        with pytest.raises(HomologyError):
            hom.h1_table("n", 5)
        with pytest.raises(HomologyError):
            hom.h1_table("gamma", 1)


class TestExpectation:
    def test_examples(self):
        assert hom.theorem_expectation("mirror", 5, 2, 10) == "zero"
        assert hom.theorem_expectation("szepietowski", 2, 2, 9) == "injective"
        assert hom.theorem_expectation("operadic", 2, 0, 10) == "out-of-range"

    def test_unknown(self):
        with pytest.raises(HomologyError):
            hom.theorem_expectation("bogus", 2, 1, 10)
