import random

import pytest
from hypothesis import given

from braidmcg.braid import (
    BraidError,
    BraidWord,
    Permutation,
    RibbonBraid,
    all_reduced_words,
    artin,
    block_crossing,
    braid_cancel,
    braids_equal,
    cable,
    cable_word,
    full_twist,
    gamma,
    is_pure,
    is_trivial,
    juxtapose,
    operad_compose,
    permutation_of,
    positive_permutation_braid,
    random_braid_word,
    ribbon_invert,
    ribbon_multiply,
    ribbons_equal,
)
from braidmcg.freegroup import GroupWord, compose

from conftest import braid_words, letters_to_string, naive_substitute


def B(n, *xs):
    return BraidWord(n, xs)


def random_pure(rng, strands, factors=2):
    """Product of conjugates of squared generators; pure by construction."""
    w = BraidWord.identity(strands)
    if strands < 2:
        return w
    for _ in range(factors):
        u = random_braid_word(rng, strands, rng.randint(0, 3))
        i = rng.randint(1, strands - 1)
        w = w * u * B(strands, i, i) ** rng.choice((1, -1)) * u.inverse()
    return w


class TestWords:
    def test_parse_and_text(self):
        w = BraidWord.parse("1 2 -1", 3)
        assert w.letters == (1, 2, -1) and w.text() == "1 2 -1"

    def test_invalid_letter(self):
        with pytest.raises(BraidError):
            B(3, 3)
        with pytest.raises(BraidError):
            B(3, 0)

    def test_cancel(self):
        assert braid_cancel(B(3, 1, 2, -2, -1, 2)).letters == (2,)

    def test_json_roundtrip(self):
        w = B(4, 1, -3, 2)
        assert BraidWord.from_json(w.to_json()) == w


class TestPermutation:
    def test_generator(self):
        assert str(permutation_of(B(3, 1))) == "(1 2)"

    def test_example(self):
        assert str(permutation_of(B(3, 1, 2, 1))) == "(1 3)"

    def test_empty(self):
        assert permutation_of(B(3)).is_identity()

    @given(braid_words(4), braid_words(4))
    def test_homomorphism(self, u, v):
        assert permutation_of(u * v) == permutation_of(u) * permutation_of(v)

    def test_factors_through_equality(self):
        assert permutation_of(B(4, 1, 2, 1)) == permutation_of(B(4, 2, 1, 2))
        assert permutation_of(B(4, 1, 3)) == permutation_of(B(4, 3, 1))


class TestArtin:
    def test_generator_b2(self):
        f = artin(B(2, 1))
        assert [w.letters for w in f.images] == [(1, 2, -1), (1,)]

    def test_inverse_generator(self):
        f = artin(B(2, -1))
        assert [w.letters for w in f.images] == [(2,), (-2, 1, 2)]

    def test_cancelling_pair(self):
        assert artin(B(3, 1, -1)).is_identity()

    def test_braid_relation_by_naive_substitution(self):
        # string-rewriting substitution; both relation words are palindromes so letter order is moot
        gens = {1: {"a": "abA", "b": "a", "c": "c"}, 2: {"a": "a", "b": "bcB", "c": "b"}}

        def naive(word):
            images = {c: c for c in "abc"}
            for letter in word:
                images = {c: naive_substitute(gens[letter], images[c]) for c in "abc"}
            return images

        left, right = naive([1, 2, 1]), naive([2, 1, 2])
        assert left == right
        got = artin(B(3, 1, 2, 1))
        assert [letters_to_string(w.letters) for w in got.images] == [left[c] for c in "abc"]
        assert artin(B(3, 1, 2, 1)) == artin(B(3, 2, 1, 2))

    def test_sigma1_squared(self):
        a1a2 = GroupWord(2, (1, 2))
        expected = a1a2 * GroupWord(2, (1,)) * a1a2 ** -1
        assert artin(B(2, 1, 1)).images[0] == expected

    @given(braid_words(4, 8), braid_words(4, 8))
    def test_homomorphism(self, u, v):
        assert artin(u * v) == compose(artin(u), artin(v))

    @given(braid_words(4, 8))
    def test_stored_inverse(self, w):
        assert artin(w).verify_inverse()


class TestWordProblem:
    def test_relation_word(self):
        assert is_trivial(B(3, 1, 2, 1, -2, -1, -2))

    def test_nontrivial(self):
        assert not is_trivial(B(3, 1, 2))
        assert not is_trivial(B(3, 1, 1))
        assert is_pure(B(3, 1, 1))

    def test_strand_mismatch(self):
        with pytest.raises(BraidError):
            braids_equal(B(3, 1), B(4, 1))

    @pytest.mark.parametrize("n", range(3, 9))
    def test_braid_relations(self, n):
        for i in range(1, n - 1):
            assert braids_equal(B(n, i, i + 1, i), B(n, i + 1, i, i + 1))
        for i in range(1, n):
            for j in range(i + 2, n):
                assert braids_equal(B(n, i, j), B(n, j, i))

    def test_faithfulness_sampling_b3(self):
        for w in all_reduced_words(3, 4):
            if not w.letters:
                continue
            if not permutation_of(w).is_identity() or w.exponent_sum() != 0:
                assert not is_trivial(w), w.text()

    def test_random_nonzero_exponent(self):
        rng = random.Random(7)
        seen = 0
        while seen < 100:
            w = random_braid_word(rng, rng.randint(2, 6), rng.randint(1, 12))
            if w.exponent_sum() == 0:
                continue
            seen += 1
            assert not is_trivial(w)


class TestRibbon:
    def test_twists_add(self):
        x = RibbonBraid((1, 0), B(2))
        y = RibbonBraid((0, 1), B(2))
        assert ribbon_multiply(x, y).twists == (1, 1)

    def test_permutation_action(self):
        x = RibbonBraid((0, 0), B(2, 1)) * RibbonBraid((1, 0), B(2))
        assert x.twists == (0, 1) and x.braid == B(2, 1)

    @given(braid_words(3, 6))
    def test_inverse(self, w):
        x = RibbonBraid((2, -1, 5), w)
        prod = x * ribbon_invert(x)
        assert ribbons_equal(prod, RibbonBraid.identity(3))

    def test_associative(self):
        rng = random.Random(3)
        for _ in range(50):
            xs = [RibbonBraid(tuple(rng.randint(-3, 3) for _ in range(4)), random_braid_word(rng, 4, 5))
                  for _ in range(3)]
            assert (xs[0] * xs[1]) * xs[2] == xs[0] * (xs[1] * xs[2])

    def test_gamma(self):
        assert gamma(B(3, 1)) == RibbonBraid((0, 0, 0), B(3, 1))
        u, v = B(3, 1, -2), B(3, 2, 2)
        assert gamma(u * v) == gamma(u) * gamma(v)
        assert str(permutation_of(gamma(B(3, 1)).braid)) == "(1 2)"

    def test_purity(self):
        assert not is_pure(gamma(B(3, 1)))
        assert is_pure(RibbonBraid((3, -1), B(2)))
        assert is_pure(gamma(B(3, 1, 1)))

    def test_json_roundtrip(self):
        x = RibbonBraid((1, -2), B(2, 1, 1))
        assert RibbonBraid.from_json(x.to_json()) == x

    def test_size_mismatch(self):
        with pytest.raises(BraidError):
            RibbonBraid((0,), B(2))
        with pytest.raises(BraidError):
            RibbonBraid.identity(2) * RibbonBraid.identity(3)


class TestCabling:
    def test_block_crossing_is_permutation_braid(self):
        for p in range(1, 4):
            for q in range(1, 4):
                x = block_crossing(p, q, 0, p + q)
                ppb = positive_permutation_braid(permutation_of(x))
                assert len(x) == p * q == len(ppb)
                assert braids_equal(x, ppb)

    def test_positive_permutation_braid_perm(self):
        rng = random.Random(11)
        for _ in range(30):
            images = list(range(1, 6))
            rng.shuffle(images)
            perm = Permutation(tuple(images))
            assert permutation_of(positive_permutation_braid(perm)) == perm

    def test_example_widths_2_1(self):
        out = cable(RibbonBraid((0, 0), B(2, 1, 1)), [B(2), B(1)])
        assert out.letters == (2, 1, 1, 2)
        assert is_pure(out)
        # independent route: each outer crossing is the positive permutation braid of its block swap
        first = positive_permutation_braid(permutation_of(block_crossing(2, 1, 0, 3)))
        second = positive_permutation_braid(permutation_of(block_crossing(1, 2, 0, 3)))
        assert braids_equal(out, first * second)

    def test_unit(self):
        inner = [B(2, 1), B(3, -2, 1), B(1)]
        assert cable(RibbonBraid.identity(3), inner) == juxtapose(inner)

    def test_width_one(self):
        outer = RibbonBraid((2, -1, 4), B(3, 1, 1, -2, -2))
        assert braids_equal(cable(outer, [B(1)] * 3), outer.braid)

    def test_twist_is_full_twist(self):
        out = cable(RibbonBraid((1,), B(1)), [B(3)])
        assert braids_equal(out, full_twist(3))
        assert braids_equal(full_twist(3), B(3, 1, 2, 1) ** 2)

    def test_non_pure_outer_rejected(self):
        with pytest.raises(BraidError):
            cable(RibbonBraid((0, 0), B(2, 1)), [B(1), B(1)])
        with pytest.raises(BraidError):
            cable_word(B(2, 1), [1])

    def test_well_defined_on_classes(self):
        # equal outer braids give equal cablings
        u = B(3, 1, 2, 1, 1, 2, 1)
        v = B(3, 2, 1, 2, 2, 1, 2)
        assert braids_equal(u, v)
        widths = [2, 1, 3]
        assert braids_equal(cable_word(u, widths), cable_word(v, widths))

    def test_block_permutation_law(self):
        rng = random.Random(5)
        for _ in range(100):
            k = rng.randint(1, 3)
            outer = RibbonBraid(tuple(rng.randint(-2, 2) for _ in range(k)), random_pure(rng, k))
            inner = [random_braid_word(rng, m, rng.randint(0, 4)) if m > 1 else B(1)
                     for m in (rng.randint(1, 3) for _ in range(k))]
            assert permutation_of(cable(outer, inner)) == permutation_of(juxtapose(inner))

    def test_associativity(self):
        rng = random.Random(9)
        for _ in range(25):
            k = rng.randint(1, 3)
            outer = RibbonBraid(tuple(rng.randint(-1, 1) for _ in range(k)), random_pure(rng, k, 1))
            mids, inners = [], []
            for _ in range(k):
                n = rng.randint(1, 3)
                mids.append(RibbonBraid(tuple(rng.randint(-1, 1) for _ in range(n)), random_pure(rng, n, 1)))
                inners.append([random_braid_word(rng, m, rng.randint(0, 2)) if m > 1 else B(1)
                               for m in (rng.randint(1, 3) for _ in range(n))])
            left = cable(operad_compose(outer, mids), [b for row in inners for b in row])
            right = cable(outer, [cable(x, row) for x, row in zip(mids, inners)])
            assert braids_equal(left, right)

    def test_operad_compose_units(self):
        x = RibbonBraid((1, -2), B(2, 1, 1))
        assert operad_compose(RibbonBraid.identity(1), [x]) == x
        assert ribbons_equal(operad_compose(x, [RibbonBraid.identity(1)] * 2), x)
