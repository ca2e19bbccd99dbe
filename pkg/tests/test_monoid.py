import math
from itertools import product

import pytest
from hypothesis import given, strategies as st

from kaluza.monoid import (
    MultiIndexes,
    Words,
    abelianize,
    index_set,
    multinomial,
    partial_leq,
)


class TestCompose:
    def test_multiindex_addition(self):
        M = MultiIndexes(2)
        assert M.compose((1, 0), (0, 1)) == (1, 1)

    def test_word_concatenation(self):
        W = Words(2)
        assert W.compose((1, 2), (1,)) == (1, 2, 1)

    def test_identity_law(self):
        M = MultiIndexes(3)
        assert M.compose((2, 0, 1), M.identity) == (2, 0, 1)
        W = Words(2)
        assert W.compose(W.identity, (2, 1)) == (2, 1)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            MultiIndexes(2).compose((1, 0), (1, 0, 0))
        with pytest.raises(ValueError):
            Words(2).compose((1,), (3,))


class TestDecompositions:
    def test_word_splits(self):
        W = Words(2)
        assert W.decompositions((1, 2)) == [
            ((), (1, 2)),
            ((1,), (2,)),
            ((1, 2), ()),
        ]

    def test_multiindex_pairs(self):
        M = MultiIndexes(2)
        pairs = M.decompositions((1, 1))
        assert len(pairs) == 4
        assert set(pairs) == {
            ((0, 0), (1, 1)),
            ((1, 0), (0, 1)),
            ((0, 1), (1, 0)),
            ((1, 1), (0, 0)),
        }

    def test_identity_decomposes_trivially(self):
        for M in (MultiIndexes(2), Words(3)):
            assert M.decompositions(M.identity) == [(M.identity, M.identity)]

    def test_counts(self):
        M = MultiIndexes(3)
        assert len(M.decompositions((2, 1, 3))) == 3 * 2 * 4
        W = Words(2)
        assert len(W.decompositions((1, 2, 2, 1))) == 5

    def test_pairs_compose_back(self):
        M = MultiIndexes(2)
        for u, v in M.decompositions((2, 3)):
            assert M.compose(u, v) == (2, 3)


class TestPredecessors:
    def test_multiindex(self):
        M = MultiIndexes(2)
        assert set(M.predecessors((2, 1))) == {(1, 1), (2, 0)}
        assert M.predecessors((0, 3)) == [(0, 2)]

    def test_word_drops_first_letter(self):
        W = Words(2)
        assert W.predecessors((1, 2, 1)) == [(2, 1)]

    def test_identity_rejected(self):
        for M in (MultiIndexes(2), Words(2)):
            with pytest.raises(ValueError):
                M.predecessors(M.identity)

    def test_consistency_with_decompositions(self):
        # v is a predecessor of w iff some degree-1 left factor pairs with it
        for M in (MultiIndexes(2), MultiIndexes(3), Words(2), Words(3)):
            for n in range(1, 4):
                for w in M.enumerate(n):
                    via_dec = {
                        v for u, v in M.decompositions(w) if M.degree(u) == 1
                    }
                    assert set(M.predecessors(w)) == via_dec


class TestPartialOrder:
    def test_examples(self):
        assert partial_leq((1, 0), (1, 2))
        assert not partial_leq((2, 0), (1, 2))
        assert partial_leq((1, 2), (1, 2))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            partial_leq((1,), (1, 2))


class TestMultinomial:
    def test_examples(self):
        assert multinomial((2, 1)) == 3
        assert multinomial((0, 0, 0)) == 1
        assert multinomial((2, 2)) == 6

    def test_counts_fiber(self):
        # words over {1,2} with two 1s and two 2s
        count = sum(
            1 for w in product((1, 2), repeat=4) if abelianize(w, 2) == (2, 2)
        )
        assert count == multinomial((2, 2)) == 6

    def test_degree_sum(self):
        # fibers partition all words of a degree
        for d in (1, 2, 3):
            M = MultiIndexes(d)
            for n in range(6):
                assert sum(multinomial(a) for a in M.enumerate(n)) == d**n


class TestAbelianize:
    def test_examples(self):
        assert abelianize((1, 2, 1), 2) == (2, 1)
        assert abelianize((), 2) == (0, 0)
        assert abelianize((2, 2, 1, 1), 2) == (2, 2)

    def test_surjective_and_degree_preserving(self):
        M = MultiIndexes(2)
        W = Words(2)
        for n in range(5):
            image = {abelianize(w, 2) for w in W.enumerate(n)}
            assert image == set(M.enumerate(n))

    def test_letters_validated(self):
        with pytest.raises(ValueError):
            abelianize((1, 3), 2)


class TestEnumeration:
    def test_multiindex_counts(self):
        for d in (1, 2, 3, 4):
            M = MultiIndexes(d)
            for n in range(6):
                got = M.enumerate(n)
                assert len(got) == math.comb(n + d - 1, d - 1) == M.count(n)
                assert len(set(got)) == len(got)

    def test_word_counts(self):
        for d in (1, 2, 3):
            W = Words(d)
            for n in range(5):
                got = W.enumerate(n)
                assert len(got) == d**n == W.count(n)
                assert len(set(got)) == len(got)

    def test_lex_order_within_degree(self):
        M = MultiIndexes(3)
        level = M.enumerate(3)
        assert level == sorted(level)
        W = Words(3)
        assert W.enumerate(2) == sorted(W.enumerate(2))

    def test_elements_in_degree_blocks(self):
        M = MultiIndexes(2)
        seen = list(M.elements(3))
        degs = [sum(a) for a in seen]
        assert degs == sorted(degs)
        assert len(seen) == M.total_count(3) == 10

    def test_first_level_values(self):
        assert MultiIndexes(2).enumerate(2) == [(0, 2), (1, 1), (2, 0)]
        assert Words(2).enumerate(2) == [(1, 1), (1, 2), (2, 1), (2, 2)]


class TestStructure:
    def test_grading(self):
        for M in (MultiIndexes(2), Words(2)):
            for x in M.elements(3):
                for y in M.elements(2):
                    assert M.degree(M.compose(x, y)) == M.degree(x) + M.degree(y)

    def test_trivial_kernel(self):
        # the only degree-0 element is the identity
        for M in (MultiIndexes(3), Words(3)):
            assert M.enumerate(0) == [M.identity]

    def test_right_cancellation(self):
        # a*w == b*w forces a == b for degree-1 left factors
        for M in (MultiIndexes(2), MultiIndexes(3), Words(2), Words(3)):
            letters = M.enumerate(1)
            for w in M.elements(3):
                images = [M.compose(a, w) for a in letters]
                assert len(set(images)) == len(letters)

    @given(st.integers(1, 3), st.data())
    def test_associativity(self, d, data):
        W = Words(d)
        letters = st.integers(1, d)
        x = tuple(data.draw(st.lists(letters, max_size=4)))
        y = tuple(data.draw(st.lists(letters, max_size=4)))
        z = tuple(data.draw(st.lists(letters, max_size=4)))
        assert W.compose(W.compose(x, y), z) == W.compose(x, W.compose(y, z))

    def test_multiindex_commutative_words_not(self):
        M = MultiIndexes(2)
        assert M.compose((1, 0), (0, 1)) == M.compose((0, 1), (1, 0))
        W = Words(2)
        assert W.compose((1,), (2,)) != W.compose((2,), (1,))


class TestFactoryAndValidation:
    def test_index_set_factory(self):
        assert index_set("multiindex", 2) == MultiIndexes(2)
        assert index_set("word", 3) == Words(3)
        with pytest.raises(ValueError):
            index_set("group", 2)

    def test_validate_multiindex(self):
        M = MultiIndexes(2)
        assert M.validate([1, 2]) == (1, 2)
        with pytest.raises(ValueError):
            M.validate((1,))
        with pytest.raises(ValueError):
            M.validate((1, -1))

    def test_validate_word(self):
        W = Words(2)
        assert W.validate([2, 1]) == (2, 1)
        with pytest.raises(ValueError):
            W.validate((0,))
        with pytest.raises(ValueError):
            W.validate((3,))

    def test_dimension_positive(self):
        with pytest.raises(ValueError):
            MultiIndexes(0)

    def test_equality_and_hash(self):
        assert MultiIndexes(2) == MultiIndexes(2)
        assert MultiIndexes(2) != Words(2)
        assert hash(MultiIndexes(2)) == hash(MultiIndexes(2))
