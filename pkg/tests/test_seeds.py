import pytest
from hypothesis import given, settings, strategies as st

from _strategies import seed_and_word
from clusterfrieze.laurent import Alphabet, is_positive, parse, tropicalize
from clusterfrieze.seeds import (BudgetExceeded, ExtendedMutationMatrix, Inconclusive,
                                 NotSkewSymmetrizable, Seed, YHat, explore, express_in,
                                 is_finite_type, mutate, symmetrizer, y_hat, y_hat_mutation)

A2_BFZ = [[0, 1], [-1, 0], [1, -1], [0, 1]]


def bfz_a2():
    alphabet = Alphabet(["z1", "z2"], ["p1", "p2"])
    return Seed.root(ExtendedMutationMatrix(A2_BFZ, 2), alphabet)


def test_mutation_examples_a2_bfz():
    s = bfz_a2()
    z1, z2, p1, p2 = s.alphabet.gens()
    assert z1 * mutate(s, 1).cluster[0] == p1 + z2
    assert z2 * mutate(s, 2).cluster[1] == p1 + z1 * p2


def test_matrix_mutation_rule():
    m = ExtendedMutationMatrix(A2_BFZ, 2).mutate(0)
    assert m.tolist() == [[0, -1], [1, 0], [-1, 0], [0, 1]]


def test_mutation_direction_checked():
    with pytest.raises(ValueError):
        mutate(bfz_a2(), 3)


def test_symmetrizer():
    assert symmetrizer([[0, 3], [-1, 0]]) == (1, 3)
    assert symmetrizer([[0, 1], [-2, 0]]) == (2, 1)
    assert symmetrizer([[2, -1], [-2, 2]], skew=False) == (2, 1)
    with pytest.raises(NotSkewSymmetrizable):
        ExtendedMutationMatrix([[0, 1], [1, 0]])
    with pytest.raises(NotSkewSymmetrizable):
        ExtendedMutationMatrix([[0, 1, 0], [-1, 0, 0], [0, 2, 0]], 3)


def test_explore_counts():
    a2 = Seed.root(ExtendedMutationMatrix([[0, 1], [-1, 0]]))
    frag = explore(a2, max_depth=6)
    assert len(frag.variables) == 5 and frag.closed
    assert len(frag) == 5


def test_explore_rank_one():
    s = Seed.root(ExtendedMutationMatrix([[0]]))
    frag = explore(s, max_depth=3)
    u1 = s.alphabet.var(0)
    assert set(frag.cluster_variables()) == {u1, 2 * u1 ** -1}


def test_explore_g2_bfz_has_eight():
    alphabet = Alphabet(["z1", "z2"], ["p1", "p2"])
    s = Seed.root(ExtendedMutationMatrix([[0, 3], [-1, 0], [1, -3], [0, 1]], 2), alphabet)
    assert len(explore(s).variables) == 8


def test_explore_depth_limit_reports_open():
    s = Seed.root(ExtendedMutationMatrix([[0, 1], [-1, 0]]))
    frag = explore(s, max_depth=1)
    assert not frag.closed


def test_budget_exceeded_on_infinite_type():
    s = Seed.root(ExtendedMutationMatrix([[0, 2], [-2, 0]]))
    with pytest.raises(BudgetExceeded) as info:
        explore(s, budget=12)
    assert info.value.fragment is not None and not info.value.fragment.closed


def test_is_finite_type_examples():
    assert is_finite_type([[0, 1, 0], [-1, 0, 1], [0, -1, 0]])
    assert not is_finite_type([[0, 2], [-2, 0]])
    assert is_finite_type([[0]])
    assert is_finite_type([[0, 3], [-1, 0]])
    # oriented 3-cycle: mutation-equivalent to A3
    assert is_finite_type([[0, 1, -1], [-1, 0, 1], [1, -1, 0]])
    # Markov quiver: every mutation gives the same matrix up to sign, never 2-finite
    assert not is_finite_type([[0, 2, -2], [-2, 0, 2], [2, -2, 0]])


def test_is_finite_type_budget():
    B = [[0, 1, 0, 0], [-1, 0, 1, 0], [0, -1, 0, 1], [0, 0, -1, 0]]
    with pytest.raises(Inconclusive):
        is_finite_type(B, budget=3)


def test_y_hat_at_root_is_literal():
    s = bfz_a2()
    z1, z2, p1, p2 = s.alphabet.gens()
    (col1, y1), (col2, y2) = y_hat(s)
    assert y1 == YHat(p1, z2)
    assert y2 == YHat(z1 * p2, p1)
    assert col1 == (0, -1, 1, 0)


def test_y_hat_mutation_examples():
    s = bfz_a2()
    t = mutate(s, 1)
    old = [y for _, y in y_hat(s)]
    new = [y for _, y in y_hat(t)]
    assert new[0] == old[0].inverse()
    assert new == y_hat_mutation(old, s.matrix, 1)


def test_json_roundtrip():
    s = bfz_a2().mutate_word([1, 2, 1])
    t = Seed.from_json(s.to_json())
    assert t == s and t.label == s.label
    root = Seed.from_json({"r": 2, "l": 2, "B": A2_BFZ, "frozen_names": ["p1", "p2"]})
    assert root.cluster == (root.alphabet.var(0), root.alphabet.var(1))


def test_canonical_key_ignores_order():
    s = Seed.root(ExtendedMutationMatrix([[0, 1], [-1, 0]]))
    t = s.mutate_word([1, 2, 1, 2, 1])
    assert t.same_as(s) and t.cluster != s.cluster


def test_express_in_roundtrip():
    s = bfz_a2()
    t = s.mutate_word([2, 1])
    for i, x in enumerate(t.cluster):
        assert express_in(t, x) == t.alphabet.var(i)
    assert express_in(s, s.cluster[0]) == s.cluster[0]


# properties on random roots A3, B2, G2 with P entries in [-2, 2], l <= 3

@settings(max_examples=60)
@given(seed_and_word(), st.data())
def test_involutivity(sw, data):
    seed, word = sw
    s = seed.mutate_word(word)
    k = data.draw(st.integers(1, s.r))
    back = mutate(mutate(s, k), k)
    assert back.matrix == s.matrix and back.cluster == s.cluster


@settings(max_examples=60)
@given(seed_and_word())
def test_positivity_and_tropical_normalization(sw):
    seed, word = sw
    s = seed.mutate_word(word)
    for x in s.cluster:
        assert is_positive(x)
        assert tropicalize(x) == (0,) * seed.l
        assert min(x.min_exponents()[seed.r:], default=0) >= 0


@settings(max_examples=40)
@given(seed_and_word(max_len=5), st.data())
def test_positivity_in_second_cluster(sw, data):
    seed, word = sw
    s = seed.mutate_word(word)
    other = seed.mutate_word(data.draw(st.lists(st.integers(1, seed.r), max_size=4)))
    for x in s.cluster:
        assert is_positive(express_in(other, x))


@settings(max_examples=60)
@given(seed_and_word(), st.data())
def test_y_hat_law(sw, data):
    seed, word = sw
    s = seed.mutate_word(word)
    k = data.draw(st.integers(1, s.r))
    before = [y for _, y in y_hat(s)]
    after = [y for _, y in y_hat(mutate(s, k))]
    assert after == y_hat_mutation(before, s.matrix, k)


def test_parse_cluster_variable():
    s = Seed.root(ExtendedMutationMatrix([[0, 1], [-1, 0]]))
    assert mutate(s, 1).cluster[0] == parse("u1^-1 + u1^-1*u2", s.alphabet)
