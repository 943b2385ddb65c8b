import pytest

from braidlink.braid import (BraidWord, closure_components, compose, conjugate, parse_braid,
                             permutation, random_braid)
from braidlink.linking import (INCONCLUSIVE, LINKED, LinkingError, SplitError, TwoComponentSplit,
                               guaschi_data, linked_verdict, linking_number, lk_combinatorial,
                               lk_guaschi)
from braidlink.laurent import LaurentPoly

from helpers import random_two_component

ALPHA1 = parse_braid("1 -2 -3 -3 -4", 5)
ALPHA2 = parse_braid("1 -2 4 3 2 1 1 -2 -3", 5)
GAMMA1 = parse_braid("1 -2 3 4 5 2 3 4 1 2 3 1 2 3 -4 -5 1 2 -3 -4 1 -2 -3 -3 -3 -4", 6)

t = LaurentPoly.var(1, 1)


def split(b, base):
    return TwoComponentSplit.of(b, base)


def test_combinatorial_examples():
    assert lk_combinatorial(split(ALPHA1, {1, 2, 3})) == -1
    assert lk_combinatorial(split(ALPHA2, {1, 2, 3})) == 1
    assert lk_combinatorial(split(parse_braid("1 1", 2), {1})) == 1


def test_guaschi_examples():
    data = guaschi_data(split(ALPHA1, {1, 2, 3}))
    assert data.specialized == -(t ** -1 - 1) * (1 + t + t ** -1)
    assert data.base == 1 + t + t ** -1
    assert data.l == -1
    assert lk_guaschi(split(GAMMA1, {1, 2, 3})) == 2
    assert lk_guaschi(split(ALPHA2, {1, 2, 3})) == 1


def test_verdicts():
    assert linked_verdict(split(ALPHA1, {1, 2, 3})) == LINKED
    assert linked_verdict(split(parse_braid("1 -1", 2), {1})) == INCONCLUSIVE
    assert linked_verdict(split(GAMMA1, {1, 2, 3})) == LINKED
    assert linking_number(split(parse_braid("1 -1", 2), {1}), "guaschi") == 0


def test_split_validation():
    with pytest.raises(SplitError):
        split(ALPHA1, {1, 2})
    with pytest.raises(SplitError):
        split(BraidWord(3), {1})          # three components
    with pytest.raises(SplitError):
        split(parse_braid("1 -2", 3), {1, 2, 3})


def test_bad_method():
    with pytest.raises(ValueError):
        linking_number(split(ALPHA1, {1, 2, 3}), "magic")


def test_cross_oracle_random(rng):
    for _ in range(150):
        b, comps = random_two_component(rng)
        s = split(b, comps[0])
        assert lk_combinatorial(s) == lk_guaschi(s)


def test_symmetry(rng):
    for _ in range(80):
        b, comps = random_two_component(rng)
        s = split(b, comps[0])
        assert lk_guaschi(s.swapped()) == lk_guaschi(s) == lk_combinatorial(s.swapped())


def test_conjugation_invariance(rng):
    for _ in range(80):
        b, comps = random_two_component(rng, max_n=5)
        c = random_braid(rng, b.n, rng.randint(0, 6))
        conj = conjugate(b, c)
        # c^-1 b c: the strand entering at p runs as strand c^-1(p) of b
        moved = {permutation(c)(s) for s in comps[0]}
        s_old, s_new = split(b, comps[0]), split(conj, moved)
        assert lk_guaschi(s_new) == lk_combinatorial(s_new) == lk_combinatorial(s_old)


def test_markov_stabilization(rng):
    for _ in range(80):
        b, comps = random_two_component(rng, max_n=5)
        n = b.n
        bigger = compose(BraidWord(n + 1, b.letters), BraidWord(n + 1, ((n, rng.choice([1, -1])),)))
        base = set(comps[0])
        if n in base:
            base.add(n + 1)
        s = split(bigger, base)
        assert lk_guaschi(s) == lk_combinatorial(s) == lk_combinatorial(split(b, comps[0]))


def test_quotient_shape_check():
    from braidlink.linking import _match_power_minus_one
    assert _match_power_minus_one(t ** 3 - 1) == 3
    assert _match_power_minus_one(t ** -2 - 1) == -2
    for bad in (t + 1, 2 * t - 1, t ** 2 - t, t - 2):
        with pytest.raises(LinkingError):
            _match_power_minus_one(bad)
