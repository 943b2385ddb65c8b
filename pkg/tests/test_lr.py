import itertools

import pytest

from braidlink.lr import (LRError, LRWord, forced_set, forced_set_bruteforce, forces,
                          is_pseudo_anosov, parse_lr, to_braid)
from braidlink.braid import parse_braid


def words(s):
    return {parse_lr(x) for x in s}


def random_pa(rng, max_len=10):
    while True:
        w = "".join(rng.choice("LR") for _ in range(rng.randint(2, max_len)))
        if "L" in w and "R" in w:
            return parse_lr(w)


def test_parse():
    assert str(parse_lr("LR")) == "LR"
    assert parse_lr("RL") == parse_lr("LR")
    rotations = ["LRLLRR"[i:] + "LRLLRR"[:i] for i in range(6)]
    assert str(parse_lr("LRLLRR")) == min(rotations) == "LLRRLR"
    assert parse_lr("lr") == parse_lr("LR")
    for bad in ("", "LRX", "L R"):
        with pytest.raises(LRError):
            parse_lr(bad)


def test_pseudo_anosov():
    assert is_pseudo_anosov(parse_lr("LR"))
    assert not is_pseudo_anosov(parse_lr("LL"))
    assert is_pseudo_anosov(parse_lr("LRLLRR"))


def test_to_braid():
    assert to_braid(parse_lr("LR")) == parse_braid("1 -2", 3)
    assert to_braid(parse_lr("L")) == parse_braid("1", 3)
    assert to_braid(parse_lr("LRLR")) == parse_braid("1 -2 1 -2", 3)


def test_forces_examples():
    w = parse_lr("LRLLRR")
    for v in ("LRLL", "LRLR", "LRRR", "LR"):
        assert forces(w, parse_lr(v))
    assert forces(w, w)
    assert not forces(parse_lr("LR"), parse_lr("LRLR"))
    with pytest.raises(LRError):
        forces(parse_lr("LL"), parse_lr("LR"))


def test_forced_set_examples():
    assert forced_set(parse_lr("LR")) == words(["LR"])
    assert forced_set(parse_lr("LLR")) == words(["LLR", "LR"])
    fs = forced_set(parse_lr("LRLLRR"))
    assert words(["LRLL", "LRLR", "LRRR", "LR"]) <= fs
    # LLRR drops the leading "LR" of LRLLRR, so it is forced as well
    short = {v for v in fs if len(v) <= 4}
    assert short == words(["LR", "LLR", "LRR", "LRLL", "LRLR", "LRRR", "LLRR"])
    with pytest.raises(LRError):
        forced_set(parse_lr("RRR"))


def test_forced_set_matches_bruteforce(rng):
    for _ in range(25):
        w = random_pa(rng, 8)
        assert forced_set(w) == forced_set_bruteforce(w)


def test_partial_order(rng):
    for _ in range(60):
        u, v, w = random_pa(rng), random_pa(rng), random_pa(rng)
        assert forces(w, w)
        if forces(u, v) and forces(v, w):
            assert forces(u, w)
        if forces(u, v):
            assert len(v) <= len(u)
        if forces(u, v) and forces(v, u):
            assert u == v


def test_transitivity_along_forced_chain(rng):
    for _ in range(20):
        w = random_pa(rng, 9)
        fs = forced_set(w)
        for v in fs:
            assert is_pseudo_anosov(v) and str(v) == str(LRWord(str(v)))
            assert forces(w, v)
            assert forced_set(v) <= fs


def test_exhaustive_small_order():
    pa = {parse_lr("".join(p)) for k in range(2, 7) for p in itertools.product("LR", repeat=k)
          if "L" in p and "R" in p}
    for u in pa:
        for v in pa:
            if forces(u, v) and forces(v, u):
                assert u == v
