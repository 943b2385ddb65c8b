"""Exit criteria: known exact values, cross-checks and the verify command.

Each test appends one PASS/FAIL line, printed in the pytest terminal summary.
"""

import contextlib
import io
import itertools
import time

import pytest

from braidlink.braid import closure_components, compose, delete_strands, parse_braid, random_braid
from braidlink.catalog import ExtensionRecord, builtin_records, save_catalog
from braidlink.cli import main
from braidlink.fox import Coloring, lefschetz, magnus_matrix, reduced_determinant
from braidlink.laurent import LaurentPoly, RingMatrix, determinant, determinant_cofactor
from braidlink.linking import TwoComponentSplit, guaschi_data, lk_combinatorial, lk_guaschi
from braidlink.lr import forced_set, forced_set_bruteforce, forces, is_pseudo_anosov, parse_lr

from helpers import ACCEPTANCE_LINES, random_two_component

t = LaurentPoly.var(1, 1)
BETA = parse_braid("1 -2", 3)
ALPHA1 = parse_braid("1 -2 -3 -3 -4", 5)
EXPECTED_LK = {"alpha1": -1, "alpha2": 1, "gamma1": 2, "delta1": 1}


def report(number, ok, detail):
    ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")


@contextlib.contextmanager
def timed():
    box = {}
    start = time.perf_counter()
    yield box
    box["elapsed"] = time.perf_counter() - start


def test_criterion_1_base_determinant():
    with timed() as clock:
        value = reduced_determinant(BETA)
    ok = value == 1 + t + t ** -1 and clock["elapsed"] < 1.0
    report(1, ok, f"det(r(s1 s2^-1) - I) = {value}  ({clock['elapsed']:.3f}s)")
    assert value == 1 + t + t ** -1
    assert clock["elapsed"] < 1.0


def test_criterion_2_alpha1_specialization():
    with timed() as clock:
        data = guaschi_data(TwoComponentSplit.of(ALPHA1, {1, 2, 3}))
    target = -(t ** -1 - 1) * (1 + t + t ** -1)
    ok = data.specialized == target and data.l == -1 and clock["elapsed"] < 1.0
    report(2, ok, f"D|t2=1 = {data.specialized}, l = {data.l}  ({clock['elapsed']:.3f}s)")
    assert data.specialized == target
    assert data.l == -1
    assert clock["elapsed"] < 1.0


def test_criterion_3_four_extensions_both_methods():
    results = {}
    with timed() as clock:
        for rec in builtin_records():
            try:
                split = TwoComponentSplit.of(rec.extension, rec.base_strands)
                results[rec.name] = (lk_combinatorial(split), lk_guaschi(split))
            except Exception as exc:
                results[rec.name] = f"{type(exc).__name__}: {exc}"
    failures = {k: v for k, v in results.items() if v != (EXPECTED_LK[k], EXPECTED_LK[k])}
    ok = not failures and clock["elapsed"] < 5.0
    report(3, ok, f"{results}  ({clock['elapsed']:.3f}s)")
    assert clock["elapsed"] < 5.0
    assert not failures, failures


def test_criterion_4_lefschetz():
    value = lefschetz(BETA)
    ok = value == -1 + t + t ** -1
    report(4, ok, f"L_H(s1 s2^-1) = {value}")
    assert ok


def test_criterion_5_forced_set():
    with timed() as clock:
        w = parse_lr("LRLLRR")
        fs = forced_set(w)
        oracle = forced_set_bruteforce(w)
    listed = {parse_lr(v) for v in ("LRLL", "LRLR", "LRRR", "LR")}
    forced3 = {v for v in oracle if len(v) == 3}
    allowed = listed | forced3
    extra = sorted(str(v) for v in fs if len(v) <= 4 and v not in allowed)
    contains = listed <= fs
    agree = fs == oracle
    ok = contains and not extra and agree and clock["elapsed"] < 1.0
    report(5, ok, f"contains listed words: {contains}; oracle agrees: {agree}; "
                  f"forced pA words of length <= 4 outside the list: {extra}  "
                  f"({clock['elapsed']:.3f}s)")
    assert contains
    assert agree
    assert clock["elapsed"] < 1.0
    assert not extra, f"forced but not in the allowed set: {extra}"


def _random_matrix(rng, dim):
    nvars = rng.randint(1, 2)
    rows = []
    for _ in range(dim):
        row = []
        for _ in range(dim):
            p = LaurentPoly.zero(nvars)
            for _ in range(rng.randint(0, 3)):
                exp = tuple(rng.randint(-2, 2) for _ in range(nvars))
                p = p + LaurentPoly.monomial(exp, rng.randint(-3, 3))
            row.append(p)
        rows.append(row)
    return RingMatrix(rows, nvars)


def _random_pa(rng):
    while True:
        w = "".join(rng.choice("LR") for _ in range(rng.randint(2, 10)))
        if "L" in w and "R" in w:
            return parse_lr(w)


def test_criterion_6_property_suite(rng):
    fails = []
    with timed() as clock:
        for _ in range(500):
            n = rng.randint(2, 6)
            b = random_braid(rng, n, rng.randint(0, 12))
            row = magnus_matrix(b, Coloring.of_closure(b)).row(n - 1)
            if not (all(x == 0 for x in row[:-1]) and row[-1] == 1):
                fails.append(("bottom row", str(b)))

        for _ in range(200):
            n = rng.randint(2, 6)
            a = random_braid(rng, n, rng.randint(0, 12))
            b = random_braid(rng, n, rng.randint(0, 12))
            if magnus_matrix(compose(a, b)) != magnus_matrix(a) @ magnus_matrix(b):
                fails.append(("homomorphism", str(a), str(b)))

        for _ in range(200):
            b, comps = random_two_component(rng, max_n=6, max_len=10)
            split = TwoComponentSplit.of(b, comps[0])
            if lk_combinatorial(split) != lk_guaschi(split):
                fails.append(("cross-oracle", str(b)))

        for _ in range(200):
            m = _random_matrix(rng, rng.randint(1, 6))
            if determinant(m) != determinant_cofactor(m):
                fails.append(("bareiss", m))

        words = [_random_pa(rng) for _ in range(40)]
        for u, v, w in itertools.product(words[:15], repeat=3):
            if not forces(u, u):
                fails.append(("reflexive", str(u)))
            if forces(u, v) and forces(v, w) and not forces(u, w):
                fails.append(("transitive", str(u), str(v), str(w)))
            if forces(u, v) and forces(v, u) and u != v:
                fails.append(("antisymmetric", str(u), str(v)))
        for w in words:
            fs = forced_set(w)
            if not all(is_pseudo_anosov(v) and forced_set(v) <= fs for v in fs):
                fails.append(("monotone", str(w)))
    ok = not fails and clock["elapsed"] < 60.0
    report(6, ok, f"{len(fails)} property failures  ({clock['elapsed']:.2f}s)")
    assert not fails, fails[:5]
    assert clock["elapsed"] < 60.0


def test_criterion_7_structure():
    sub = delete_strands(ALPHA1, {1, 2, 3})
    comps = closure_components(ALPHA1)
    ok = sub == BETA and comps == [{1, 2, 3}, {4, 5}]
    report(7, ok, f"sub-braid {sub}, components {[sorted(c) for c in comps]}")
    assert ok


def _verify_exit(*argv):
    with contextlib.redirect_stdout(io.StringIO()) as buf:
        code = main(["verify", *argv])
    return code, buf.getvalue()


def test_criterion_8_verify_command(tmp_path):
    fresh, fresh_out = _verify_exit()
    tamper_codes = {}
    for name in EXPECTED_LK:
        recs = [ExtensionRecord(**{**r.__dict__, "expected_lk": r.expected_lk + 7})
                if r.name == name else r for r in builtin_records()]
        path = tmp_path / f"{name}.json"
        save_catalog(recs, path)
        tamper_codes[name] = _verify_exit("--catalog", str(path))[0]
    failing_rows = [l.split("  ")[0] for l in fresh_out.splitlines() if l.endswith("FAIL")]
    ok = fresh == 0 and all(c == 1 for c in tamper_codes.values())
    report(8, ok, f"fresh verify exit {fresh} (failing rows: {failing_rows}); "
                  f"tampered exits {tamper_codes}")
    assert all(c == 1 for c in tamper_codes.values())
    assert fresh == 0, f"verify failed on: {failing_rows}"
