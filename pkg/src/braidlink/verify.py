"""Reproduce the known exact values and check every catalog record."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Callable, Optional

from .braid import closure_components, delete_strands, parse_braid
from .catalog import ExtensionRecord, builtin_records, validate_record
from .fox import lefschetz, reduced_determinant
from .laurent import LaurentPoly
from .linking import TwoComponentSplit, guaschi_data, lk_combinatorial, lk_guaschi
from .lr import forced_set, forced_set_bruteforce, parse_lr


@dataclass
class Check:
    name: str
    expected: str
    computed: str
    passed: bool

    def to_json(self) -> dict:
        return asdict(self)


def _t1() -> LaurentPoly:
    return LaurentPoly.var(1, 1)


def _run(name: str, expected: str, compute: Callable[[], str]) -> Check:
    try:
        computed = compute()
    except Exception as exc:  # a failed check is reported, not raised
        return Check(name, expected, f"error: {type(exc).__name__}: {exc}", False)
    return Check(name, expected, computed, computed == expected)


def _beta_det() -> str:
    return str(reduced_determinant(parse_braid("1 -2", 3)))


def _alpha1_specialized() -> str:
    b = parse_braid("1 -2 -3 -3 -4", 5)
    data = guaschi_data(TwoComponentSplit.of(b, {1, 2, 3}))
    t = _t1()
    target = -(t ** -1 - 1) * (1 + t + t ** -1)
    return "match" if data.specialized == target else str(data.specialized)


def _lefschetz_lr() -> str:
    return str(lefschetz(parse_braid("1 -2", 3)))


LISTED_FORCED = ("LRLL", "LRLR", "LRRR", "LR")


def _forced_contains() -> str:
    fs = forced_set(parse_lr("LRLLRR"))
    missing = [v for v in LISTED_FORCED if parse_lr(v) not in fs]
    return "contained" if not missing else f"missing {missing}"


def _forced_oracle() -> str:
    w = parse_lr("LRLLRR")
    return "agree" if forced_set(w) == forced_set_bruteforce(w) else "differ"


def _subbraid() -> str:
    b = parse_braid("1 -2 -3 -3 -4", 5)
    return str(delete_strands(b, {1, 2, 3}))


def _components() -> str:
    b = parse_braid("1 -2 -3 -3 -4", 5)
    return str([sorted(c) for c in closure_components(b)])


def record_checks(rec: ExtensionRecord) -> list[Check]:
    expected = "unknown" if rec.expected_lk is None else str(rec.expected_lk)
    problems = validate_record(rec)
    if problems:
        why = "; ".join(f"{p.invariant}: {p.reason}" for p in problems)
        return [Check(f"catalog {rec.name}: record invariants", "valid", f"invalid ({why})", False)]

    def split():
        return TwoComponentSplit.of(rec.extension, rec.base_strands)

    out = []
    for label, fn in (("diagram", lk_combinatorial), ("guaschi", lk_guaschi)):
        check = _run(f"catalog {rec.name}: lk by {label}", expected, lambda fn=fn: str(fn(split())))
        if rec.expected_lk is None:
            check.passed = not check.computed.startswith("error")
        out.append(check)
    return out


def run_checks(records: Optional[list[ExtensionRecord]] = None) -> list[Check]:
    if records is None:
        records = builtin_records()
    checks = [
        _run("det(r(LR) - I)", "1 + t1 + t1^-1", _beta_det),
        _run("alpha1: det(r - I) at t2=1 = -(t1^-1 - 1)(1 + t1 + t1^-1)", "match",
             _alpha1_specialized),
        _run("Lefschetz number of LR", "-1 + t1 + t1^-1", _lefschetz_lr),
        _run("forced_set(LRLLRR) contains LRLL, LRLR, LRRR, LR", "contained", _forced_contains),
        _run("forced_set(LRLLRR) agrees with brute-force oracle", "agree", _forced_oracle),
        _run("sub-braid of alpha1 on strands 1,2,3", "1 -2", _subbraid),
        _run("closure components of alpha1", "[[1, 2, 3], [4, 5]]", _components),
    ]
    for rec in records:
        checks.extend(record_checks(rec))
    return checks


def format_table(checks: list[Check]) -> str:
    width = max(len(c.name) for c in checks)
    lines = [f"{'check':<{width}}  {'expected':<18}  {'computed':<18}  result"]
    for c in checks:
        lines.append(f"{c.name:<{width}}  {c.expected:<18}  {c.computed:<18}  "
                     f"{'PASS' if c.passed else 'FAIL'}")
    failed = sum(not c.passed for c in checks)
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    return "\n".join(lines)
