"""
Linking number of a two-component closed braid, computed two ways.

``lk_combinatorial`` reads crossing signs off the word (sigma_i is a positive
crossing). ``lk_guaschi`` solves

    det(r(b) - I)|_{t2=1} = (-1)^(m-1) (t1^l - 1) det(r(b_base) - I)

for l, where t1 colors the base strands, t2 the remaining m strands and
b_base is the sub-braid on the base strands.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable

from .braid import BraidWord, delete_strands, permutation, strand_trace
from .fox import Coloring, reduced_determinant
from .laurent import LaurentPoly, NotDivisibleError, div_exact

log = logging.getLogger(__name__)

LINKED = "linked"
INCONCLUSIVE = "inconclusive"


class LinkingError(ValueError):
    pass


class SplitError(LinkingError):
    pass


class IndeterminateError(LinkingError):
    """det(r(base) - I) vanishes, so the determinant formula says nothing."""


class MethodDisagreement(RuntimeError):
    pass


@dataclass(frozen=True)
class TwoComponentSplit:
    braid: BraidWord
    base: frozenset[int]
    rest: frozenset[int] = field(default=None)

    def __post_init__(self):
        n = self.braid.n
        base = frozenset(self.base)
        rest = frozenset(range(1, n + 1)) - base if self.rest is None else frozenset(self.rest)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "rest", rest)
        if base & rest or base | rest != set(range(1, n + 1)):
            raise SplitError("base and rest must partition the strands 1..n")
        if not base or not rest:
            raise SplitError("both components must be nonempty")
        cycles = permutation(self.braid).cycles()
        if base not in cycles or rest not in cycles:
            raise SplitError(
                f"closure components are {[sorted(c) for c in sorted(cycles, key=min)]}; "
                f"need exactly two with base {sorted(base)}")

    @classmethod
    def of(cls, braid: BraidWord, base: Iterable[int]) -> TwoComponentSplit:
        return cls(braid, frozenset(base))

    @property
    def m(self) -> int:
        return len(self.rest)

    def coloring(self) -> Coloring:
        return Coloring.from_sets([self.base, self.rest], self.braid.n)

    def swapped(self) -> TwoComponentSplit:
        return TwoComponentSplit(self.braid, self.rest, self.base)


def mixed_crossing_sum(s: TwoComponentSplit) -> int:
    """Signed count of all crossings between the two components."""
    return sum(e for _, e, left, right in strand_trace(s.braid)
               if (left in s.base) != (right in s.base))


def lk_combinatorial(s: TwoComponentSplit) -> int:
    total = mixed_crossing_sum(s)
    if total % 2:
        raise RuntimeError(f"odd mixed crossing sum {total}; component tracking is broken")
    return total // 2


@dataclass(frozen=True)
class GuaschiData:
    l: int
    full: LaurentPoly         # det(r(b) - I) in t1, t2
    specialized: LaurentPoly  # the same at t2 = 1
    base: LaurentPoly         # det(r(b_base) - I) in t1


def guaschi_data(s: TwoComponentSplit) -> GuaschiData:
    full = reduced_determinant(s.braid, s.coloring())
    special = full.substitute(2, 1)
    sub = delete_strands(s.braid, s.base)
    d = reduced_determinant(sub, Coloring.uniform(sub.n))
    if d.is_zero():
        raise IndeterminateError("det(r(base) - I) = 0")
    if special.is_zero():
        return GuaschiData(0, full, special, d)
    sign = -1 if (s.m - 1) % 2 else 1
    try:
        q = div_exact(special, d * sign)
    except NotDivisibleError:
        raise LinkingError(f"{special} is not a multiple of {d}; invalid split?") from None
    return GuaschiData(_match_power_minus_one(q), full, special, d)


def _match_power_minus_one(q: LaurentPoly) -> int:
    """Return l if q == t1^l - 1 with l != 0."""
    terms = dict(q.terms)
    if len(terms) != 2 or terms.pop((0,), None) != -1:
        raise LinkingError(f"quotient {q} is not of the form t1^l - 1")
    (e, c), = terms.items()
    if c != 1:
        raise LinkingError(f"quotient {q} is not of the form t1^l - 1")
    return e[0]


def lk_guaschi(s: TwoComponentSplit) -> int:
    return guaschi_data(s).l


def linking_number(s: TwoComponentSplit, method: str = "both") -> int:
    if method == "diagram":
        return lk_combinatorial(s)
    if method == "guaschi":
        return lk_guaschi(s)
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    a = lk_combinatorial(s)
    try:
        b = lk_guaschi(s)
    except IndeterminateError:
        log.warning("determinant formula indeterminate; using the crossing count")
        return a
    if a != b:
        raise MethodDisagreement(f"crossing count gives {a}, determinant formula gives {b}")
    return a


def linked_verdict(s: TwoComponentSplit) -> str:
    return LINKED if linking_number(s, "both") else INCONCLUSIVE
