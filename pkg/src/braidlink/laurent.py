"""
Exact Laurent polynomials over the integers and matrices over them.

A ``LaurentPoly`` in ``nvars`` variables t1, ..., tk is stored as a dict
mapping exponent tuples (entries may be negative) to nonzero Python ints.
Two polynomials are equal iff their term dicts are equal.

Determinants use fraction-free Bareiss elimination; the exact divisions it
needs are done by ``div_exact``, which clears the minimal monomial of both
operands and runs ordinary multivariate division in lex order.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Mapping, Sequence, Union


class LaurentError(ArithmeticError):
    pass


class NotDivisibleError(LaurentError):
    pass


class DimensionError(ValueError):
    pass


Exponent = tuple[int, ...]
Scalar = Union[int, "LaurentPoly"]


def _add_vec(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def _sub_vec(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


class LaurentPoly:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None, nvars: int = 1):
        self.nvars = nvars
        clean: dict[Exponent, int] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise DimensionError(f"exponent {exp} does not have {nvars} entries")
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: int, nvars: int = 1) -> LaurentPoly:
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def zero(cls, nvars: int = 1) -> LaurentPoly:
        return cls({}, nvars)

    @classmethod
    def one(cls, nvars: int = 1) -> LaurentPoly:
        return cls.const(1, nvars)

    @classmethod
    def monomial(cls, exp: Sequence[int], c: int = 1) -> LaurentPoly:
        return cls({tuple(exp): c}, len(exp))

    @classmethod
    def var(cls, k: int, nvars: int, power: int = 1) -> LaurentPoly:
        """The monomial t_k^power; ``k`` is 1-based."""
        if not 1 <= k <= nvars:
            raise IndexError(f"variable t{k} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[k - 1] = power
        return cls.monomial(exp)

    # -- basic protocol -----------------------------------------------------

    def _coerce(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise DimensionError(
                    f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.nvars)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == ({(0,) * self.nvars: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: Scalar) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other: Scalar) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: Scalar) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_vec(e1, e2)
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return LaurentPoly._raw(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            inv = self.unit_inverse()
            return inv ** (-k)
        result = LaurentPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @classmethod
    def _raw(cls, terms: dict[Exponent, int], nvars: int) -> LaurentPoly:
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # -- structure ----------------------------------------------------------

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def unit_inverse(self) -> LaurentPoly:
        """Inverse of a unit, i.e. of a monomial with coefficient +-1."""
        if len(self.terms) != 1:
            raise NotDivisibleError(f"{self} is not a unit")
        (e, c), = self.terms.items()
        if c not in (1, -1):
            raise NotDivisibleError(f"{self} is not a unit")
        return LaurentPoly._raw({tuple(-x for x in e): c}, self.nvars)

    def min_exponents(self) -> Exponent:
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(col) for col in zip(*self.terms))

    def shift(self, exp: Sequence[int]) -> LaurentPoly:
        """Multiply by the monomial with exponent vector ``exp``."""
        exp = tuple(exp)
        return LaurentPoly._raw({_add_vec(e, exp): c for e, c in self.terms.items()},
                                self.nvars)

    def leading_term(self) -> tuple[Exponent, int]:
        e = max(self.terms)
        return e, self.terms[e]

    def coefficient(self, exp: Sequence[int]) -> int:
        return self.terms.get(tuple(exp), 0)

    def substitute(self, k: int, value: Scalar) -> LaurentPoly:
        """Substitute t_k := value, returning a polynomial in nvars - 1 variables.

        ``value`` is an int or a LaurentPoly in the remaining variables
        (renumbered consecutively). Negative powers need ``value`` to be a unit.
        """
        if not 1 <= k <= self.nvars:
            raise IndexError(f"variable t{k} out of range for {self.nvars} variables")
        rest = self.nvars - 1
        if isinstance(value, int):
            value = LaurentPoly.const(value, rest)
        elif value.nvars != rest:
            raise DimensionError(f"substituted value must have {rest} variables")
        powers: dict[int, LaurentPoly] = {}
        out = LaurentPoly.zero(rest)
        for e, c in self.terms.items():
            p = e[k - 1]
            if p not in powers:
                powers[p] = value ** p
            out = out + powers[p].shift(e[:k - 1] + e[k:]) * c
        return out

    def evaluate(self, point: Sequence) -> object:
        """Numerically evaluate at ``point`` (ints become Fractions on negative powers)."""
        from fractions import Fraction
        total = 0
        for e, c in self.terms.items():
            term = Fraction(c)
            for x, k in zip(point, e):
                term *= Fraction(x) ** k
            total += term
        return total

    # -- display ------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        # graded by total |exponent|, positive powers before negative ones
        return sorted(self.terms.items(),
                      key=lambda ec: (sum(map(abs, ec[0])), tuple(-x for x in ec[0])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = []
            for i, k in enumerate(e, 1):
                if k == 1:
                    mono.append(f"t{i}")
                elif k:
                    mono.append(f"t{i}^{k}")
            body = "*".join(mono)
            if not body:
                s = str(abs(c))
            elif abs(c) == 1:
                s = body
            else:
                s = f"{abs(c)}*{body}"
            parts.append(("-" if c < 0 else "+", s))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, s in parts[1:]:
            out += f" {sign} {s}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r}, nvars={self.nvars})"


_TERM_RE = re.compile(r"([+-]?)\s*(\d+)?\s*\*?\s*((?:t\d+(?:\^-?\d+)?\*?)*)")


def parse_laurent(text: str, nvars: int) -> LaurentPoly:
    """Parse the textual form produced by ``str(LaurentPoly)``."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return LaurentPoly.zero(nvars)
    out = LaurentPoly.zero(nvars)
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse Laurent polynomial {text!r}")
        sign, coeff, mono = m.groups()
        if not coeff and not mono:
            raise ValueError(f"cannot parse Laurent polynomial {text!r}")
        c = int(coeff) if coeff else 1
        if sign == "-":
            c = -c
        exp = [0] * nvars
        for var, power in re.findall(r"t(\d+)(?:\^(-?\d+))?", mono):
            idx = int(var)
            if not 1 <= idx <= nvars:
                raise ValueError(f"variable t{idx} out of range in {text!r}")
            exp[idx - 1] += int(power) if power else 1
        out = out + LaurentPoly.monomial(exp, c)
        pos = m.end()
    return out


def div_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return q with a == q * b, or raise NotDivisibleError."""
    if a.nvars != b.nvars:
        raise DimensionError(f"variable count mismatch: {a.nvars} vs {b.nvars}")
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return LaurentPoly.zero(a.nvars)
    if b.is_monomial():
        (e, c), = b.terms.items()
        out = {}
        for ea, ca in a.terms.items():
            qc, r = divmod(ca, c)
            if r:
                raise NotDivisibleError(f"{a} is not divisible by {b}")
            out[_sub_vec(ea, e)] = qc
        return LaurentPoly._raw(out, a.nvars)

    # Both shifted into honest polynomials; b no longer has a monomial factor,
    # so any exact Laurent quotient is a polynomial quotient up to the shift.
    ma, mb = a.min_exponents(), b.min_exponents()
    rem = dict(a.shift([-x for x in ma]).terms)
    bp = b.shift([-x for x in mb])
    lead_e, lead_c = bp.leading_term()
    q: dict[Exponent, int] = {}
    while rem:
        e = max(rem)
        c = rem[e]
        d = _sub_vec(e, lead_e)
        if min(d) < 0:
            raise NotDivisibleError(f"{a} is not divisible by {b}")
        qc, r = divmod(c, lead_c)
        if r:
            raise NotDivisibleError(f"{a} is not divisible by {b}")
        q[d] = qc
        for eb, cb in bp.terms.items():
            k = _add_vec(d, eb)
            v = rem.get(k, 0) - qc * cb
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return LaurentPoly._raw(q, a.nvars).shift(_sub_vec(ma, mb))


# -- matrices -------------------------------------------------------------------


class RingMatrix:
    """A dense rectangular matrix of LaurentPoly entries sharing one nvars."""

    __slots__ = ("rows", "cols", "nvars", "entries")

    def __init__(self, entries: Sequence[Sequence[Scalar]], nvars: int | None = None):
        rows = [list(r) for r in entries]
        if nvars is None:
            nvars = next((x.nvars for r in rows for x in r if isinstance(x, LaurentPoly)), 1)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise DimensionError("matrix rows have different lengths")
        self.nvars = nvars
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        self.entries = [[_lift(x, nvars) for x in r] for r in rows]

    @classmethod
    def identity(cls, n: int, nvars: int = 1) -> RingMatrix:
        one, zero = LaurentPoly.one(nvars), LaurentPoly.zero(nvars)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], nvars)

    @classmethod
    def zeros(cls, rows: int, cols: int, nvars: int = 1) -> RingMatrix:
        zero = LaurentPoly.zero(nvars)
        return cls([[zero] * cols for _ in range(rows)], nvars)

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> list[LaurentPoly]:
        return list(self.entries[i])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def __matmul__(self, other: RingMatrix) -> RingMatrix:
        return mat_mul(self, other)

    def __sub__(self, other: RingMatrix) -> RingMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("matrix dimensions differ")
        return RingMatrix([[a - b for a, b in zip(r1, r2)]
                           for r1, r2 in zip(self.entries, other.entries)], self.nvars)

    def block(self, rows: int, cols: int) -> RingMatrix:
        """Top-left ``rows`` x ``cols`` block."""
        return RingMatrix([r[:cols] for r in self.entries[:rows]], self.nvars)

    def trace(self) -> LaurentPoly:
        if self.rows != self.cols:
            raise DimensionError("trace of a non-square matrix")
        total = LaurentPoly.zero(self.nvars)
        for i in range(self.rows):
            total = total + self.entries[i][i]
        return total

    def map(self, fn) -> RingMatrix:
        return RingMatrix([[fn(x) for x in r] for r in self.entries])

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.entries]

    def __repr__(self) -> str:
        return f"RingMatrix({self.to_strings()!r})"


def _lift(x: Scalar, nvars: int) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        if x.nvars != nvars:
            raise DimensionError("matrix entries must share one variable count")
        return x
    return LaurentPoly.const(x, nvars)


def mat_mul(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    if a.nvars != b.nvars:
        raise DimensionError("variable count mismatch")
    zero = LaurentPoly.zero(a.nvars)
    out = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            s = zero
            for k in range(a.cols):
                x = a.entries[i][k]
                if x.terms:
                    y = b.entries[k][j]
                    if y.terms:
                        s = s + x * y
            row.append(s)
        out.append(row)
    return RingMatrix(out, a.nvars)


def mat_sub_identity(a: RingMatrix) -> RingMatrix:
    if a.rows != a.cols:
        raise DimensionError("A - I needs a square matrix")
    return a - RingMatrix.identity(a.rows, a.nvars)


def determinant(m: RingMatrix) -> LaurentPoly:
    """Bareiss fraction-free elimination with row pivoting."""
    if m.rows != m.cols:
        raise DimensionError(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return LaurentPoly.one(m.nvars)
    a = [list(r) for r in m.entries]
    sign = 1
    prev = LaurentPoly.one(m.nvars)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return LaurentPoly.zero(m.nvars)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = div_exact(pivot * a[i][j] - a[i][k] * a[k][j], prev)
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def determinant_cofactor(m: RingMatrix) -> LaurentPoly:
    """Laplace expansion along the first row; only for small matrices."""
    if m.rows != m.cols:
        raise DimensionError(f"determinant of a {m.rows}x{m.cols} matrix")

    def rec(rows: tuple[int, ...], cols: tuple[int, ...]) -> LaurentPoly:
        if not rows:
            return LaurentPoly.one(m.nvars)
        r = rows[0]
        total = LaurentPoly.zero(m.nvars)
        for idx, c in enumerate(cols):
            x = m.entries[r][c]
            if x.is_zero():
                continue
            minor = rec(rows[1:], cols[:idx] + cols[idx + 1:])
            term = x * minor
            total = total - term if idx % 2 else total + term
        return total

    return rec(tuple(range(m.rows)), tuple(range(m.cols)))


def determinant_leibniz(m: RingMatrix) -> LaurentPoly:
    """Sum over permutations; a third route used only in tests for tiny n."""
    n = m.rows
    total = LaurentPoly.zero(m.nvars)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = LaurentPoly.const(-1 if inversions % 2 else 1, m.nvars)
        for i, j in enumerate(perm):
            term = term * m.entries[i][j]
        total = total + term
    return total


def product(polys: Iterable[LaurentPoly], nvars: int = 1) -> LaurentPoly:
    out = LaurentPoly.one(nvars)
    for p in polys:
        out = out * p
    return out
