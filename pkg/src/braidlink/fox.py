"""
Artin action, Fox calculus and the Magnus / link representations.

Free words are tuples of ``(generator, exponent)`` pairs over either the
x-basis x_1..x_n or the g-basis g_i = x_1 ... x_i. The coloring sends x_i to
the variable t_{color(i)}; ``abelianize`` is the composite of the quotient to
the link group and its abelianization, which is all the Magnus matrix needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .braid import BraidWord, closure_components, permutation
from .laurent import LaurentPoly, RingMatrix, determinant, mat_sub_identity

X_BASIS = "x"
G_BASIS = "g"


class ColoringError(ValueError):
    pass


class RepresentationError(RuntimeError):
    """An invariant of the representation failed; indicates a bug."""


@dataclass(frozen=True)
class FreeWord:
    letters: tuple[tuple[int, int], ...] = ()
    basis: str = X_BASIS

    def __post_init__(self):
        if self.basis not in (X_BASIS, G_BASIS):
            raise ValueError(f"unknown basis {self.basis!r}")
        object.__setattr__(self, "letters", reduce_word(self.letters))

    @classmethod
    def gen(cls, k: int, basis: str = X_BASIS, exp: int = 1) -> FreeWord:
        return cls(((k, exp),), basis)

    def __mul__(self, other: FreeWord) -> FreeWord:
        if self.basis != other.basis:
            raise ValueError("cannot multiply words over different bases")
        return FreeWord(self.letters + other.letters, self.basis)

    def inverse(self) -> FreeWord:
        return FreeWord(tuple((k, -e) for k, e in reversed(self.letters)), self.basis)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "".join(f"{self.basis}{k}" + ("^-1" if e < 0 else "") for k, e in self.letters)


def reduce_word(letters: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    stack: list[tuple[int, int]] = []
    for k, e in letters:
        if e not in (1, -1):
            raise ValueError(f"free word exponents must be +-1, got {e}")
        if stack and stack[-1] == (k, -e):
            stack.pop()
        else:
            stack.append((k, e))
    return tuple(stack)


def _invert(letters: Sequence[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    return tuple((k, -e) for k, e in reversed(letters))


@lru_cache(maxsize=None)
def _artin_images(i: int, sign: int) -> dict[int, tuple[tuple[int, int], ...]]:
    # x_i.s_i = x_i x_{i+1} x_i^-1,  x_{i+1}.s_i = x_i
    # x_i.s_i^-1 = x_{i+1},          x_{i+1}.s_i^-1 = x_{i+1}^-1 x_i x_{i+1}
    if sign > 0:
        return {i: ((i, 1), (i + 1, 1), (i, -1)), i + 1: ((i, 1),)}
    return {i: ((i + 1, 1),), i + 1: ((i + 1, -1), (i, 1), (i + 1, 1))}


def _substitute(letters, images) -> tuple[tuple[int, int], ...]:
    out: list[tuple[int, int]] = []
    for k, e in letters:
        img = images.get(k)
        if img is None:
            piece = ((k, e),)
        else:
            piece = img if e > 0 else _invert(img)
        for letter in piece:
            if out and out[-1] == (letter[0], -letter[1]):
                out.pop()
            else:
                out.append(letter)
    return tuple(out)


def artin_act(w: FreeWord, b: BraidWord) -> FreeWord:
    """Right action of ``b`` on an x-basis word, applied letter by letter."""
    if w.basis != X_BASIS:
        raise ValueError("artin_act expects an x-basis word")
    for k, _ in w.letters:
        if not 1 <= k <= b.n:
            raise IndexError(f"generator x{k} out of range for {b.n} strands")
    letters = w.letters
    for i, e in b.letters:
        letters = _substitute(letters, _artin_images(i, e))
    return FreeWord(letters, X_BASIS)


def change_basis(w: FreeWord) -> FreeWord:
    """x-basis <-> g-basis, with x_i = g_{i-1}^-1 g_i and g_i = x_1 ... x_i."""
    out: list[tuple[int, int]] = []
    if w.basis == X_BASIS:
        for k, e in w.letters:
            piece = ((k - 1, -1), (k, 1)) if k > 1 else ((1, 1),)
            out.extend(piece if e > 0 else _invert(piece))
        return FreeWord(tuple(out), G_BASIS)
    for k, e in w.letters:
        piece = tuple((i, 1) for i in range(1, k + 1))
        out.extend(piece if e > 0 else _invert(piece))
    return FreeWord(tuple(out), X_BASIS)


@dataclass(frozen=True)
class Coloring:
    """``colors[i-1]`` is the component index (1..nvars) of strand/generator i."""

    colors: tuple[int, ...]
    nvars: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if set(self.colors) != set(range(1, self.nvars + 1)):
            raise ColoringError(
                f"coloring {self.colors} must attain every index 1..{self.nvars}")

    @property
    def n(self) -> int:
        return len(self.colors)

    @classmethod
    def uniform(cls, n: int) -> Coloring:
        return cls((1,) * n, 1)

    @classmethod
    def from_sets(cls, sets: Sequence[Iterable[int]], n: int) -> Coloring:
        """Color the strands in ``sets[j]`` with t_{j+1}."""
        colors = [0] * n
        for j, s in enumerate(sets, 1):
            for strand in s:
                if colors[strand - 1]:
                    raise ColoringError(f"strand {strand} appears in two color classes")
                colors[strand - 1] = j
        if 0 in colors:
            raise ColoringError("every strand needs a color")
        return cls(tuple(colors), len(sets))

    @classmethod
    def of_closure(cls, b: BraidWord) -> Coloring:
        return cls.from_sets(closure_components(b), b.n)

    def exponent_vector(self, x_exponents: Sequence[int]) -> tuple[int, ...]:
        out = [0] * self.nvars
        for i, e in enumerate(x_exponents):
            out[self.colors[i] - 1] += e
        return tuple(out)


def x_exponent_sums(w: FreeWord, n: int) -> list[int]:
    sums = [0] * n
    for k, e in w.letters:
        if w.basis == X_BASIS:
            sums[k - 1] += e
        else:
            for i in range(k):
                sums[i] += e
    return sums


def abelianize(w: FreeWord, c: Coloring) -> LaurentPoly:
    """The monomial image of ``w`` under x_i -> t_{c(i)}."""
    for k, _ in w.letters:
        if not 1 <= k <= c.n:
            raise IndexError(f"generator {k} out of range for {c.n} strands")
    return LaurentPoly.monomial(c.exponent_vector(x_exponent_sums(w, c.n)))


def _g_exponents(c: Coloring) -> list[tuple[int, ...]]:
    """Exponent vectors of abelianize(g_k), index k-1."""
    acc = [0] * c.nvars
    out = []
    for col in c.colors:
        acc[col - 1] += 1
        out.append(tuple(acc))
    return out


def fox_derivative(w: FreeWord, j: int, c: Coloring) -> LaurentPoly:
    """Abelianized Fox derivative of a g-basis word with respect to g_j."""
    if w.basis != G_BASIS:
        raise ValueError("fox_derivative expects a g-basis word")
    if not 1 <= j <= c.n:
        raise IndexError(f"g{j} out of range for {c.n} generators")
    return _fox_row(w.letters, c)[j - 1]


def _fox_row(letters, c: Coloring) -> list[LaurentPoly]:
    """All abelianized derivatives d/dg_1 .. d/dg_n of a g-basis word at once."""
    gexp = _g_exponents(c)
    acc: list[dict[tuple[int, ...], int]] = [dict() for _ in range(c.n)]
    prefix = [0] * c.nvars
    for k, e in letters:
        g = gexp[k - 1]
        if e > 0:
            key = tuple(prefix)
            d = acc[k - 1]
            d[key] = d.get(key, 0) + 1
            for idx in range(c.nvars):
                prefix[idx] += g[idx]
        else:
            for idx in range(c.nvars):
                prefix[idx] -= g[idx]
            key = tuple(prefix)
            d = acc[k - 1]
            d[key] = d.get(key, 0) - 1
    return [LaurentPoly(d, c.nvars) for d in acc]


def check_coloring(b: BraidWord, c: Coloring) -> None:
    if c.n != b.n:
        raise ColoringError(f"coloring has {c.n} strands, braid has {b.n}")
    if c.nvars == 1:
        return
    perm = permutation(b)
    for s in range(1, b.n + 1):
        if c.colors[s - 1] != c.colors[perm(s) - 1]:
            raise ColoringError(
                "coloring is not constant on the closure components of the braid")


def magnus_matrix(b: BraidWord, c: Coloring | None = None) -> RingMatrix:
    """R(b)_{ij} = abelianized d(g_i . b)/dg_j."""
    if c is None:
        c = Coloring.uniform(b.n)
    check_coloring(b, c)
    rows = []
    for i in range(1, b.n + 1):
        image = artin_act(change_basis(FreeWord.gen(i, G_BASIS)), b)
        rows.append(_fox_row(change_basis(image).letters, c))
    return RingMatrix(rows, c.nvars)


def magnus_matrix_by_letters(b: BraidWord, c: Coloring | None = None) -> RingMatrix:
    """Same matrix as ``magnus_matrix`` via the chain rule, one letter at a time.

    The factor for letter k is abelianized with the coloring pulled back
    through the suffix after it, since Phi(phi_w(u)) colors x_i by where the
    strand starting at i ends in w.
    """
    if c is None:
        c = Coloring.uniform(b.n)
    check_coloring(b, c)
    n = b.n
    # suffix_colors[k]: color of each position just before letter k, i.e. the
    # color of wherever that position's occupant ends up
    suffix_colors = [None] * (len(b) + 1)
    cur = list(c.colors)
    suffix_colors[len(b)] = tuple(cur)
    for k in range(len(b) - 1, -1, -1):
        i, _ = b.letters[k]
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
        suffix_colors[k] = tuple(cur)
    result = RingMatrix.identity(n, c.nvars)
    for k, (i, e) in enumerate(b.letters):
        local = Coloring(suffix_colors[k + 1], c.nvars)
        step = BraidWord(n, ((i, e),))
        rows = []
        for r in range(1, n + 1):
            image = artin_act(change_basis(FreeWord.gen(r, G_BASIS)), step)
            rows.append(_fox_row(change_basis(image).letters, local))
        result = result @ RingMatrix(rows, c.nvars)
    return result


def link_rep(b: BraidWord, c: Coloring | None = None) -> RingMatrix:
    """Top-left (n-1)x(n-1) block of the Magnus matrix."""
    big = magnus_matrix(b, c)
    return _strip_last(big)


def _strip_last(big: RingMatrix) -> RingMatrix:
    n = big.rows
    one = LaurentPoly.one(big.nvars)
    last = big.row(n - 1)
    if any(not x.is_zero() for x in last[:-1]) or last[-1] != one:
        raise RepresentationError(f"bottom row of the Magnus matrix is not (0,...,0,1): {last}")
    return big.block(n - 1, n - 1)


def reduced_determinant(b: BraidWord, c: Coloring | None = None) -> LaurentPoly:
    """det(r(b) - I)."""
    return determinant(mat_sub_identity(link_rep(b, c)))


def lefschetz(b: BraidWord) -> LaurentPoly:
    """Generalized Lefschetz number -Tr r(b), colored by the closure components."""
    from .braid import free_cancel
    if not free_cancel(b).letters:
        raise ValueError("the Lefschetz number is only defined for a nontrivial braid")
    c = Coloring.of_closure(b)
    big = magnus_matrix(b, c)
    small = _strip_last(big)
    value = -small.trace()
    if value != 1 - big.trace():
        raise RepresentationError("1 - Tr R(b) and -Tr r(b) disagree")
    return value
