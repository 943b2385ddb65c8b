"""
Braid words, their permutations, closures and sub-braids.

Letters act left to right (top to bottom in a diagram, t=0 to t=1).
Strands are named by their starting position; a ``Permutation`` sends the
strand starting at position ``s`` to the position where it ends.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class BraidError(ValueError):
    pass


Letter = tuple[int, int]  # (index i, sign) for sigma_i^sign


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise BraidError(f"strand count must be >= 1, got {self.n}")
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        for i, e in letters:
            if not 1 <= i <= self.n - 1:
                raise BraidError(f"generator index {i} out of range for {self.n} strands")
            if e not in (1, -1):
                raise BraidError(f"letter sign must be +1 or -1, got {e}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_ints(cls, ints: Iterable[int], n: int) -> BraidWord:
        return cls(n, tuple((abs(k), 1 if k > 0 else -1) for k in ints))

    def to_ints(self) -> list[int]:
        return [i * e for i, e in self.letters]

    def __str__(self) -> str:
        return " ".join(map(str, self.to_ints()))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, tuple((i, -e) for i, e in reversed(self.letters)))

    def pretty(self) -> str:
        if not self.letters:
            return "1"
        return "".join(f"s{i}" if e > 0 else f"s{i}^-1" for i, e in self.letters)


def parse_braid(text: str, n: int) -> BraidWord:
    """Parse ``"1 -2 -3"`` (spaces and/or commas) into a BraidWord on ``n`` strands."""
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    ints = []
    for tok in tokens:
        try:
            k = int(tok)
        except ValueError:
            raise BraidError(f"malformed braid token {tok!r}") from None
        if k == 0:
            raise BraidError("braid letters must be nonzero integers")
        if abs(k) > n - 1:
            raise BraidError(f"generator {k} out of range for {n} strands")
        ints.append(k)
    return BraidWord.from_ints(ints, n)


@dataclass(frozen=True)
class Permutation:
    """``image[s-1]`` is where strand ``s`` ends up; positions are 1-based."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise BraidError(f"{self.image} is not a permutation of 1..{len(self.image)}")

    @property
    def n(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __call__(self, s: int) -> int:
        return self.image[s - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other``."""
        return Permutation(tuple(other(self(s)) for s in range(1, self.n + 1)))

    def cycles(self) -> list[frozenset[int]]:
        seen: set[int] = set()
        out = []
        for s in range(1, self.n + 1):
            if s in seen:
                continue
            cyc = []
            x = s
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self(x)
            out.append(frozenset(cyc))
        return out

    def is_identity(self) -> bool:
        return self.image == tuple(range(1, self.n + 1))


def strand_trace(b: BraidWord) -> Iterator[tuple[int, int, int, int]]:
    """Yield ``(i, sign, left_strand, right_strand)`` for each letter of ``b``.

    ``left_strand``/``right_strand`` name the strands at positions i and i+1
    just before the crossing.
    """
    at = list(range(1, b.n + 1))  # at[p-1] = strand occupying position p
    for i, e in b.letters:
        left, right = at[i - 1], at[i]
        yield i, e, left, right
        at[i - 1], at[i] = right, left


def final_positions(b: BraidWord) -> list[int]:
    """Strand names occupying positions 1..n after the whole word."""
    at = list(range(1, b.n + 1))
    for i, _ in b.letters:
        at[i - 1], at[i] = at[i], at[i - 1]
    return at


def permutation(b: BraidWord) -> Permutation:
    at = final_positions(b)
    image = [0] * b.n
    for pos, strand in enumerate(at, 1):
        image[strand - 1] = pos
    return Permutation(tuple(image))


def is_cyclic(b: BraidWord) -> bool:
    return len(permutation(b).cycles()) == 1


def closure_components(b: BraidWord) -> list[frozenset[int]]:
    """Cycles of the permutation, ordered by smallest member."""
    return sorted(permutation(b).cycles(), key=min)


def _check_keep(b: BraidWord, keep: Iterable[int]) -> frozenset[int]:
    keep = frozenset(keep)
    if not keep:
        raise BraidError("cannot keep an empty set of strands")
    if not keep <= set(range(1, b.n + 1)):
        raise BraidError(f"strands {sorted(keep)} not all in 1..{b.n}")
    perm = permutation(b)
    if any(perm(s) not in keep for s in keep):
        raise BraidError(f"strands {sorted(keep)} are not a union of closure components")
    return keep


def delete_strands(b: BraidWord, keep: Iterable[int]) -> BraidWord:
    """The sub-braid on the strands ``keep`` (a union of permutation cycles)."""
    keep = _check_keep(b, keep)
    at = list(range(1, b.n + 1))
    out = []
    for i, e in b.letters:
        left, right = at[i - 1], at[i]
        if left in keep and right in keep:
            rank = sum(1 for s in at[:i] if s in keep)
            out.append((rank, e))
        at[i - 1], at[i] = right, left
    return BraidWord(len(keep), tuple(out))


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.n != b.n:
        raise BraidError(f"strand count mismatch: {a.n} vs {b.n}")
    return BraidWord(a.n, a.letters + b.letters)


def free_cancel(b: BraidWord) -> BraidWord:
    stack: list[Letter] = []
    for i, e in b.letters:
        if stack and stack[-1] == (i, -e):
            stack.pop()
        else:
            stack.append((i, e))
    return BraidWord(b.n, tuple(stack))


def conjugate(b: BraidWord, c: BraidWord) -> BraidWord:
    """``c^-1 b c``."""
    return compose(compose(c.inverse(), b), c)


def random_braid(rng, n: int, length: int) -> BraidWord:
    if n < 2:
        return BraidWord(n)
    return BraidWord(n, tuple((rng.randint(1, n - 1), rng.choice((1, -1)))
                              for _ in range(length)))


def strand_sets_text(sets: Sequence[Iterable[int]]) -> list[list[int]]:
    return [sorted(s) for s in sets]
