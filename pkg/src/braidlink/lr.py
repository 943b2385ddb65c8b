"""
L-R words for non-finite-order 3-braid types and Handel's forcing order.

A word over {L, R} (L = s1, R = s2^-1) is read cyclically; its canonical form
is the lexicographically least rotation. Between pseudo-Anosov types, w
forces v iff v is a subsequence of some rotation of w, up to rotating v.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .braid import BraidWord


class LRError(ValueError):
    pass


def least_rotation(s: str) -> str:
    return min(s[i:] + s[:i] for i in range(len(s)))


def rotations(s: str) -> list[str]:
    return [s[i:] + s[:i] for i in range(len(s))]


@dataclass(frozen=True, order=True)
class LRWord:
    letters: str

    def __post_init__(self):
        s = self.letters.upper()
        if not s:
            raise LRError("an L-R word must be nonempty")
        bad = set(s) - {"L", "R"}
        if bad:
            raise LRError(f"invalid L-R letters {sorted(bad)}")
        object.__setattr__(self, "letters", least_rotation(s))

    def __str__(self) -> str:
        return self.letters

    def __len__(self) -> int:
        return len(self.letters)


def parse_lr(text: str) -> LRWord:
    return LRWord(text.strip())


def is_pseudo_anosov(w: LRWord) -> bool:
    return "L" in w.letters and "R" in w.letters


def to_braid(w: LRWord) -> BraidWord:
    return BraidWord(3, tuple((1, 1) if ch == "L" else (2, -1) for ch in w.letters))


def _require_pa(*words: LRWord) -> None:
    for w in words:
        if not is_pseudo_anosov(w):
            raise LRError(f"{w} is not pseudo-Anosov (needs both L and R)")


def is_subsequence(small: str, big: str) -> bool:
    it = iter(big)
    return all(ch in it for ch in small)


def forces(w: LRWord, v: LRWord) -> bool:
    _require_pa(w, v)
    if len(v) > len(w):
        return False
    return any(is_subsequence(vr, wr) for wr in rotations(w.letters)
               for vr in rotations(v.letters))


def forced_set(w: LRWord) -> set[LRWord]:
    """Every canonical pseudo-Anosov word forced by ``w``, including ``w``."""
    _require_pa(w)
    found: set[str] = set()
    n = len(w)
    for wr in set(rotations(w.letters)):
        for mask in range(1, 1 << n):
            sub = "".join(ch for k, ch in enumerate(wr) if mask >> k & 1)
            if "L" in sub and "R" in sub:
                found.add(least_rotation(sub))
    return {LRWord(s) for s in found}


def forced_set_bruteforce(w: LRWord) -> set[LRWord]:
    """Candidate-driven check: enumerate index subsets of each rotation per candidate."""
    _require_pa(w)
    from itertools import product
    out = set()
    text = w.letters
    for k in range(2, len(text) + 1):
        for letters in product("LR", repeat=k):
            cand = "".join(letters)
            if cand != least_rotation(cand) or "L" not in cand or "R" not in cand:
                continue
            hit = False
            for start in range(len(text)):
                rot = text[start:] + text[:start]
                for idx in combinations(range(len(rot)), k):
                    picked = "".join(rot[i] for i in idx)
                    if least_rotation(picked) == cand:
                        hit = True
                        break
                if hit:
                    break
            if hit:
                out.add(LRWord(cand))
    return out
