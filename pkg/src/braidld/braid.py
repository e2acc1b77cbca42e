"""Braid words over the generators σ1, σ2, σ3, ...

A braid word is a finite sequence of signed integers: ``k`` stands for
σₖ (k ≥ 1) and ``-k`` for σₖ⁻¹, so ``BraidWord((1, 2, -1))`` is
σ1·σ2·σ1⁻¹.  Words are *not* equivalence classes: no braid relation and
no free cancellation is ever applied implicitly, because properties
like σₙ-positivity belong to a chosen written word.  Group-level
equality is decided in :mod:`braidld.action`.

>>> str(bracket(BraidWord((1,)), BraidWord()))
'1 1 -2'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        for k in letters:
            if not isinstance(k, int) or k == 0:
                raise ValueError(f"braid letter must be a nonzero integer, got {k!r}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        """Concatenation of words; no reduction of any kind."""
        return BraidWord(self.letters + other.letters)

    def __str__(self) -> str:
        return " ".join(str(k) for k in self.letters) if self.letters else "ε"

    def __repr__(self) -> str:
        return f"BraidWord({self.letters!r})"


EPSILON = BraidWord()


def sigma(i: int, sign: int = 1) -> BraidWord:
    """The one-letter word σᵢ (or σᵢ⁻¹ for sign -1)."""
    if i < 1:
        raise ValueError(f"generator index must be >= 1, got {i}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return BraidWord((i * sign,))


def shift(p: BraidWord, k: int = 1) -> BraidWord:
    """Raise every letter index by k ≥ 0 (the k-fold shift endomorphism)."""
    if k < 0:
        raise ValueError(f"shift amount must be >= 0, got {k}")
    return BraidWord(tuple(e + k if e > 0 else e - k for e in p.letters))


def reverse(p: BraidWord) -> BraidWord:
    """Letters in reverse order, signs unchanged (the antiautomorphism ξ on words)."""
    return BraidWord(p.letters[::-1])


def invert(p: BraidWord) -> BraidWord:
    """The inverse word: reversed letters with flipped signs."""
    return BraidWord(tuple(-e for e in reversed(p.letters)))


def bracket(p: BraidWord, q: BraidWord) -> BraidWord:
    """The left-distributive bracket p·s(q)·σ1·s(p)⁻¹, as a written word."""
    return p * shift(q, 1) * BraidWord((1,)) * invert(shift(p, 1))


def max_index(p: BraidWord) -> int:
    """Largest generator index occurring in p; 0 for the empty word."""
    return max((abs(e) for e in p.letters), default=0)


def strand_permutation(p: BraidWord) -> tuple[int, ...]:
    """The underlying permutation on strands 1..max_index+1.

    Entry i (0-based) is the strand, numbered by its starting position,
    that ends at position i+1.  This is the image of p in the symmetric
    group; a non-identity permutation certifies a non-trivial braid.
    """
    n = max_index(p) + 1
    perm = list(range(1, n + 1))
    for k in p.letters:
        i = abs(k)
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def linking_numbers(p: BraidWord) -> dict[tuple[int, int], int]:
    """Net signed crossing count for each pair of strands that crosses.

    Strands are numbered by starting position; only nonzero entries are
    returned.  The counts are invariant under both braid relations and
    free cancellation, so any nonzero entry certifies a non-trivial
    braid (for pure words they are twice the pairwise linking numbers).
    """
    n = max_index(p) + 1
    occupant = list(range(1, n + 1))
    counts: dict[tuple[int, int], int] = {}
    for k in p.letters:
        i = abs(k)
        a, c = occupant[i - 1], occupant[i]
        pair = (a, c) if a < c else (c, a)
        counts[pair] = counts.get(pair, 0) + (1 if k > 0 else -1)
        occupant[i - 1], occupant[i] = c, a
    return {pair: v for pair, v in counts.items() if v}


def free_cancel(p: BraidWord) -> BraidWord:
    """Explicit free reduction (cancel adjacent σᵢσᵢ⁻¹ pairs).

    Never called by any other operation in this package; apply it only
    when you deliberately want to pass to a shorter representative.
    """
    out: list[int] = []
    for e in p.letters:
        if out and out[-1] == -e:
            out.pop()
        else:
            out.append(e)
    return BraidWord(tuple(out))


@dataclass(frozen=True)
class PositiveDecomposition:
    """Witness p = p1·σₙ·p2 with p1 free of σₙ^{±1} and p2 free of σₙ⁻¹."""

    p1: BraidWord
    n: int
    p2: BraidWord

    def reassemble(self) -> BraidWord:
        return self.p1 * BraidWord((self.n,)) * self.p2


def sigma_decompose(p: BraidWord, n: int) -> Optional[PositiveDecomposition]:
    """Split p at its first σₙ if p is σₙ-positive, else ``None``.

    p is σₙ-positive when it contains at least one σₙ and no σₙ⁻¹.
    Splitting at the first occurrence guarantees p1 avoids σₙ entirely.
    """
    if n < 1:
        raise ValueError(f"generator index must be >= 1, got {n}")
    if -n in p.letters or n not in p.letters:
        return None
    i = p.letters.index(n)
    return PositiveDecomposition(BraidWord(p.letters[:i]), n, BraidWord(p.letters[i + 1:]))


def parse_braid(text: str) -> BraidWord:
    """Parse whitespace-separated signed integers; empty input is ε."""
    letters = []
    for token in text.split():
        try:
            k = int(token)
        except ValueError:
            raise ValueError(f"bad braid token {token!r}") from None
        if k == 0:
            raise ValueError("0 is not a braid letter")
        letters.append(k)
    return BraidWord(tuple(letters))


def parse_braid_tokens(tokens: Iterable[str]) -> BraidWord:
    return parse_braid(" ".join(tokens))
