"""The braid action on free groups, and the deciders built on it.

σᵢ acts as an automorphism of the free group on g0, g1, g2, ... by

    (gᵢ)σᵢ   = gᵢ·gᵢ₊₁·gᵢ⁻¹      (gᵢ)σᵢ⁻¹   = gᵢ₊₁
    (gᵢ₊₁)σᵢ = gᵢ               (gᵢ₊₁)σᵢ⁻¹ = gᵢ₊₁⁻¹·gᵢ·gᵢ₊₁
    (gⱼ)σᵢ   = gⱼ  otherwise    (gⱼ)σᵢ⁻¹   = gⱼ  otherwise

(g0 is never moved).  Transporting along the isomorphism φ: xᵢ ↦
g0·g1·…·gᵢ gives the action on the x-alphabet, where only one
generator moves:

    (xᵢ)σᵢ = xᵢ₊₁·xᵢ⁻¹·xᵢ₋₁     (xᵢ)σᵢ⁻¹ = xᵢ₋₁·xᵢ⁻¹·xᵢ₊₁

Braid letters act left to right: (f)pq = ((f)p)q.  The image word is
freely reduced after every braid letter; a reduced intermediate longer
than ``ActionConfig.max_word_length`` raises
:class:`~braidld.errors.WordCapExceeded` (the action can grow words
exponentially).

The action is faithful, which makes ``braid_is_identity`` a decision
procedure for braid-word triviality and ``braid_equal`` one for
group-level equality of words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .braid import BraidWord, invert, linking_numbers, max_index, strand_permutation
from .errors import AlphabetMismatch, PositionOutOfRange, WordCapExceeded
from .freegroup import FreeWord, reduce_packed


@dataclass(frozen=True)
class ActionConfig:
    """Resource limit for action computations."""

    max_word_length: int = 1_000_000

    def __post_init__(self):
        if self.max_word_length < 1:
            raise ValueError(f"max_word_length must be >= 1, got {self.max_word_length}")


DEFAULT_CONFIG = ActionConfig()


def _require(f: FreeWord, alphabet: str) -> FreeWord:
    if f.alphabet != alphabet:
        raise AlphabetMismatch(f"expected a {alphabet!r}-word, got a {f.alphabet!r}-word")
    return f


def _substitute(word: list[int], table: dict[int, tuple[int, ...]], cap: int) -> list[int]:
    """Apply a letterwise substitution and freely reduce, in one stack pass."""
    out: list[int] = []
    get = table.get
    for e in word:
        ims = get(e)
        if ims is None:
            if out and out[-1] == -e:
                out.pop()
            else:
                out.append(e)
        else:
            for im in ims:
                if out and out[-1] == -im:
                    out.pop()
                else:
                    out.append(im)
    if len(out) > cap:
        raise WordCapExceeded(len(out), cap)
    return out


def _g_table(k: int) -> dict[int, tuple[int, ...]]:
    # Packed letters: g_i is i+1, its inverse -(i+1).
    i = abs(k)
    a, b = i + 1, i + 2
    if k > 0:
        return {a: (a, b, -a), -a: (a, -b, -a), b: (a,), -b: (-a,)}
    return {a: (b,), -a: (-b,), b: (-b, a, b), -b: (-b, -a, b)}


def _x_table(k: int) -> dict[int, tuple[int, ...]]:
    i = abs(k)
    a = i + 1
    if k > 0:
        return {a: (i + 2, -a, i), -a: (-i, a, -(i + 2))}
    return {a: (i, -a, i + 2), -a: (-(i + 2), a, -i)}


def act_g(f: FreeWord, p: BraidWord, cfg: ActionConfig = DEFAULT_CONFIG) -> FreeWord:
    """Act the braid word p on a reduced g-word, letter by letter."""
    _require(f, "g")
    word = list(f.enc)
    cap = cfg.max_word_length
    for k in p.letters:
        word = _substitute(word, _g_table(k), cap)
    return FreeWord("g", tuple(word))


def act_x(f: FreeWord, p: BraidWord, cfg: ActionConfig = DEFAULT_CONFIG) -> FreeWord:
    """Act the braid word p on a reduced x-word; equals phi_inv∘act_g∘phi."""
    _require(f, "x")
    word = list(f.enc)
    cap = cfg.max_word_length
    for k in p.letters:
        word = _substitute(word, _x_table(k), cap)
    return FreeWord("x", tuple(word))


def phi(f: FreeWord) -> FreeWord:
    """The isomorphism F_X → F_G sending xᵢ to the product g0·g1·…·gᵢ."""
    _require(f, "x")
    out: list[int] = []
    for e in f.enc:
        i = abs(e) - 1
        images = range(1, i + 2) if e > 0 else range(-(i + 1), 0)
        for im in images:
            if out and out[-1] == -im:
                out.pop()
            else:
                out.append(im)
    return FreeWord("g", tuple(out))


def phi_inv(f: FreeWord) -> FreeWord:
    """The inverse isomorphism: g0 ↦ x0 and gᵢ₊₁ ↦ xᵢ⁻¹·xᵢ₊₁."""
    _require(f, "g")
    out: list[int] = []
    for e in f.enc:
        i = abs(e) - 1
        if i == 0:
            images = (1,) if e > 0 else (-1,)
        else:
            images = (-i, i + 1) if e > 0 else (-(i + 1), i)
        for im in images:
            if out and out[-1] == -im:
                out.pop()
            else:
                out.append(im)
    return FreeWord("x", tuple(out))


# Image lengths vary wildly between generators, so the decider scans
# them at increasing caps: a single moved generator settles the answer
# False even when other generators' images are astronomically long.
_PROBE_CAPS = (4096, 65536)


def braid_is_identity(p: BraidWord, cfg: ActionConfig = DEFAULT_CONFIG) -> bool:
    """Decide whether the word p represents the trivial braid.

    A word of maximal index M fixes every gⱼ with j > M+1 letterwise
    (and g0), so checking g1..g_{M+1} is complete; soundness is the
    faithfulness of the action.  Returns False as soon as one generator
    is certified moved, True once every generator is certified fixed,
    and raises :class:`WordCapExceeded` only if neither happens within
    ``cfg.max_word_length``.

    Two linear-time certificates run first: a non-identity strand
    permutation or a nonzero crossing count means some generator is
    moved (the permutation is exactly how the action permutes the
    abelianisation), so the word can be rejected without computing
    image words at all.
    """
    m = max_index(p)
    if strand_permutation(p) != tuple(range(1, m + 2)):
        return False
    if linking_numbers(p):
        return False
    pending = list(range(1, m + 2))
    caps = [c for c in _PROBE_CAPS if c < cfg.max_word_length]
    caps.append(cfg.max_word_length)
    last_exc: WordCapExceeded | None = None
    for cap in caps:
        undecided = []
        for j in pending:
            word = [j + 1]
            try:
                for k in p.letters:
                    word = _substitute(word, _g_table(k), cap)
            except WordCapExceeded as exc:
                last_exc = exc
                undecided.append(j)
                continue
            if word != [j + 1]:
                return False
        if not undecided:
            return True
        pending = undecided
    assert last_exc is not None
    raise last_exc


def braid_equal(p: BraidWord, q: BraidWord, cfg: ActionConfig = DEFAULT_CONFIG) -> bool:
    """Decide whether two braid words represent the same group element."""
    return braid_is_identity(p * invert(q), cfg)


def leans_right_at(f: FreeWord, n: int) -> bool:
    """True iff the reduced x-word begins with xₘ or with xₙ·xₘ⁻¹, m > n.

    This is the invariant preserved by every braid letter except σₙ⁻¹.
    """
    _require(f, "x")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if not f.enc:
        return False
    first = f.enc[0]
    if first <= 0:
        return False
    m = first - 1
    if m > n:
        return True
    if m == n and len(f.enc) > 1 and f.enc[1] < 0:
        return -f.enc[1] - 1 > n
    return False


def act_conj_sequence(fs: Sequence[FreeWord], p: BraidWord,
                      cfg: ActionConfig = DEFAULT_CONFIG) -> tuple[FreeWord, ...]:
    """Act p on a finite tuple of g-words under the conjugation bracket.

    σᵢ sends the pair at positions (i, i+1) to (aᵢ·aᵢ₊₁·aᵢ⁻¹, aᵢ) and
    σᵢ⁻¹ sends it to (aᵢ₊₁, aᵢ₊₁⁻¹·aᵢ·aᵢ₊₁); conjugation is always
    invertible, so no applicability condition arises.  A letter whose
    positions exceed the sequence raises :class:`PositionOutOfRange`.
    Composed with word reversal this recovers the letterwise action:
    (a₁,…)ξ(p) = ((a₁)p, …).
    """
    words = [_require(f, "g") for f in fs]
    cap = cfg.max_word_length
    for k in p.letters:
        i = abs(k)
        if i + 1 > len(words):
            raise PositionOutOfRange(
                f"letter σ{i} needs positions {i},{i + 1} but the sequence has length {len(words)}")
        u, v = words[i - 1], words[i]
        if k > 0:
            conj = reduce_packed(u.enc + v.enc + tuple(-e for e in reversed(u.enc)), cap)
            words[i - 1] = FreeWord("g", tuple(conj))
            words[i] = u
        else:
            conj = reduce_packed(tuple(-e for e in reversed(v.enc)) + u.enc + v.enc, cap)
            words[i - 1] = v
            words[i] = FreeWord("g", tuple(conj))
    return tuple(words)
