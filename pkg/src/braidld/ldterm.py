"""Terms of the free left-distributive algebra on one generator.

A term is a binary application tree: ``Leaf()`` is the generator x and
``Apply(s, t)`` is the product s·t.  The algebra satisfies the single
law a(bc) = (ab)(ac); equality of terms modulo that law is decidable by
mapping terms into braid words with the bracket homomorphism χ and
deciding braid equality there (χ is injective because the bracket
closure of any braid is free).

Text grammar: ``x`` for the generator, ``(s t)`` for an application;
no implicit association.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .action import ActionConfig, DEFAULT_CONFIG, braid_equal
from .braid import BraidWord, EPSILON, bracket
from .errors import InverseNotApplicable


class LdTerm:
    """Base class; instances are always Leaf or Apply."""

    __slots__ = ()


@dataclass(frozen=True)
class Leaf(LdTerm):
    """The single generator x."""

    def __str__(self) -> str:
        return "x"


@dataclass(frozen=True)
class Apply(LdTerm):
    left: LdTerm
    right: LdTerm

    def __str__(self) -> str:
        return f"({self.left} {self.right})"


X = Leaf()


def size(t: LdTerm) -> int:
    """Number of nodes, leaves and applications together (always odd)."""
    if isinstance(t, Leaf):
        return 1
    return 1 + size(t.left) + size(t.right)


def chi(t: LdTerm, r: BraidWord = EPSILON) -> BraidWord:
    """Evaluate the term in ⟨B∞, [ ]⟩ with the generator sent to r.

    Structural recursion: a leaf is r, an application is the bracket of
    the images.  The homomorphism property holds letter for letter by
    construction.
    """
    if isinstance(t, Leaf):
        return r
    return bracket(chi(t.left, r), chi(t.right, r))


def ld_equal(s: LdTerm, t: LdTerm, r: BraidWord = EPSILON,
             cfg: ActionConfig = DEFAULT_CONFIG) -> bool:
    """Decide s = t in the free left-distributive algebra.

    True iff the χ-images are equal braids; the base braid r is
    irrelevant to the answer (any bracket closure is free), so the
    default ε merely minimises word growth.
    """
    return braid_equal(chi(s, r), chi(t, r), cfg)


def left_prefix(p: LdTerm, qs: Sequence[LdTerm]) -> LdTerm:
    """Fold applications from the left: ((p·q₁)·…)·q_k, k ≥ 1."""
    if not qs:
        raise ValueError("left_prefix needs at least one right factor")
    acc = p
    for q in qs:
        acc = Apply(acc, q)
    return acc


def irreflexivity_witness(p: LdTerm, qs: Sequence[LdTerm],
                          cfg: ActionConfig = DEFAULT_CONFIG) -> bool:
    """Test p = ((p·q₁)·…)·q_k; irreflexivity of left division says never.

    Any True return would falsify the theorem this package is built
    around (or expose a bug); harnesses flag it as a counterexample.
    """
    return ld_equal(p, left_prefix(p, qs), cfg=cfg)


@dataclass(frozen=True)
class LdSequence:
    """An eventually constant term sequence (t₁, …, t_N, tail, tail, …)."""

    terms: tuple[LdTerm, ...] = ()
    tail: LdTerm = X

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    def at(self, position: int) -> LdTerm:
        """1-based access, drawing from the tail past the explicit list."""
        if position < 1:
            raise ValueError(f"positions are 1-based, got {position}")
        return self.terms[position - 1] if position <= len(self.terms) else self.tail

    def __str__(self) -> str:
        parts = [str(t) for t in self.terms]
        parts.append(f"{self.tail} ...")
        return " ".join(parts)


def sequence_act(seq: LdSequence, p: BraidWord,
                 cfg: ActionConfig = DEFAULT_CONFIG) -> LdSequence:
    """The partial braid action on term sequences, letters left to right.

    σᵢ maps the pair at positions (i, i+1) to (bᵢ·bᵢ₊₁, bᵢ).  For σᵢ⁻¹
    the current pair (c, d) must visibly factor: c must be an
    application whose left part is LD-equal to d, and the pair becomes
    (d, right part of c).  That syntactic condition is sufficient but
    not a full left-division decision; when it fails,
    :class:`InverseNotApplicable` is raised.
    """
    terms = list(seq.terms)
    for k in p.letters:
        i = abs(k)
        while len(terms) < i + 1:
            terms.append(seq.tail)
        if k > 0:
            terms[i - 1], terms[i] = Apply(terms[i - 1], terms[i]), terms[i - 1]
        else:
            c, d = terms[i - 1], terms[i]
            if not isinstance(c, Apply) or not ld_equal(c.left, d, cfg=cfg):
                raise InverseNotApplicable(
                    f"σ{i}⁻¹ needs position {i} to be an application with left factor {d}, got {c}")
            terms[i - 1], terms[i] = d, c.right
    return LdSequence(tuple(terms), seq.tail)


def parse_term(text: str) -> LdTerm:
    """Parse the term grammar ``x`` | ``( term term )``, whitespace-insensitive."""
    tokens = _tokenize(text)
    term, rest = _parse_tokens(tokens)
    if rest:
        raise ValueError(f"trailing input after term: {' '.join(rest)!r}")
    return term


def parse_term_list(text: str) -> list[LdTerm]:
    """Parse a whitespace-separated run of terms (parens delimit, so no ambiguity)."""
    tokens = _tokenize(text)
    terms = []
    while tokens:
        term, tokens = _parse_tokens(tokens)
        terms.append(term)
    return terms


def _tokenize(text: str) -> list[str]:
    return text.replace("(", " ( ").replace(")", " ) ").split()


def _parse_tokens(tokens: list[str]) -> tuple[LdTerm, list[str]]:
    if not tokens:
        raise ValueError("unexpected end of term")
    head, rest = tokens[0], tokens[1:]
    if head == "x":
        return X, rest
    if head == "(":
        left, rest = _parse_tokens(rest)
        right, rest = _parse_tokens(rest)
        if not rest or rest[0] != ")":
            raise ValueError("expected ')' closing an application")
        return Apply(left, right), rest[1:]
    raise ValueError(f"bad term token {head!r}")
