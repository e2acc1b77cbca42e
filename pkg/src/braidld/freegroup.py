"""Freely reduced words over indexed generator alphabets.

Two alphabets occur: ``"g"`` with generators g0, g1, g2, ... and ``"x"``
with generators x0, x1, x2, ...  A word is kept in freely reduced form
(no adjacent letter cancels its neighbour), which is the unique normal
form of the corresponding free-group element.

Internally a letter with index ``i`` and sign ``s`` is packed as the
nonzero integer ``(i + 1) * s``, so cancellation is the test
``a == -b``.  The text form of a word is whitespace-separated tokens
``g3`` / ``-g3`` (resp. ``x3`` / ``-x3``); the empty word prints as
``ε``.

>>> str(reduce([Letter("g", 1, 1), Letter("g", 2, 1), Letter("g", 2, -1)]))
'g1'
>>> str(concat(parse_word("g1 g2", "g"), parse_word("-g2", "g")))
'g1'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .errors import AlphabetMismatch, WordCapExceeded

ALPHABETS = ("g", "x")


class Letter(NamedTuple):
    alphabet: str
    index: int
    sign: int


def _pack(index: int, sign: int) -> int:
    return (index + 1) * sign


def _unpack(e: int) -> tuple[int, int]:
    return (abs(e) - 1, 1 if e > 0 else -1)


def _check_alphabet(alphabet: str) -> str:
    if alphabet not in ALPHABETS:
        raise AlphabetMismatch(f"unknown alphabet {alphabet!r}; expected one of {ALPHABETS}")
    return alphabet


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word; construct via :func:`reduce` or :func:`parse_word`.

    ``enc`` holds the packed letters.  Instances are immutable and
    hashable; equality is equality of reduced words, i.e. equality in
    the free group.
    """

    alphabet: str
    enc: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.enc)

    def __bool__(self) -> bool:
        return bool(self.enc)

    @property
    def letters(self) -> tuple[Letter, ...]:
        a = self.alphabet
        return tuple(Letter(a, *_unpack(e)) for e in self.enc)

    def __str__(self) -> str:
        if not self.enc:
            return "ε"
        a = self.alphabet
        return " ".join(
            f"{a}{e - 1}" if e > 0 else f"-{a}{-e - 1}" for e in self.enc
        )

    def __repr__(self) -> str:
        return f"FreeWord({str(self)!r})"


def empty(alphabet: str) -> FreeWord:
    return FreeWord(_check_alphabet(alphabet))


def gen(alphabet: str, index: int, sign: int = 1) -> FreeWord:
    """The one-letter word for the given generator or its inverse."""
    if index < 0:
        raise ValueError(f"generator index must be >= 0, got {index}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return FreeWord(_check_alphabet(alphabet), (_pack(index, sign),))


def reduce_packed(items: Iterable[int], cap: int | None = None) -> list[int]:
    """Freely reduce a stream of packed letters with a single stack pass."""
    out: list[int] = []
    push = out.append
    pop = out.pop
    for e in items:
        if out and out[-1] == -e:
            pop()
        else:
            push(e)
            if cap is not None and len(out) > cap:
                raise WordCapExceeded(len(out), cap)
    return out


def reduce(letters: Iterable[Letter], alphabet: str | None = None,
           cap: int | None = None) -> FreeWord:
    """Freely reduce a letter sequence to its normal form.

    All letters must come from one alphabet; a mixed sequence raises
    :class:`AlphabetMismatch`.  For an empty sequence the alphabet must
    be supplied explicitly.
    """
    packed = []
    for letter in letters:
        a, index, sign = letter
        if alphabet is None:
            alphabet = _check_alphabet(a)
        elif a != alphabet:
            raise AlphabetMismatch(f"letter from alphabet {a!r} in a {alphabet!r}-word")
        if index < 0:
            raise ValueError(f"generator index must be >= 0, got {index}")
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        packed.append(_pack(index, sign))
    if alphabet is None:
        raise AlphabetMismatch("empty letter sequence needs an explicit alphabet")
    return FreeWord(alphabet, tuple(reduce_packed(packed, cap)))


def concat(a: FreeWord, b: FreeWord, cap: int | None = None) -> FreeWord:
    """The reduced product a·b.  Both words must share an alphabet."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"cannot concatenate {a.alphabet!r}-word with {b.alphabet!r}-word")
    out = list(a.enc)
    pop = out.pop
    push = out.append
    for e in b.enc:
        if out and out[-1] == -e:
            pop()
        else:
            push(e)
            if cap is not None and len(out) > cap:
                raise WordCapExceeded(len(out), cap)
    return FreeWord(a.alphabet, tuple(out))


def invert(a: FreeWord) -> FreeWord:
    """The group inverse: reversed letters with flipped signs."""
    return FreeWord(a.alphabet, tuple(-e for e in reversed(a.enc)))


def leading(a: FreeWord) -> Optional[tuple[Letter, Optional[Letter]]]:
    """First one or two letters of the reduced word; ``None`` for ε.

    >>> leading(parse_word("g1 -g2 -g1", "g"))
    (Letter(alphabet='g', index=1, sign=1), Letter(alphabet='g', index=2, sign=-1))
    >>> leading(parse_word("", "g")) is None
    True
    """
    if not a.enc:
        return None
    first = Letter(a.alphabet, *_unpack(a.enc[0]))
    second = Letter(a.alphabet, *_unpack(a.enc[1])) if len(a.enc) > 1 else None
    return (first, second)


def parse_word(text: str, alphabet: str) -> FreeWord:
    """Parse whitespace-separated tokens like ``g2`` / ``-x0``; empty input is ε."""
    _check_alphabet(alphabet)
    packed = []
    for token in text.split():
        body = token[1:] if token.startswith("-") else token
        if not body.startswith(alphabet) or not body[len(alphabet):].isdigit():
            raise ValueError(f"bad {alphabet}-word token {token!r}")
        index = int(body[len(alphabet):])
        packed.append(_pack(index, -1 if token.startswith("-") else 1))
    return FreeWord(alphabet, tuple(reduce_packed(packed)))
