"""Deterministic samplers for the property suites and test harnesses.

Every sampler draws from an explicit ``random.Random`` so that a run is
reproducible from its seed.  Sub-seeds are derived from strings, which
``random.Random`` hashes with SHA-512 independently of the process
hash seed.
"""

from __future__ import annotations

import random

from .braid import BraidWord
from .freegroup import FreeWord, Letter, reduce
from .ldterm import Apply, LdTerm, X


def case_rng(suite: str, seed: int, case: int) -> random.Random:
    return random.Random(f"{suite}:{seed}:{case}")


def random_braid(rng: random.Random, max_len: int = 12, max_index: int = 6,
                 min_len: int = 0) -> BraidWord:
    length = rng.randint(min_len, max_len)
    return BraidWord(tuple(
        rng.randint(1, max_index) * rng.choice((1, -1)) for _ in range(length)))


def random_braid_letter(rng: random.Random, max_index: int = 6) -> BraidWord:
    return BraidWord((rng.randint(1, max_index) * rng.choice((1, -1)),))


def random_sigma_positive(rng: random.Random, n: int, max_len: int = 12,
                          max_index: int = 6) -> BraidWord:
    """A word with at least one σₙ and no σₙ⁻¹ (σₙ forced at one position)."""
    length = rng.randint(1, max_len)
    letters = []
    for _ in range(length):
        k = rng.randint(1, max_index) * rng.choice((1, -1))
        while k == -n:
            k = rng.randint(1, max_index) * rng.choice((1, -1))
        letters.append(k)
    letters[rng.randrange(length)] = n
    return BraidWord(tuple(letters))


def random_reduced_word(rng: random.Random, alphabet: str, max_len: int = 12,
                        max_index: int = 6,
                        prefix: tuple[tuple[int, int], ...] = ()) -> FreeWord:
    """A reduced word extending the given (index, sign) prefix.

    Letters are appended one at a time, never cancelling their
    predecessor, so the result is reduced by construction and keeps the
    prefix intact.  The prefix itself must be reduced.
    """
    letters = [Letter(alphabet, i, s) for i, s in prefix]
    extra = rng.randint(0, max(0, max_len - len(letters)))
    for _ in range(extra):
        while True:
            cand = Letter(alphabet, rng.randint(0, max_index), rng.choice((1, -1)))
            if not letters or not (cand.index == letters[-1].index
                                   and cand.sign == -letters[-1].sign):
                break
        letters.append(cand)
    return reduce(letters, alphabet=alphabet)


def random_leaning_right(rng: random.Random, n: int, max_len: int = 12,
                         max_index: int = 6) -> FreeWord:
    """A reduced x-word that leans right at n (both defining shapes)."""
    if max_index <= n:
        raise ValueError(f"need max_index > n, got {max_index} <= {n}")
    m = rng.randint(n + 1, max_index)
    if rng.random() < 0.5:
        prefix = ((m, 1),)
    else:
        prefix = ((n, 1), (m, -1))
    return random_reduced_word(rng, "x", max_len, max_index, prefix=prefix)


def random_term(rng: random.Random, max_size: int = 7) -> LdTerm:
    """A term of uniformly chosen odd node count ≤ max_size."""
    return random_term_exact(rng, rng.choice(range(1, max_size + 1, 2)))


def random_term_exact(rng: random.Random, nodes: int) -> LdTerm:
    if nodes < 1 or nodes % 2 == 0:
        raise ValueError(f"an application tree has an odd node count, got {nodes}")
    if nodes == 1:
        return X
    left = rng.randrange(1, nodes - 1, 2)
    return Apply(random_term_exact(rng, left), random_term_exact(rng, nodes - 1 - left))
