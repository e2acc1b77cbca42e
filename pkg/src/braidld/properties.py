"""Randomised property suites for the lemmas and theorems this package rests on.

Each suite draws its cases deterministically from a seed (per-case
sub-seeds, so a report is reproducible and order-independent) and
returns a :class:`RunReport`.  A nonzero failure count means a
counterexample to the corresponding statement was found, which would
indicate an implementation bug; the first counterexample is rendered
into the report.

Default sampling bounds (kept small so suites finish in seconds despite
the action's exponential word growth): braid length ≤ 12, braid index
≤ 6, free-word length ≤ 12, term size ≤ 7 leaves.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional

from . import sampling
from .action import (ActionConfig, DEFAULT_CONFIG, act_conj_sequence, act_g,
                     act_x, braid_equal, braid_is_identity, leans_right_at,
                     phi, phi_inv)
from .braid import BraidWord, bracket, invert, reverse, shift, sigma, sigma_decompose
from .errors import WordCapExceeded
from .freegroup import FreeWord, gen, leading
from .ldterm import irreflexivity_witness


@dataclass(frozen=True)
class RunReport:
    suite: str
    cases: int
    failures: int
    seed: int
    first_failure: Optional[str] = None

    def __str__(self) -> str:
        line = f"suite={self.suite} cases={self.cases} failures={self.failures} seed={self.seed}"
        if self.first_failure is not None:
            line += f"\nfirst failure: {self.first_failure}"
        return line


def prop_run(suite: str, cases: int = 200, seed: int = 0,
             cfg: ActionConfig = DEFAULT_CONFIG) -> RunReport:
    """Run a named suite; deterministic in (suite, cases, seed)."""
    try:
        runner = SUITES[suite]
    except KeyError:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(sorted(SUITES))}") from None
    return runner(cases, seed, cfg)


def _per_case(name: str, check: Callable[[random.Random, ActionConfig], Optional[str]]):
    def run(cases: int, seed: int, cfg: ActionConfig) -> RunReport:
        failures = 0
        first = None
        for i in range(cases):
            detail = check(sampling.case_rng(name, seed, i), cfg)
            if detail is not None:
                failures += 1
                if first is None:
                    first = f"case {i}: {detail}"
        return RunReport(name, cases, failures, seed, first)
    return run


# -- bracket laws -----------------------------------------------------------

def _check_bracket_ld(rng: random.Random, cfg: ActionConfig) -> Optional[str]:
    p = sampling.random_braid(rng, max_len=8, max_index=4)
    q = sampling.random_braid(rng, max_len=8, max_index=4)
    r = sampling.random_braid(rng, max_len=8, max_index=4)
    lhs = bracket(p, bracket(q, r))
    rhs = bracket(bracket(p, q), bracket(p, r))
    if not braid_equal(lhs, rhs, cfg):
        return f"p={p} q={q} r={r}: p[q[r]] != p[q][p[r]]"
    return None


def _check_bracket_normal_form(rng: random.Random, cfg: ActionConfig) -> Optional[str]:
    p = sampling.random_braid(rng, max_len=8, max_index=4)
    q = sampling.random_braid(rng, max_len=8, max_index=4)
    r = sampling.random_braid(rng, max_len=8, max_index=4)
    lhs = bracket(p, bracket(q, r))
    flat = (p * shift(q, 1) * shift(r, 2) * BraidWord((2, 1))
            * invert(shift(q, 2)) * invert(shift(p, 1)))
    if not braid_equal(lhs, flat, cfg):
        return f"p={p} q={q} r={r}: p[q[r]] != p·s(q)·s²(r)·σ2·σ1·s²(q)⁻¹·s(p)⁻¹"
    return None


# -- the leading-letter lemmas ----------------------------------------------

def _check_tech1(rng: random.Random, cfg: ActionConfig) -> Optional[str]:
    f = sampling.random_reduced_word(rng, "g", max_len=12, max_index=6, prefix=((1, 1),))
    for k in range(1, 7):
        for s in (1, -1):
            if (k, s) == (1, -1):
                continue
            img = act_g(f, sigma(k, s), cfg)
            lead = leading(img)
            if lead is None or (lead[0].index, lead[0].sign) != (1, 1):
                return f"f={f} sigma={k * s}: image {img} does not begin with g1"
    return None


def _thatlemma_expected(f: FreeWord, m: int, k: int, s: int) -> tuple[tuple[int, int], Optional[tuple[int, int]]]:
    """Leading letter(s) the lemma predicts for (f)σₖ^s when f begins with xₘ."""
    second = f.letters[1] if len(f) > 1 else None
    if k == m:
        return ((m + s, 1), (m, -1))
    if s == 1 and k == m + 1 and second == ("x", m + 1, -1):
        return ((m + 1, 1), None)
    if s == -1 and k == m - 1 and second == ("x", m - 1, -1):
        return ((m - 1, 1), None)
    return ((m, 1), None)


def _check_thatlemma(rng: random.Random, cfg: ActionConfig) -> Optional[str]:
    m = rng.randint(0, 6)
    shape = rng.randrange(3)
    if shape == 1:
        prefix = ((m, 1), (m + 1, -1))
    elif shape == 2 and m >= 1:
        prefix = ((m, 1), (m - 1, -1))
    else:
        prefix = ((m, 1),)
    f = sampling.random_reduced_word(rng, "x", max_len=12, max_index=8, prefix=prefix)
    for k in range(1, 9):
        for s in (1, -1):
            img = act_x(f, sigma(k, s), cfg)
            want_first, want_second = _thatlemma_expected(f, m, k, s)
            lead = leading(img)
            got_first = (lead[0].index, lead[0].sign) if lead else None
            got_second = (lead[1].index, lead[1].sign) if lead and lead[1] else None
            if got_first != want_first or (want_second is not None and got_second != want_second):
                return (f"f={f} sigma={k * s}: image {img} begins {got_first}, "
                        f"lemma predicts {want_first}" +
                        (f" then {want_second}" if want_second else ""))
    return None


def _check_dual_lemma(rng: random.Random, cfg: ActionConfig) -> Optional[str]:
    m = rng.randint(0, 6)
    shape = rng.randrange(3)
    if shape == 1:
        prefix = ((m, -1), (m + 1, 1))
    elif shape == 2 and m >= 1:
        prefix = ((m, -1), (m - 1, 1))
    else:
        prefix = ((m, -1),)
    f = sampling.random_reduced_word(rng, "x", max_len=12, max_index=8, prefix=prefix)
    allowed = {(m, -1), (m + 1, -1)} | ({(m - 1, -1)} if m >= 1 else set())
    for k in range(1, 9):
        for s in (1, -1):
            img = act_x(f, sigma(k, s), cfg)
            lead = leading(img)
            got = (lead[0].index, lead[0].sign) if lead else None
            if got not in allowed:
                return (f"f={f} sigma={k * s}: image {img} begins {got}, "
                        f"expected an inverse letter within one of x{m}")
    return None


def _check_leansright(rng: random.Random, cfg: ActionConfig) -> Optional[str]:
    n = rng.randint(1, 5)
    f = sampling.random_leaning_right(rng, n, max_len=12, max_index=6)
    for k in range(1, 7):
        for s in (1, -1):
            if (k, s) == (n, -1):
                continue
            img = act_x(f, sigma(k, s), cfg)
            if not leans_right_at(img, n):
                return f"f={f} n={n} sigma={k * s}: image {img} does not lean right"
    return None


# -- the σₙ-proposition ------------------------------------------------------

def _check_sigma_n(rng: random.Random, cfg: ActionConfig) -> Optional[str]:
    n = rng.randint(1, 4)
    p = sampling.random_sigma_positive(rng, n, max_len=12, max_index=6)
    decomp = sigma_decompose(p, n)
    if decomp is None or decomp.reassemble() != p:
        return f"p={p} n={n}: decomposition failed"
    try:
        if braid_is_identity(p, cfg):
            return f"p={p} n={n}: σ{n}-positive word decided trivial"
        if not leans_right_at(act_x(gen("x", n), p, cfg), n):
            return f"p={p} n={n}: (x{n})p does not lean right at {n}"
    except WordCapExceeded:
        return None  # inconclusive, not a counterexample
    return None


def _check_irreflexivity(rng: random.Random, cfg: ActionConfig) -> Optional[str]:
    # total node size of P and the Qs at most 10, each piece odd
    k = rng.randint(1, 3)
    p_size = rng.choice(range(1, 10 - k + 1, 2))
    budget = 10 - p_size
    q_sizes = []
    for slot in range(k):
        hi = budget - (k - slot - 1)
        s = rng.choice(range(1, hi + 1, 2))
        q_sizes.append(s)
        budget -= s
    p = sampling.random_term_exact(rng, p_size)
    qs = [sampling.random_term_exact(rng, s) for s in q_sizes]
    if irreflexivity_witness(p, qs, cfg):
        return f"P={p} Qs={[str(q) for q in qs]}: left-division reflexivity?!"
    return None


# -- φ and ξ -----------------------------------------------------------------

def _check_phi_square(rng: random.Random, cfg: ActionConfig) -> Optional[str]:
    f = sampling.random_reduced_word(rng, "x", max_len=10, max_index=6)
    h = sampling.random_reduced_word(rng, "g", max_len=10, max_index=6)
    p = sampling.random_braid(rng, max_len=10, max_index=6)
    if phi_inv(phi(f)) != f:
        return f"f={f}: phi_inv(phi(f)) = {phi_inv(phi(f))}"
    if phi(phi_inv(h)) != h:
        return f"h={h}: phi(phi_inv(h)) = {phi(phi_inv(h))}"
    direct = act_x(f, p, cfg)
    through_g = phi_inv(act_g(phi(f), p, cfg))
    if direct != through_g:
        return f"f={f} p={p}: act_x gives {direct}, transport gives {through_g}"
    return None


def _check_xi(rng: random.Random, cfg: ActionConfig) -> Optional[str]:
    p = sampling.random_braid(rng, max_len=12, max_index=7)
    gs = tuple(gen("g", j) for j in range(1, 9))
    via_sequence = act_conj_sequence(gs, reverse(p), cfg)
    letterwise = tuple(act_g(g, p, cfg) for g in gs)
    if via_sequence != letterwise:
        return f"p={p}: conjugation action of reverse(p) disagrees with letterwise action"
    return None


# -- the defining relations --------------------------------------------------

def _run_relations(cases: int, seed: int, cfg: ActionConfig) -> RunReport:
    """Exhaustive over index pairs ≤ 6 and g1..g8; the cases argument is ignored."""
    checks = 0
    failures = 0
    first = None
    for i, j in combinations(range(1, 7), 2):
        if j - i > 1:
            u, v = BraidWord((i, j)), BraidWord((j, i))
        else:
            u, v = BraidWord((i, j, i)), BraidWord((j, i, j))
        for g_index in range(1, 9):
            checks += 1
            g = gen("g", g_index)
            if act_g(g, u, cfg) != act_g(g, v, cfg):
                failures += 1
                if first is None:
                    first = f"relation {u} = {v} broken on g{g_index}"
    return RunReport("relations", checks, failures, seed, first)


SUITES: dict[str, Callable[[int, int, ActionConfig], RunReport]] = {
    "bracket-ld": _per_case("bracket-ld", _check_bracket_ld),
    "bracket-normal-form": _per_case("bracket-normal-form", _check_bracket_normal_form),
    "tech1": _per_case("tech1", _check_tech1),
    "thatlemma": _per_case("thatlemma", _check_thatlemma),
    "leansright": _per_case("leansright", _check_leansright),
    "dual-lemma": _per_case("dual-lemma", _check_dual_lemma),
    "sigma-n": _per_case("sigma-n", _check_sigma_n),
    "irreflexivity": _per_case("irreflexivity", _check_irreflexivity),
    "phi-square": _per_case("phi-square", _check_phi_square),
    "xi": _per_case("xi", _check_xi),
    "relations": _run_relations,
}
