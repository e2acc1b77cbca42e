"""Command-line surface.

Grammars: braid words are whitespace-separated signed integers
(``1 2 -1`` is σ1·σ2·σ1⁻¹); free words are tokens ``g2`` / ``-x0``;
terms are ``x`` or ``(t t)``.  Commands taking two words separate them
with a literal ``--`` (``-1`` is a valid braid letter, so flags cannot
be told apart from data otherwise).

Exit codes: 0 success / predicate holds, 1 predicate fails (or a
property suite found failures), 2 malformed input or usage, 3 word-size
cap exceeded.  ``--json`` anywhere switches output to a single line
``{"command":..., "inputs":..., "result":..., "exit":...}``.

The default word-size cap is 1,000,000 reduced letters; override with
the environment variable BRAIDLD_MAX_WORD_LEN.
"""

from __future__ import annotations

import json
import os
import sys
from typing import Optional, Sequence

from .action import (ActionConfig, act_g, act_x, braid_equal,
                     braid_is_identity, leans_right_at)
from .braid import parse_braid_tokens, shift, reverse, sigma_decompose
from .errors import WordCapExceeded
from .freegroup import parse_word
from .ldterm import X, LdSequence, chi, ld_equal, parse_term, parse_term_list, sequence_act
from .properties import SUITES, prop_run
from . import braid as braid_ops

USAGE = """usage: braidld [--json] <command> ...

commands:
  reduce <g|x> <word>            free reduction to normal form
  act <g|x> <word> -- <braid>    braid action on a free word
  braid-id <braid>               is the word the trivial braid?
  braid-eq <braid> -- <braid>    do two words represent equal braids?
  bracket <braid> -- <braid>     the left-distributive bracket p[q]
  shift <k> <braid>              raise all generator indices by k
  reverse <braid>                reverse the letter order
  sigma-check <n> <braid>        sigma_n-positivity: decomposition, non-triviality, lean
  lean <n> <word-over-x>         does the word lean right at n?
  chi <term> [--base <braid>]    evaluate a term in the bracket algebra
  ld-eq <term> -- <term>         equality in the free left-distributive algebra
  seq-act <terms> -- <braid>     partial braid action on a term sequence (tail x)
  prop <suite> [--cases N] [--seed S]   run a property suite
"""

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class _Result:
    def __init__(self, code: int, lines: list[str], inputs: dict, result):
        self.code = code
        self.lines = lines
        self.inputs = inputs
        self.result = result


def _split_double_dash(tokens: list[str]) -> tuple[list[str], list[str]]:
    if tokens.count("--") != 1:
        raise ValueError("expected exactly one '--' separating the two words")
    cut = tokens.index("--")
    return tokens[:cut], tokens[cut + 1:]


def _alphabet(token: str) -> str:
    if token not in ("g", "x"):
        raise ValueError(f"alphabet must be 'g' or 'x', got {token!r}")
    return token


def _int_arg(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ValueError(f"{what} must be an integer, got {token!r}") from None


def _cmd_reduce(rest: list[str], cfg: ActionConfig) -> _Result:
    if not rest:
        raise ValueError("reduce needs an alphabet")
    alphabet = _alphabet(rest[0])
    word = parse_word(" ".join(rest[1:]), alphabet)
    return _Result(EXIT_OK, [str(word)],
                   {"alphabet": alphabet, "word": " ".join(rest[1:])}, str(word))


def _cmd_act(rest: list[str], cfg: ActionConfig) -> _Result:
    if not rest:
        raise ValueError("act needs an alphabet")
    alphabet = _alphabet(rest[0])
    word_tokens, braid_tokens = _split_double_dash(rest[1:])
    f = parse_word(" ".join(word_tokens), alphabet)
    p = parse_braid_tokens(braid_tokens)
    img = act_g(f, p, cfg) if alphabet == "g" else act_x(f, p, cfg)
    return _Result(EXIT_OK, [str(img)],
                   {"alphabet": alphabet, "word": str(f), "braid": str(p)}, str(img))


def _cmd_braid_id(rest: list[str], cfg: ActionConfig) -> _Result:
    p = parse_braid_tokens(rest)
    trivial = braid_is_identity(p, cfg)
    text = "trivial" if trivial else "non-trivial"
    return _Result(EXIT_OK if trivial else EXIT_NO, [text], {"braid": str(p)}, text)


def _cmd_braid_eq(rest: list[str], cfg: ActionConfig) -> _Result:
    left, right = _split_double_dash(rest)
    p = parse_braid_tokens(left)
    q = parse_braid_tokens(right)
    equal = braid_equal(p, q, cfg)
    text = "equal" if equal else "not equal"
    return _Result(EXIT_OK if equal else EXIT_NO, [text],
                   {"left": str(p), "right": str(q)}, text)


def _cmd_bracket(rest: list[str], cfg: ActionConfig) -> _Result:
    left, right = _split_double_dash(rest)
    out = braid_ops.bracket(parse_braid_tokens(left), parse_braid_tokens(right))
    return _Result(EXIT_OK, [str(out)],
                   {"left": " ".join(left), "right": " ".join(right)}, str(out))


def _cmd_shift(rest: list[str], cfg: ActionConfig) -> _Result:
    if not rest:
        raise ValueError("shift needs an amount")
    k = _int_arg(rest[0], "shift amount")
    out = shift(parse_braid_tokens(rest[1:]), k)
    return _Result(EXIT_OK, [str(out)], {"k": k, "braid": " ".join(rest[1:])}, str(out))


def _cmd_reverse(rest: list[str], cfg: ActionConfig) -> _Result:
    out = reverse(parse_braid_tokens(rest))
    return _Result(EXIT_OK, [str(out)], {"braid": " ".join(rest)}, str(out))


def _cmd_sigma_check(rest: list[str], cfg: ActionConfig) -> _Result:
    if not rest:
        raise ValueError("sigma-check needs an index n")
    n = _int_arg(rest[0], "n")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    p = parse_braid_tokens(rest[1:])
    inputs = {"n": n, "braid": str(p)}
    decomp = sigma_decompose(p, n)
    if decomp is None:
        text = f"no sigma_{n}-positive decomposition"
        return _Result(EXIT_NO, [text], inputs, text)
    lines = [f"p1 = {decomp.p1}", f"p2 = {decomp.p2}"]
    trivial = braid_is_identity(p, cfg)
    lines.append("trivial" if trivial else "non-trivial")
    leans = leans_right_at(act_x(parse_word(f"x{n}", "x"), p, cfg), n)
    lines.append(f"leans right at {n}" if leans else f"does not lean right at {n}")
    ok = (not trivial) and leans
    result = {"p1": str(decomp.p1), "n": n, "p2": str(decomp.p2),
              "trivial": trivial, "leans_right": leans}
    return _Result(EXIT_OK if ok else EXIT_NO, lines, inputs, result)


def _cmd_lean(rest: list[str], cfg: ActionConfig) -> _Result:
    if not rest:
        raise ValueError("lean needs an index n")
    n = _int_arg(rest[0], "n")
    f = parse_word(" ".join(rest[1:]), "x")
    leans = leans_right_at(f, n)
    text = f"leans right at {n}" if leans else f"does not lean right at {n}"
    return _Result(EXIT_OK if leans else EXIT_NO, [text],
                   {"n": n, "word": str(f)}, text)


def _cmd_chi(rest: list[str], cfg: ActionConfig) -> _Result:
    if "--base" in rest:
        cut = rest.index("--base")
        term_tokens, base_tokens = rest[:cut], rest[cut + 1:]
    else:
        term_tokens, base_tokens = rest, []
    term = parse_term(" ".join(term_tokens))
    base = parse_braid_tokens(base_tokens)
    out = chi(term, base)
    return _Result(EXIT_OK, [str(out)],
                   {"term": str(term), "base": str(base)}, str(out))


def _cmd_ld_eq(rest: list[str], cfg: ActionConfig) -> _Result:
    left, right = _split_double_dash(rest)
    s = parse_term(" ".join(left))
    t = parse_term(" ".join(right))
    equal = ld_equal(s, t, cfg=cfg)
    text = "equal" if equal else "not equal"
    return _Result(EXIT_OK if equal else EXIT_NO, [text],
                   {"left": str(s), "right": str(t)}, text)


def _cmd_seq_act(rest: list[str], cfg: ActionConfig) -> _Result:
    term_tokens, braid_tokens = _split_double_dash(rest)
    terms = parse_term_list(" ".join(term_tokens))
    if not terms:
        raise ValueError("seq-act needs at least one term")
    p = parse_braid_tokens(braid_tokens)
    seq = sequence_act(LdSequence(tuple(terms), X), p, cfg)
    rendered = [str(t) for t in seq.terms]
    return _Result(EXIT_OK, [" ".join(rendered)],
                   {"terms": [str(t) for t in terms], "braid": str(p)},
                   {"terms": rendered, "tail": str(seq.tail)})


def _cmd_prop(rest: list[str], cfg: ActionConfig) -> _Result:
    tokens = list(rest)
    cases, seed = 200, 0
    for flag, default in (("--cases", None), ("--seed", None)):
        while flag in tokens:
            at = tokens.index(flag)
            if at + 1 >= len(tokens):
                raise ValueError(f"{flag} needs a value")
            value = _int_arg(tokens[at + 1], flag)
            if flag == "--cases":
                cases = value
            else:
                seed = value
            del tokens[at:at + 2]
    if len(tokens) != 1:
        raise ValueError(f"prop needs exactly one suite name; known: {', '.join(sorted(SUITES))}")
    report = prop_run(tokens[0], cases=cases, seed=seed, cfg=cfg)
    code = EXIT_OK if report.failures == 0 else EXIT_NO
    result = {"suite": report.suite, "cases": report.cases,
              "failures": report.failures, "seed": report.seed,
              "first_failure": report.first_failure}
    return _Result(code, str(report).split("\n"), {"suite": tokens[0], "cases": cases, "seed": seed}, result)


COMMANDS = {
    "reduce": _cmd_reduce,
    "act": _cmd_act,
    "braid-id": _cmd_braid_id,
    "braid-eq": _cmd_braid_eq,
    "bracket": _cmd_bracket,
    "shift": _cmd_shift,
    "reverse": _cmd_reverse,
    "sigma-check": _cmd_sigma_check,
    "lean": _cmd_lean,
    "chi": _cmd_chi,
    "ld-eq": _cmd_ld_eq,
    "seq-act": _cmd_seq_act,
    "prop": _cmd_prop,
}


def _default_config() -> ActionConfig:
    raw = os.environ.get("BRAIDLD_MAX_WORD_LEN")
    if raw is None:
        return ActionConfig()
    try:
        return ActionConfig(max_word_length=int(raw))
    except ValueError:
        raise ValueError(f"BRAIDLD_MAX_WORD_LEN must be a positive integer, got {raw!r}") from None


def _emit(command: str, res: _Result, json_mode: bool) -> int:
    if json_mode:
        payload = {"command": command, "inputs": res.inputs,
                   "result": res.result, "exit": res.code}
        print(json.dumps(payload, sort_keys=True, ensure_ascii=False))
    else:
        for line in res.lines:
            print(line)
    return res.code


def _emit_error(command: str, message: str, code: int, json_mode: bool) -> int:
    if json_mode:
        payload = {"command": command, "inputs": {},
                   "result": {"error": message}, "exit": code}
        print(json.dumps(payload, sort_keys=True, ensure_ascii=False))
    else:
        print(f"error: {message}", file=sys.stderr)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = list(sys.argv[1:] if argv is None else argv)
    json_mode = False
    while "--json" in args:
        args.remove("--json")
        json_mode = True
    if not args:
        print(USAGE, file=sys.stderr)
        return EXIT_USAGE
    command, rest = args[0], args[1:]
    handler = COMMANDS.get(command)
    if handler is None:
        return _emit_error(command, f"unknown command {command!r}", EXIT_USAGE, json_mode)
    try:
        cfg = _default_config()
        res = handler(rest, cfg)
    except WordCapExceeded as exc:
        return _emit_error(command, str(exc), EXIT_CAP, json_mode)
    except ValueError as exc:
        return _emit_error(command, str(exc), EXIT_USAGE, json_mode)
    return _emit(command, res, json_mode)


if __name__ == "__main__":
    sys.exit(main())
