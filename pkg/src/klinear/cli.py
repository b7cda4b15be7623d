"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (mismatches, exhausted budgets,
rejected certificates or morphisms, inequivalence), 2 on malformed input.
"""
from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import automaton as aut
from .determinize import DEFAULT_BUDGET, determinize, linearize, minimize
from .errors import KLinearError, SchemaError
from .generate import random_automaton
from .morphism import BACKWARD, FORWARD, Morphism, verify_morphism
from .proofsys import NotEquivalent, prove_equivalent, verify_certificate
from .semiring import get_semiring, load_table
from .serialize import (
    automaton_to_json,
    certificate_to_json,
    dfa_to_json,
    dumps,
    load_automaton,
    load_certificate,
    load_dfa,
    matrix_between,
    read_json,
)
from .words import convolve_eval, render_word


class CommandFailed(Exception):
    """Domain-level negative outcome; message goes to stdout, exit status 1."""


def _emit(args, data):
    text = dumps(data)
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)


def _parse_map(spec: str) -> dict:
    mapping = {}
    for part in spec.split(","):
        if "=" not in part:
            raise SchemaError(f"bad --map entry {part!r}; expected symbol=word")
        sym, image = part.split("=", 1)
        sym = sym.strip()
        if len(sym) != 1:
            raise SchemaError(f"pullback symbol {sym!r} must be a single character")
        if sym in mapping:
            raise SchemaError(f"symbol {sym!r} mapped twice")
        mapping[sym] = image.strip()
    return mapping


def cmd_eval(args):
    a = load_automaton(args.a)
    print(a.semiring.render(a.eval(args.w)))


def cmd_sum(args):
    _emit(args, automaton_to_json(aut.direct_sum(load_automaton(args.a), load_automaton(args.b))))


def cmd_scale(args):
    a = load_automaton(args.a)
    _emit(args, automaton_to_json(aut.scale(a, a.semiring.parse(args.k))))


def cmd_tensor(args):
    t = aut.tensor(load_automaton(args.a), load_automaton(args.b), args.comul)
    _emit(args, automaton_to_json(t))


def cmd_reverse(args):
    _emit(args, automaton_to_json(aut.reverse(load_automaton(args.a))))


def cmd_pullback(args):
    _emit(args, automaton_to_json(aut.pullback(load_automaton(args.a), _parse_map(args.map))))


def cmd_convolve(args):
    a, b = load_automaton(args.a), load_automaton(args.b)
    print(a.semiring.render(convolve_eval(a, b, args.comul, args.w)))


def cmd_determinize(args):
    _emit(args, dfa_to_json(determinize(load_automaton(args.a), args.budget)))


def cmd_minimize(args):
    if args.d:
        d = load_dfa(args.d)
    else:
        d = determinize(load_automaton(args.a), args.budget)
    _emit(args, dfa_to_json(minimize(d)))


def cmd_linearize(args):
    _emit(args, automaton_to_json(linearize(load_dfa(args.d))))


def cmd_prove(args):
    a, b = load_automaton(args.a), load_automaton(args.b)
    result = prove_equivalent(a, b, args.budget)
    if isinstance(result, NotEquivalent):
        h = a.semiring
        raise CommandFailed(
            f"NOT EQUIVALENT: separating word {render_word(result.word)} "
            f"(A={h.render(result.value_a)}, B={h.render(result.value_b)})"
        )
    _emit(args, certificate_to_json(result))
    if args.output:
        print("EQUIVALENT")


def cmd_verify(args):
    a, b = load_automaton(args.a), load_automaton(args.b)
    issues = verify_certificate(load_certificate(args.c), a, b)
    if issues:
        raise CommandFailed("\n".join(["REJECT", *map(str, issues)]))
    print("ACCEPT")


def cmd_check_morphism(args):
    a, b = load_automaton(args.a), load_automaton(args.b)
    data = read_json(args.m)
    if not isinstance(data, dict) or "matrix" not in data:
        raise SchemaError("morphism file needs a 'matrix' key")
    direction = data.get("direction", FORWARD)
    if direction not in (FORWARD, BACKWARD):
        raise SchemaError("direction must be 'forward' or 'backward'")
    src, tgt = (a, b) if direction == FORWARD else (b, a)
    matrix = matrix_between(src.semiring, data["matrix"], src, tgt)
    failures = verify_morphism(Morphism(src, tgt, matrix, direction))
    if failures:
        raise CommandFailed("\n".join(["INVALID", *map(str, failures)]))
    print("VALID")


def cmd_random(args):
    h = get_semiring(args.semiring)
    rng = random.Random(args.seed)
    _emit(args, automaton_to_json(random_automaton(h, args.dim, args.alphabet, rng, args.density)))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="klinear", description="Weighted automata over commutative semirings.")
    p.add_argument("--table", action="append", default=[], metavar="FILE",
                   help="register a table semiring from a JSON table file (name = file stem)")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, *, a=False, b=False, out=False, word=False, budget=False):
        sp = sub.add_parser(name, help=help_)
        if a:
            sp.add_argument("-a", required=True, metavar="FILE", help="automaton JSON")
        if b:
            sp.add_argument("-b", required=True, metavar="FILE", help="second automaton JSON")
        if word:
            sp.add_argument("-w", required=True, metavar="WORD", help='input word ("" for the empty word)')
        if budget:
            sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximum number of DFA states")
        if out:
            sp.add_argument("-o", "--output", metavar="FILE", help="write JSON here instead of stdout")
        sp.set_defaults(func=func)
        return sp

    add("eval", cmd_eval, "weight of a word", a=True, word=True)
    add("sum", cmd_sum, "direct sum of two automata", a=True, b=True, out=True)
    add("scale", cmd_scale, "scale the start vector", a=True, out=True).add_argument(
        "-k", required=True, help="scalar (decimal, 0/1, or inf)")
    add("tensor", cmd_tensor, "tensor product automaton", a=True, b=True, out=True).add_argument(
        "--comul", choices=["delta1", "delta3"], default="delta3")
    add("reverse", cmd_reverse, "transpose automaton", a=True, out=True)
    add("pullback", cmd_pullback, "pull back along a word homomorphism", a=True, out=True).add_argument(
        "--map", required=True, help="comma-separated symbol=word pairs, e.g. z=xx,w=y")
    add("convolve", cmd_convolve, "convolution product at one word", a=True, b=True, word=True).add_argument(
        "--comul", choices=["delta1", "delta2", "delta3"], default="delta3")
    add("determinize", cmd_determinize, "weighted subset construction", a=True, out=True, budget=True)
    sp = add("minimize", cmd_minimize, "minimize a DFA (or determinize then minimize -a)", out=True, budget=True)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("-d", metavar="FILE", help="DFA JSON")
    g.add_argument("-a", metavar="FILE", help="automaton JSON")
    add("linearize", cmd_linearize, "free K-linear automaton of a DFA", out=True).add_argument(
        "-d", required=True, metavar="FILE", help="DFA JSON")
    add("prove", cmd_prove, "equivalence certificate or separating word", a=True, b=True, out=True, budget=True)
    add("verify", cmd_verify, "check a certificate", a=True, b=True).add_argument(
        "-c", required=True, metavar="FILE", help="certificate JSON")
    add("check-morphism", cmd_check_morphism, "check a morphism between two automata", a=True, b=True).add_argument(
        "-m", required=True, metavar="FILE", help='morphism JSON {"matrix": ..., "direction": ...}')
    sp = add("random", cmd_random, "random automaton for test corpora", out=True)
    sp.add_argument("--semiring", default="bool")
    sp.add_argument("--dim", type=int, default=3)
    sp.add_argument("--alphabet", default="xy")
    sp.add_argument("--density", type=float, default=0.5)
    sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        for t in args.table:
            load_table(t)
        args.func(args)
    except CommandFailed as exc:
        print(exc)
        return 1
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (KLinearError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
