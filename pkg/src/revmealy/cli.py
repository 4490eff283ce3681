"""Command-line front end.

Exit codes: 0 success, 1 domain failure (irreversible input, refused undo,
...), 2 usage or parse errors.  Every input path may be ``-`` for stdin.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import blackbox
from .automaton import (
    Configuration,
    format_automaton,
    parse_automaton,
    parse_configuration,
    run,
    validate_reversible,
)
from .correspondence import automaton_to_matrix
from .dot import flow_dot
from .errors import AutomatonError, CopyRetainedError, DomainError, ParseError
from .experiments import format_word, parse_word, partitions_up_to, state_partition
from .logic import build_logic, classify, logic_report
from .permutation import (
    birkhoff_decompose,
    format_matrix,
    format_rational,
    order,
    parse_rational_matrix,
)


class _Failure(Exception):
    """Domain failure that maps to exit code 1."""


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as f:
        return f.read()


def _load(path: str):
    return parse_automaton(_read(path))


def _load_reversible(path: str):
    a = _load(path)
    ok, witness = validate_reversible(a)
    if not ok:
        (s, i), (t, j) = witness
        raise _Failure(f"not reversible: ({s},{i}) and ({t},{j}) have the same image")
    return a


def cmd_validate(args, out) -> int:
    a = _load(args.file)
    ok, witness = validate_reversible(a)
    if ok:
        out.write("reversible\n")
        return 0
    (s, i), (t, j) = witness
    out.write(f"irreversible: ({s},{i}) and ({t},{j}) -> ({a.delta[(s, i)]},{a.output[(s, i)]})\n")
    return 1


def cmd_matrix(args, out) -> int:
    out.write(format_matrix(automaton_to_matrix(_load_reversible(args.file))))
    return 0


def cmd_order(args, out) -> int:
    out.write(f"{order(automaton_to_matrix(_load_reversible(args.file)))}\n")
    return 0


def cmd_evolve(args, out) -> int:
    a = _load(args.file)
    c0 = parse_configuration(args.start) if args.start else Configuration(a.states[0], a.symbols[0])
    for n, c in enumerate(run(a, c0, args.steps)):
        out.write(f"N={n} {c}\n")
    return 0


def cmd_experiment(args, out) -> int:
    a = _load(args.file)
    word = parse_word(args.word)
    v = state_partition(a, word)
    out.write(f"v({format_word(word)}) = {v}\n")
    out.write(f"logic: {classify(build_logic(a.states, [v]))}\n")
    return 0


def cmd_logic(args, out) -> int:
    a = _load(args.file)
    parts = list(dict.fromkeys(partitions_up_to(a, args.maxlen).values()))
    for p in parts:
        out.write(f"partition: {p}\n")
    out.write(logic_report(build_logic(a.states, parts)))
    return 0


def cmd_dot(args, out) -> int:
    out.write(flow_dot(_load_reversible(args.file), args.steps))
    return 0


def cmd_birkhoff(args, out) -> int:
    dec = birkhoff_decompose(parse_rational_matrix(_read(args.file)))
    out.write(f"terms: {len(dec.terms)}\n")
    for k, (w, p) in enumerate(dec.terms, 1):
        out.write(f"term {k} weight={format_rational(w)}\n")
        out.write(format_matrix(p))
    return 0


def cmd_embed(args, out) -> int:
    emb = blackbox.reversible_embedding(_load(args.file))
    out.write(f"# reversible embedding with {emb.tags} tag(s); symbol x.t projects to x\n")
    out.write(format_automaton(emb.automaton))
    return 0


def cmd_blackbox(args, out) -> int:
    inner, outer = _load_reversible(args.inner), _load_reversible(args.outer)
    sys_ = blackbox.BlackBoxSystem.start(
        inner, outer,
        parse_configuration(args.inner_start) if args.inner_start else None,
        parse_configuration(args.outer_start) if args.outer_start else None,
    )
    initial = sys_
    inputs = parse_word(args.inputs)
    if args.bennett:
        for n, i in enumerate(inputs, 1):
            measured, lines = blackbox.measure_traced(sys_, i, True, n)
            sys_, undo_line = blackbox.undo_traced(measured, n, force=True)
            out.write("\n".join(lines + [undo_line]) + "\n")
        same = (sys_.inner_config, sys_.outer_config) == (initial.inner_config, initial.outer_config)
        out.write(f"record=[{','.join(sys_.record)}]\n")
        out.write(f"restored: {'yes' if same else 'no'}\n")
        return 0 if same else 1

    for n, i in enumerate(inputs, 1):
        sys_, lines = blackbox.measure_traced(sys_, i, args.copy, n)
        out.write("\n".join(lines) + "\n")
    if args.no_undo:
        return 0
    try:
        for n in range(len(inputs), 0, -1):
            sys_, line = blackbox.undo_traced(sys_, n)
            out.write(line + "\n")
    except CopyRetainedError as exc:
        raise _Failure(f"undo refused: {exc}") from None
    same = (sys_.inner_config, sys_.outer_config, sys_.record) == (
        initial.inner_config, initial.outer_config, initial.record)
    out.write(f"restored: {'yes' if same else 'no'}\n")
    return 0 if same else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="revmealy", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, file=True):
        p = sub.add_parser(name, help=help)
        if file:
            p.add_argument("file", help="automaton file, or - for stdin")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check one-to-one reversibility")
    add("matrix", cmd_matrix, "print the permutation matrix (rows are sources)")
    add("order", cmd_order, "print the order of the combined map")
    p = add("evolve", cmd_evolve, "print the fed-back trajectory")
    p.add_argument("--from", dest="start", help="initial configuration, e.g. '(s1,1)'")
    p.add_argument("--steps", type=int, default=1)
    p = add("experiment", cmd_experiment, "state partition for one input word")
    p.add_argument("--word", required=True, help="comma-separated symbols, e.g. 2,2,2,2")
    p = add("logic", cmd_logic, "partition logic of all words up to a length")
    p.add_argument("--maxlen", type=int, default=1)
    p = add("dot", cmd_dot, "DOT flow diagram of the configurations")
    p.add_argument("--steps", type=int, default=1)
    add("birkhoff", cmd_birkhoff, "decompose a rational doubly stochastic matrix")
    add("embed", cmd_embed, "reversible embedding of an arbitrary automaton")
    p = add("blackbox", cmd_blackbox, "measure an inner automaton through an outer one", file=False)
    p.add_argument("--inner", required=True)
    p.add_argument("--outer", required=True)
    p.add_argument("--inputs", required=True, help="comma-separated input symbols")
    p.add_argument("--inner-start")
    p.add_argument("--outer-start")
    p.add_argument("--copy", action="store_true", help="keep classical copies of the outcomes")
    p.add_argument("--bennett", action="store_true", help="copy each outcome, then reverse")
    p.add_argument("--no-undo", action="store_true", help="skip the final undo phase")
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (ParseError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except (_Failure, DomainError, AutomatonError) as exc:
        err.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
