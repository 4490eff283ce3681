"""Observer/observed split of a reversible system.

An *inner* automaton (the measured system) and an *outer* automaton (the
apparatus) share one symbol alphabet, the interface.  One measurement step
runs the inner automaton on the experimenter's input and then runs the outer
automaton on the symbol the inner one emitted.

Two regimes are modelled:

* one-to-one: interface symbols are not copied.  Every step can be undone
  by running the inverse automata backwards, which also withdraws the
  outcome from the apparatus.
* classical copy: each outcome is appended to ``record``.  A step whose copy
  is still on record cannot be undone; :func:`erase` must drop the copy
  first.  :func:`bennett_measure` measures, keeps the copy and reverses the
  evolution, restoring a fresh system.

Each step overwrites the symbol slot of both configurations.  The displaced
symbols are *moved* onto ``trail`` (not copied), so the joint update stays
injective and :func:`undo` restores the configurations exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .automaton import (
    Configuration,
    MealyAutomaton,
    identity_automaton,
    reverse,
    step,
    validate_reversible,
)
from .errors import CopyRetainedError, DomainError, IrreversibleError
from .experiments import Partition

__all__ = [
    "BlackBoxSystem",
    "measure",
    "undo",
    "erase",
    "bennett_measure",
    "bennett_experiment",
    "bennett_partitions",
    "trace_line",
    "measure_traced",
    "undo_traced",
    "Embedding",
    "reversible_embedding",
]


class _Displaced(NamedTuple):
    inner_symbol: str
    outer_symbol: str
    record_len: int  # record length before the step


@dataclass(frozen=True)
class BlackBoxSystem:
    inner: MealyAutomaton = field(repr=False)
    outer: MealyAutomaton = field(repr=False)
    inner_config: Configuration
    outer_config: Configuration
    record: tuple[str, ...] = ()
    trail: tuple[_Displaced, ...] = field(default=(), repr=False)

    def __post_init__(self):
        if set(self.inner.symbols) != set(self.outer.symbols):
            raise DomainError("inner and outer automata must share the interface alphabet")
        for name, a in (("inner", self.inner), ("outer", self.outer)):
            ok, witness = validate_reversible(a)
            if not ok:
                if witness is None:
                    raise DomainError(f"{name} automaton has a separate output alphabet")
                raise IrreversibleError(witness)
        object.__setattr__(self, "inner_config", self.inner.check_configuration(self.inner_config))
        object.__setattr__(self, "outer_config", self.outer.check_configuration(self.outer_config))
        object.__setattr__(self, "record", tuple(self.record))
        object.__setattr__(self, "trail", tuple(self.trail))

    @classmethod
    def start(cls, inner, outer, inner_config=None, outer_config=None) -> "BlackBoxSystem":
        """Fresh system; configurations default to (first state, first symbol)."""
        inner_config = inner_config or Configuration(inner.states[0], inner.symbols[0])
        outer_config = outer_config or Configuration(outer.states[0], outer.symbols[0])
        return cls(inner, outer, Configuration(*inner_config), Configuration(*outer_config))

    @property
    def steps_taken(self) -> int:
        return len(self.trail)

    @property
    def interface_symbol(self) -> str:
        """Symbol most recently emitted across the interface."""
        return self.inner_config.symbol


def _evolve(sys: BlackBoxSystem, **changes) -> BlackBoxSystem:
    # internal steps keep the system valid, so skip the constructor checks
    new = object.__new__(BlackBoxSystem)
    new.__dict__.update(sys.__dict__)
    new.__dict__.update(changes)
    return new


def measure(sys: BlackBoxSystem, input: str, copy: bool = False) -> BlackBoxSystem:
    if input not in sys.inner.symbol_index:
        raise DomainError(f"input {input!r} is not an interface symbol")
    inner = step(sys.inner, Configuration(sys.inner_config.state, input))
    outer = step(sys.outer, Configuration(sys.outer_config.state, inner.symbol))
    displaced = _Displaced(sys.inner_config.symbol, sys.outer_config.symbol, len(sys.record))
    return _evolve(
        sys,
        inner_config=inner,
        outer_config=outer,
        record=sys.record + (inner.symbol,) if copy else sys.record,
        trail=sys.trail + (displaced,),
    )


def _unstep(sys: BlackBoxSystem) -> tuple[BlackBoxSystem, str]:
    """Inverse of one measurement step; returns the system and the recovered input."""
    last = sys.trail[-1]
    t, o = step(reverse(sys.outer), sys.outer_config)
    if o != sys.inner_config.symbol:
        raise AssertionError("interface symbol mismatch while reversing")
    s, i = step(reverse(sys.inner), sys.inner_config)
    restored = _evolve(
        sys,
        inner_config=Configuration(s, last.inner_symbol),
        outer_config=Configuration(t, last.outer_symbol),
        trail=sys.trail[:-1],
    )
    return restored, i


def undo(sys: BlackBoxSystem, steps: int) -> BlackBoxSystem:
    """Run the last ``steps`` measurements backwards (outer first, then inner).

    Refuses while a copy of any outcome being undone is still on record.
    """
    if steps < 0 or steps > sys.steps_taken:
        raise DomainError(f"can undo 0..{sys.steps_taken} steps, not {steps}")
    for _ in range(steps):
        if len(sys.record) > sys.trail[-1].record_len:
            raise CopyRetainedError(
                "a copy of the outcome is still on record; erase it before undoing"
            )
        sys, _ = _unstep(sys)
    return sys


def erase(sys: BlackBoxSystem, count: int) -> BlackBoxSystem:
    """Delete the last ``count`` record entries."""
    if not 0 <= count <= len(sys.record):
        raise DomainError(f"record holds {len(sys.record)} entries, cannot erase {count}")
    return _evolve(sys, record=sys.record[: len(sys.record) - count])


def bennett_measure(sys: BlackBoxSystem, input: str) -> tuple[str, BlackBoxSystem]:
    """Measure with a classical copy, then reverse the evolution.

    The returned system has the original configurations and the outcome
    appended to its record.
    """
    measured = measure(sys, input, copy=True)
    outcome = measured.record[-1]
    restored, _ = _unstep(measured)
    return outcome, restored


def bennett_experiment(sys: BlackBoxSystem, word: Sequence[str]) -> tuple[tuple[str, ...], BlackBoxSystem]:
    """Copy every outcome of ``word``, then run the whole word backwards."""
    measured = sys
    for i in word:
        measured = measure(measured, i, copy=True)
    outcomes = measured.record[len(sys.record):]
    for _ in word:
        measured, _ = _unstep(measured)
    return outcomes, measured


def bennett_partitions(
    inner: MealyAutomaton,
    words: Sequence[Sequence[str]],
    outer: MealyAutomaton | None = None,
) -> list[Partition]:
    """Partitions of inner states obtained from Bennett-restored experiments.

    For each word the same fresh system (per initial state) is measured with
    copying; states are grouped by their recorded outcomes.
    """
    outer = outer or identity_automaton(inner.symbols)
    out = []
    for word in words:
        groups: dict[tuple[str, ...], list[str]] = {}
        for s in inner.states:
            sys = BlackBoxSystem.start(inner, outer, Configuration(s, inner.symbols[0]))
            outcomes, restored = bennett_experiment(sys, word)
            if (restored.inner_config, restored.outer_config) != (sys.inner_config, sys.outer_config):
                raise AssertionError("Bennett reversal did not restore the system")
            groups.setdefault(outcomes, []).append(s)
        out.append(Partition.from_blocks(groups.values(), inner.states))
    return out


def trace_line(n: int, phase: str, in_sym: str, out_sym: str,
               inner: Configuration, outer: Configuration, record: Sequence[str]) -> str:
    return (
        f"step={n} phase={phase} in={in_sym} out={out_sym} "
        f"inner={inner} outer={outer} record=[{','.join(record)}]"
    )


def measure_traced(sys: BlackBoxSystem, input: str, copy: bool, n: int) -> tuple[BlackBoxSystem, list[str]]:
    """:func:`measure` plus one trace line per phase."""
    after = measure(sys, input, copy)
    o = after.inner_config.symbol
    return after, [
        trace_line(n, "inner", input, o, after.inner_config, sys.outer_config, sys.record),
        trace_line(n, "outer", o, after.outer_config.symbol, after.inner_config,
                   after.outer_config, after.record),
    ]


def undo_traced(sys: BlackBoxSystem, n: int, force: bool = False) -> tuple[BlackBoxSystem, str]:
    """Undo one step; ``force`` skips the copy check (Bennett reversal)."""
    o = sys.inner_config.symbol
    if force:
        before, i = _unstep(sys)
    else:
        before = undo(sys, 1)
        i = step(reverse(sys.inner), sys.inner_config).symbol
    return before, trace_line(n, "undo", o, i, before.inner_config, before.outer_config, before.record)


# -- reversible embedding of arbitrary Mealy automata ------------------------

@dataclass(frozen=True)
class Embedding:
    """Reversible automaton simulating an arbitrary one.

    ``encode`` maps an original input symbol to the embedded symbol fed in
    its place; ``projection`` maps every embedded configuration back to an
    original ``(state, symbol)`` pair.
    """

    automaton: MealyAutomaton
    projection: dict[Configuration, Configuration]
    encode: dict[str, str]
    tags: int

    def project_run(self, s0: str, word: Sequence[str]) -> list[Configuration]:
        s, out = s0, []
        for i in word:
            c = step(self.automaton, Configuration(s, self.encode[i]))
            out.append(self.projection[c])
            s = c.state
        return out


def _tag(symbol: str, t: int) -> str:
    return f"{symbol}.{t}"


def reversible_embedding(a: MealyAutomaton) -> Embedding:
    """Embed ``a`` into a reversible automaton by tagging its outputs.

    Symbols become ``x.t`` with ``x`` from the input and output alphabets and
    ``t`` a tag below the largest preimage count ``T`` of the combined map.
    Cell ``(s, i.0)`` goes to ``(delta(s, i), lambda(s, i).k)`` where ``k``
    ranks ``(s, i)`` among the cells sharing that image; the remaining
    cells are paired with the remaining configurations in canonical order.
    The tag is the trail marker that lets the step be inverted.
    """
    alphabet = list(a.symbols) + [o for o in a.outputs if o not in a.symbol_index]
    preimages: dict[tuple[str, str], list[tuple[str, str]]] = {}
    for c in a.configurations():
        preimages.setdefault((a.delta[c], a.output[c]), []).append(c)
    tags = max(len(v) for v in preimages.values())

    symbols = tuple(_tag(x, t) for x in alphabet for t in range(tags))
    sources = [(s, x) for s in a.states for x in symbols]
    lifted: dict[tuple[str, str], tuple[str, str]] = {}
    for (t_state, o), cells in preimages.items():
        for k, (s, i) in enumerate(cells):
            lifted[(s, _tag(i, 0))] = (t_state, _tag(o, k))
    taken = set(lifted.values())
    free_targets = (c for c in sources if c not in taken)
    for src in sources:
        if src not in lifted:
            lifted[src] = next(free_targets)

    embedded = MealyAutomaton(
        a.states, symbols,
        {c: lifted[c][0] for c in sources},
        {c: lifted[c][1] for c in sources},
    )
    untag = {_tag(x, t): x for x in alphabet for t in range(tags)}
    projection = {Configuration(s, x): Configuration(s, untag[x]) for s, x in sources}
    encode = {i: _tag(i, 0) for i in a.symbols}
    return Embedding(embedded, projection, encode, tags)
