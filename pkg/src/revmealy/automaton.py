"""Mealy automata with a combined (state, symbol) evolution map.

A configuration is a pair ``(state, symbol)``.  One evolution step feeds the
current symbol in as input and replaces the configuration with
``(delta(s, i), output(s, i))``, so that the emitted symbol becomes the next
input.  When that combined map is a bijection on ``states x symbols`` the
automaton is reversible and :func:`reverse` builds its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Mapping, NamedTuple, Sequence

from .errors import DomainError, IrreversibleError, MalformedTableError, ParseError

__all__ = [
    "Configuration",
    "MealyAutomaton",
    "validate_reversible",
    "step",
    "run",
    "reverse",
    "identity_automaton",
    "parse_automaton",
    "format_automaton",
    "parse_configuration",
]

Cell = tuple[str, str]


class Configuration(NamedTuple):
    state: str
    symbol: str

    def __str__(self) -> str:
        return f"({self.state},{self.symbol})"


@dataclass(frozen=True)
class MealyAutomaton:
    """Finite Mealy automaton.

    ``delta`` and ``output`` map every ``(state, input)`` cell to the next
    state and the emitted symbol.  ``outputs`` is the output alphabet; it
    defaults to ``symbols`` and may only differ for automata that are meant
    to be fed to :func:`revmealy.blackbox.reversible_embedding`.
    """

    states: tuple[str, ...]
    symbols: tuple[str, ...]
    delta: Mapping[Cell, str] = field(repr=False)
    output: Mapping[Cell, str] = field(repr=False)
    outputs: tuple[str, ...] | None = None

    def __post_init__(self):
        states = tuple(self.states)
        symbols = tuple(self.symbols)
        outputs = symbols if self.outputs is None else tuple(self.outputs)
        for name, toks in (("states", states), ("symbols", symbols), ("outputs", outputs)):
            if not toks:
                raise MalformedTableError(f"{name} must be nonempty")
            if len(set(toks)) != len(toks):
                raise MalformedTableError(f"duplicate token in {name}")
        delta = dict(self.delta)
        output = dict(self.output)
        state_set, out_set = set(states), set(outputs)
        for s in states:
            for i in symbols:
                if (s, i) not in delta:
                    raise MalformedTableError(f"missing transition for ({s},{i})", (s, i))
                if (s, i) not in output:
                    raise MalformedTableError(f"missing output for ({s},{i})", (s, i))
                if delta[(s, i)] not in state_set:
                    raise MalformedTableError(
                        f"transition ({s},{i}) targets unknown state {delta[(s, i)]!r}", (s, i)
                    )
                if output[(s, i)] not in out_set:
                    raise MalformedTableError(
                        f"output ({s},{i}) is unknown symbol {output[(s, i)]!r}", (s, i)
                    )
        n_cells = len(states) * len(symbols)
        if len(delta) != n_cells or len(output) != n_cells:
            raise MalformedTableError("table contains cells outside states x symbols")
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "outputs", outputs)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "output", output)

    @property
    def size(self) -> int:
        """Number of configurations, ``|S| * |I|``."""
        return len(self.states) * len(self.symbols)

    def configurations(self) -> Iterator[Configuration]:
        """All configurations in state-major order."""
        for s in self.states:
            for i in self.symbols:
                yield Configuration(s, i)

    def check_configuration(self, c: Configuration) -> Configuration:
        c = Configuration(*c)
        if c.state not in self.state_index:
            raise DomainError(f"unknown state {c.state!r}")
        if c.symbol not in self.symbol_index:
            raise DomainError(f"unknown symbol {c.symbol!r}")
        return c

    @cached_property
    def state_index(self) -> dict[str, int]:
        return {s: k for k, s in enumerate(self.states)}

    @cached_property
    def symbol_index(self) -> dict[str, int]:
        return {i: k for k, i in enumerate(self.symbols)}

    @cached_property
    def _collision(self) -> tuple[Cell, Cell] | None:
        seen: dict[Cell, Cell] = {}
        for s, i in self.configurations():
            image = (self.delta[(s, i)], self.output[(s, i)])
            if image in seen:
                return seen[image], (s, i)
            seen[image] = (s, i)
        return None

    @cached_property
    def _reversed(self) -> "MealyAutomaton":
        return _build_reverse(self)

    @property
    def is_reversible(self) -> bool:
        return self.outputs == self.symbols and self._collision is None


def validate_reversible(a: MealyAutomaton) -> tuple[bool, tuple[Cell, Cell] | None]:
    """Check that the combined map is one-to-one.

    Returns ``(True, None)`` or ``(False, (c1, c2))`` where ``c1 != c2`` are
    cells with the same image.  An automaton whose output alphabet differs
    from its input alphabet cannot be reversible in this sense; it is
    reported with ``None`` as witness.
    """
    if a.outputs != a.symbols:
        return False, None
    witness = a._collision
    return witness is None, witness


def step(a: MealyAutomaton, c: Configuration) -> Configuration:
    s, i = a.check_configuration(c)
    return Configuration(a.delta[(s, i)], a.output[(s, i)])


def run(a: MealyAutomaton, c0: Configuration, n: int) -> list[Configuration]:
    """Trajectory ``[c0, U c0, ..., U^n c0]`` of the fed-back evolution."""
    if n < 0:
        raise DomainError("step count must be nonnegative")
    traj = [a.check_configuration(c0)]
    for _ in range(n):
        traj.append(step(a, traj[-1]))
    return traj


def reverse(a: MealyAutomaton) -> MealyAutomaton:
    """Automaton whose combined map is the inverse bijection of ``a``'s."""
    return a._reversed


def _build_reverse(a: MealyAutomaton) -> MealyAutomaton:
    ok, witness = validate_reversible(a)
    if not ok:
        if witness is None:
            raise DomainError("output alphabet differs from input alphabet")
        raise IrreversibleError(witness)
    delta, output = {}, {}
    for s, i in a.configurations():
        image = (a.delta[(s, i)], a.output[(s, i)])
        delta[image] = s
        output[image] = i
    return MealyAutomaton(a.states, a.symbols, delta, output)


def identity_automaton(symbols: Sequence[str], state: str = "s1") -> MealyAutomaton:
    """One-state automaton that echoes its input."""
    return MealyAutomaton(
        (state,), tuple(symbols),
        {(state, i): state for i in symbols},
        {(state, i): i for i in symbols},
    )


# -- text format ------------------------------------------------------------

def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_automaton(text: str) -> MealyAutomaton:
    """Parse the line-oriented automaton format.

    ::

        states: s1 s2
        symbols: 1 2
        s1 1 -> s2 1
        ...

    Every ``(state, symbol)`` cell must appear exactly once and emitted
    symbols must belong to the single shared alphabet.
    """
    lines = list(_content_lines(text))
    if len(lines) < 2:
        raise ParseError("expected 'states:' and 'symbols:' header lines", len(text.splitlines()) or 1)
    headers = {}
    for (lineno, toks), key in zip(lines[:2], ("states:", "symbols:")):
        if toks[0] != key:
            raise ParseError(f"expected {key!r} header", lineno)
        if len(toks) < 2:
            raise ParseError(f"{key} list is empty", lineno)
        if len(set(toks[1:])) != len(toks) - 1:
            raise ParseError(f"duplicate token in {key} list", lineno)
        headers[key] = tuple(toks[1:])
    states, symbols = headers["states:"], headers["symbols:"]
    state_set, symbol_set = set(states), set(symbols)

    delta: dict[Cell, str] = {}
    output: dict[Cell, str] = {}
    for lineno, toks in lines[2:]:
        if len(toks) != 5 or toks[2] != "->":
            raise ParseError("expected '<state> <symbol> -> <state> <symbol>'", lineno)
        s, i, _, t, o = toks
        for tok, pool, what in ((s, state_set, "state"), (t, state_set, "state"),
                                (i, symbol_set, "symbol"), (o, symbol_set, "symbol")):
            if tok not in pool:
                raise ParseError(f"unknown {what} {tok!r}", lineno)
        if (s, i) in delta:
            raise ParseError(f"cell ({s},{i}) given twice", lineno)
        delta[(s, i)] = t
        output[(s, i)] = o
    last = lines[-1][0]
    for s in states:
        for i in symbols:
            if (s, i) not in delta:
                raise ParseError(f"missing cell ({s},{i})", last)
    return MealyAutomaton(states, symbols, delta, output)


def format_automaton(a: MealyAutomaton) -> str:
    if a.outputs != a.symbols:
        raise DomainError("the text format requires a single shared alphabet")
    out = [f"states: {' '.join(a.states)}", f"symbols: {' '.join(a.symbols)}"]
    for s, i in a.configurations():
        out.append(f"{s} {i} -> {a.delta[(s, i)]} {a.output[(s, i)]}")
    return "\n".join(out) + "\n"


def parse_configuration(text: str) -> Configuration:
    """Read ``"(s1,1)"`` or ``"s1,1"``."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = [p.strip() for p in body.split(",")]
    if len(parts) != 2 or not all(parts):
        raise ParseError(f"bad configuration {text!r}; expected '(state,symbol)'")
    return Configuration(*parts)

