"""Input-word experiments and the state partitions they induce."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .automaton import MealyAutomaton
from .errors import DomainError, ParseError

__all__ = [
    "Partition",
    "ExperimentRecord",
    "output_sequence",
    "run_experiment",
    "state_partition",
    "partitions_up_to",
    "parse_word",
    "format_word",
]

MAX_WORDS = 10**6


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks covering a state set.

    ``order`` fixes the canonical member order used for printing; it does
    not take part in equality.
    """

    blocks: frozenset[frozenset[str]]
    order: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        blocks = frozenset(frozenset(b) for b in self.blocks)
        if any(not b for b in blocks):
            raise DomainError("partition blocks must be nonempty")
        if sum(len(b) for b in blocks) != len(frozenset().union(*blocks)):
            raise DomainError("partition blocks overlap")
        order = tuple(self.order) or tuple(sorted(self.universe(blocks)))
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "order", order)

    @staticmethod
    def universe(blocks) -> frozenset[str]:
        return frozenset().union(*blocks)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[str]], order: Sequence[str] = ()) -> "Partition":
        return cls(frozenset(frozenset(b) for b in blocks), tuple(order))

    @property
    def states(self) -> frozenset[str]:
        return self.universe(self.blocks)

    def ordered_blocks(self) -> list[list[str]]:
        pos = {s: k for k, s in enumerate(self.order)}
        blocks = [sorted(b, key=pos.__getitem__) for b in self.blocks]
        return sorted(blocks, key=lambda b: pos[b[0]])

    def refines(self, other: "Partition") -> bool:
        """True if every block of ``self`` lies inside a block of ``other``."""
        return all(any(b <= c for c in other.blocks) for b in self.blocks)

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(b) + "}" for b in self.ordered_blocks()) + "}"


@dataclass(frozen=True)
class ExperimentRecord:
    word: tuple[str, ...]
    outputs: dict[str, tuple[str, ...]]


def output_sequence(a: MealyAutomaton, s0: str, word: Sequence[str]) -> tuple[str, ...]:
    if s0 not in a.state_index:
        raise DomainError(f"unknown state {s0!r}")
    s, out = s0, []
    for i in word:
        if i not in a.symbol_index:
            raise DomainError(f"unknown symbol {i!r}")
        out.append(a.output[(s, i)])
        s = a.delta[(s, i)]
    return tuple(out)


def run_experiment(a: MealyAutomaton, word: Sequence[str]) -> ExperimentRecord:
    word = tuple(word)
    return ExperimentRecord(word, {s: output_sequence(a, s, word) for s in a.states})


def state_partition(a: MealyAutomaton, word: Sequence[str]) -> Partition:
    """Group initial states by the output sequence they produce on ``word``."""
    if not word:
        raise DomainError("experiment word must be nonempty")
    groups: dict[tuple[str, ...], list[str]] = {}
    for s, seq in run_experiment(a, word).outputs.items():
        groups.setdefault(seq, []).append(s)
    return Partition.from_blocks(groups.values(), a.states)


def partitions_up_to(a: MealyAutomaton, max_len: int) -> dict[tuple[str, ...], Partition]:
    """``state_partition`` for every nonempty word of length at most ``max_len``.

    Keys are ordered by length, then lexicographically by symbol position.
    """
    if max_len < 1:
        raise DomainError("max_len must be at least 1")
    if len(a.symbols) ** max_len > MAX_WORDS:
        raise DomainError(f"{len(a.symbols)}**{max_len} words exceeds the {MAX_WORDS} guard")
    out = {}
    for length in range(1, max_len + 1):
        for word in itertools.product(a.symbols, repeat=length):
            out[word] = state_partition(a, word)
    return out


def parse_word(text: str) -> tuple[str, ...]:
    """``"2,2,2,2"`` -> ``("2", "2", "2", "2")``."""
    toks = tuple(t.strip() for t in text.split(","))
    if not text.strip() or not all(toks):
        raise ParseError(f"bad word {text!r}; expected comma-separated symbols")
    return toks


def format_word(word: Sequence[str]) -> str:
    return ",".join(word)
