"""Translate between reversible automata and permutations.

Configurations are laid out state-major: ``(s1,1), (s1,2), (s2,1), ...``.
"""

from __future__ import annotations

from typing import Sequence

from .automaton import Configuration, MealyAutomaton, validate_reversible
from .errors import DomainError, IrreversibleError
from .permutation import Permutation

__all__ = [
    "linear_index",
    "configuration_at",
    "automaton_to_matrix",
    "matrix_to_one_state_automaton",
    "matrix_to_automaton",
]


def linear_index(a: MealyAutomaton, c: Configuration) -> int:
    s, i = a.check_configuration(c)
    return a.state_index[s] * len(a.symbols) + a.symbol_index[i]


def configuration_at(a: MealyAutomaton, index: int) -> Configuration:
    if not 0 <= index < a.size:
        raise DomainError(f"index {index} outside 0..{a.size - 1}")
    q, r = divmod(index, len(a.symbols))
    return Configuration(a.states[q], a.symbols[r])


def automaton_to_matrix(a: MealyAutomaton) -> Permutation:
    ok, witness = validate_reversible(a)
    if not ok:
        if witness is None:
            raise DomainError("output alphabet differs from input alphabet")
        raise IrreversibleError(witness)
    target = [0] * a.size
    for c in a.configurations():
        image = Configuration(a.delta[c], a.output[c])
        target[linear_index(a, c)] = linear_index(a, image)
    return Permutation(tuple(target))


def matrix_to_automaton(
    p: Permutation,
    num_states: int,
    num_symbols: int,
    states: Sequence[str] | None = None,
    symbols: Sequence[str] | None = None,
) -> MealyAutomaton:
    """Read an automaton off ``p`` by splitting indices as ``state * m + symbol``.

    Tokens default to ``s1..sk`` and ``1..m``.
    """
    if num_states < 1 or num_symbols < 1 or num_states * num_symbols != p.n:
        raise DomainError(
            f"{num_states} states x {num_symbols} symbols does not factor degree {p.n}"
        )
    states = tuple(states) if states is not None else tuple(f"s{k + 1}" for k in range(num_states))
    symbols = tuple(symbols) if symbols is not None else tuple(str(k + 1) for k in range(num_symbols))
    if len(states) != num_states or len(symbols) != num_symbols:
        raise DomainError("token lists do not match the requested factorization")
    delta, output = {}, {}
    for src, dst in enumerate(p.target):
        q, r = divmod(src, num_symbols)
        tq, tr = divmod(dst, num_symbols)
        delta[(states[q], symbols[r])] = states[tq]
        output[(states[q], symbols[r])] = symbols[tr]
    return MealyAutomaton(states, symbols, delta, output)


def matrix_to_one_state_automaton(p: Permutation) -> MealyAutomaton:
    """The trivial realization: one state, ``n`` symbols, output = image."""
    return matrix_to_automaton(p, 1, p.n)
