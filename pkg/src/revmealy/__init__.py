"""One-to-one reversible Mealy automata, their permutation matrices, and
the partition logics of state-identification experiments."""

from .automaton import (
    Configuration,
    MealyAutomaton,
    format_automaton,
    identity_automaton,
    parse_automaton,
    reverse,
    run,
    step,
    validate_reversible,
)
from .blackbox import (
    BlackBoxSystem,
    bennett_measure,
    erase,
    measure,
    reversible_embedding,
    undo,
)
from .correspondence import (
    automaton_to_matrix,
    linear_index,
    matrix_to_automaton,
    matrix_to_one_state_automaton,
)
from .experiments import Partition, output_sequence, partitions_up_to, state_partition
from .logic import build_logic, is_boolean, is_distributive, is_mo
from .permutation import (
    ConfigurationVector,
    Permutation,
    apply,
    birkhoff_decompose,
    compose,
    enumerate_permutations,
    inverse,
    is_doubly_stochastic,
    order,
)

__version__ = "0.1.0"
