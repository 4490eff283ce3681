import itertools
import random

import pytest

from revmealy.automaton import (
    Configuration,
    MealyAutomaton,
    identity_automaton,
    validate_reversible,
)
from revmealy.blackbox import (
    BlackBoxSystem,
    bennett_experiment,
    bennett_measure,
    bennett_partitions,
    erase,
    measure,
    measure_traced,
    reversible_embedding,
    undo,
)
from revmealy.errors import CopyRetainedError, DomainError, IrreversibleError
from revmealy.experiments import state_partition
from revmealy.logic import build_logic, is_mo

from conftest import load, random_mealy, random_reversible

C = Configuration


@pytest.fixture
def swap_outer():
    return load("swap.aut")


def fresh(inner, outer, s="s1"):
    return BlackBoxSystem.start(inner, outer, C(s, "1"), C(outer.states[0], "1"))


def test_measure_sends_output_across_interface(table2, swap_outer):
    sys = measure(fresh(table2, swap_outer), "1")
    assert sys.inner_config == C("s1", "2")
    assert sys.interface_symbol == "2"
    # the outer swap automaton received 2 and emitted 1
    assert sys.outer_config == C("s1", "1")
    assert sys.record == ()


def test_copy_appends_one_symbol_per_call(table2, swap_outer):
    sys = fresh(table2, swap_outer)
    for k, i in enumerate("1221", 1):
        sys = measure(sys, i, copy=True)
        assert len(sys.record) == k


def test_copy_flag_does_not_change_configurations(table2):
    rng = random.Random(0)
    outer = random_reversible(rng, 3, 2)
    a = b = fresh(table2, outer)
    for i in "12212112":
        a, b = measure(a, i, copy=True), measure(b, i, copy=False)
        assert (a.inner_config, a.outer_config) == (b.inner_config, b.outer_config)


def test_alphabet_mismatch(table2):
    with pytest.raises(DomainError):
        fresh(table2, identity_automaton(["1", "2", "3"]))
    with pytest.raises(DomainError):
        measure(fresh(table2, identity_automaton(["1", "2"])), "3")


def test_irreversible_parts_rejected(table2):
    with pytest.raises(IrreversibleError):
        fresh(table2, load("constant.aut"))


def test_measure_then_undo_restores(table2, swap_outer):
    sys0 = fresh(table2, swap_outer, "s3")
    assert undo(measure(sys0, "2"), 1) == sys0
    assert undo(sys0, 0) == sys0


def test_undo_after_four_measures(table2):
    outer = random_reversible(random.Random(5), 2, 2)
    sys0 = BlackBoxSystem.start(table2, outer, C("s2", "2"), C("s2", "1"))
    sys = sys0
    for i in "2121":
        sys = measure(sys, i)
    assert sys.inner_config != sys0.inner_config or sys.outer_config != sys0.outer_config
    back = undo(sys, 4)
    assert (back.inner_config, back.outer_config, back.record) == (
        sys0.inner_config, sys0.outer_config, sys0.record)


def test_undo_refuses_while_copies_exist(table2, swap_outer):
    sys = measure(measure(fresh(table2, swap_outer), "1", copy=True), "2", copy=True)
    with pytest.raises(CopyRetainedError):
        undo(sys, 1)
    sys = erase(sys, 1)
    one_back = undo(sys, 1)
    with pytest.raises(CopyRetainedError):
        undo(one_back, 1)
    assert undo(erase(one_back, 1), 1).inner_config == C("s1", "1")


def test_undo_bounds(table2, swap_outer):
    sys = measure(fresh(table2, swap_outer), "1")
    with pytest.raises(DomainError):
        undo(sys, 2)
    with pytest.raises(DomainError):
        erase(sys, 1)


def test_one_to_one_measure_undo_is_identity():
    rng = random.Random(17)
    for _ in range(200):
        m = rng.randint(1, 3)
        inner = random_reversible(rng, rng.randint(1, 4), m)
        outer = random_reversible(rng, rng.randint(1, 3), m)
        sys0 = BlackBoxSystem.start(
            inner, outer,
            C(rng.choice(inner.states), rng.choice(inner.symbols)),
            C(rng.choice(outer.states), rng.choice(outer.symbols)),
        )
        word = [rng.choice(inner.symbols) for _ in range(rng.randint(0, 8))]
        sys = sys0
        for i in word:
            sys = measure(sys, i)
        assert undo(sys, len(word)) == sys0


def test_bennett_example(table2, swap_outer):
    sys0 = fresh(table2, swap_outer)
    outcome, restored = bennett_measure(sys0, "1")
    assert outcome == "2"
    assert (restored.inner_config, restored.outer_config) == (sys0.inner_config, sys0.outer_config)
    assert restored.record == ("2",)
    again, restored2 = bennett_measure(restored, "1")
    assert again == outcome and restored2.record == ("2", "2")


def test_bennett_with_identity_inner_echoes_input():
    ident = identity_automaton(["1", "2", "3"])
    for i in "123":
        outcome, _ = bennett_measure(BlackBoxSystem.start(ident, ident), i)
        assert outcome == i


def test_bennett_matches_copying_measure():
    rng = random.Random(23)
    for _ in range(100):
        inner = random_reversible(rng, 3, 2)
        outer = random_reversible(rng, 2, 2)
        sys0 = BlackBoxSystem.start(inner, outer, C(rng.choice(inner.states), "1"))
        i = rng.choice(inner.symbols)
        outcome, restored = bennett_measure(sys0, i)
        assert outcome == measure(sys0, i, copy=True).record[-1]
        assert (restored.inner_config, restored.outer_config) == (sys0.inner_config, sys0.outer_config)


def test_bennett_partitions_reproduce_mo2(table2, swap_outer):
    parts = bennett_partitions(table2, [("1",), ("2",)], swap_outer)
    assert parts == [state_partition(table2, ["1"]), state_partition(table2, ["2"])]
    assert is_mo(build_logic(table2.states, parts)) == 2
    outcomes, restored = bennett_experiment(fresh(table2, swap_outer, "s2"), "2222")
    assert outcomes == ("1", "2", "2", "1")
    assert restored.inner_config == C("s2", "1")


def test_traced_measure_lines(table2, swap_outer):
    _, lines = measure_traced(fresh(table2, swap_outer), "1", True, 1)
    assert lines == [
        "step=1 phase=inner in=1 out=2 inner=(s1,2) outer=(s1,1) record=[]",
        "step=1 phase=outer in=2 out=1 inner=(s1,2) outer=(s1,1) record=[2]",
    ]


# -- embedding ---------------------------------------------------------------

def _original_run(a, s, word):
    out = []
    for i in word:
        out.append(C(a.delta[(s, i)], a.output[(s, i)]))
        s = a.delta[(s, i)]
    return out


def test_embedding_of_reversible_is_tagging(table1):
    emb = reversible_embedding(table1)
    assert emb.tags == 1
    assert emb.automaton.symbols == ("1.0", "2.0")
    for c in table1.configurations():
        tagged = C(c.state, c.symbol + ".0")
        img = (emb.automaton.delta[tagged], emb.automaton.output[tagged])
        assert img == (table1.delta[c], table1.output[c] + ".0")


def test_embedding_two_to_one():
    a = MealyAutomaton(["s1"], ["1", "2"], {("s1", "1"): "s1", ("s1", "2"): "s1"},
                       {("s1", "1"): "1", ("s1", "2"): "1"})
    assert not validate_reversible(a)[0]
    emb = reversible_embedding(a)
    assert validate_reversible(emb.automaton)[0]
    for i in "12":
        assert emb.project_run("s1", [i]) == [C("s1", "1")]


def test_embedding_with_separate_output_alphabet():
    a = MealyAutomaton(["p", "q"], ["x"], {("p", "x"): "q", ("q", "x"): "q"},
                       {("p", "x"): "y", ("q", "x"): "y"}, outputs=["y"])
    emb = reversible_embedding(a)
    assert validate_reversible(emb.automaton)[0]
    assert emb.project_run("p", "xxx") == [C("q", "y")] * 3


def test_embedding_random_irreversible():
    rng = random.Random(31)
    seen = 0
    while seen < 100:
        a = random_mealy(rng, 3, 2)
        if validate_reversible(a)[0]:
            continue
        seen += 1
        emb = reversible_embedding(a)
        assert validate_reversible(emb.automaton)[0]
        for length in range(1, 6):
            for word in itertools.product(a.symbols, repeat=length):
                for s in a.states:
                    assert emb.project_run(s, word) == _original_run(a, s, word)
