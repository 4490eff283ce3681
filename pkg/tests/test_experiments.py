import itertools
import random

import pytest

from revmealy.automaton import identity_automaton
from revmealy.errors import DomainError, ParseError
from revmealy.experiments import (
    Partition,
    output_sequence,
    parse_word,
    partitions_up_to,
    state_partition,
)

from conftest import random_mealy


def P(*blocks):
    return Partition.from_blocks(blocks)


def test_output_sequence_examples(table2):
    assert output_sequence(table2, "s1", ["2", "2", "2"]) == ("2", "2", "1")
    assert output_sequence(table2, "s2", ["1"]) == ("1",)
    assert output_sequence(table2, "s3", []) == ()
    with pytest.raises(DomainError):
        output_sequence(table2, "s1", ["3"])
    with pytest.raises(DomainError):
        output_sequence(table2, "s4", ["1"])


def test_state_partition_examples(table2):
    assert state_partition(table2, ["1"]) == P({"s1"}, {"s2", "s3"})
    assert state_partition(table2, ["2"]) == P({"s1", "s3"}, {"s2"})
    assert state_partition(table2, parse_word("2,2,2,2")) == P({"s1"}, {"s2"}, {"s3"})
    with pytest.raises(DomainError):
        state_partition(table2, [])


def test_partitions_up_to_length_one(table2):
    parts = partitions_up_to(table2, 1)
    assert parts == {("1",): P({"s1"}, {"s2", "s3"}), ("2",): P({"s1", "s3"}, {"s2"})}


def test_repeated_ones_never_refine(table2):
    parts = partitions_up_to(table2, 6)
    for k in range(1, 7):
        assert parts[("1",) * k] == parts[("1",)]


def test_one_state_automaton_single_block():
    a = identity_automaton(["1", "2"])
    assert set(partitions_up_to(a, 3).values()) == {P({"s1"})}


def test_guard():
    with pytest.raises(DomainError):
        partitions_up_to(identity_automaton([str(k) for k in range(10)]), 7)
    with pytest.raises(DomainError):
        partitions_up_to(identity_automaton(["1"]), 0)


def _oracle_partition(a, word):
    def outs(s):
        seq = []
        for i in word:
            seq.append(a.output[(s, i)])
            s = a.delta[(s, i)]
        return seq

    blocks = []
    for s in a.states:
        for b in blocks:
            if outs(b[0]) == outs(s):
                b.append(s)
                break
        else:
            blocks.append([s])
    return Partition.from_blocks(blocks)


def test_partition_matches_pairwise_oracle():
    rng = random.Random(99)
    for _ in range(150):
        a = random_mealy(rng, rng.randint(1, 4), rng.randint(1, 3))
        for length in range(1, 5):
            word = [rng.choice(a.symbols) for _ in range(length)]
            assert state_partition(a, word) == _oracle_partition(a, word)


def test_prefix_refinement():
    rng = random.Random(4)
    for _ in range(100):
        a = random_mealy(rng, rng.randint(1, 4), rng.randint(1, 3))
        for u in itertools.product(a.symbols, repeat=2):
            for v in itertools.product(a.symbols, repeat=rng.randint(1, 2)):
                assert state_partition(a, u + v).refines(state_partition(a, u))


def test_partition_printing_and_validation(table2):
    assert str(state_partition(table2, ["2"])) == "{{s1,s3},{s2}}"
    with pytest.raises(DomainError):
        Partition.from_blocks([{"a", "b"}, {"b"}])
    with pytest.raises(DomainError):
        Partition.from_blocks([set()])


@pytest.mark.parametrize("text", ["", "1,,2", " , "])
def test_parse_word_rejects(text):
    with pytest.raises(ParseError):
        parse_word(text)
