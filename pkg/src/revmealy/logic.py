"""Partition logics: Boolean block algebras pasted together.

Each partition of the state set generates the Boolean algebra of all unions
of its blocks.  The logic is the set-theoretic union of these algebras, with
shared elements identified.  Its order is the pasting order: ``a <= b`` when
some generating algebra contains both with ``a`` a subset of ``b`` (closed
under transitivity).  Two sets from different algebras that merely happen to
be nested are *not* comparable; this is what makes two incompatible
two-block partitions of three states paste into MO_2 rather than a hexagon.

``order="inclusion"`` switches to plain subset order on the same set of
propositions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DomainError, NotALatticeError
from .experiments import Partition

__all__ = [
    "PartitionLogic",
    "build_logic",
    "is_lattice",
    "is_distributive",
    "is_boolean",
    "is_mo",
    "classify",
    "format_proposition",
    "logic_report",
]

Prop = frozenset


def _block_algebra(p: Partition) -> set[Prop]:
    blocks = list(p.blocks)
    return {
        frozenset().union(*combo)
        for k in range(len(blocks) + 1)
        for combo in itertools.combinations(blocks, k)
    }


@dataclass(frozen=True)
class PartitionLogic:
    universe: tuple[str, ...]
    partitions: tuple[Partition, ...]
    propositions: frozenset[Prop] = field(init=False)
    order: str = "pasting"

    def __post_init__(self):
        if self.order not in ("pasting", "inclusion"):
            raise ValueError(f"unknown order {self.order!r}")
        props = {frozenset(), frozenset(self.universe)}
        for alg in self._algebras:
            props |= alg
        object.__setattr__(self, "propositions", frozenset(props))

    @cached_property
    def _algebras(self) -> list[set[Prop]]:
        return [_block_algebra(p) for p in self.partitions]

    @cached_property
    def sorted_propositions(self) -> list[Prop]:
        pos = {s: k for k, s in enumerate(self.universe)}
        return sorted(self.propositions, key=lambda p: (len(p), sorted(pos[s] for s in p)))

    @cached_property
    def _up(self) -> dict[Prop, frozenset[Prop]]:
        """``_up[a]`` = all ``b`` with ``a <= b``."""
        props = self.sorted_propositions
        top, bottom = frozenset(self.universe), frozenset()
        if self.order == "inclusion":
            return {a: frozenset(b for b in props if a <= b) for a in props}
        edges: dict[Prop, set[Prop]] = {a: {a, top} for a in props}
        edges[bottom] = set(props)
        for alg in self._algebras:
            for a in alg:
                edges[a].update(b for b in alg if a <= b)
        # transitive closure; edges only ever go to supersets
        up = {}
        for a in reversed(props):
            reach = set(edges[a])
            for b in edges[a]:
                if b != a:
                    reach |= up[b]
            up[a] = frozenset(reach)
        return up

    def leq(self, a: Iterable[str], b: Iterable[str]) -> bool:
        a, b = frozenset(a), frozenset(b)
        self._require(a, b)
        return b in self._up[a]

    def complement(self, a: Iterable[str]) -> Prop:
        return frozenset(self.universe) - frozenset(a)

    def _require(self, *ps: Prop):
        for p in ps:
            if p not in self.propositions:
                raise DomainError(f"{format_proposition(p, self.universe)} is not a proposition")

    def join(self, a: Iterable[str], b: Iterable[str]) -> Prop:
        a, b = frozenset(a), frozenset(b)
        self._require(a, b)
        upper = self._up[a] & self._up[b]
        least = [c for c in upper if upper <= self._up[c]]
        if len(least) != 1:
            raise NotALatticeError("join", (self.fmt(a), self.fmt(b)))
        return least[0]

    def meet(self, a: Iterable[str], b: Iterable[str]) -> Prop:
        a, b = frozenset(a), frozenset(b)
        self._require(a, b)
        lower = [c for c in self.propositions if a in self._up[c] and b in self._up[c]]
        greatest = [c for c in lower if all(c in self._up[d] for d in lower)]
        if len(greatest) != 1:
            raise NotALatticeError("meet", (self.fmt(a), self.fmt(b)))
        return greatest[0]

    def fmt(self, p: Iterable[str]) -> str:
        return format_proposition(p, self.universe)


def build_logic(
    universe: Sequence[str], parts: Iterable[Partition], order: str = "pasting"
) -> PartitionLogic:
    universe = tuple(universe)
    full = frozenset(universe)
    if len(full) != len(universe):
        raise DomainError("duplicate state in universe")
    unique: list[Partition] = []
    for p in parts:
        if p.states != full:
            raise DomainError(f"partition {p} does not cover the universe")
        if p not in unique:
            unique.append(p)
    return PartitionLogic(universe, tuple(unique), order=order)


def is_lattice(l: PartitionLogic) -> tuple[bool, NotALatticeError | None]:
    props = l.sorted_propositions
    for a, b in itertools.combinations(props, 2):
        try:
            l.join(a, b)
            l.meet(a, b)
        except NotALatticeError as exc:
            return False, exc
    return True, None


def _check_lattice(l: PartitionLogic) -> None:
    ok, exc = is_lattice(l)
    if not ok:
        raise exc


def is_distributive(l: PartitionLogic) -> tuple[bool, tuple[Prop, Prop, Prop] | None]:
    """Exhaustive check of ``a & (b | c) == (a & b) | (a & c)``.

    Returns the first violating triple ``(a, b, c)`` in canonical order.
    Raises :class:`NotALatticeError` if joins or meets are not unique.
    """
    _check_lattice(l)
    props = l.sorted_propositions
    for a, b, c in itertools.product(props, repeat=3):
        if l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)):
            return False, (a, b, c)
    return True, None


def is_boolean(l: PartitionLogic) -> bool:
    distributive, _ = is_distributive(l)
    if not distributive:
        return False
    top, bottom = frozenset(l.universe), frozenset()
    for a in l.propositions:
        c = l.complement(a)
        if c not in l.propositions or l.join(a, c) != top or l.meet(a, c) != bottom:
            return False
    return True


def is_mo(l: PartitionLogic) -> int | None:
    """``n`` if the logic is MO_n (``n >= 2``), else ``None``.

    MO_n here: bottom, top, and ``n`` complementary pairs, with no element
    of one pair comparable to an element of another.
    """
    top, bottom = frozenset(l.universe), frozenset()
    middle = [p for p in l.sorted_propositions if p not in (top, bottom)]
    if not middle or len(middle) % 2:
        return None
    pair_of = {}
    for p in middle:
        c = l.complement(p)
        if c not in l.propositions or c in (top, bottom):
            return None
        pair_of[p] = frozenset((p, c))
    for p, q in itertools.combinations(middle, 2):
        if pair_of[p] != pair_of[q] and (l.leq(p, q) or l.leq(q, p)):
            return None
    n = len(middle) // 2
    return n if n >= 2 else None


def format_proposition(p: Iterable[str], universe: Sequence[str]) -> str:
    pos = {s: k for k, s in enumerate(universe)}
    return "{" + ",".join(sorted(p, key=pos.__getitem__)) + "}"


def classify(l: PartitionLogic) -> str:
    """One-line verdict, e.g. ``"MO_2, nondistributive"`` or ``"Boolean"``."""
    ok, _ = is_lattice(l)
    if not ok:
        return "not a lattice"
    if is_boolean(l):
        return "Boolean"
    n = is_mo(l)
    distributive, _ = is_distributive(l)
    kind = "distributive" if distributive else "nondistributive"
    return f"MO_{n}, {kind}" if n else f"non-Boolean, {kind}"


def logic_report(l: PartitionLogic) -> str:
    props = l.sorted_propositions
    lines = [f"propositions ({len(props)}):"]
    lines += [f"  {l.fmt(p)}" for p in props]
    ok, exc = is_lattice(l)
    lines.append("lattice: yes" if ok else f"lattice: no ({exc})")
    if ok:
        distributive, witness = is_distributive(l)
        if distributive:
            lines.append("distributive: yes")
        else:
            a, b, c = (l.fmt(x) for x in witness)
            lines.append(f"distributive: no (a={a}, b={b}, c={c})")
        lines.append(f"boolean: {'yes' if is_boolean(l) else 'no'}")
    n = is_mo(l)
    lines.append(f"MO_n: {'MO_' + str(n) if n else 'no'}")
    lines.append(f"classification: {classify(l)}")
    return "\n".join(lines) + "\n"
