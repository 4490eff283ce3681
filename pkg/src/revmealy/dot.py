"""Graphviz DOT rendering of configuration flow diagrams."""

from __future__ import annotations

from .automaton import MealyAutomaton, step
from .correspondence import linear_index
from .errors import DomainError


def _quote(s: str) -> str:
    return '"{}"'.format(s.replace("\\", "\\\\").replace('"', r"\""))


def flow_dot(a: MealyAutomaton, steps: int = 1) -> str:
    """DOT digraph of the combined map.

    With ``steps=1`` there is one node per configuration and one edge per
    transition.  For ``steps > 1`` the flow is unrolled into ``steps + 1``
    layers, one copy of every configuration per time step, with edges
    between consecutive layers.
    """
    if steps < 1:
        raise DomainError("steps must be at least 1")
    configs = list(a.configurations())
    lines = ["digraph flow {"]
    if steps == 1:
        for c in configs:
            lines.append(f"  n{linear_index(a, c)} [label={_quote(str(c))}];")
        for c in configs:
            lines.append(f"  n{linear_index(a, c)} -> n{linear_index(a, step(a, c))};")
    else:
        for t in range(steps + 1):
            for c in configs:
                lines.append(f"  t{t}_n{linear_index(a, c)} [label={_quote(str(c))}];")
        for t in range(steps):
            for c in configs:
                lines.append(
                    f"  t{t}_n{linear_index(a, c)} -> t{t + 1}_n{linear_index(a, step(a, c))};"
                )
    lines.append("}")
    return "\n".join(lines) + "\n"
