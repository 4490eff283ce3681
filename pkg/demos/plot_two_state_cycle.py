"""
A two-state reversible automaton
================================

Build the combined map, look at it as a permutation matrix and follow the
fed-back evolution until it returns.
"""

from revmealy import automaton_to_matrix, order, parse_automaton, run
from revmealy.automaton import Configuration

a = parse_automaton("""
states: s1 s2
symbols: 1 2
s1 1 -> s2 1
s1 2 -> s1 2
s2 1 -> s2 2
s2 2 -> s1 1
""")

u = automaton_to_matrix(a)
# rows are sources: row k has its 1 in the column of U(k)
print(u.matrix())
print("cycles:", u.cycles())
print("order:", order(u))

for n, c in enumerate(run(a, Configuration("s1", "1"), order(u))):
    print(n, c)
