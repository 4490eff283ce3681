"""
Complementary experiments on three states
=========================================

Inputs 1 and 2 split the states differently.  Pasting the two block
algebras gives a six-element logic that is not distributive.
"""

from revmealy import build_logic, parse_automaton, state_partition
from revmealy.logic import logic_report
from revmealy.experiments import output_sequence

a = parse_automaton("""
states: s1 s2 s3
symbols: 1 2
s1 1 -> s1 2
s1 2 -> s3 2
s2 1 -> s2 1
s2 2 -> s1 1
s3 1 -> s3 1
s3 2 -> s2 2
""")

for s in a.states:
    print(s, "answers 2,2,2 with", output_sequence(a, s, "222"))

v1 = state_partition(a, "1")
v2 = state_partition(a, "2")
print("v(1) =", v1)
print("v(2) =", v2)
# a longer word separates everything
print("v(2222) =", state_partition(a, "2222"))

print(logic_report(build_logic(a.states, [v1, v2])))
