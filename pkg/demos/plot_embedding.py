"""
Making an irreversible automaton reversible
===========================================

Tag each output with enough extra information to tell its preimages apart.
Dropping the tags recovers the original run.
"""

from revmealy import parse_automaton, reversible_embedding, validate_reversible
from revmealy.automaton import format_automaton

a = parse_automaton("""
states: p q
symbols: 0 1
p 0 -> p 0
p 1 -> q 0
q 0 -> p 0
q 1 -> q 0
""")
print(validate_reversible(a))

emb = reversible_embedding(a)
print(format_automaton(emb.automaton))
print(validate_reversible(emb.automaton))

for c in emb.project_run("p", "0110"):
    print(c)
