"""
Measuring a reversible box from inside
======================================

An outer automaton reads whatever the inner one emits.  Without a copy of
the outcome every step can be undone.  With Bennett's trick the outcome is
copied out first and the system still returns to where it started.
"""

from revmealy import BlackBoxSystem, bennett_measure, measure, parse_automaton, undo
from revmealy.automaton import Configuration as C
from revmealy.blackbox import bennett_partitions, erase

inner = parse_automaton("""
states: s1 s2 s3
symbols: 1 2
s1 1 -> s1 2
s1 2 -> s3 2
s2 1 -> s2 1
s2 2 -> s1 1
s3 1 -> s3 1
s3 2 -> s2 2
""")
outer = parse_automaton("""
states: s1
symbols: 1 2
s1 1 -> s1 2
s1 2 -> s1 1
""")

sys0 = BlackBoxSystem.start(inner, outer, C("s2", "1"))
sys = sys0
for i in "2122":
    sys = measure(sys, i)
    print(i, sys.inner_config, sys.outer_config)
print("undone:", undo(sys, 4) == sys0)

# keeping copies blocks the undo until they are erased
sys = measure(sys0, "2", copy=True)
print("record:", sys.record)
print("after erase:", undo(erase(sys, 1), 1) == sys0)

outcome, restored = bennett_measure(sys0, "2")
print("outcome", outcome, "record", restored.record, "config", restored.inner_config)

print([str(p) for p in bennett_partitions(inner, ["1", "2"], outer)])
