"""Walk through AGammaL(1,8): class sizes, the two graphs, the series.

Run with ``python3 demos/worked_example.py``.
"""

from cdgraph.classgraph import common_divisor_graph, graph_report, prime_graph, to_dot
from cdgraph.constructors import build
from cdgraph.perm import class_size_set, p_regular_class_size_set
from cdgraph.series import upper_p_series

g = build("AGammaL(1,8)")
print(f"{g.label}: order {g.order}, degree {g.degree}")

# Class sizes with their element orders.
for c in g.classes:
    print(f"  size {c.size:>3}  order {c.element_order}  rep {c.representative.cycle_string()}")

cs = class_size_set(g)
cs2 = p_regular_class_size_set(g, 2)
print("cs   =", cs)
print("cs_2 =", cs2)

full = graph_report(common_divisor_graph(cs))
print("Gamma(cs):   regular?", full.regularity, " complete?", full.complete)
rep = graph_report(common_divisor_graph(cs2))
print("Gamma_2:     regular of degree", rep.regularity, " complete?", rep.complete)
print("Delta_2 primes:", graph_report(prime_graph(cs2)).vertices)

series = upper_p_series(g, 2)
print("upper 2-series orders:", series.orders, series.step_kinds)
print("2-separable:", series.reached_whole_group)

print()
print(to_dot(common_divisor_graph(cs2), "gamma_2"))
