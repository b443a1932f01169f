"""Scan the shipped corpus and tabulate where the regular-graph criterion bites.

Prints one row per (group, prime) where Gamma_p is k-regular with k >= 1,
then the overall check summary.
"""

from cdgraph.corpus import default_corpus
from cdgraph.harness import scan_corpus

scan = scan_corpus(default_corpus())
print(f"{'group':<22} {'p':>3} {'sep':>5} {'k':>3} {'|V|':>4} complete")
for e in scan.entries:
    g = e["gamma_p"]
    if g["regularity"]:
        print(
            f"{e['group']:<22} {e['prime']:>3} {str(e['p_separable']):>5} "
            f"{g['regularity']:>3} {g['vertex_count']:>4} {g['complete']}"
        )

print()
for key, value in scan.summary.items():
    print(f"{key:>12}: {value}")
