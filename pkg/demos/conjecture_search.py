"""Look for p-regular classes of coprime size whose product is not a class.

Non-separable groups are the interesting ones here, since for p-separable
groups the product is known to be a single class.
"""

from cdgraph.constructors import build
from cdgraph.harness import check_conjecture
from cdgraph.series import is_p_separable

for label in ["Alt(5)", "Sym(5)", "SL(2,5)", "Alt(6)", "Sym(6)", "Sym(3) x Cyc(5)"]:
    g = build(label)
    for p in (2, 3, 5):
        s = check_conjecture(g, p)
        print(
            f"{label:<16} p={p} separable={is_p_separable(g, p)!s:<5} "
            f"pairs={s.class_pairs:<3} coprime={s.coprime_pairs:<2} "
            f"products={s.products_tested:<5} findings={len(s.findings)}"
        )
