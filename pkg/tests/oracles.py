"""Brute-force reference computations, independent of the library paths.

Permutations are plain tuples here; nothing from cdgraph.perm is reused
beyond reading a group's element list.
"""

from itertools import product


def mul(g, h):
    return tuple(g[x] for x in h)


def inv(g):
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[x] = i
    return tuple(out)


def order(g):
    e = tuple(range(len(g)))
    x, n = g, 1
    while x != e:
        x, n = mul(x, g), n + 1
    return n


def classes(elements):
    """Partition by full conjugation: {g a g^-1 : g in G} for each a."""
    elems = [tuple(e) for e in elements]
    seen, out = set(), []
    for a in elems:
        if a in seen:
            continue
        cls = frozenset(mul(mul(g, a), inv(g)) for g in elems)
        seen |= cls
        out.append(cls)
    return out


def centralizer_size(elements, a):
    a = tuple(a)
    return sum(1 for g in elements if mul(tuple(g), a) == mul(a, tuple(g)))


def center(elements):
    elems = [tuple(e) for e in elements]
    return {a for a in elems if all(mul(a, g) == mul(g, a) for g in elems)}


def subgroup(gens, degree):
    """Close a set under products until nothing new appears."""
    e = tuple(range(degree))
    h = {e} | {tuple(g) for g in gens}
    while True:
        new = {mul(a, b) for a, b in product(h, h)} - h
        if not new:
            return frozenset(h)
        h |= new


def normal_subgroups(elements, degree):
    """All normal subgroups: joins of normal closures of classes, to a fixpoint."""
    base = {subgroup(c, degree) for c in classes(elements)}
    normals = set(base)
    while True:
        new = {subgroup(a | b, degree) for a in normals for b in base} - normals
        if not new:
            return normals
        normals |= new


def is_soluble(elements, degree):
    """Derived series by brute-force commutators."""
    h = frozenset(tuple(e) for e in elements)
    while len(h) > 1:
        comms = {mul(mul(a, b), mul(inv(a), inv(b))) for a in h for b in h}
        d = subgroup(comms, degree)
        if d == h:
            return False
        h = d
    return True


def spf_sieve(limit):
    """Smallest prime factor of every n <= limit."""
    spf = list(range(limit + 1))
    i = 2
    while i * i <= limit:
        if spf[i] == i:
            for j in range(i * i, limit + 1, i):
                if spf[j] == j:
                    spf[j] = i
        i += 1
    return spf
