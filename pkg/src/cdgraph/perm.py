"""Permutation groups by full element enumeration.

Composition convention: ``(g * h)(x) == g(h(x))``, so ``h`` acts first.
Cycle notation is 1-based on the outside; image arrays are 0-based.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property, reduce
from operator import itemgetter
from typing import Iterable, Sequence

from .numeric import factorize, is_prime

DEFAULT_CAP = 200_000


class GroupTooLarge(Exception):
    def __init__(self, cap: int, label: str = ""):
        self.cap = cap
        self.label = label
        where = f" ({label})" if label else ""
        super().__init__(f"group too large: more than {cap} elements{where}")


class CycleParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class Permutation:
    """A bijection of ``{0, ..., degree-1}`` stored as an image tuple."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if not images:
            raise ValueError("degree must be at least 1")
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _raw(cls, images: tuple[int, ...]) -> Permutation:
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Permutation) -> Permutation:
        if len(other.images) == 1:
            return self
        return Permutation._raw(itemgetter(*other.images)(self.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation._raw(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        out = list(range(len(self.images)))
        for cyc in self.cycles(include_fixed=False):
            n = len(cyc)
            s = k % n
            for i, x in enumerate(cyc):
                out[x] = cyc[(i + s) % n]
        return Permutation._raw(tuple(out))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles(include_fixed=True)))

    @property
    def order(self) -> int:
        return element_order(self)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cycs)


def compose(g: Permutation, h: Permutation) -> Permutation:
    """``g∘h``: apply ``h`` first, then ``g``."""
    if g.degree != h.degree:
        raise ValueError(f"degree mismatch: {g.degree} vs {h.degree}")
    return g * h


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint cycles over 1-based points, e.g. ``"(1 2 3)(4 5)"``.

    The empty string is the identity.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    images = list(range(degree))
    used: set[int] = set()
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        if text[pos] != "(":
            raise CycleParseError("expected '('", text, pos)
        pos += 1
        points: list[int] = []
        while True:
            while pos < n and (text[pos].isspace() or text[pos] == ","):
                pos += 1
            if pos >= n:
                raise CycleParseError("unclosed cycle", text, pos)
            if text[pos] == ")":
                pos += 1
                break
            m = re.match(r"\d+", text[pos:])
            if not m:
                raise CycleParseError(f"unexpected character {text[pos]!r}", text, pos)
            x = int(m.group())
            if not 1 <= x <= degree:
                raise CycleParseError(f"point {x} out of range 1..{degree}", text, pos)
            if x in used:
                raise CycleParseError(f"repeated point {x}", text, pos)
            used.add(x)
            points.append(x - 1)
            pos += len(m.group())
        if len(points) < 2:
            raise CycleParseError("a cycle needs at least two points", text, pos - 1)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a] = b
    return Permutation._raw(tuple(images))


def element_order(g: Permutation) -> int:
    return reduce(math.lcm, (len(c) for c in g.cycles()), 1)


@dataclass(frozen=True, eq=False)
class ConjClass:
    representative: Permutation
    members: frozenset[Permutation]
    size: int
    element_order: int

    def is_p_regular(self, p: int) -> bool:
        return self.element_order % p != 0

    def __contains__(self, g: Permutation) -> bool:
        return g in self.members

    def __repr__(self) -> str:
        return (
            f"ConjClass({self.representative.cycle_string()}, size={self.size}, "
            f"order={self.element_order})"
        )


class PermGroup:
    """A finite permutation group given by generators.

    Elements, classes and center are computed on first use and then cached;
    the group is treated as immutable afterwards.
    """

    def __init__(self, generators: Sequence[Permutation], label: str = "", cap: int = DEFAULT_CAP):
        gens = list(generators)
        if not gens:
            raise ValueError("at least one generator is required")
        degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise ValueError("generators must have equal degree")
        self.degree = degree
        self.generators = tuple(gens)
        self.label = label or "<" + ", ".join(g.cycle_string() for g in gens) + ">"
        self.cap = cap

    def __repr__(self) -> str:
        return f"PermGroup({self.label!r}, degree={self.degree})"

    @cached_property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    @cached_property
    def element_set(self) -> frozenset[Permutation]:
        return _closure([self.identity], self.generators, self.cap, self.label)

    @cached_property
    def elements(self) -> tuple[Permutation, ...]:
        """All elements, lexicographically sorted by image array."""
        return tuple(sorted(self.element_set))

    @property
    def order(self) -> int:
        return len(self.element_set)

    def __len__(self) -> int:
        return self.order

    def __contains__(self, g: Permutation) -> bool:
        return g in self.element_set

    @cached_property
    def classes(self) -> tuple[ConjClass, ...]:
        gens = [(s, s.inverse()) for s in self.generators]
        seen: set[Permutation] = set()
        out = []
        # Sorted iteration: the first unseen element is the minimum of its class.
        for x in self.elements:
            if x in seen:
                continue
            orbit = {x}
            queue = [x]
            while queue:
                a = queue.pop()
                for s, si in gens:
                    b = s * a * si
                    if b not in orbit:
                        orbit.add(b)
                        queue.append(b)
            seen |= orbit
            out.append(ConjClass(x, frozenset(orbit), len(orbit), element_order(x)))
        out.sort(key=lambda c: (c.size, c.representative.images))
        return tuple(out)

    @cached_property
    def class_index(self) -> dict[Permutation, int]:
        return {g: i for i, c in enumerate(self.classes) for g in c.members}

    def class_of(self, g: Permutation) -> ConjClass:
        return self.classes[self.class_index[g]]

    @cached_property
    def center(self) -> frozenset[Permutation]:
        return frozenset(c.representative for c in self.classes if c.size == 1)

    def is_abelian(self) -> bool:
        gs = self.generators
        return all(a * b == b * a for a in gs for b in gs)


def _closure(
    start: Iterable[Permutation],
    gens: Sequence[Permutation],
    cap: int | None = None,
    label: str = "",
) -> frozenset[Permutation]:
    """Close ``start`` under right multiplication by ``gens``."""
    seen = set(start)
    queue = deque(seen)
    while queue:
        a = queue.popleft()
        for s in gens:
            b = a * s
            if b not in seen:
                seen.add(b)
                if cap is not None and len(seen) > cap:
                    raise GroupTooLarge(cap, label)
                queue.append(b)
    return frozenset(seen)


def generate(
    candidates: Iterable[Permutation], degree: int
) -> tuple[frozenset[Permutation], list[Permutation]]:
    """Subgroup generated by ``candidates``, plus a small generating subset.

    Candidates already inside the running subgroup are dropped, so the
    returned generator list stays short even for large candidate sets.
    """
    out = _generate(candidates, degree)
    assert out is not None
    return out


def _generate(
    candidates: Iterable[Permutation], degree: int, limit: int | None = None
) -> tuple[frozenset[Permutation], list[Permutation]] | None:
    # None once the subgroup outgrows ``limit``.
    elems = {Permutation.identity(degree)}
    gens: list[Permutation] = []
    for g in candidates:
        if g in elems:
            continue
        gens.append(g)
        queue = deque(elems)
        while queue:
            a = queue.popleft()
            for s in gens:
                b = a * s
                if b not in elems:
                    elems.add(b)
                    if limit is not None and len(elems) > limit:
                        return None
                    queue.append(b)
    return frozenset(elems), gens


def _conjugation_orbit(x: Permutation, by: Sequence[Permutation]) -> set[Permutation]:
    pairs = [(s, s.inverse()) for s in by]
    orbit = {x}
    queue = [x]
    while queue:
        a = queue.pop()
        for s, si in pairs:
            b = s * a * si
            if b not in orbit:
                orbit.add(b)
                queue.append(b)
    return orbit


def materialize(group: PermGroup, cap: int | None = None) -> frozenset[Permutation]:
    if cap is not None and cap != group.cap:
        group.__dict__.pop("element_set", None)
        group.__dict__.pop("elements", None)
        group.cap = cap
    return group.element_set


def conjugacy_classes(group: PermGroup) -> tuple[ConjClass, ...]:
    return group.classes


def center(group: PermGroup) -> frozenset[Permutation]:
    return group.center


def class_size_set(group: PermGroup) -> tuple[int, ...]:
    return tuple(sorted({c.size for c in group.classes}))


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")


def is_p_regular(g: Permutation, p: int) -> bool:
    _require_prime(p)
    return element_order(g) % p != 0


def p_regular_classes(group: PermGroup, p: int) -> list[ConjClass]:
    _require_prime(p)
    return [c for c in group.classes if c.element_order % p]


def p_regular_class_size_set(group: PermGroup, p: int) -> tuple[int, ...]:
    return tuple(sorted({c.size for c in p_regular_classes(group, p)}))


def primary_decomposition(g: Permutation) -> dict[int, Permutation]:
    """Map each prime ``q`` dividing the order of ``g`` to the q-part of ``g``.

    The parts commute and multiply back to ``g``.
    """
    n = element_order(g)
    parts = {}
    for q, a in factorize(n).items():
        qa = q**a
        m = n // qa
        parts[q] = g ** (m * pow(m, -1, qa))
    return parts


def p_prime_part(g: Permutation, p: int) -> Permutation:
    """Product of the q-parts of ``g`` over primes ``q != p``."""
    _require_prime(p)
    n = element_order(g)
    n_p = 1
    while n % p == 0:
        n //= p
        n_p *= p
    # n is now the p'-part of the order
    if n == 1:
        return Permutation.identity(g.degree)
    return g ** (n_p * pow(n_p, -1, n))


def normal_closure(group: PermGroup, seed: Iterable[Permutation]) -> frozenset[Permutation]:
    """Smallest normal subgroup of ``group`` containing ``seed``."""
    out = bounded_normal_closure(group, seed)
    assert out is not None
    return out


def bounded_normal_closure(
    group: PermGroup, seed: Iterable[Permutation], limit: int | None = None
) -> frozenset[Permutation] | None:
    """Like :func:`normal_closure`, but gives up (None) past ``limit`` elements."""
    conj: set[Permutation] = set()
    for x in seed:
        if x in conj:
            continue
        if "class_index" in group.__dict__:
            conj |= group.class_of(x).members
        else:
            conj |= _conjugation_orbit(x, group.generators)
    out = _generate(sorted(conj), group.degree, limit)
    return None if out is None else out[0]


def is_subgroup(group: PermGroup, subset: Iterable[Permutation]) -> bool:
    s = frozenset(subset)
    if not s or not s <= group.element_set:
        return False
    return all(a * b in s for a in s for b in s)


def is_normal(group: PermGroup, subset: Iterable[Permutation]) -> bool:
    s = frozenset(subset)
    if not is_subgroup(group, s):
        return False
    return all(t * x * t.inverse() in s for t in group.generators for x in s)


@dataclass(frozen=True)
class Cosets:
    """Left cosets ``xN`` sorted by their minimal member."""

    cosets: tuple[frozenset[Permutation], ...]
    index_of: dict[Permutation, int]

    def pull_back(self, labels: Iterable[int]) -> frozenset[Permutation]:
        out: set[Permutation] = set()
        for i in labels:
            out |= self.cosets[i]
        return frozenset(out)


def left_cosets(group: PermGroup, normal: Iterable[Permutation]) -> Cosets:
    n = sorted(normal)
    index_of: dict[Permutation, int] = {}
    cosets = []
    for x in group.elements:
        if x in index_of:
            continue
        c = frozenset(x * y for y in n)
        for y in c:
            index_of[y] = len(cosets)
        cosets.append(c)
    return Cosets(tuple(cosets), index_of)


def quotient_with_cosets(group: PermGroup, normal: Iterable[Permutation]) -> tuple[PermGroup, Cosets]:
    normal = frozenset(normal)
    if not is_normal(group, normal):
        raise ValueError("quotient requires a normal subgroup of the group")
    cs = left_cosets(group, normal)
    reps = [min(c) for c in cs.cosets]
    gens = [
        Permutation._raw(tuple(cs.index_of[s * r] for r in reps)) for s in group.generators
    ]
    label = f"{group.label} / N({len(normal)})"
    q = PermGroup(gens, label=label, cap=group.cap)
    if q.order * len(normal) != group.order:
        raise ValueError("coset action has the wrong order")
    return q, cs


def quotient_group(group: PermGroup, normal: Iterable[Permutation]) -> PermGroup:
    """``G/N`` acting by left translation on the left cosets of ``N``.

    Coset ``i`` is the i-th coset in order of minimal member; coset 0 is ``N``.
    """
    return quotient_with_cosets(group, normal)[0]


def class_product(b: ConjClass, c: ConjClass) -> frozenset[Permutation]:
    return frozenset(x * y for x in b.members for y in c.members)


def centralizer_order(group: PermGroup, g: Permutation) -> int:
    """|C_G(g)| by direct count of commuting elements."""
    return sum(1 for h in group.elements if h * g == g * h)


def derived_subgroup(
    group: PermGroup, subgroup_gens: Sequence[Permutation] | None = None
) -> tuple[frozenset[Permutation], list[Permutation]]:
    """[H, H] for ``H = <subgroup_gens>`` (default: the whole group)."""
    gens = list(subgroup_gens if subgroup_gens is not None else group.generators)
    comms = set()
    for a in gens:
        for b in gens:
            comms.add(a * b * a.inverse() * b.inverse())
    conj: set[Permutation] = set()
    for x in comms:
        if x not in conj:
            conj |= _conjugation_orbit(x, gens)
    return generate(sorted(conj), group.degree)


def derived_series(group: PermGroup) -> list[frozenset[Permutation]]:
    """G = G^(0) > G^(1) > ... down to the perfect core."""
    series = [group.element_set]
    gens = list(group.generators)
    while True:
        elems, gens = derived_subgroup(group, gens)
        if elems == series[-1]:
            return series
        series.append(elems)
        if len(elems) == 1:
            return series


def is_soluble(group: PermGroup) -> bool:
    return len(derived_series(group)[-1]) == 1


def is_simple(group: PermGroup) -> bool:
    if group.order == 1:
        return False
    for c in group.classes[1:]:
        if len(normal_closure(group, [c.representative])) != group.order:
            return False
    return True
