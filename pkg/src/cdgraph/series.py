"""Upper p-series and the p-separability test."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .numeric import check_primes, is_pi_number, is_prime, pi_part, pi_set
from .perm import Permutation, PermGroup, bounded_normal_closure, generate, quotient_with_cosets


def o_pi(group: PermGroup, pi: Iterable[int]) -> frozenset[Permutation]:
    """Largest normal pi-subgroup of ``group``.

    Joins the normal closures of single classes that turn out to be
    pi-groups; every normal pi-subgroup is a union of such classes.
    """
    pi = check_primes(pi)
    limit = pi_part(group.order, pi)
    pieces: set[Permutation] = set()
    for c in group.classes:
        if c.element_order == 1 or not is_pi_number(c.element_order, pi):
            continue
        if c.representative in pieces:
            continue
        closure = bounded_normal_closure(group, [c.representative], limit)
        if closure is not None and is_pi_number(len(closure), pi):
            pieces |= closure
    if not pieces:
        return frozenset([group.identity])
    # A join of normal subgroups is generated by their union.
    elems, _ = generate(sorted(pieces), group.degree)
    return elems


@dataclass
class UpperPSeries:
    p: int
    chain: list[frozenset[Permutation]]
    step_kinds: list[str] = field(default_factory=list)
    reached_whole_group: bool = False

    @property
    def orders(self) -> list[int]:
        return [len(s) for s in self.chain]


def upper_p_series(group: PermGroup, p: int) -> UpperPSeries:
    """1 = P0 <= P1 <= ... alternating O_p' and O_p steps.

    ``step_kinds[i]`` tags the step that produced ``chain[i + 1]``; steps
    that add nothing are not recorded. Stops at ``G`` or after two
    consecutive empty steps.
    """
    if not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")
    primes = pi_set(group.order)
    p_prime = primes - {p}
    current = frozenset([group.identity])
    series = UpperPSeries(p, [current])
    kind = "p'"
    idle = 0
    while len(current) < group.order and idle < 2:
        pi = p_prime if kind == "p'" else frozenset([p])
        if pi and len(current) == 1:
            grown = o_pi(group, pi)
        elif pi:
            quotient, cosets = quotient_with_cosets(group, current)
            # A quotient element sends coset 0 (= N) to the coset it represents.
            labels = (q.images[0] for q in o_pi(quotient, pi))
            grown = cosets.pull_back(labels)
        else:
            grown = current
        if len(grown) > len(current):
            series.chain.append(grown)
            series.step_kinds.append(kind)
            current = grown
            idle = 0
        else:
            idle += 1
        kind = "p" if kind == "p'" else "p'"
    series.reached_whole_group = len(current) == group.order
    return series


def is_p_separable(group: PermGroup, p: int) -> bool:
    return upper_p_series(group, p).reached_whole_group
