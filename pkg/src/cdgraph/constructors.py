"""Group-spec grammar and built-in group constructors.

Grammar::

    spec    := factor (" x " factor)*
    factor  := NAME "(" int ("," int)* ")"
             | "Perm[" degree "]:" cycles (";" cycles)*

``NAME`` is one of Sym, Alt, Cyc, Dih, Frob, SL, AGammaL.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

from .numeric import factorize, is_prime
from .perm import DEFAULT_CAP, GroupTooLarge, Permutation, PermGroup, parse_cycles


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class Constructor:
    name: str
    args: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.name}({','.join(map(str, self.args))})"


@dataclass(frozen=True)
class ExplicitGenerators:
    degree: int
    cycles: tuple[str, ...]

    def __str__(self) -> str:
        return f"Perm[{self.degree}]: " + "; ".join(self.cycles)


@dataclass(frozen=True)
class DirectProduct:
    factors: tuple[Union[Constructor, ExplicitGenerators], ...]

    def __str__(self) -> str:
        return " x ".join(str(f) for f in self.factors)


GroupSpec = Union[Constructor, ExplicitGenerators, DirectProduct]

_CONSTRUCTOR = re.compile(r"^([A-Za-z]+)\s*\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)$")
_EXPLICIT = re.compile(r"^Perm\s*\[\s*(\d+)\s*\]\s*:(.*)$", re.S)
_PRODUCT_SEP = re.compile(r"\s+[x×]\s+")


def _split_product(text: str) -> list[str]:
    parts = []
    depth = 0
    start = 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0:
            m = _PRODUCT_SEP.match(text, i)
            if m and i > start:
                parts.append(text[start:i])
                start = i = m.end()
                continue
        i += 1
    parts.append(text[start:])
    return [p.strip() for p in parts]


def _parse_factor(text: str) -> Union[Constructor, ExplicitGenerators]:
    m = _EXPLICIT.match(text)
    if m:
        degree = int(m.group(1))
        if degree < 1:
            raise SpecError(f"degree must be at least 1 in {text!r}")
        cycles = tuple(c.strip() for c in m.group(2).split(";"))
        for c in cycles:
            parse_cycles(c, degree)
        return ExplicitGenerators(degree, cycles)
    m = _CONSTRUCTOR.match(text)
    if m:
        args = tuple(int(a) for a in m.group(2).split(","))
        return Constructor(m.group(1), args)
    raise SpecError(f"cannot parse group spec {text!r}")


def parse_spec(text: str) -> GroupSpec:
    text = text.strip()
    if not text:
        raise SpecError("empty group spec")
    factors = tuple(_parse_factor(p) for p in _split_product(text))
    if len(factors) == 1:
        return factors[0]
    return DirectProduct(factors)


# -- finite fields -----------------------------------------------------------

# Irreducible (and primitive) moduli for GF(2^k), bit-encoded.
_GF2_MODULI = {1: 0b11, 2: 0b111, 3: 0b1011, 4: 0b10011, 5: 0b100101}


def gf2_mul(a: int, b: int, modulus: int, k: int) -> int:
    """Multiply bit-encoded polynomials modulo ``modulus`` (degree ``k``)."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> k & 1:
            a ^= modulus
    return out


@dataclass(frozen=True)
class _Field:
    q: int
    add: callable
    mul: callable
    basis: tuple[int, ...]  # additive generators


def _field(q: int) -> _Field:
    f = factorize(q)
    if len(f) != 1:
        raise SpecError(f"{q} is not a prime power")
    (p, k), = f.items()
    if k == 1:
        return _Field(q, lambda a, b: (a + b) % q, lambda a, b: a * b % q, (1,))
    if p != 2 or k not in _GF2_MODULI:
        raise SpecError(f"field of order {q} is not supported")
    mod = _GF2_MODULI[k]
    return _Field(
        q,
        lambda a, b: a ^ b,
        lambda a, b: gf2_mul(a, b, mod, k),
        tuple(1 << i for i in range(k)),
    )


# -- constructors ------------------------------------------------------------


def _check_size(order: int, cap: int, label: str) -> None:
    if order > cap:
        raise GroupTooLarge(cap, label)


def symmetric(n: int, cap: int = DEFAULT_CAP) -> PermGroup:
    label = f"Sym({n})"
    if n < 1:
        raise SpecError("Sym(n) needs n >= 1")
    _check_size(math.factorial(n), cap, label)
    if n == 1:
        gens = [Permutation.identity(1)]
    elif n == 2:
        gens = [Permutation([1, 0])]
    else:
        gens = [Permutation([1, 0] + list(range(2, n))), Permutation(list(range(1, n)) + [0])]
    return PermGroup(gens, label, cap)


def alternating(n: int, cap: int = DEFAULT_CAP) -> PermGroup:
    label = f"Alt({n})"
    if n < 1:
        raise SpecError("Alt(n) needs n >= 1")
    _check_size(max(1, math.factorial(n) // 2), cap, label)
    if n < 3:
        return PermGroup([Permutation.identity(n)], label, cap)
    three = Permutation([1, 2, 0] + list(range(3, n)))
    if n % 2:
        long = Permutation(list(range(1, n)) + [0])
    else:
        long = Permutation([0] + list(range(2, n)) + [1])
    return PermGroup([three, long], label, cap)


def cyclic(n: int, cap: int = DEFAULT_CAP) -> PermGroup:
    label = f"Cyc({n})"
    if n < 1:
        raise SpecError("Cyc(n) needs n >= 1")
    _check_size(n, cap, label)
    return PermGroup([Permutation([(i + 1) % n for i in range(n)])], label, cap)


def dihedral(n: int, cap: int = DEFAULT_CAP) -> PermGroup:
    """Dihedral group of order ``2n`` on ``n`` points."""
    label = f"Dih({n})"
    if n < 3:
        raise SpecError("Dih(n) needs n >= 3")
    _check_size(2 * n, cap, label)
    rot = Permutation([(i + 1) % n for i in range(n)])
    ref = Permutation([(-i) % n for i in range(n)])
    return PermGroup([rot, ref], label, cap)


def frobenius(order: int, cap: int = DEFAULT_CAP) -> PermGroup:
    """AGL(1, p) = C_p : C_(p-1) on p points, for ``order == p(p-1)``."""
    label = f"Frob({order})"
    p = next((p for p in range(3, order + 1) if p * (p - 1) == order), None)
    if p is None or not is_prime(p):
        raise SpecError(f"Frob(n) needs n = p(p-1) for an odd prime p, got {order}")
    _check_size(order, cap, label)
    g = next(g for g in range(2, p) if all(pow(g, (p - 1) // r, p) != 1 for r in factorize(p - 1)))
    gens = [Permutation([(x + 1) % p for x in range(p)]), Permutation([g * x % p for x in range(p)])]
    return _checked(PermGroup(gens, label, cap), order)


def affine_semilinear(n: int, q: int, cap: int = DEFAULT_CAP) -> PermGroup:
    """AGammaL(1, 2^k) acting on the field, points indexed by bit encoding.

    Generated by ``x -> x + 1``, ``x -> t*x`` and ``x -> x^2``. For q = 8
    the field is GF(2)[t]/(t^3 + t + 1).
    """
    label = f"AGammaL({n},{q})"
    f = factorize(q)
    if n != 1 or len(f) != 1 or 2 not in f or f[2] not in _GF2_MODULI:
        raise SpecError(f"AGammaL(1,q) is supported for q = 2^k, k <= 5; got {label}")
    k = f[2]
    mod = _GF2_MODULI[k]
    order = q * (q - 1) * k
    _check_size(order, cap, label)
    shift = Permutation([x ^ 1 for x in range(q)])
    mult = Permutation([gf2_mul(x, 2 if q > 2 else 1, mod, k) for x in range(q)])
    frob = Permutation([gf2_mul(x, x, mod, k) for x in range(q)])
    return _checked(PermGroup([shift, mult, frob], label, cap), order)


def special_linear(n: int, q: int, cap: int = DEFAULT_CAP) -> PermGroup:
    """SL(2, q) acting on the q^2 - 1 nonzero column vectors.

    Vector ``(a, b)`` is point ``a*q + b - 1``.
    """
    label = f"SL({n},{q})"
    if n != 2:
        raise SpecError(f"only SL(2,q) is supported; got {label}")
    field = _field(q)
    order = q * (q * q - 1)
    _check_size(order, cap, label)
    vectors = [(a, b) for a in range(q) for b in range(q)][1:]
    index = {v: i for i, v in enumerate(vectors)}

    def act(m):
        (a, b), (c, d) = m
        return Permutation(
            [
                index[(field.add(field.mul(a, x), field.mul(b, y)), field.add(field.mul(c, x), field.mul(d, y)))]
                for x, y in vectors
            ]
        )

    gens = []
    for t in field.basis:
        gens.append(act(((1, t), (0, 1))))
        gens.append(act(((1, 0), (t, 1))))
    return _checked(PermGroup(gens, label, cap), order)


def _checked(group: PermGroup, order: int) -> PermGroup:
    if group.order != order:
        raise SpecError(f"{group.label}: construction has order {group.order}, expected {order}")
    return group


def direct_product(a: PermGroup, b: PermGroup, cap: int = DEFAULT_CAP) -> PermGroup:
    """A x B acting on disjoint point sets, A's points first."""
    da, db = a.degree, b.degree
    gens = [Permutation(list(g.images) + list(range(da, da + db))) for g in a.generators]
    gens += [Permutation(list(range(da)) + [x + da for x in g.images]) for g in b.generators]
    return PermGroup(gens, f"{a.label} x {b.label}", cap)


_ARITY = {"Sym": 1, "Alt": 1, "Cyc": 1, "Dih": 1, "Frob": 1, "SL": 2, "AGammaL": 2}
_BUILDERS = {
    "Sym": symmetric,
    "Alt": alternating,
    "Cyc": cyclic,
    "Dih": dihedral,
    "Frob": frobenius,
    "SL": special_linear,
    "AGammaL": affine_semilinear,
}


def _build_factor(spec: Union[Constructor, ExplicitGenerators], cap: int) -> PermGroup:
    if isinstance(spec, ExplicitGenerators):
        gens = [parse_cycles(c, spec.degree) for c in spec.cycles]
        return PermGroup(gens, str(spec), cap)
    if spec.name not in _BUILDERS:
        raise SpecError(f"unknown constructor {spec.name!r}")
    if len(spec.args) != _ARITY[spec.name]:
        raise SpecError(f"{spec.name} takes {_ARITY[spec.name]} argument(s), got {len(spec.args)}")
    return _BUILDERS[spec.name](*spec.args, cap=cap)


def build(spec: GroupSpec | str, cap: int = DEFAULT_CAP) -> PermGroup:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if isinstance(spec, DirectProduct):
        groups = [_build_factor(f, cap) for f in spec.factors]
        _check_size(math.prod(g.order for g in groups), cap, str(spec))
        out = groups[0]
        for g in groups[1:]:
            out = direct_product(out, g, cap)
        return out
    group = _build_factor(spec, cap)
    group.order  # materialize now so cap errors surface at build time
    return group
