"""Exact arithmetic on monomials and monomial ideals of a polynomial ring.

Variables are indexed 1..d; a monomial is its exponent vector.  Ideals are
kept in canonical form: the unique minimal generating set, sorted, so that
structural equality is ideal equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable

from .errors import InvalidInputError

VarSet = frozenset[int]


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.exponents, tuple):
            object.__setattr__(self, "exponents", tuple(self.exponents))
        if any(e < 0 for e in self.exponents):
            raise InvalidInputError("monomial exponents must be nonnegative")

    @classmethod
    def identity(cls, ambient: int) -> Monomial:
        return cls((0,) * ambient)

    @classmethod
    def variable(cls, index: int, ambient: int) -> Monomial:
        if not 1 <= index <= ambient:
            raise InvalidInputError(f"variable index {index} out of range 1..{ambient}")
        return cls(tuple(1 if i == index else 0 for i in range(1, ambient + 1)))

    @classmethod
    def from_support(cls, support: Iterable[int], ambient: int) -> Monomial:
        sup = set(support)
        if sup and not sup <= set(range(1, ambient + 1)):
            raise InvalidInputError(f"support {sorted(sup)} out of range 1..{ambient}")
        return cls(tuple(1 if i in sup else 0 for i in range(1, ambient + 1)))

    @property
    def ambient(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_identity(self) -> bool:
        return self.degree == 0

    def support(self) -> VarSet:
        return frozenset(i + 1 for i, e in enumerate(self.exponents) if e)

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: Monomial) -> Monomial:
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def quotient_clipped(self, other: Monomial) -> Monomial:
        """self / gcd(self, other): exponentwise subtraction clipped at 0."""
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)))

    def power(self, n: int) -> Monomial:
        if n < 0:
            raise InvalidInputError("monomial power requires n >= 0")
        return Monomial(tuple(n * e for e in self.exponents))

    def squarefree_part(self) -> Monomial:
        return Monomial(tuple(min(e, 1) for e in self.exponents))

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def pretty(self, names: list[str] | None = None) -> str:
        if names is None:
            names = default_names(self.ambient)
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(names[i])
            elif e > 1:
                parts.append(f"{names[i]}^{e}")
        return "·".join(parts) if parts else "1"


def default_names(ambient: int) -> list[str]:
    return [f"u{i}" for i in range(1, ambient + 1)]


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in canonical form: minimal generators, sorted.

    The zero ideal has no generators; the unit ideal has the identity
    monomial as its only generator.
    """

    ambient: int
    gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.gens, tuple):
            object.__setattr__(self, "gens", tuple(self.gens))
        for g in self.gens:
            if g.ambient != self.ambient:
                raise InvalidInputError(
                    f"generator of ambient {g.ambient} in ideal of ambient {self.ambient}"
                )
        for g in self.gens:
            for h in self.gens:
                if g is not h and g.divides(h):
                    raise InvalidInputError("generators are not a divisibility antichain")
        if list(self.gens) != sorted(self.gens, reverse=True):
            raise InvalidInputError("generators are not in canonical order")

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_identity()

    def is_proper(self) -> bool:
        return not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def contains_monomial(self, m: Monomial) -> bool:
        if m.ambient != self.ambient:
            raise InvalidInputError("ambient dimension mismatch")
        return any(g.divides(m) for g in self.gens)

    def __contains__(self, m: Monomial) -> bool:
        return self.contains_monomial(m)

    def contains_ideal(self, other: MonomialIdeal) -> bool:
        return all(self.contains_monomial(g) for g in other.gens)

    def pretty(self, names: list[str] | None = None) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(g.pretty(names) for g in self.gens) + ")"


def minimalize(gens: Iterable[Monomial], ambient: int) -> MonomialIdeal:
    """Canonical ideal generated by `gens`: the divisibility antichain, sorted."""
    pool = set()
    for g in gens:
        if g.ambient != ambient:
            raise InvalidInputError(
                f"generator of ambient {g.ambient}, expected {ambient}"
            )
        if g.is_identity():
            return MonomialIdeal(ambient, (g,))
        pool.add(g)
    minimal = [
        g for g in pool if not any(h != g and h.divides(g) for h in pool)
    ]
    return MonomialIdeal(ambient, tuple(sorted(minimal, reverse=True)))


def _check_same_ambient(*ideals: MonomialIdeal) -> int:
    d = ideals[0].ambient
    if any(i.ambient != d for i in ideals):
        raise InvalidInputError("ideals live in different ambient rings")
    return d


def ideal_sum(first: MonomialIdeal, *rest: MonomialIdeal) -> MonomialIdeal:
    d = _check_same_ambient(first, *rest)
    gens: list[Monomial] = list(first.gens)
    for ideal in rest:
        gens.extend(ideal.gens)
    return minimalize(gens, d)


def intersect(first: MonomialIdeal, *rest: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise lcms of generators."""
    d = _check_same_ambient(first, *rest)
    acc = first
    for ideal in rest:
        acc = minimalize((g.lcm(h) for g in acc.gens for h in ideal.gens), d)
    return acc


def colon(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """(I : m), generated by g / gcd(g, m) over the generators g."""
    if m.ambient != ideal.ambient:
        raise InvalidInputError("ambient dimension mismatch")
    return minimalize((g.quotient_clipped(m) for g in ideal.gens), ideal.ambient)


def colon_by_ideal(ideal: MonomialIdeal, divisor: MonomialIdeal) -> MonomialIdeal:
    """(I : A) for an ideal A, as the intersection of the generator colons."""
    _check_same_ambient(ideal, divisor)
    if divisor.is_zero():
        return minimalize([Monomial.identity(ideal.ambient)], ideal.ambient)
    acc = colon(ideal, divisor.gens[0])
    for g in divisor.gens[1:]:
        acc = intersect(acc, colon(ideal, g))
    return acc


def saturate(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """(I : m^infinity), the stable value of iterated colon."""
    current = ideal
    while True:
        nxt = colon(current, m)
        if nxt == current:
            return current
        current = nxt


def saturate_by_ideal(ideal: MonomialIdeal, divisor: MonomialIdeal) -> MonomialIdeal:
    """(I : A^infinity), the stable value of iterated ideal colon."""
    current = ideal
    while True:
        nxt = colon_by_ideal(current, divisor)
        if nxt == current:
            return current
        current = nxt


def power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """I^n as the minimalized set of n-fold products of generators."""
    if n < 1:
        raise InvalidInputError("ideal power requires n >= 1")
    products = []
    for combo in combinations_with_replacement(ideal.gens, n):
        prod = combo[0]
        for g in combo[1:]:
            prod = prod * g
        products.append(prod)
    return minimalize(products, ideal.ambient)


def contains(m: Monomial, ideal: MonomialIdeal) -> bool:
    return ideal.contains_monomial(m)


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    """Radical of a monomial ideal: minimalized squarefree parts of generators."""
    return minimalize((g.squarefree_part() for g in ideal.gens), ideal.ambient)


def variable_ideal(varset: Iterable[int], ambient: int) -> MonomialIdeal:
    """The monomial prime generated by the given variables; empty set gives (0)."""
    return minimalize(
        (Monomial.variable(i, ambient) for i in varset), ambient
    )
