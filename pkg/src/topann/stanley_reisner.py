"""Stanley-Reisner dictionary: minimal primes, quotient rings, dimensions, heights.

Monomial primes are represented by their variable sets; the minimal primes of a
monomial ideal are the minimal vertex covers of the hypergraph of generator
supports.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GuardExceededError, InvalidInputError
from .monomial import (
    MonomialIdeal,
    VarSet,
    ideal_sum,
    intersect,
    radical,
    variable_ideal,
)

MINIMAL_PRIMES_GUARD = 20


def _sorted_varsets(sets) -> tuple[VarSet, ...]:
    return tuple(sorted(sets, key=lambda s: (len(s), sorted(s))))


def _minimal_covers(edges: list[VarSet]) -> list[VarSet]:
    """All inclusion-minimal transversals, by branching on the smallest open edge."""
    found: set[VarSet] = set()

    def descend(chosen: frozenset[int], open_edges: list[VarSet]) -> None:
        if not open_edges:
            found.add(chosen)
            return
        pivot = min(open_edges, key=lambda e: (len(e), sorted(e)))
        for v in sorted(pivot):
            descend(chosen | {v}, [e for e in open_edges if v not in e])

    descend(frozenset(), edges)
    return [c for c in found if not any(o < c for o in found)]


def minimal_primes(ideal: MonomialIdeal) -> tuple[VarSet, ...]:
    """Minimal monomial primes over a proper ideal, sorted by (size, members).

    The zero ideal returns the zero prime, written as the empty variable set.
    """
    if ideal.is_unit():
        raise InvalidInputError("the unit ideal has no minimal primes")
    if ideal.ambient > MINIMAL_PRIMES_GUARD:
        raise GuardExceededError(
            f"minimal prime enumeration guarded at ambient {MINIMAL_PRIMES_GUARD}"
        )
    edges = [g.support() for g in radical(ideal).gens]
    return _sorted_varsets(_minimal_covers(edges))


def krull_dim(ideal: MonomialIdeal) -> int:
    """dim S/I = ambient - min size of a minimal prime; errors on the unit ideal."""
    if ideal.is_unit():
        raise InvalidInputError("the zero ring has no Krull dimension")
    return ideal.ambient - min(len(p) for p in minimal_primes(ideal))


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: int
    facets: tuple[VarSet, ...]

    def __post_init__(self) -> None:
        for f in self.facets:
            if f and not f <= frozenset(range(1, self.vertices + 1)):
                raise InvalidInputError("facet vertex out of range")
        for f in self.facets:
            for g in self.facets:
                if f is not g and f <= g:
                    raise InvalidInputError("facets must be an antichain")
        if self.facets != _sorted_varsets(self.facets):
            raise InvalidInputError("facets not in canonical order")

    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        if self.is_void():
            raise InvalidInputError("the void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    def faces(self) -> list[tuple[int, ...]]:
        """Downward closure of the facets, as sorted vertex tuples (with ())."""
        seen: set[tuple[int, ...]] = set()
        for f in self.facets:
            verts = sorted(f)
            for mask in range(1 << len(verts)):
                seen.add(tuple(v for i, v in enumerate(verts) if mask >> i & 1))
        return sorted(seen, key=lambda t: (len(t), t))


def sr_complex_of(ideal: MonomialIdeal) -> SimplicialComplex:
    """Stanley-Reisner complex of a squarefree proper ideal.

    Facets are the complements of the minimal primes; the faces are exactly the
    supports of squarefree monomials outside the ideal.
    """
    if not ideal.is_squarefree():
        raise InvalidInputError("Stanley-Reisner complex needs a squarefree ideal")
    if ideal.is_unit():
        raise InvalidInputError("the unit ideal corresponds to the void complex")
    everything = frozenset(range(1, ideal.ambient + 1))
    facets = [everything - p for p in minimal_primes(ideal)]
    return SimplicialComplex(ideal.ambient, _sorted_varsets(facets))


@dataclass(frozen=True)
class QuotientRing:
    """R = S/J for a squarefree proper monomial ideal J, with cached minimal primes.

    Since J is radical, the minimal primes are the associated primes and the
    primary decomposition of 0 in R is the intersection of those primes.
    """

    ambient: int
    relations: MonomialIdeal
    minimal_primes: tuple[VarSet, ...] = field(init=False)

    def __post_init__(self) -> None:
        if self.relations.ambient != self.ambient:
            raise InvalidInputError("relations ideal has the wrong ambient dimension")
        if not self.relations.is_squarefree():
            raise InvalidInputError("quotient ring requires a squarefree ideal")
        if self.relations.is_unit():
            raise InvalidInputError("quotient by the unit ideal is the zero ring")
        primes = minimal_primes(self.relations)
        meet = variable_ideal(primes[0], self.ambient)
        for p in primes[1:]:
            meet = intersect(meet, variable_ideal(p, self.ambient))
        if meet != self.relations:
            raise InvalidInputError("minimal primes do not intersect to the ideal")
        object.__setattr__(self, "minimal_primes", primes)

    @property
    def dim(self) -> int:
        return self.ambient - min(len(p) for p in self.minimal_primes)

    def prime_dim(self, p: VarSet) -> int:
        """dim R/(p) = ambient - |p| for a monomial prime p containing a minimal prime."""
        return self.ambient - len(p)

    def in_support(self, q: VarSet) -> bool:
        return any(p <= q for p in self.minimal_primes)


@dataclass(frozen=True)
class QuotientIdeal:
    """An ideal of R = S/J given by a lift to S; the ideal is (lift + J)/J."""

    ring: QuotientRing
    lift: MonomialIdeal

    def __post_init__(self) -> None:
        if self.lift.ambient != self.ring.ambient:
            raise InvalidInputError("lift has the wrong ambient dimension")
        if self.lift.is_unit():
            raise InvalidInputError("lift + relations must be a proper ideal")

    def full_lift(self) -> MonomialIdeal:
        """lift + J, the preimage of the ideal in S."""
        return ideal_sum(self.lift, self.ring.relations)


def height_in_quotient(a: QuotientIdeal) -> int:
    """Height of (lift+J)/J in R: min over primes q minimal over lift+J of dim R_q.

    dim R_q is the largest |q| - |p| over minimal primes p of J inside q; the
    infimum over the whole support is attained at these monomial primes because
    every chain of monomial primes is realized in some polynomial quotient S/p.
    """
    total = a.full_lift()
    ring = a.ring
    best = None
    for q in minimal_primes(total):
        local_dim = max(
            len(q) - len(p) for p in ring.minimal_primes if p <= q
        )
        best = local_dim if best is None else min(best, local_dim)
    assert best is not None
    return best
