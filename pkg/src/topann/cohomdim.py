"""Cohomological dimension via Hochster's formula and projective dimension.

For a squarefree monomial ideal I in a polynomial ring over a field,
cd(I, S) = pd(S/I) (Lyubeznik), and the graded Betti numbers of S/I are
reduced homology ranks of restrictions of the Stanley-Reisner complex
(Hochster).  Over a quotient R = S/J, cd is the maximum of cd on the
associated prime quotients, each of which is again a polynomial ring.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import GuardExceededError, InvalidInputError
from .linalg import FieldSpec, homology_ranks_of_faces
from .monomial import Monomial, MonomialIdeal, VarSet, ideal_sum, minimalize, radical
from .stanley_reisner import QuotientIdeal, krull_dim

HOCHSTER_GUARD = 14


@dataclass(frozen=True)
class BettiTable:
    """Nonzero graded Betti numbers beta_{i, sigma} of S/I at squarefree degrees."""

    field: FieldSpec
    ambient: int
    entries: tuple[tuple[int, VarSet, int], ...]

    def projective_dimension(self) -> int:
        return max(i for i, _, _ in self.entries)

    def beta(self, i: int, sigma: VarSet) -> int:
        for j, s, v in self.entries:
            if j == i and s == sigma:
                return v
        return 0

    def as_dict(self) -> dict[tuple[int, VarSet], int]:
        return {(i, s): v for i, s, v in self.entries}


def _lcm_support_closure(supports: list[VarSet]) -> list[VarSet]:
    # Betti degrees of a monomial ideal lie in the lcm lattice of the generators
    # (Taylor complex support), so only joins of generator supports matter.
    closure = {frozenset()}
    frontier = {frozenset()}
    while frontier:
        nxt = set()
        for s in frontier:
            for sup in supports:
                u = s | sup
                if u not in closure:
                    closure.add(u)
                    nxt.add(u)
        frontier = nxt
    return sorted(closure, key=lambda s: (len(s), sorted(s)))


def _restricted_faces(sigma: VarSet, supports: list[VarSet]) -> list[tuple[int, ...]]:
    """Faces of the Stanley-Reisner complex that lie inside sigma."""
    verts = sorted(sigma)
    local = [frozenset(s) for s in supports if s <= sigma]
    faces = []
    for mask in range(1 << len(verts)):
        v = frozenset(verts[i] for i in range(len(verts)) if mask >> i & 1)
        if not any(s <= v for s in local):
            faces.append(tuple(sorted(v)))
    return faces


def betti_numbers(ideal: MonomialIdeal, field: FieldSpec) -> BettiTable:
    """Graded Betti numbers of S/I for squarefree proper I, by Hochster's formula.

    beta_{i, sigma}(S/I) is the reduced homology rank of the restriction of the
    Stanley-Reisner complex to sigma, in dimension |sigma| - i - 1.
    """
    if not ideal.is_squarefree():
        raise InvalidInputError("Hochster's formula needs a squarefree ideal")
    if ideal.is_unit():
        raise InvalidInputError("Betti numbers of the zero ring are not defined here")
    if ideal.ambient > HOCHSTER_GUARD:
        raise GuardExceededError(f"Betti enumeration guarded at ambient {HOCHSTER_GUARD}")
    supports = [g.support() for g in ideal.gens]
    entries = []
    for sigma in _lcm_support_closure(supports):
        hom = homology_ranks_of_faces(_restricted_faces(sigma, supports), field)
        for dim, h in sorted(hom.items()):
            if h:
                entries.append((len(sigma) - dim - 1, sigma, h))
    entries.sort(key=lambda e: (e[0], len(e[1]), sorted(e[1])))
    return BettiTable(field, ideal.ambient, tuple(entries))


def projective_dimension(ideal: MonomialIdeal, field: FieldSpec) -> int:
    return betti_numbers(ideal, field).projective_dimension()


def _image_in_prime_quotient(a: QuotientIdeal, prime: VarSet) -> MonomialIdeal:
    """Image of radical(lift) in S/prime, reindexed onto the surviving variables."""
    d = a.ring.ambient
    if prime and not prime <= frozenset(range(1, d + 1)):
        raise InvalidInputError("prime contains an out-of-range variable")
    if not a.ring.in_support(prime):
        raise InvalidInputError("prime does not contain a minimal prime of the relations")
    survivors = sorted(set(range(1, d + 1)) - prime)
    position = {v: k for k, v in enumerate(survivors)}
    gens = []
    for g in radical(a.lift).gens:
        sup = g.support()
        if sup & prime:
            continue  # generator is killed in S/prime
        exps = [0] * len(survivors)
        for v in sup:
            exps[position[v]] = 1
        gens.append(Monomial(tuple(exps)))
    return minimalize(gens, len(survivors))


def cd_on_prime(a: QuotientIdeal, prime: VarSet, field: FieldSpec) -> int:
    """cd of the ideal acting on R/prime, a polynomial ring on the other variables.

    If the image of the ideal is zero there, the torsion functor fixes
    everything and cd is 0; otherwise cd equals the projective dimension of the
    image's quotient (Lyubeznik's equality for squarefree monomial ideals).
    """
    image = _image_in_prime_quotient(a, prime)
    if image.is_zero():
        return 0
    return projective_dimension(image, field)


def grade_on_prime(a: QuotientIdeal, prime: VarSet) -> int | None:
    """Grade of the image ideal on R/prime, i.e. its height in that polynomial ring.

    Returns None when the image is zero (grade undefined on torsion).
    """
    image = _image_in_prime_quotient(a, prime)
    if image.is_zero():
        return None
    return image.ambient - krull_dim(image)


@dataclass(frozen=True)
class CdReport:
    field: FieldSpec
    c: int
    per_prime: tuple[tuple[VarSet, int], ...]


def cohomological_dimension(a: QuotientIdeal, field: FieldSpec) -> CdReport:
    """cd(a, R) as the maximum of cd over the minimal primes of the relations."""
    per_prime = tuple(
        (p, cd_on_prime(a, p, field)) for p in a.ring.minimal_primes
    )
    return CdReport(field=field, c=max(v for _, v in per_prime), per_prime=per_prime)


def arithmetic_rank_upper(a: QuotientIdeal) -> int:
    """Number of minimal generators of radical(lift + relations), an upper bound for ara."""
    return len(radical(ideal_sum(a.lift, a.ring.relations)).gens)
