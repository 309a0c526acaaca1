"""The counterexample family: fixtures, checklist verification, and the sweep."""
from __future__ import annotations

import pytest

from topann.errors import GuardExceededError, InvalidInputError
from topann.linalg import FieldSpec
from topann.lynch import (
    build_instance,
    canonical_parameters,
    fixture,
    instance_from_sizes,
    search_family,
    verify_instance,
)
from topann.monomial import Monomial, minimalize

Q = FieldSpec.rationals()
F2 = FieldSpec.prime_field(2)


def test_build_singh_walther_parameters():
    inst = build_instance(4, {1}, {2}, {3, 4}, {1}, {2})
    assert inst.ring.relations == minimalize(
        [Monomial((1, 1, 1, 0)), Monomial((1, 1, 0, 1))], 4
    )
    assert inst.ideal.lift == minimalize([Monomial((1, 0, 0, 0)), Monomial((0, 1, 0, 0))], 4)


def test_build_rejects_overlap():
    with pytest.raises(InvalidInputError, match="disjoint"):
        build_instance(4, {1}, {1}, {3, 4}, {1}, {1})


def test_build_rejects_bad_sizes():
    with pytest.raises(InvalidInputError, match=r"\|X\| <= \|Y\| <= \|Z\|"):
        build_instance(5, {1, 2}, {3}, {4, 5}, {1}, {3})


def test_build_rejects_empty_or_loose_subsets():
    with pytest.raises(InvalidInputError, match="Xp"):
        build_instance(4, {1}, {2}, {3, 4}, set(), {2})
    with pytest.raises(InvalidInputError, match="Yp"):
        build_instance(4, {1}, {2}, {3, 4}, {1}, {3})
    with pytest.raises(InvalidInputError, match="nonempty"):
        build_instance(4, set(), {2}, {3, 4}, {1}, {2})


def test_singh_walther_full_checklist():
    inst, names = fixture("singh-walther")
    rep = verify_instance(inst, Q)
    assert rep.all_claims_pass()
    assert rep.c == 2
    assert rep.dim_modulo_torsion == 3
    assert rep.dim_modulo_annihilator == 2
    assert rep.gap == 1
    assert rep.conjecture_violated
    assert rep.annihilator_lift.pretty(names) == "(z1, z2)"


def test_bahmanpour_dimensions():
    inst, _ = fixture("bahmanpour", d=7, l=7)
    rep = verify_instance(inst, Q)
    assert rep.all_claims_pass()
    assert rep.c == 2
    assert rep.dim_modulo_torsion == 5  # d - 2
    assert rep.dim_modulo_annihilator == 4  # d - l + 4
    assert rep.conjecture_violated


def test_bahmanpour_parameter_validation():
    with pytest.raises(InvalidInputError):
        fixture("bahmanpour", d=6, l=6)
    with pytest.raises(InvalidInputError):
        fixture("bahmanpour", d=7, l=8)
    with pytest.raises(InvalidInputError):
        fixture("bahmanpour")
    with pytest.raises(InvalidInputError):
        fixture("unknown-name")


def test_gap_zero_instance_does_not_violate():
    inst = build_instance(6, {1}, {2}, {3}, {1}, {2})
    rep = verify_instance(inst, Q)
    assert rep.all_claims_pass()
    assert rep.gap == 0
    assert not rep.conjecture_violated


def test_canonical_parameters_small_counts():
    assert canonical_parameters(3) == [(3, 1, 1, 1, 1, 1)]
    # with four variables: (1,1,1) at d=3,4 and (1,1,2) at d=4
    assert canonical_parameters(4) == [
        (3, 1, 1, 1, 1, 1),
        (4, 1, 1, 1, 1, 1),
        (4, 1, 1, 2, 1, 1),
    ]


def test_search_family_guard():
    with pytest.raises(GuardExceededError):
        search_family(9, Q)


def test_search_family_d4_checklists_and_gaps():
    reports = search_family(4, Q)
    assert len(reports) == 3
    assert all(r.all_claims_pass() for r in reports)
    for rep in reports:
        assert rep.conjecture_violated == (rep.instance.gap_formula > 0)


def test_search_family_d5_field_independent():
    over_q = search_family(5, Q)
    over_f2 = search_family(5, F2)
    assert len(over_q) == len(over_f2)
    for a, b in zip(over_q, over_f2):
        assert a.all_claims_pass() and b.all_claims_pass()
        assert (a.c, a.gap, a.conjecture_violated) == (b.c, b.gap, b.conjecture_violated)
        assert a.annihilator_lift == b.annihilator_lift


def test_family_always_certifies_through_a_witness():
    from topann.annihilator import annihilator_bounds

    for rep in search_family(5, Q):
        bounds = annihilator_bounds(rep.instance.ideal, Q)
        assert bounds.exact
        assert bounds.exactness_reason == "all-witnesses-found"
        # the complement of the acting variables is always among the candidates
        inst = rep.instance
        complement = frozenset(range(1, inst.d + 1)) - (inst.Xp | inst.Yp)
        assert all(q is not None for _, q in bounds.sigma_witnesses)
        assert any(len(q) == len(complement) for _, q in bounds.sigma_witnesses)


def test_padding_changes_nothing_essential():
    base = verify_instance(instance_from_sizes(4, 1, 1, 2, 1, 1), Q)
    padded = verify_instance(instance_from_sizes(6, 1, 1, 2, 1, 1), Q)
    assert base.all_claims_pass() and padded.all_claims_pass()
    assert base.c == padded.c
    # same annihilator generators: padding only appends unused variables
    assert [g.support() for g in base.annihilator_lift.gens] == [
        g.support() for g in padded.annihilator_lift.gens
    ]
    assert padded.gap == base.gap
