import random

import pytest

from latkit.errors import (
    DefiniteLattice,
    NotE8Minus2,
    NotHyperbolic,
    OddLattice,
    RankMismatch,
)
from latkit.genus import (
    e8_saturated_uniqueness,
    primitive_embedding_criterion,
    stably_equivalent,
    unique_in_genus_criterion,
)
from latkit.involutions import e8_rows_in_overlattice, nikulin_invariant_overlattice
from latkit.lattices import Lattice, Sublattice, direct_sum, standard_lattice
from latkit.matrices import Matrix
from latkit.selfcheck import random_unimodular

A1 = Lattice([[2, 13], [13, 12]])
A2 = Lattice([[8, 15], [15, 10]])
B1 = Lattice([[4, 1], [1, 12]])
B2 = Lattice([[6, 1], [1, 8]])


def test_stable_equivalence_pairs():
    assert stably_equivalent(A1, A2)
    assert stably_equivalent(B1, B2)


def test_stable_equivalence_rejects_different_determinants():
    assert not stably_equivalent(standard_lattice("2d", d=1), standard_lattice("2d", d=2))


def test_stable_equivalence_requires_equal_rank():
    with pytest.raises(RankMismatch):
        stably_equivalent(A1, direct_sum(A1, standard_lattice("U")))


def test_stable_equivalence_requires_even():
    with pytest.raises(OddLattice):
        stably_equivalent(standard_lattice("minus1", k=2), standard_lattice("U"))


def test_stable_equivalence_relation_properties():
    rng = random.Random(90)
    p = random_unimodular(rng, 2, steps=4, coeff=1)
    a3 = Lattice(p.transpose() * A1.gram * p)
    for lat in (A1, A2, B1, B2, a3):
        assert stably_equivalent(lat, lat)
    assert stably_equivalent(A2, A1)
    # transitivity across the triple A2 ~ A1 ~ A1-in-new-basis
    assert stably_equivalent(A1, a3)
    assert stably_equivalent(A2, a3)


def test_unique_in_genus_halved_unimodular():
    assert unique_in_genus_criterion(standard_lattice("M", scale=2))


def test_unique_in_genus_polarized_family():
    lam = direct_sum(standard_lattice("2d", d=1), standard_lattice("E8(-2)"))
    assert unique_in_genus_criterion(lam)


def test_unique_in_genus_unimodular():
    assert unique_in_genus_criterion(standard_lattice("U"))


def test_unique_in_genus_rejects_definite():
    with pytest.raises(DefiniteLattice):
        unique_in_genus_criterion(standard_lattice("E8"))


def test_unique_in_genus_monotone_under_hyperbolic_sum():
    u = standard_lattice("U")
    for lat in (
        standard_lattice("M", scale=2),
        direct_sum(standard_lattice("2d", d=1), standard_lattice("E8(-2)")),
        u,
    ):
        if unique_in_genus_criterion(lat):
            assert unique_in_genus_criterion(direct_sum(lat, u))


def test_primitive_embedding_rank10_hyperbolic():
    target = (3, 19)
    samples = [
        standard_lattice("M"),
        direct_sum(standard_lattice("U(2)"), standard_lattice("E8(-1)")),
        direct_sum(
            standard_lattice("2d", d=3),
            standard_lattice("E8(-1)"),
            Lattice([[-2]]),
        ),
    ]
    for lat in samples:
        assert lat.signature == (1, 9)
        assert primitive_embedding_criterion(lat, target) == (True, True)


def test_primitive_embedding_inconclusive_for_tight_target():
    assert primitive_embedding_criterion(standard_lattice("U"), (1, 1)) == (False, False)


def test_primitive_embedding_e8_minus_two():
    assert primitive_embedding_criterion(standard_lattice("E8(-2)"), (3, 19)) == (True, True)


def test_e8_uniqueness_for_polarized_sum():
    lam = direct_sum(standard_lattice("2d", d=6), standard_lattice("E8(-2)"))
    sub = Sublattice(lam, e8_rows_in_overlattice())
    assert e8_saturated_uniqueness(lam, sub)


def test_e8_uniqueness_for_overlattice():
    tilde = nikulin_invariant_overlattice(6)
    sub = Sublattice(tilde, e8_rows_in_overlattice())
    assert e8_saturated_uniqueness(tilde, sub)


def test_e8_uniqueness_fails_for_unsaturated_rows():
    tilde = nikulin_invariant_overlattice(6)
    doubled = Sublattice(tilde, e8_rows_in_overlattice().scale(2))
    assert not e8_saturated_uniqueness(tilde, doubled)


def test_e8_uniqueness_requires_hyperbolic():
    e8m2 = standard_lattice("E8(-2)")
    with pytest.raises(NotHyperbolic):
        e8_saturated_uniqueness(e8m2, Sublattice(e8m2, Matrix.identity(8)))


def test_e8_uniqueness_requires_e8_shape():
    lam = direct_sum(standard_lattice("2d", d=6), standard_lattice("E8(-2)"))
    wrong = Sublattice(lam, [[1] + [0] * 8])
    with pytest.raises(NotE8Minus2):
        e8_saturated_uniqueness(lam, wrong)
