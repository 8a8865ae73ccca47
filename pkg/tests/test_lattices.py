import json
import random
from fractions import Fraction

import pytest

from latkit.definite import definite_isomorphic
from latkit.errors import BadParams, NotIsotropic, UnknownName, ZeroScale
from latkit.finite_forms import forms_isomorphic, min_generators
from latkit.lattices import (
    Lattice,
    Sublattice,
    direct_sum,
    is_saturated,
    lattice_from_json,
    lattice_to_json,
    orthogonal_complement,
    overlattice_from_isotropic,
    saturation,
    standard_lattice,
)
from latkit.matrices import Matrix


STANDARD_NAMES = [
    ("U", {}),
    ("U(2)", {}),
    ("V2", {}),
    ("A", {"n": 3}),
    ("D", {"n": 4}),
    ("E8", {}),
    ("E8(-1)", {}),
    ("E8(-2)", {}),
    ("2d", {"d": 5}),
    ("minus1", {"k": 8}),
    ("Nikulin", {}),
    ("M", {}),
    ("N", {}),
    ("K3", {}),
    ("Mukai", {}),
]


def test_hyperbolic_plane_gram():
    assert standard_lattice("U").gram == Matrix([[0, 1], [1, 0]])


def test_root_lattice_determinants():
    assert standard_lattice("A", n=1).det == 2
    assert standard_lattice("A", n=4).det == 5
    assert standard_lattice("D", n=4).det == 4
    assert standard_lattice("D", n=6).det == 4
    assert standard_lattice("E8").det == 1
    assert standard_lattice("E8").is_even
    assert standard_lattice("E8").signature == (8, 0)


def test_nikulin_lattice_invariants():
    nik = standard_lattice("Nikulin")
    assert nik.rank == 8
    assert nik.det == 64
    assert nik.is_even
    assert nik.signature == (0, 8)


def test_enriques_anti_invariant_lattice():
    n = standard_lattice("N")
    assert n.signature == (2, 10)
    assert n.is_even


def test_unknown_and_bad_params():
    with pytest.raises(UnknownName):
        standard_lattice("Leech")
    with pytest.raises(BadParams):
        standard_lattice("A")
    with pytest.raises(BadParams):
        standard_lattice("A", n=0)
    with pytest.raises(BadParams):
        standard_lattice("U", scale=0)


def test_rescale():
    u2 = standard_lattice("U").rescale(2)
    assert u2.gram == Matrix([[0, 2], [2, 0]])
    assert standard_lattice("E8(-1)").rescale(2) == standard_lattice("E8(-2)")
    lat = standard_lattice("V2")
    assert lat.rescale(1) == lat
    with pytest.raises(ZeroScale):
        lat.rescale(0)


def test_direct_sum():
    u = standard_lattice("U")
    uu = direct_sum(u, u)
    assert uu.rank == 4 and uu.det == 1
    lam = direct_sum(standard_lattice("2d", d=1), standard_lattice("E8(-2)"))
    assert lam.rank == 9 and lam.is_even
    s1 = standard_lattice("V2")
    both = direct_sum(s1, u)
    assert both.signature == (s1.signature[0] + 1, s1.signature[1] + 1)


def test_discriminant_group_order_matches_determinant():
    for name, kwargs in STANDARD_NAMES:
        lat = standard_lattice(name, **kwargs)
        assert lat.discriminant_form().order == abs(lat.det)


def test_unimodular_discriminant_trivial():
    assert standard_lattice("U").discriminant_form().is_trivial
    assert standard_lattice("K3").discriminant_form().is_trivial


def test_u2_discriminant_is_split_plane():
    form = standard_lattice("U(2)").discriminant_form()
    assert form.orders == (2, 2)
    assert form.qvals == (0, 0)
    assert form.bvals[0][1] == Fraction(1, 2)


def test_e8_minus_two_discriminant_counts():
    form = standard_lattice("E8(-2)").discriminant_form()
    assert form.orders == (2,) * 8
    values = [form.q(x) for x in form.elements() if any(x)]
    assert values.count(1) == 120
    assert values.count(0) == 135


def test_discriminant_of_direct_sum():
    a = standard_lattice("2d", d=2)
    b = standard_lattice("V2")
    combined = direct_sum(a, b).discriminant_form()
    summed = a.discriminant_form().direct_sum(b.discriminant_form())
    assert forms_isomorphic(combined, summed) is not None


def test_discriminant_negation():
    for gram in ([[2]], [[4, 1], [1, 12]]):
        plus = Lattice(gram).discriminant_form()
        minus = Lattice(Matrix(gram).scale(-1)).discriminant_form()
        assert minus == plus.negated()


def test_min_generators_examples():
    assert min_generators(standard_lattice("E8(-2)").discriminant_form(), 2) == 8
    assert min_generators(standard_lattice("U").discriminant_form()) == 0
    for d in (1, 2, 7):
        assert min_generators(standard_lattice("2d", d=d).discriminant_form()) == 1


def test_complement_of_hyperbolic_summand():
    m = standard_lattice("M")  # U + E8(-1)
    sub = Sublattice(m, [[1, 0] + [0] * 8, [0, 1] + [0] * 8])
    comp = orthogonal_complement(sub)
    assert comp.gram == standard_lattice("E8(-1)").gram


def test_complement_of_polarization():
    lam = direct_sum(standard_lattice("2d", d=3), standard_lattice("E8(-2)"))
    sub = Sublattice(lam, [[1] + [0] * 8])
    comp = orthogonal_complement(sub)
    assert comp.gram == standard_lattice("E8(-2)").gram


def test_complement_rank2_example():
    ambient = Lattice([[4, 1, 0], [1, 12, 0], [0, 0, -2]])
    comp = orthogonal_complement(Sublattice(ambient, [[1, 0, 0]]))
    assert comp.gram == Matrix([[188, 0], [0, -2]])


def test_complement_of_complement():
    ambient = standard_lattice("K3")
    sub = Sublattice(ambient, [[1, 2, 0, 1, 0, 0] + [0] * 16, [0, 0, 1, 1, 0, 0] + [0] * 16])
    sat = saturation(sub)
    double = orthogonal_complement(orthogonal_complement(sat))
    assert double.rank == sat.rank
    for i in range(sat.rank):
        row = sat.basis.row(i)
        assert _in_row_span(double.basis, row)


def _in_row_span(basis, vec):
    stacked = Matrix.stack_rows(basis, Matrix([vec]))
    from latkit.matrices import rank

    return rank(stacked) == basis.nrows


def test_is_saturated():
    u = standard_lattice("U")
    assert not is_saturated(Sublattice(u, [[2, 0]]))
    assert is_saturated(Sublattice(u, [[1, 0], [0, 1]]))
    assert is_saturated(Sublattice(u, [[0, 1]]))


def test_overlattice_trivial():
    lat = standard_lattice("E8(-2)")
    assert overlattice_from_isotropic(lat, []) == lat


def test_overlattice_builds_nikulin():
    base = Lattice([[-2 if i == j else 0 for j in range(8)] for i in range(8)])
    cls = base.discriminant_class([Fraction(1, 2)] * 8)
    over = overlattice_from_isotropic(base, [cls])
    assert over.det == 64
    assert over.is_even
    # isometric to the fixed Nikulin Gram: compare the sign-flipped lattices
    flipped = Lattice(over.gram.scale(-1))
    nik = Lattice(standard_lattice("Nikulin").gram.scale(-1))
    assert definite_isomorphic(flipped, nik)


def test_overlattice_determinant_drop():
    base = Lattice([[-2 if i == j else 0 for j in range(8)] for i in range(8)])
    cls = base.discriminant_class([Fraction(1, 2)] * 8)
    over = overlattice_from_isotropic(base, [cls])
    assert abs(over.det) * 2**2 == abs(base.det)


def test_overlattice_rejects_anisotropic_class():
    base = Lattice([[-2 if i == j else 0 for j in range(8)] for i in range(8)])
    with pytest.raises(NotIsotropic):
        overlattice_from_isotropic(base, [(1, 0, 0, 0, 0, 0, 0, 0)])


def test_json_roundtrip():
    lat = standard_lattice("V2")
    obj = lattice_to_json(lat)
    again = lattice_from_json(json.loads(json.dumps(obj)))
    assert again == lat
    assert again.label == "V2"


def test_json_large_entries_use_strings():
    big = 2**60
    lat = Lattice([[2 * big]])
    obj = lattice_to_json(lat)
    assert isinstance(obj["gram"][0][0], str)
    assert lattice_from_json(obj) == lat


def test_odd_lattice_has_bilinear_discriminant_only():
    odd = standard_lattice("minus1", k=2)
    form = odd.discriminant_form()
    assert not odd.is_even
    assert form.qvals is None
