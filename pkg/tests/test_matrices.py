import random

import pytest

from latkit.errors import DegenerateForm, ShapeMismatch
from latkit.matrices import (
    Matrix,
    det_and_inverse,
    invariant_factors,
    kernel_basis,
    saturate_rows,
    signature,
    smith_normal_form,
)
from latkit.lattices import standard_lattice
from latkit.selfcheck import random_matrix, random_symmetric, random_unimodular


def snf_check(m):
    u, d, v = smith_normal_form(m)
    assert u * m * v == d
    assert u.det() in (1, -1) and v.det() in (1, -1)
    diag = [d[i, i] for i in range(min(m.nrows, m.ncols))]
    nonzero = [x for x in diag if x]
    assert all(x >= 0 for x in diag)
    assert diag[: len(nonzero)] == nonzero
    assert all(nonzero[i + 1] % nonzero[i] == 0 for i in range(len(nonzero) - 1))
    return diag


def test_snf_hyperbolic_plane_is_unimodular():
    assert snf_check(Matrix([[0, 1], [1, 0]])) == [1, 1]


def test_snf_e8_minus_two():
    gram = standard_lattice("E8(-2)").gram
    assert snf_check(gram) == [2] * 8


def test_snf_rank_one():
    for d in (1, 5, 12):
        assert snf_check(Matrix([[2 * d]])) == [2 * d]


def test_snf_random_shapes():
    rng = random.Random(40)
    for _ in range(40):
        m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5), 25)
        snf_check(m)


def test_signature_hyperbolic():
    assert signature(Matrix([[0, 1], [1, 0]])) == (1, 1, 0)


def test_signature_k3_and_mukai():
    assert signature(standard_lattice("K3").gram) == (3, 19, 0)
    assert signature(standard_lattice("Mukai").gram) == (4, 20, 0)


def test_signature_degenerate_counts_zeros():
    assert signature(Matrix([[0, 0], [0, 0]])) == (0, 0, 2)
    assert signature(Matrix([[1, 1], [1, 1]])) == (1, 0, 1)


def test_signature_block_pivot():
    # all-zero diagonal forces the 2x2 block rule
    assert signature(Matrix([[0, 3], [3, 0]])) == (1, 1, 0)


def test_signature_unimodular_invariance():
    rng = random.Random(41)
    for _ in range(30):
        n = rng.randint(1, 5)
        g = random_symmetric(rng, n, 5)
        p = random_unimodular(rng, n)
        assert signature(p.transpose() * g * p) == signature(g)
        assert (p.transpose() * g * p).det() == g.det()


def test_det_and_inverse_examples():
    d, inv = det_and_inverse(Matrix([[2, 1], [1, 4]]))
    assert d == 7
    d2, _ = det_and_inverse(Matrix([[2, 13], [13, 12]]))
    # cofactor oracle: 2 * 12 - 13 * 13
    assert d2 == 2 * 12 - 13 * 13 == -145
    d3, inv3 = det_and_inverse(Matrix.identity(3))
    assert d3 == 1 and inv3 == Matrix.identity(3)


def test_det_and_inverse_roundtrip():
    rng = random.Random(42)
    for _ in range(25):
        n = rng.randint(1, 5)
        g = random_symmetric(rng, n, 6)
        if g.det() == 0:
            continue
        d, inv = det_and_inverse(g)
        assert g * inv == Matrix.identity(n)
        assert d == g.det()


def test_det_and_inverse_degenerate():
    with pytest.raises(DegenerateForm):
        det_and_inverse(Matrix([[1, 1], [1, 1]]))


def test_shape_errors():
    with pytest.raises(ShapeMismatch):
        signature(Matrix([[1, 2], [3, 4]]))
    with pytest.raises(ShapeMismatch):
        Matrix([[1], [2]]) * Matrix([[1], [2]])


def test_kernel_is_saturated():
    m = Matrix([[2, 4, 6]])
    k = kernel_basis(m)
    assert k.nrows == 2
    for i in range(k.nrows):
        assert m.apply(k.row(i)) == (0,)
    assert all(f == 1 for f in invariant_factors(k))


def test_saturate_rows():
    b = Matrix([[2, 0], [0, 3]])
    sat = saturate_rows(b)
    assert abs(sat.det()) == 1  # saturation of a finite-index sublattice is everything


def test_big_integer_entries():
    big = 10**40
    m = Matrix([[big, 1], [0, big]])
    assert m.det() == big * big
    u, d, v = smith_normal_form(m)
    assert u * m * v == d
