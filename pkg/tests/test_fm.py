import random
from math import gcd

import pytest

from latkit.errors import BadParameters, ShapeMismatch
from latkit.fm import (
    FMParameters,
    fm_matrix,
    fm_matrix_inverse,
    orientation_slice_report,
    slice_gram,
    twist_matrix,
    verify_skew_functional,
)
from latkit.matrices import Matrix

DEG12 = FMParameters(2, 3, 1, 1, 1)


def random_parameters(rng, bound=50):
    while True:
        r0 = rng.randint(1, 12)
        s = rng.randint(1, 12)
        if gcd(r0, s) != 1:
            continue
        choices = [d for d in range(-8, 9) if d and gcd(abs(d) * s, r0) == 1]
        d0 = rng.choice(choices)
        for d1 in range(-bound, bound + 1):
            num = s * d0 * d1 - 1
            if num % r0 == 0 and abs(num // r0) <= bound:
                return FMParameters(r0, s, d0, d1, num // r0)


def test_parameter_validation():
    with pytest.raises(BadParameters):
        FMParameters(2, 4, 1, 1, 1)  # not coprime
    with pytest.raises(BadParameters):
        FMParameters(2, 3, 1, 1, 2)  # Bezout relation fails
    with pytest.raises(BadParameters):
        FMParameters(0, 3, 1, 1, 1)


def test_degree12_matrix():
    m = fm_matrix(DEG12)
    assert m == Matrix([[3, 12, 2], [1, 5, 1], [2, 12, 3]])
    assert m.det() == 1


def test_degree12_pairing_preserved():
    m = fm_matrix(DEG12)
    g = slice_gram(2, 3)
    assert g[1, 1] == 12  # degree 2d = 12
    assert m.transpose() * g * m == g


def test_degree12_column_images():
    # the three basis images read off the columns
    m = fm_matrix(DEG12)
    assert m.column(0) == (3, 1, 2)
    assert m.column(1) == (12, 5, 12)
    assert m.column(2) == (2, 1, 3)


def test_inverse_identity_paper_params():
    assert fm_matrix(DEG12) * fm_matrix_inverse(DEG12) == Matrix.identity(3)


def test_inverse_identity_random_params():
    rng = random.Random(60)
    for _ in range(100):
        p = random_parameters(rng)
        assert fm_matrix(p) * fm_matrix_inverse(p) == Matrix.identity(3)
        assert fm_matrix(p).det() == 1
        g = slice_gram(p.r0, p.s)
        assert fm_matrix(p).transpose() * g * fm_matrix(p) == g


def test_inverse_of_inverse():
    p = DEG12
    inv = fm_matrix_inverse(p)
    assert inv * fm_matrix(p) == Matrix.identity(3)  # two-sided
    back = inv.inverse()
    assert back.is_integral and back == fm_matrix(p)
    # the formula itself is conjugation by diag(1,-1,1) after swapping d0, d1
    swapped = FMParameters(p.r0, p.s, p.d1, p.d0, p.ell)
    flip = Matrix.diagonal([1, -1, 1])
    assert inv == flip * fm_matrix(swapped) * flip


def test_twist_zero_is_identity():
    assert twist_matrix(0, 2, 3) == Matrix.identity(3)


def test_twist_group_law():
    for m, n in ((2, 3), (-1, 4), (5, -5)):
        assert twist_matrix(m, 2, 3) * twist_matrix(n, 2, 3) == twist_matrix(m + n, 2, 3)


def test_twist_shifts_parameters():
    rng = random.Random(61)
    for _ in range(100):
        p = random_parameters(rng)
        n = rng.randint(-6, 6)
        lhs = twist_matrix(n, p.r0, p.s) * fm_matrix(p)
        rhs = fm_matrix(
            FMParameters(p.r0, p.s, p.d0, p.d1 + n * p.r0, p.ell + n * p.s * p.d0)
        )
        assert lhs == rhs


def test_orientation_report_degree12():
    det, fixed = orientation_slice_report(fm_matrix(DEG12))
    assert det == 1
    assert fixed.nrows == 1
    vec = fixed.row(0)
    assert vec in ((1, 0, -1), (-1, 0, 1))
    m = fm_matrix(DEG12)
    assert m.apply((1, 0, -1)) == (1, 0, -1)


def test_orientation_report_trivial_cases():
    det, fixed = orientation_slice_report(Matrix.identity(3))
    assert det == 1 and fixed.nrows == 3
    det, fixed = orientation_slice_report(Matrix.diagonal([1, -1, 1]))
    assert det == -1
    assert fixed.nrows == 2
    assert all(row[1] == 0 for row in fixed.rows)


def test_skew_functional_trivial():
    ident = Matrix.identity(3)
    assert verify_skew_functional(ident, ident, ident, (1, 2))


def test_skew_functional_fails_for_generic_matrix():
    ident = Matrix.identity(3)
    assert not verify_skew_functional(fm_matrix(DEG12), ident, ident, (1, 2))


def test_skew_functional_for_stable_map_witness():
    u = Matrix([[0, 1], [1, 0]])
    g1 = Matrix.block_diagonal(Matrix([[4, 1], [1, 12]]), u)
    g2 = Matrix.block_diagonal(Matrix([[6, 1], [1, 8]]), u)
    images = [(1, 0, 1, -1), (5, -5, 12, -12), (-1, 1, -2, 3), (1, -1, 3, -2)]
    p4 = Matrix(images).transpose()
    assert p4.transpose() * g2 * p4 == g1
    phi = Matrix.block_diagonal(p4, Matrix.identity(2))
    iota = Matrix.diagonal([-1, -1, -1, -1, 1, 1])
    assert verify_skew_functional(phi, iota, iota, (0, 4))


def test_skew_functional_sign_flip_invariance():
    rng = random.Random(62)
    iota = Matrix.diagonal([-1, 1, 1])
    for _ in range(20):
        phi = Matrix([[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)])
        block = (0, rng.randint(0, 3))
        assert verify_skew_functional(phi, iota, iota, block) == verify_skew_functional(
            phi.scale(-1), iota, iota, block
        )


def test_skew_functional_shape_errors():
    ident = Matrix.identity(3)
    with pytest.raises(ShapeMismatch):
        verify_skew_functional(ident, Matrix.identity(2), ident, (0, 1))
    shear = Matrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(ShapeMismatch):
        verify_skew_functional(ident, shear, ident, (0, 1))
    with pytest.raises(ShapeMismatch):
        verify_skew_functional(ident, ident, ident, (0, 5))
