import random

import pytest

from latkit.errors import CoparityOne, NotTwoElementary
from latkit.f2 import (
    F2QuadraticSpace,
    classify_2d_subspaces,
    element_counts,
    from_discriminant,
    grassmannian_count,
)
from latkit.lattices import Lattice, standard_lattice


def e8_space():
    return from_discriminant(standard_lattice("E8(-2)"))


def test_from_discriminant_e8():
    space = e8_space()
    assert space.dim == 8
    # polarization is nondegenerate: no nonzero vector pairs to zero with everything
    for v in space.vectors():
        assert any(space.b(v, w) for w in space.vectors())


def test_from_discriminant_u2_is_split_plane():
    space = from_discriminant(standard_lattice("U(2)"))
    assert space.dim == 2
    assert [space.q(v) for v in (1, 2, 3)] == [0, 0, 1]


def test_from_discriminant_rejections():
    with pytest.raises(CoparityOne):
        from_discriminant(standard_lattice("2d", d=1))
    with pytest.raises(NotTwoElementary):
        from_discriminant(standard_lattice("2d", d=2))


def test_element_counts_e8():
    assert element_counts(e8_space()) == (135, 120)


def test_element_counts_small_planes():
    split = F2QuadraticSpace(2, [[0, 1], [0, 0]])
    assert element_counts(split) == (2, 1)
    minus = F2QuadraticSpace(2, [[1, 1], [0, 1]])
    assert element_counts(minus) == (0, 3)


def test_element_counts_sum():
    for space in (e8_space(), F2QuadraticSpace(3, [[1, 0, 1], [0, 0, 1], [0, 0, 0]])):
        zeros, ones = element_counts(space)
        assert zeros + ones == 2**space.dim - 1


def test_classification_counts_e8():
    counts = classify_2d_subspaces(e8_space())
    assert counts == {
        "isotropic": 1575,
        "rank1_kernel": 3780,
        "minus_line": 1120,
        "split": 4320,
    }
    assert sum(counts.values()) == grassmannian_count(2, 8) == 10795


def test_classification_of_single_planes():
    cases = {
        (("split",), ((0, 1), (0, 0))),
        (("minus_line",), ((1, 1), (0, 1))),
        (("rank1_kernel",), ((1, 0), (0, 0))),
        (("isotropic",), ((0, 0), (0, 0))),
    }
    for (kind,), coeffs in cases:
        counts = classify_2d_subspaces(F2QuadraticSpace(2, coeffs))
        assert sum(counts.values()) == 1
        assert counts[kind] == 1


def test_classification_totals_match_gaussian_binomial():
    rng = random.Random(50)
    for dim in (3, 4, 5):
        coeffs = [[rng.randint(0, 1) if j >= i else 0 for j in range(dim)] for i in range(dim)]
        counts = classify_2d_subspaces(F2QuadraticSpace(dim, coeffs))
        assert sum(counts.values()) == grassmannian_count(2, dim)


def _transform_space(space, mat):
    # q'(x) = q(T x): recompute diagonal and polarization coefficients
    dim = space.dim

    def image(v):
        out = 0
        for i in range(dim):
            if v >> i & 1:
                out ^= mat[i]
        return out

    coeffs = [[0] * dim for _ in range(dim)]
    for i in range(dim):
        coeffs[i][i] = space.q(image(1 << i))
        for j in range(i + 1, dim):
            coeffs[i][j] = space.b(image(1 << i), image(1 << j))
    return F2QuadraticSpace(dim, coeffs)


def test_classification_invariant_under_linear_substitution():
    rng = random.Random(51)
    space = F2QuadraticSpace(4, [[1, 0, 1, 0], [0, 0, 1, 1], [0, 0, 1, 0], [0, 0, 0, 0]])
    base = classify_2d_subspaces(space)
    for _ in range(10):
        while True:
            mat = [rng.randint(1, 15) for _ in range(4)]
            span = set()
            ok = True
            for v in range(16):
                img = 0
                for i in range(4):
                    if v >> i & 1:
                        img ^= mat[i]
                if img in span:
                    ok = False
                    break
                span.add(img)
            if ok:
                break
        moved = _transform_space(space, mat)
        assert classify_2d_subspaces(moved) == base
        assert sorted([moved.q(v) for v in moved.vectors()]) == sorted(
            [space.q(v) for v in space.vectors()]
        )


def test_grassmannian_values():
    assert grassmannian_count(2, 8) == 10795
    assert grassmannian_count(0, 6) == 1
    assert grassmannian_count(1, 8) == 255
    assert grassmannian_count(3, 3) == 1
    assert grassmannian_count(2, 4) == 35
    with pytest.raises(ValueError):
        grassmannian_count(4, 3)
