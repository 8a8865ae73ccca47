"""Stable equivalence and sufficient genus criteria.

The three criteria here are one-directional: True certifies the property,
False only means the criterion is inconclusive.
"""

from .definite import definite_isomorphic
from .errors import (
    DefiniteLattice,
    NotE8Minus2,
    NotHyperbolic,
    OddLattice,
    RankMismatch,
)
from .finite_forms import (
    forms_isomorphic,
    has_z2_cubed_summand,
    min_generators,
)
from .lattices import Lattice, is_saturated, saturation, standard_lattice


def _odd_prime_divisors(n):
    n = abs(n)
    while n % 2 == 0:
        n //= 2
    p = 3
    out = []
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 2
    if n > 1:
        out.append(n)
    return out


def stably_equivalent(l1, l2, bound=1 << 16):
    """Whether l1 + U and l2 + U are isomorphic (even lattices, equal rank).

    By Witt-type cancellation for even lattices this holds exactly when the
    signatures agree and the discriminant forms are isomorphic.
    """
    if not (l1.is_even and l2.is_even):
        raise OddLattice("stable equivalence is defined for even lattices")
    if l1.rank != l2.rank:
        raise RankMismatch(f"ranks differ: {l1.rank} vs {l2.rank}")
    if l1.signature != l2.signature:
        return False
    witness = forms_isomorphic(
        l1.discriminant_form(), l2.discriminant_form(), bound=bound
    )
    return witness is not None


def unique_in_genus_criterion(lattice):
    """Sufficient test that an even indefinite lattice is alone in its genus.

    Checks rank >= l(d(L_p)) + 2 at every odd prime dividing the
    determinant, and at p = 2 either the same bound or a (Z/2)^3 summand in
    the discriminant group.  False means inconclusive.
    """
    if not lattice.is_even:
        raise OddLattice("criterion applies to even lattices")
    pos, neg = lattice.signature
    if pos == 0 or neg == 0:
        raise DefiniteLattice("criterion applies to indefinite lattices")
    form = lattice.discriminant_form()
    r = lattice.rank
    for p in _odd_prime_divisors(lattice.det):
        if r < min_generators(form, p) + 2:
            return False
    if r >= min_generators(form, 2) + 2:
        return True
    return has_z2_cubed_summand(form)


def primitive_embedding_criterion(lattice, target_signature):
    """(exists, unique) flags for primitive embeddings into an even unimodular target.

    Both flags report sufficient conditions only; (False, False) means the
    criterion is inconclusive, not that no embedding exists.
    """
    if not lattice.is_even:
        raise OddLattice("criterion applies to even lattices")
    lp, lm = target_signature
    tp, tm = lattice.signature
    ell = min_generators(lattice.discriminant_form())
    room = lp + lm - tp - tm
    exists = (lp - lm) % 8 == 0 and lp >= tp and lm >= tm and room > ell
    unique = exists and lp > tp and lm > tm and room >= 2 + ell
    return exists, unique


_E8_GRAM = standard_lattice("E8").gram


def spans_e8_minus_two(sub):
    """Whether the saturation of a sublattice is isometric to E8(-2)."""
    sat = saturation(sub)
    if sat.rank != 8:
        return False
    gram = sat.gram
    if any(gram[i, j] % 2 for i in range(8) for j in range(8)):
        return False
    halved = Lattice([[-(gram[i, j] // 2) for j in range(8)] for i in range(8)])
    if not halved.is_positive_definite:
        return False
    return bool(definite_isomorphic(halved, Lattice(_E8_GRAM)))


def e8_saturated_uniqueness(lattice, e8_sub):
    """Uniqueness-in-genus certificate for hyperbolic lattices around E8(-2).

    For an even hyperbolic lattice whose given sublattice spans a copy of
    E8(-2): True when that sublattice is saturated and the discriminant
    group needs at most 11 generators.
    """
    if not lattice.is_even:
        raise OddLattice("expected an even lattice")
    if lattice.signature != (1, lattice.rank - 1):
        raise NotHyperbolic(f"signature {lattice.signature} is not (1, n)")
    if not spans_e8_minus_two(e8_sub):
        raise NotE8Minus2("sublattice does not span a copy of E8(-2)")
    if not is_saturated(e8_sub):
        return False
    return min_generators(lattice.discriminant_form()) <= 11
