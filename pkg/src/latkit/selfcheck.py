"""Randomized property suites with independent oracles.

These back both the test suite and the command-line report.  Every suite is
seeded and exact: a failure list is returned, and any entry means a bug.
"""

import random
from fractions import Fraction

from .definite import definite_isomorphic, short_vectors
from .finite_forms import forms_isomorphic
from .lattices import Lattice
from .matrices import Matrix, signature, smith_normal_form


def random_matrix(rng, nrows, ncols, size):
    return Matrix(
        [[rng.randint(-size, size) for _ in range(ncols)] for _ in range(nrows)]
    )


def random_symmetric(rng, n, size):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = rng.randint(-size, size)
    return Matrix(a)


def random_unimodular(rng, n, steps=8, coeff=2):
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    if n < 2:
        return Matrix([[rng.choice((1, -1))]]) if n else Matrix(m)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        q = rng.choice([x for x in range(-coeff, coeff + 1) if x])
        for k in range(n):
            m[i][k] += q * m[j][k]
    return Matrix(m)


def random_positive_definite(rng, n, size=2):
    # B^T B + I is positive definite for any integral B
    b = random_matrix(rng, n, n, size)
    return b.transpose() * b + Matrix.identity(n)


def _charpoly(m):
    """Characteristic polynomial coefficients (monic, descending) via
    Faddeev-LeVerrier over exact rationals."""
    n = m.nrows
    coeffs = [Fraction(1)]
    a = Matrix.zeros(n, n)
    ident = Matrix.identity(n)
    for k in range(1, n + 1):
        a = m * a + ident.scale(coeffs[-1])
        ma = m * a
        trace = sum(Fraction(ma[i, i]) for i in range(n))
        coeffs.append(-trace / k)
    return coeffs


def _signature_by_charpoly(g):
    """Independent signature oracle: Descartes' rule on the characteristic
    polynomial, exact for symmetric matrices (all roots real)."""
    coeffs = _charpoly(g)
    zeros = 0
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
        zeros += 1
    pos = _sign_changes(coeffs)
    neg = _sign_changes([c if i % 2 == 0 else -c for i, c in enumerate(coeffs)])
    return pos, neg, zeros


def _sign_changes(coeffs):
    signs = [1 if c > 0 else -1 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def snf_suite(cases=300, seed=101):
    """U m V = D with unimodular transforms and a divisibility chain."""
    rng = random.Random(seed)
    failures = []
    for t in range(cases):
        nr = rng.randint(1, 5)
        nc = rng.randint(1, 6)
        m = random_matrix(rng, nr, nc, 30)
        u, d, v = smith_normal_form(m)
        if u * m * v != d:
            failures.append(f"case {t}: U m V != D")
        if u.det() not in (1, -1) or v.det() not in (1, -1):
            failures.append(f"case {t}: transform not unimodular")
        diag = [d[i, i] for i in range(min(nr, nc))]
        if any(d[i, j] for i in range(nr) for j in range(nc) if i != j):
            failures.append(f"case {t}: D not diagonal")
        if any(x < 0 for x in diag):
            failures.append(f"case {t}: negative invariant factor")
        nz = [x for x in diag if x]
        if diag[: len(nz)] != nz:
            failures.append(f"case {t}: zeros precede nonzeros")
        if any(nz[i + 1] % nz[i] for i in range(len(nz) - 1)):
            failures.append(f"case {t}: divisibility chain broken")
    return cases, failures


def signature_suite(cases=300, seed=202):
    """Signature against the characteristic-polynomial oracle, plus
    invariance under unimodular congruence."""
    rng = random.Random(seed)
    failures = []
    for t in range(cases):
        n = rng.randint(1, 5)
        g = random_symmetric(rng, n, 6)
        sig = signature(g)
        if sum(sig) != n:
            failures.append(f"case {t}: components do not sum to rank")
        if sig != _signature_by_charpoly(g):
            failures.append(f"case {t}: disagrees with charpoly oracle")
        p = random_unimodular(rng, n)
        moved = p.transpose() * g * p
        if signature(moved) != sig:
            failures.append(f"case {t}: not invariant under congruence")
        if moved.det() != g.det():
            failures.append(f"case {t}: determinant changed under congruence")
    return cases, failures


def _box_enumeration(lattice, bound):
    """Complete short-vector enumeration from the Cauchy-Schwarz box
    |v_i|^2 <= (G^-1)_ii * bound; independent of the recursive pruning."""
    n = lattice.rank
    ginv = lattice.gram.inverse()
    limits = []
    for i in range(n):
        cap = Fraction(ginv[i, i]) * bound
        r = 0
        while (r + 1) ** 2 <= cap:
            r += 1
        limits.append(r)
    found = {}
    import itertools

    for vec in itertools.product(*(range(-l, l + 1) for l in limits)):
        if any(vec):
            norm = lattice.norm(vec)
            if 0 < norm <= bound:
                rep = vec
                for x in vec:
                    if x:
                        if x < 0:
                            rep = tuple(-y for y in vec)
                        break
                found.setdefault(norm, set()).add(rep)
    return {k: sorted(v) for k, v in sorted(found.items())}


def short_vector_suite(cases=200, seed=303):
    rng = random.Random(seed)
    failures = []
    for t in range(cases):
        n = rng.randint(1, 4)
        lat = Lattice(random_positive_definite(rng, n))
        bound = rng.randint(1, 8)
        fast = short_vectors(lat, bound)
        slow = _box_enumeration(lat, bound)
        if fast != slow:
            failures.append(f"case {t}: enumeration mismatch on {lat.gram.rows}")
    return cases, failures


def isometry_witness_suite(cases=100, seed=404):
    rng = random.Random(seed)
    failures = []
    for t in range(cases):
        n = rng.randint(1, 4)
        g1 = random_positive_definite(rng, n)
        p = random_unimodular(rng, n, steps=5, coeff=1)
        g2 = p.transpose() * g1 * p
        # search from the small-diagonal side; the distorted basis is the target
        res = definite_isomorphic(Lattice(g1), Lattice(g2), node_cap=10**6)
        if res.matrix is None:
            failures.append(f"case {t}: failed to find a constructed isometry")
            continue
        w = res.matrix
        if w.transpose() * g2 * w != g1:
            failures.append(f"case {t}: witness does not transform the Gram matrix")
        winv = w.inverse()
        if not winv.is_integral or winv.transpose() * g1 * winv != g2:
            failures.append(f"case {t}: witness inverse is not a reverse witness")
    return cases, failures


def finite_form_witness_suite(cases=100, seed=505):
    """Witnesses between discriminant forms of congruent Gram matrices,
    verified by q on every element.  The map is additive by construction,
    so q-preservation everywhere forces b-preservation by polarization;
    b is still spot-checked on sampled pairs.
    """
    rng = random.Random(seed)
    failures = []
    done = 0
    while done < cases:
        n = rng.randint(1, 3)
        g = random_symmetric(rng, n, 4)
        rows = [list(r) for r in g.rows]
        for i in range(n):
            rows[i][i] = 2 * rng.randint(-4, 4)
        g = Matrix(rows)
        if g.det() == 0 or abs(g.det()) > 200:
            continue
        done += 1
        lat = Lattice(g)
        p = random_unimodular(rng, n, steps=5, coeff=1)
        moved = Lattice(p.transpose() * g * p)
        f1 = lat.discriminant_form()
        f2 = moved.discriminant_form()
        witness = forms_isomorphic(f1, f2, bound=1 << 12)
        if witness is None:
            failures.append(f"witness missing for {g.rows}")
            continue

        def image(x):
            return f2.reduce(
                tuple(
                    sum(x[i] * witness[i][j] for i in range(f1.ngens))
                    for j in range(f2.ngens)
                )
            )

        every = list(f1.elements())
        for x in every:
            if f2.q(image(x)) != f1.q(x):
                failures.append(f"q not preserved on {x} for {g.rows}")
                break
        for _ in range(min(50, len(every) ** 2)):
            x = rng.choice(every)
            y = rng.choice(every)
            if f2.b(image(x), image(y)) != f1.b(x, y):
                failures.append(f"b not preserved on a sampled pair for {g.rows}")
                break
    return cases, failures


def run_all_suites():
    """All property suites; returns {name: (cases, failures)}."""
    return {
        "smith_normal_form": snf_suite(),
        "signature": signature_suite(),
        "short_vectors": short_vector_suite(),
        "isometry_witnesses": isometry_witness_suite(),
        "finite_form_witnesses": finite_form_witness_suite(),
    }
