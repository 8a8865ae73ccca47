"""Golden-claim registry: every concrete number the workbench reproduces.

Each claim reads its constants from ``data/golden.json``, computes the
quantity from scratch, and compares exactly.  The command-line ``reproduce``
command renders the results; tests drive the same registry.
"""

import copy
import json
import random
from dataclasses import dataclass, field
from importlib import resources
from math import gcd

from .binary_forms import BinaryForm, equivalent, fm_partner_count, from_gram, represents, reduce_definite, square_roots_of_unity
from .definite import definite_isomorphic
from .errors import LatkitError
from .f2 import classify_2d_subspaces, element_counts, from_discriminant, grassmannian_count
from .fm import FMParameters, fm_matrix, fm_matrix_inverse, slice_gram, twist_matrix
from .genus import primitive_embedding_criterion, stably_equivalent, unique_in_genus_criterion
from .involutions import enriques_exists_singular, quotient_maps, quotient_source_lattice, quotient_target_lattice
from .lattices import Lattice, standard_lattice
from .matrices import Matrix
from .selfcheck import run_all_suites


@dataclass
class ClaimResult:
    claim_id: str
    description: str
    expected: object
    computed: object
    status: str  # "pass" | "fail"
    note: str = ""

    def to_json(self):
        return {
            "id": self.claim_id,
            "description": self.description,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status,
            "note": self.note,
        }


_REGISTRY = {}


def _claim(claim_id):
    def register(fn):
        _REGISTRY[claim_id] = fn
        return fn

    return register


def load_constants():
    text = resources.files("latkit.data").joinpath("golden.json").read_text()
    return json.loads(text)


def _perturb_first_int(obj):
    """Bump the first integer leaf; used by fault injection."""
    if isinstance(obj, dict):
        for key, value in obj.items():
            if key == "description":
                continue
            done, new = _perturb_first_int(value)
            if done:
                obj[key] = new
                return True, obj
        return False, obj
    if isinstance(obj, list):
        for i, value in enumerate(obj):
            done, new = _perturb_first_int(value)
            if done:
                obj[i] = new
                return True, obj
        return False, obj
    if isinstance(obj, bool):
        return False, obj
    if isinstance(obj, int):
        return True, obj + 1
    return False, obj


def run_claims(filter_substring=None, inject_fault=None, node_cap=None):
    """Evaluate claims in id order; returns a list of ClaimResult."""
    constants = load_constants()
    results = []
    for claim_id in sorted(_REGISTRY):
        conf = copy.deepcopy(constants[claim_id])
        description = conf.pop("description")
        if filter_substring and filter_substring not in claim_id and filter_substring not in description:
            continue
        if inject_fault == claim_id:
            _perturb_first_int(conf)
        fn = _REGISTRY[claim_id]
        try:
            expected, computed, note = fn(conf, node_cap=node_cap)
            status = "pass" if expected == computed else "fail"
        except (LatkitError, AssertionError, ValueError) as exc:
            expected, computed = "evaluation", f"{type(exc).__name__}: {exc}"
            status = "fail"
            note = "claim raised instead of evaluating"
        results.append(ClaimResult(claim_id, description, expected, computed, status, note))
    return results


@_claim("c01_e8_element_counts")
def _element_counts(conf, node_cap=None):
    space = from_discriminant(standard_lattice("E8(-2)"))
    zeros, ones = element_counts(space)
    return conf["expected"], {"q0": zeros, "q1": ones}, ""


@_claim("c02_e8_plane_classification")
def _plane_classification(conf, node_cap=None):
    space = from_discriminant(standard_lattice("E8(-2)"))
    counts = classify_2d_subspaces(space)
    expected = {"counts": conf["expected"], "total": conf["total"]}
    computed = {"counts": counts, "total": grassmannian_count(2, space.dim)}
    note = "total independently computed as the Gaussian binomial"
    if sum(counts.values()) != computed["total"]:
        computed["counts_sum"] = sum(counts.values())
    return expected, computed, note


@_claim("c03_fm_degree12_matrix")
def _degree12(conf, node_cap=None):
    params = FMParameters(*conf["params"])
    m = fm_matrix(params)
    fixed = tuple(conf["fixed_vector"])
    expected = {"matrix": conf["expected"], "det": 1, "fixes_vector": True, "preserves_pairing": True}
    gram = slice_gram(params.r0, params.s)
    computed = {
        "matrix": [list(r) for r in m.rows],
        "det": m.det(),
        "fixes_vector": m.apply(fixed) == fixed,
        "preserves_pairing": m.transpose() * gram * m == gram,
    }
    return expected, computed, ""


def _random_parameters(rng, bound):
    while True:
        r0 = rng.randint(1, 12)
        s = rng.randint(1, 12)
        if gcd(r0, s) != 1:
            continue
        d0 = rng.choice([d for d in range(-8, 9) if d and gcd(abs(d) * s, r0) == 1])
        for d1 in range(-bound, bound + 1):
            num = s * d0 * d1 - 1
            if num % r0 == 0 and abs(num // r0) <= bound:
                return FMParameters(r0, s, d0, d1, num // r0)


@_claim("c04_fm_inverse_identity")
def _inverse_identity(conf, node_cap=None):
    rng = random.Random(conf["seed"])
    ident = Matrix.identity(3)
    passing = 0
    cases = conf["cases"]
    params = FMParameters(*conf["params"])
    if fm_matrix(params) * fm_matrix_inverse(params) == ident:
        passing += 1
    for _ in range(cases - 1):
        p = _random_parameters(rng, conf["coefficient_bound"])
        if fm_matrix(p) * fm_matrix_inverse(p) == ident:
            passing += 1
    return cases, passing, "exact matrix products"


@_claim("c05_fm_twist_identity")
def _twist_identity(conf, node_cap=None):
    rng = random.Random(conf["seed"])
    cases = conf["cases"]
    passing = 0
    for _ in range(cases):
        p = _random_parameters(rng, 50)
        n = rng.randint(-6, 6)
        lhs = twist_matrix(n, p.r0, p.s) * fm_matrix(p)
        rhs = fm_matrix(
            FMParameters(p.r0, p.s, p.d0, p.d1 + n * p.r0, p.ell + n * p.s * p.d0)
        )
        if lhs == rhs:
            passing += 1
    return cases, passing, "twist shifts the Bezout pair"


@_claim("c06_rank2_stable_map")
def _stable_map(conf, node_cap=None):
    u = Matrix([[0, 1], [1, 0]])
    g1 = Matrix.block_diagonal(Matrix(conf["gram1"]), u)
    g2 = Matrix.block_diagonal(Matrix(conf["gram2"]), u)
    p = Matrix(conf["images"]).transpose()
    return True, p.transpose() * g2 * p == g1, "basis images act as matrix columns"


@_claim("c07_binary_form_suite")
def _binary_suite(conf, node_cap=None):
    f1 = BinaryForm(*conf["equivalent_pair"][0])
    f2 = BinaryForm(*conf["equivalent_pair"][1])
    transform = equivalent(f1, f2)
    g1 = BinaryForm(*conf["inequivalent_pair"][0])
    g2 = BinaryForm(*conf["inequivalent_pair"][1])
    h = from_gram(Matrix(conf["non_representing_gram"]))
    brute = any(
        h(x, y) == conf["value"]
        for x in range(-conf["height"], conf["height"] + 1)
        for y in range(-conf["height"], conf["height"] + 1)
        if x or y
    )
    expected = {
        "cycle_pair_equivalent": True,
        "transform_verifies": True,
        "reduced_pair_equivalent": False,
        "same_discriminant": True,
        "represents_two": False,
        "brute_force_agrees": True,
    }
    computed = {
        "cycle_pair_equivalent": transform is not None,
        "transform_verifies": transform is not None and f1.apply(transform) == f2,
        "reduced_pair_equivalent": equivalent(g1, g2) is not None,
        "same_discriminant": g1.discriminant == g2.discriminant,
        "represents_two": represents(h, conf["value"]),
        "brute_force_agrees": not brute,
    }
    note = f"distinct reductions {reduce_definite(g1)[0].tuple()} vs {reduce_definite(g2)[0].tuple()}"
    return expected, computed, note


@_claim("c08_stable_equivalence_pairs")
def _stable_pairs(conf, node_cap=None):
    verdicts = []
    for g1, g2 in conf["pairs"]:
        verdicts.append(stably_equivalent(Lattice(g1), Lattice(g2)))
    definite_pair = conf["pairs"][conf["definite_pair_index"]]
    res = definite_isomorphic(Lattice(definite_pair[0]), Lattice(definite_pair[1]))
    expected = {"stably_equivalent": [True] * len(verdicts), "definite_pair_isometric": False, "nonexistence_proved": True}
    computed = {
        "stably_equivalent": verdicts,
        "definite_pair_isometric": res.matrix is not None,
        "nonexistence_proved": res.proves_nonexistence,
    }
    return expected, computed, f"definite pair status: {res.status}"


@_claim("c09_rank10_isometry")
def _rank10(conf, node_cap=None):
    l1 = Lattice(Matrix.block_diagonal(Matrix(conf["block"]), standard_lattice("E8").gram))
    l2 = Lattice(conf["companion"])
    note = f"determinants {l1.det} and {l2.det}"
    if l1.det != l2.det:
        # labeling tension between the two published presentations: report it
        return (
            {"determinants_match": True},
            {"determinants_match": False},
            note + "; determinant mismatch flagged, isometry test skipped",
        )
    kwargs = {} if node_cap is None else {"node_cap": node_cap}
    res = definite_isomorphic(l1, l2, **kwargs)
    expected = {"determinants_match": True, "isometric": False, "nonexistence_proved": True}
    computed = {
        "determinants_match": True,
        "isometric": res.matrix is not None,
        "nonexistence_proved": res.proves_nonexistence,
    }
    return expected, computed, note + f"; search status: {res.status}"


@_claim("c10_enriques_singular_table")
def _singular_table(conf, node_cap=None):
    expected = {"without": [False] * len(conf["without"]), "with": [True] * len(conf["with"])}
    computed = {
        "without": [enriques_exists_singular(Matrix(g)) for g in conf["without"]],
        "with": [enriques_exists_singular(Matrix(g)) for g in conf["with"]],
    }
    return expected, computed, ""


@_claim("c11_quotient_map_identities")
def _quotient_identities(conf, node_cap=None):
    push, pull = quotient_maps()
    src = quotient_source_lattice()
    dst = quotient_target_lattice()
    scale = conf["scale"]
    expected = {"push_pull_is_scaled_identity": True, "pairing_scales": True, "adjoint": True}
    computed = {
        "push_pull_is_scaled_identity": push * pull == Matrix.identity(22).scale(scale),
        "pairing_scales": pull.transpose() * src.gram * pull == dst.gram.scale(scale),
        "adjoint": pull.transpose() * src.gram == dst.gram * push,
    }
    return expected, computed, ""


@_claim("c12_genus_criteria")
def _genus_criteria(conf, node_cap=None):
    m2 = standard_lattice("M", scale=2)
    target = tuple(conf["target_signature"])
    samples = [
        standard_lattice("M"),
        standard_lattice("U(2)").direct_sum(standard_lattice("E8(-1)")),
        standard_lattice("2d", d=2).direct_sum(standard_lattice("E8(-1)")).direct_sum(
            Lattice([[-2]])
        ),
    ]
    embeddings = [primitive_embedding_criterion(s, target) for s in samples]
    expected = {
        "halved_rank10_unique_in_genus": True,
        "rank10_embeddings": [(True, True)] * len(samples),
    }
    computed = {
        "halved_rank10_unique_in_genus": unique_in_genus_criterion(m2),
        "rank10_embeddings": embeddings,
    }
    note = "samples are even hyperbolic of signature (1,9)"
    assert all(s.signature == (1, 9) and s.is_even for s in samples)
    return expected, computed, note


@_claim("c13_fm_partner_counts")
def _partner_counts(conf, node_cap=None):
    counts = [[d, fm_partner_count(d)] for d, _ in conf["cases"]]
    roots = square_roots_of_unity(conf["modulus"])
    expected = {"counts": conf["cases"], "roots": conf["roots"]}
    computed = {"counts": counts, "roots": roots}
    note = (
        f"annotation: modulus {conf['modulus']} has {len(roots)} root classes while the "
        f"formula gives {fm_partner_count(conf['modulus'] // 4)}; these measure different things"
    )
    return expected, computed, note


@_claim("c14_property_suites")
def _property_suites(conf, node_cap=None):
    outcomes = run_all_suites()
    total = sum(cases for cases, _ in outcomes.values())
    failures = {name: fails for name, (ncases, fails) in outcomes.items() if fails}
    expected = {"enough_cases": True, "failures": {}}
    computed = {"enough_cases": total >= conf["minimum_cases"], "failures": failures}
    return expected, computed, f"{total} randomized cases"
