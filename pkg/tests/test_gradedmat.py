import json

import pytest

from laxforge.qring import LaurentPoly
from laxforge.superroot import build_algebra
from laxforge.gradedmat import (
    GradedMatrix,
    RelationError,
    SchemaError,
    build_vector_rep,
    check_representation,
    graded_dagger,
    graded_kron,
    graded_permutation,
    load_representation,
    tensor_dagger,
    trivial_rep,
)

G2 = (0, 1)  # one even, one odd position


def E(a, b, g=G2):
    return GradedMatrix.elementary(a, b, g)


def test_kron_koszul_mixed_product_law():
    # (x (x) y)(u (x) v) = (-1)^([y][u]) xu (x) yv on homogeneous factors
    for x in [E(0, 0), E(0, 1), E(1, 0), E(1, 1)]:
        for y in [E(0, 0), E(0, 1), E(1, 0), E(1, 1)]:
            for u in [E(0, 0), E(0, 1), E(1, 0), E(1, 1)]:
                for v in [E(0, 0), E(0, 1), E(1, 0), E(1, 1)]:
                    py = sum(G2[i] for rc in y.entries for i in rc) % 2
                    pu = sum(G2[i] for rc in u.entries for i in rc) % 2
                    sign = -1 if py * pu else 1
                    lhs = graded_kron(x, y) @ graded_kron(u, v)
                    rhs = graded_kron(x @ u, y @ v).scale(sign)
                    assert lhs == rhs


def test_graded_permutation_squares_to_identity():
    for g in [(0, 0), (0, 1), (1, 1, 0), (1, 0, 0, 1)]:
        p = graded_permutation(g)
        assert p @ p == GradedMatrix.identity(p.gradings)


def test_permutation_conjugates_kron():
    # P (x (x) y) P = (-1)^(([x])([y])) y (x) x on homogeneous x, y
    p = graded_permutation(G2)
    for x in [E(0, 1), E(1, 0), E(0, 0)]:
        for y in [E(0, 1), E(1, 0), E(1, 1)]:
            px = sum(G2[i] for rc in x.entries for i in rc) % 2
            py = sum(G2[i] for rc in y.entries for i in rc) % 2
            sign = -1 if px * py else 1
            assert p @ graded_kron(x, y) @ p == graded_kron(y, x).scale(sign)


def test_graded_dagger_rule():
    # (E^a_b)^dag = (-1)^([a]([a]+[b])) E^b_a
    assert graded_dagger(E(0, 0)) == E(0, 0)
    assert graded_dagger(E(0, 1)) == E(1, 0)  # [a]=0
    assert graded_dagger(E(1, 0)) == -E(0, 1)  # [a]=1, [a]+[b]=1
    assert graded_dagger(E(1, 1)) == E(1, 1)


def test_dagger_is_an_antihomomorphism():
    mats = [E(0, 1), E(1, 0), E(0, 0) + E(1, 1).scale(3)]
    for x in mats:
        for y in mats:
            px, py = x.homogeneous_parity(), y.homogeneous_parity()
            if px is None or py is None:
                continue
            sign = -1 if px * py else 1
            assert graded_dagger(x @ y) == (graded_dagger(y) @ graded_dagger(x)).scale(sign)


def test_tensor_dagger_is_factorwise():
    # (u (x) v)^dag = u^dag (x) v^dag, including on mixed-parity sums
    singles = [E(0, 1), E(1, 0), E(0, 0), E(1, 1)]
    for u in singles:
        for v in singles:
            lhs = tensor_dagger(graded_kron(u, v), G2, G2)
            rhs = graded_kron(graded_dagger(u), graded_dagger(v))
            assert lhs == rhs
    mixed = graded_kron(E(0, 1), E(1, 1)) + graded_kron(E(1, 0), E(0, 1))
    expected = graded_kron(graded_dagger(E(0, 1)), graded_dagger(E(1, 1))) + graded_kron(
        graded_dagger(E(1, 0)), graded_dagger(E(0, 1))
    )
    assert tensor_dagger(mixed, G2, G2) == expected


def test_bracket_is_graded_commutator():
    x, y = E(0, 1), E(1, 0)
    assert x.bracket(y, 1, 1) == x @ y + y @ x
    assert x.bracket(y, 0, 1) == x @ y - y @ x


def test_vector_rep_passes_defining_relations():
    for (m, n) in [(3, 0), (4, 0), (3, 2), (4, 2), (5, 4)]:
        rep = build_vector_rep(build_algebra(m, n))
        check_representation(rep)  # raises on failure
        assert rep.dim == m + n


def test_vector_rep_raising_operators_raise_weight():
    alg = build_algebra(3, 2)
    rep = build_vector_rep(alg)
    for lab in alg.root_labels():
        alpha = alg.root(lab)
        for (r, c) in rep.e[lab].entries:
            assert rep.weights[r] - rep.weights[c] == alpha


def test_qh_diag_conjugation_scales_weight_vectors():
    alg = build_algebra(3, 2)
    rep = build_vector_rep(alg)
    alpha = alg.root("l")
    qh = rep.qh_diag(alpha, 1)
    qh_inv = rep.qh_diag(alpha, -1)
    assert qh @ qh_inv == GradedMatrix.identity(rep.gradings)


def test_trivial_rep_is_one_dimensional_and_silent():
    rep = trivial_rep(build_algebra(4, 2))
    assert rep.dim == 1
    assert all(mat.is_zero() for mat in rep.e.values())
    assert all(mat.is_zero() for mat in rep.f.values())


def test_load_representation_round_trip():
    alg = build_algebra(3, 2)
    rep = build_vector_rep(alg)
    doc = json.loads(json.dumps(rep.to_json()))
    loaded = load_representation(doc, alg)
    assert loaded.e == rep.e
    assert loaded.f == rep.f
    assert loaded.weights == rep.weights


def test_load_representation_rejects_sign_flip():
    alg = build_algebra(3, 2)
    doc = build_vector_rep(alg).to_json()
    label = next(iter(doc["e"]))
    row, col, text = doc["e"][label][0]
    flipped = str(-LaurentPoly.parse(text))
    doc["e"][label][0] = [row, col, flipped]
    with pytest.raises(RelationError):
        load_representation(doc, alg)


def test_load_representation_rejects_malformed_document():
    with pytest.raises(SchemaError):
        load_representation({"algebra": {"m": 3, "n": 2}})


def test_load_representation_rejects_wrong_algebra():
    doc = build_vector_rep(build_algebra(3, 2)).to_json()
    with pytest.raises(SchemaError):
        load_representation(doc, build_algebra(4, 0))
