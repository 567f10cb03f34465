"""Sparse matrices over Laurent polynomials on a Z2-graded basis.

All Koszul signs live in exactly three places: graded_kron, graded_dagger
and graded_permutation.  Ordinary matrix composition is ungraded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .qring import LaurentPoly, ONE, ZERO, Scalar, q_int
from .superroot import AlgebraData, Weight, bilinear


class RelationError(AssertionError):
    """A required algebra relation fails; the message names the relation."""


class SchemaError(ValueError):
    """A serialized document does not match its schema."""


class GradedMatrix:
    """Square sparse matrix over LaurentPoly with a per-position grading.

    Entries are stored in a dict {(row, col): nonzero LaurentPoly}; the
    grading vector travels with the matrix so tensor operations know the
    parities of both factors.
    """

    __slots__ = ("dim", "gradings", "entries")

    def __init__(
        self,
        gradings: tuple[int, ...],
        entries: Mapping[tuple[int, int], LaurentPoly] | None = None,
    ):
        self.gradings = tuple(gradings)
        self.dim = len(self.gradings)
        self.entries: dict[tuple[int, int], LaurentPoly] = {}
        if entries:
            for (r, c), v in entries.items():
                if v:
                    if not (0 <= r < self.dim and 0 <= c < self.dim):
                        raise IndexError(f"entry ({r},{c}) outside dim {self.dim}")
                    self.entries[(r, c)] = v

    # -- constructors ---------------------------------------------------

    @classmethod
    def zeros(cls, gradings: tuple[int, ...]) -> "GradedMatrix":
        return cls(gradings)

    @classmethod
    def identity(cls, gradings: tuple[int, ...]) -> "GradedMatrix":
        return cls(gradings, {(i, i): ONE for i in range(len(gradings))})

    @classmethod
    def elementary(cls, a: int, b: int, gradings: tuple[int, ...]) -> "GradedMatrix":
        """E^a_b: entry (a, b) equal to 1."""
        return cls(gradings, {(a, b): ONE})

    @classmethod
    def diagonal(cls, gradings: tuple[int, ...], diag) -> "GradedMatrix":
        return cls(gradings, {(i, i): v for i, v in enumerate(diag)})

    # -- plain (ungraded) matrix algebra -----------------------------------

    def _same_space(self, other: "GradedMatrix") -> None:
        if self.gradings != other.gradings:
            raise ValueError("graded spaces do not match")

    def __add__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._same_space(other)
        out = dict(self.entries)
        for key, v in other.entries.items():
            w = out.get(key, ZERO) + v
            if w:
                out[key] = w
            elif key in out:
                del out[key]
        res = GradedMatrix.__new__(GradedMatrix)
        res.gradings, res.dim, res.entries = self.gradings, self.dim, out
        return res

    def __sub__(self, other: "GradedMatrix") -> "GradedMatrix":
        return self + (-other)

    def __neg__(self) -> "GradedMatrix":
        res = GradedMatrix.__new__(GradedMatrix)
        res.gradings, res.dim = self.gradings, self.dim
        res.entries = {k: -v for k, v in self.entries.items()}
        return res

    def scale(self, c: LaurentPoly | Scalar) -> "GradedMatrix":
        if not isinstance(c, LaurentPoly):
            c = LaurentPoly.const(c)
        if not c:
            return GradedMatrix.zeros(self.gradings)
        res = GradedMatrix.__new__(GradedMatrix)
        res.gradings, res.dim = self.gradings, self.dim
        res.entries = {k: v * c for k, v in self.entries.items()}
        return res

    def __matmul__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._same_space(other)
        by_row: dict[int, list[tuple[int, LaurentPoly]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out: dict[tuple[int, int], LaurentPoly] = {}
        for (r, c), v in self.entries.items():
            for c2, w in by_row.get(c, ()):
                key = (r, c2)
                acc = out.get(key, ZERO) + v * w
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        res = GradedMatrix.__new__(GradedMatrix)
        res.gradings, res.dim, res.entries = self.gradings, self.dim, out
        return res

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self.gradings == other.gradings and self.entries == other.entries

    def __hash__(self):
        raise TypeError("GradedMatrix is mutable-style; not hashable")

    def is_zero(self) -> bool:
        return not self.entries

    def __repr__(self) -> str:
        ent = ", ".join(f"({r},{c}): {v}" for (r, c), v in sorted(self.entries.items()))
        return f"GradedMatrix(dim={self.dim}, {{{ent}}})"

    # -- graded structure --------------------------------------------------

    def homogeneous_parity(self) -> int | None:
        """Common parity [r]+[c] of all entries, or None if mixed/empty."""
        parities = {
            (self.gradings[r] + self.gradings[c]) % 2 for (r, c) in self.entries
        }
        if len(parities) == 1:
            return parities.pop()
        return None

    def bracket(self, other: "GradedMatrix", parity_self: int, parity_other: int
                ) -> "GradedMatrix":
        """Graded commutator [x, y] = xy - (-1)^([x][y]) yx."""
        sign = -1 if (parity_self * parity_other) % 2 else 1
        return (self @ other) - (other @ self).scale(sign)


def graded_kron(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    """Graded tensor product with the Koszul sign.

    Entry rule: M[(r1,r2),(c1,c2)] = (-1)^(([r2]+[c2])*[c1]) A[r1,c1] B[r2,c2],
    which reproduces (x (x) y)(u (x) v) = (-1)^([y][u]) xu (x) yv on
    homogeneous elementary factors.
    """
    ga, gb = a.gradings, b.gradings
    db = b.dim
    gradings = tuple((p + q) % 2 for p in ga for q in gb)
    entries: dict[tuple[int, int], LaurentPoly] = {}
    for (r1, c1), va in a.entries.items():
        gc1 = ga[c1]
        for (r2, c2), vb in b.entries.items():
            sign = -1 if ((gb[r2] + gb[c2]) * gc1) % 2 else 1
            v = va * vb if sign > 0 else -(va * vb)
            entries[(r1 * db + r2, c1 * db + c2)] = v
    return GradedMatrix(gradings, entries)


def graded_permutation(gradings: tuple[int, ...]) -> GradedMatrix:
    """P(v_a (x) v_b) = (-1)^([a][b]) v_b (x) v_a on the doubled space."""
    d = len(gradings)
    entries = {}
    for a in range(d):
        for b in range(d):
            sign = -1 if (gradings[a] * gradings[b]) % 2 else 1
            entries[(b * d + a, a * d + b)] = LaurentPoly.const(sign)
    doubled = tuple((p + q) % 2 for p in gradings for q in gradings)
    return GradedMatrix(doubled, entries)


def graded_dagger(x: GradedMatrix) -> GradedMatrix:
    """Graded conjugation: (X^dag)[b,a] = (-1)^([a]([a]+[b])) X[a,b]."""
    g = x.gradings
    entries = {}
    for (a, b), v in x.entries.items():
        sign = -1 if (g[a] * (g[a] + g[b])) % 2 else 1
        entries[(b, a)] = v if sign > 0 else -v
    return GradedMatrix(g, entries)


def tensor_dagger(
    x: GradedMatrix, left: tuple[int, ...], right: tuple[int, ...]
) -> GradedMatrix:
    """Graded conjugation of an operator on a tensor product, applied
    factorwise: (u (x) v)^dag = u^dag (x) v^dag.

    On the composite matrix this is the entrywise dagger rule with an extra
    Koszul factor (-1)^([r1][r2] + [c1][c2]) coming from the sign convention
    of graded_kron; without it, sums of mixed-parity simple tensors conjugate
    incorrectly.
    """
    d2 = len(right)
    if len(left) * d2 != x.dim:
        raise ValueError("factor gradings do not match the composite dimension")
    entries = {}
    for (r, c), v in x.entries.items():
        r1, r2 = divmod(r, d2)
        c1, c2 = divmod(c, d2)
        gr, gc = (left[r1] + right[r2]) % 2, (left[c1] + right[c2]) % 2
        exp = gr * (gr + gc) + left[r1] * right[r2] + left[c1] * right[c2]
        entries[(c, r)] = v if exp % 2 == 0 else -v
    return GradedMatrix(x.gradings, entries)


# ---------------------------------------------------------------------------
# Representations
# ---------------------------------------------------------------------------


@dataclass
class Representation:
    """A weight module given by matrices for the simple generators."""

    algebra: AlgebraData
    name: str
    gradings: tuple[int, ...]
    weights: tuple[Weight, ...]
    e: dict[str, GradedMatrix]
    f: dict[str, GradedMatrix]

    @property
    def dim(self) -> int:
        return len(self.gradings)

    def qh_diag(self, w: Weight, t: Scalar) -> GradedMatrix:
        """Diagonal q^(t h_w): entry q^(t (w, wt_b)) at position b."""
        t = Fraction(t)
        diag = [
            LaurentPoly.from_qpower(t * bilinear(w, wb)) for wb in self.weights
        ]
        return GradedMatrix.diagonal(self.gradings, diag)

    def big_e(self, label: str) -> GradedMatrix:
        """E_a = e_a q^(h_a / 2), the adjoint-friendly raising combination."""
        return self.e[label] @ self.qh_diag(self.algebra.root(label), Fraction(1, 2))

    def to_json(self) -> dict:
        def mat_entries(mat: GradedMatrix) -> list:
            return [
                [r + 1, c + 1, str(v)] for (r, c), v in sorted(mat.entries.items())
            ]

        return {
            "algebra": {"m": self.algebra.m, "n": self.algebra.n},
            "name": self.name,
            "dim": self.dim,
            "gradings": list(self.gradings),
            "weights": [w.to_json() for w in self.weights],
            "e": {lab: mat_entries(m) for lab, m in self.e.items()},
            "f": {lab: mat_entries(m) for lab, m in self.f.items()},
        }


def matrix_from_entries(entries: list, gradings: tuple[int, ...]) -> GradedMatrix:
    out: dict[tuple[int, int], LaurentPoly] = {}
    for item in entries:
        try:
            r, c, text = item
            val = LaurentPoly.parse(text)
        except (TypeError, ValueError) as exc:
            raise SchemaError(f"bad matrix entry {item!r}: {exc}") from exc
        out[(int(r) - 1, int(c) - 1)] = val
    return GradedMatrix(gradings, out)


def check_representation(rep: Representation) -> None:
    """Assert the defining relations on the simple-generator matrices.

    Checks weight homogeneity of every e_a / f_a (which encodes the Cartan
    relations), the graded bracket [e_a, f_b] = delta_ab [h_a]_q, and
    nilpotency of the isotropic pair.  Raises RelationError naming the
    first violated relation.
    """
    alg = rep.algebra
    labels = alg.root_labels()
    if set(rep.e) != set(labels) or set(rep.f) != set(labels):
        raise SchemaError(
            f"generator labels {sorted(rep.e)} do not match roots {sorted(labels)}"
        )
    for lab in labels:
        alpha = alg.root(lab)
        for mat, shift, kind in ((rep.e[lab], alpha, "e"), (rep.f[lab], -alpha, "f")):
            for (r, c) in mat.entries:
                if rep.weights[r] - rep.weights[c] != shift:
                    raise RelationError(
                        f"[h, {kind}_{lab}] relation: entry ({r + 1},{c + 1}) does not "
                        f"shift weight by {'+' if kind == 'e' else '-'}alpha_{lab}"
                    )
    for lab_a in labels:
        pa = alg.root_parity(lab_a)
        for lab_b in labels:
            pb = alg.root_parity(lab_b)
            lhs = rep.e[lab_a].bracket(rep.f[lab_b], pa, pb)
            if lab_a == lab_b:
                alpha = alg.root(lab_a)
                diag = []
                for wb in rep.weights:
                    x = bilinear(alpha, wb)
                    if x.denominator != 1:
                        raise RelationError(
                            f"[e_{lab_a}, f_{lab_a}]: non-integer pairing {x}"
                        )
                    diag.append(q_int(int(x)))
                rhs = GradedMatrix.diagonal(rep.gradings, diag)
            else:
                rhs = GradedMatrix.zeros(rep.gradings)
            if lhs != rhs:
                raise RelationError(f"[e_{lab_a}, f_{lab_b}] relation fails")
        alpha = alg.root(lab_a)
        if bilinear(alpha, alpha) == 0:
            if not (rep.e[lab_a] @ rep.e[lab_a]).is_zero():
                raise RelationError(f"[e_{lab_a}, e_{lab_a}] = 0 fails")
            if not (rep.f[lab_a] @ rep.f[lab_a]).is_zero():
                raise RelationError(f"[f_{lab_a}, f_{lab_a}] = 0 fails")


def pi_sigma(alg: AlgebraData, a: int, b: int) -> GradedMatrix:
    """Vector representation of the Cartan-Weyl generator with upper index a,
    lower index b (0-based positions):

        E^a_b - (-1)^([a]([a]+[b])) xi_a xi_b E^bar(b)_bar(a)
    """
    g = alg.gradings
    sign = -1 if (g[a] * (g[a] + g[b])) % 2 else 1
    coeff = -sign * alg.xi[a] * alg.xi[b]
    entries = {(a, b): ONE}
    key = (alg.bar[b], alg.bar[a])
    prev = entries.get(key, ZERO)
    val = prev + LaurentPoly.const(coeff)
    if val:
        entries[key] = val
    elif key in entries:
        del entries[key]
    return GradedMatrix(g, entries)


def build_vector_rep(alg: AlgebraData) -> Representation:
    """The undeformed vector representation, with relations asserted."""
    e: dict[str, GradedMatrix] = {}
    f: dict[str, GradedMatrix] = {}
    pe, po = alg.pos_even, alg.pos_odd
    for lab, _ in alg.simple_roots:
        if lab.startswith("i"):
            i = int(lab[1:])
            e[lab] = pi_sigma(alg, pe(i), pe(i + 1))
            f[lab] = pi_sigma(alg, pe(i + 1), pe(i))
        elif lab.startswith("mu"):
            mu = int(lab[2:])
            e[lab] = pi_sigma(alg, po(mu), po(mu + 1))
            f[lab] = -pi_sigma(alg, po(mu + 1), po(mu))
        elif lab == "s":
            e[lab] = pi_sigma(alg, po(alg.k), pe(1))
            f[lab] = -pi_sigma(alg, pe(1), po(alg.k))
        elif lab == "l":
            if alg.m == 2 * alg.l:
                e[lab] = pi_sigma(alg, pe(alg.l - 1), alg.bar[pe(alg.l)])
                f[lab] = pi_sigma(alg, alg.bar[pe(alg.l)], pe(alg.l - 1))
            else:
                e[lab] = pi_sigma(alg, pe(alg.l), pe(alg.l + 1))
                f[lab] = pi_sigma(alg, pe(alg.l + 1), pe(alg.l))
    rep = Representation(
        algebra=alg,
        name="vector",
        gradings=alg.gradings,
        weights=alg.weights,
        e=e,
        f=f,
    )
    check_representation(rep)
    return rep


def trivial_rep(alg: AlgebraData) -> Representation:
    """One-dimensional module on which every generator acts by zero."""
    z = GradedMatrix((0,))
    labels = alg.root_labels()
    rep = Representation(
        algebra=alg,
        name="trivial",
        gradings=(0,),
        weights=(Weight.zero(alg.l, alg.k),),
        e={lab: z for lab in labels},
        f={lab: z for lab in labels},
    )
    check_representation(rep)
    return rep


def load_representation(doc: dict, alg: AlgebraData | None = None) -> Representation:
    """Parse and validate a Representation document (see to_json for layout)."""
    try:
        m, n = int(doc["algebra"]["m"]), int(doc["algebra"]["n"])
        name = str(doc["name"])
        dim = int(doc["dim"])
        gradings = tuple(int(g) for g in doc["gradings"])
        weights = tuple(Weight.from_json(w) for w in doc["weights"])
        e_doc, f_doc = doc["e"], doc["f"]
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed representation document: {exc}") from exc
    if alg is None:
        from .superroot import build_algebra

        alg = build_algebra(m, n)
    elif (alg.m, alg.n) != (m, n):
        raise SchemaError(f"document is for osp({m}|{n}), expected osp({alg.m}|{alg.n})")
    if len(gradings) != dim or len(weights) != dim:
        raise SchemaError("gradings/weights length does not match dim")
    e = {lab: matrix_from_entries(ent, gradings) for lab, ent in e_doc.items()}
    f = {lab: matrix_from_entries(ent, gradings) for lab, ent in f_doc.items()}
    rep = Representation(alg, name, gradings, weights, e, f)
    check_representation(rep)
    return rep
