"""Combinatorial data of osp(m|n): gradings, bar map, metric signs,
weights, simple roots, Cartan matrix and the half-sum rho.

The basis is laid out in descending weight order:

    delta_1 > ... > delta_k > eps_1 > ... > eps_l > (0) > -eps_l > ...
    > -eps_1 > -delta_k > ... > -delta_1

so positions 1..k carry the odd indices mu = 1..k, positions k+1..k+m the
even indices i = 1..m, and positions k+m+1..N the odd indices mu = k+1..n.
All positions here are 0-based internally; serialization is 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class AlgebraError(ValueError):
    """Invalid or unsupported (m, n)."""


@dataclass(frozen=True)
class Weight:
    """Exact weight: coefficients of eps_1..eps_l and delta_1..delta_k."""

    eps: tuple[Fraction, ...]
    delta: tuple[Fraction, ...]

    @classmethod
    def zero(cls, l: int, k: int) -> "Weight":
        return cls((Fraction(0),) * l, (Fraction(0),) * k)

    @classmethod
    def eps_unit(cls, i: int, l: int, k: int, sign: int = 1) -> "Weight":
        eps = [Fraction(0)] * l
        eps[i - 1] = Fraction(sign)
        return cls(tuple(eps), (Fraction(0),) * k)

    @classmethod
    def delta_unit(cls, mu: int, l: int, k: int, sign: int = 1) -> "Weight":
        delta = [Fraction(0)] * k
        delta[mu - 1] = Fraction(sign)
        return cls((Fraction(0),) * l, tuple(delta))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(
            tuple(a + b for a, b in zip(self.eps, other.eps)),
            tuple(a + b for a, b in zip(self.delta, other.delta)),
        )

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.eps), tuple(-a for a in self.delta))

    def is_zero(self) -> bool:
        return not any(self.eps) and not any(self.delta)

    def to_json(self) -> dict:
        return {"eps": [str(c) for c in self.eps], "delta": [str(c) for c in self.delta]}

    @classmethod
    def from_json(cls, doc: dict) -> "Weight":
        return cls(
            tuple(Fraction(c) for c in doc["eps"]),
            tuple(Fraction(c) for c in doc["delta"]),
        )


def bilinear(w1: Weight, w2: Weight) -> Fraction:
    """(eps_i, eps_j) = delta_ij, (delta_mu, delta_nu) = -delta_munu, mixed 0."""
    return sum(
        (a * b for a, b in zip(w1.eps, w2.eps)), Fraction(0)
    ) - sum((a * b for a, b in zip(w1.delta, w2.delta)), Fraction(0))


@dataclass(frozen=True)
class AlgebraData:
    """All index-level data of osp(m|n) in the canonical descending layout."""

    m: int
    n: int
    l: int
    k: int
    dim: int
    labels: tuple[str, ...]
    gradings: tuple[int, ...]
    bar: tuple[int, ...]  # position involution
    xi: tuple[int, ...]
    weights: tuple[Weight, ...]
    simple_roots: tuple[tuple[str, Weight], ...]
    cartan: tuple[tuple[Fraction, ...], ...]
    rho: Weight

    # -- position bookkeeping -------------------------------------------

    def pos_even(self, i: int) -> int:
        """0-based position of even index i (1 <= i <= m)."""
        return self.k + i - 1

    def pos_odd(self, mu: int) -> int:
        """0-based position of odd index mu (1 <= mu <= n)."""
        return mu - 1 if mu <= self.k else self.m + mu - 1

    def root(self, label: str) -> Weight:
        for lab, w in self.simple_roots:
            if lab == label:
                return w
        raise KeyError(label)

    def root_labels(self) -> tuple[str, ...]:
        return tuple(lab for lab, _ in self.simple_roots)

    def root_parity(self, label: str) -> int:
        # alpha_s = delta_k - eps_1 is the only odd simple root
        return 1 if label == "s" else 0

    def weight_positions(self) -> dict[tuple, int]:
        """Map of nonzero weights to their (unique) position."""
        out = {}
        for p, w in enumerate(self.weights):
            if not w.is_zero():
                out[(w.eps, w.delta)] = p
        return out

    def extended_pairs(self) -> list[tuple[int, int]]:
        """All ordered position pairs (b, a) with eps_b > eps_a.

        The layout is strictly descending in weight, so this is exactly the
        set of pairs with b before a; the differences realise the extended
        positive root system (positive roots plus the 2*eps_i).
        """
        return [(b, a) for b in range(self.dim) for a in range(b + 1, self.dim)]

    def compare(self, a: int, b: int) -> str:
        """'gt' if eps_a > eps_b in the total weight order, else 'lt'."""
        if a == b:
            raise ValueError("compare() requires distinct indices")
        return "gt" if a < b else "lt"

    def weight_order(self) -> list[int]:
        """Positions sorted by descending weight (the canonical layout itself)."""
        return list(range(self.dim))

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "layout": list(self.labels),
            "gradings": list(self.gradings),
            "bar": [p + 1 for p in self.bar],
            "xi": list(self.xi),
            "simple_roots": [
                {"label": lab, **w.to_json()} for lab, w in self.simple_roots
            ],
            "cartan": [[str(c) for c in row] for row in self.cartan],
            "rho": self.rho.to_json(),
        }


def _rho(m: int, n: int, l: int, k: int) -> Weight:
    eps = tuple(Fraction(m - 2 * i, 2) for i in range(1, l + 1))
    delta = tuple(Fraction(n - m + 2 - 2 * mu, 2) for mu in range(1, k + 1))
    return Weight(eps, delta)


def _simple_roots(m: int, n: int, l: int, k: int) -> list[tuple[str, Weight]]:
    roots: list[tuple[str, Weight]] = []
    for mu in range(1, k):
        roots.append(
            (f"mu{mu}", Weight.delta_unit(mu, l, k) + Weight.delta_unit(mu + 1, l, k, -1))
        )
    if n > 0:
        roots.append(("s", Weight.delta_unit(k, l, k) + Weight.eps_unit(1, l, k, -1)))
    for i in range(1, l):
        roots.append(
            (f"i{i}", Weight.eps_unit(i, l, k) + Weight.eps_unit(i + 1, l, k, -1))
        )
    if m == 2 * l:
        alpha_l = Weight.eps_unit(l - 1, l, k) + Weight.eps_unit(l, l, k)
    else:
        alpha_l = Weight.eps_unit(l, l, k)
    roots.append(("l", alpha_l))
    return roots


def build_algebra(m: int, n: int) -> AlgebraData:
    """Construct all combinatorial data for osp(m|n), m > 2, n even >= 0."""
    if m <= 2:
        raise AlgebraError(f"m = {m}: this root system is only valid for m > 2")
    if n < 0 or n % 2 != 0:
        raise AlgebraError(f"n = {n}: n must be a nonnegative even integer")

    l, k = m // 2, n // 2
    dim = m + n

    labels: list[str] = []
    gradings: list[int] = []
    xi: list[int] = []
    weights: list[Weight] = []

    def odd_weight(mu: int) -> Weight:
        return (
            Weight.delta_unit(mu, l, k)
            if mu <= k
            else Weight.delta_unit(n + 1 - mu, l, k, -1)
        )

    def even_weight(i: int) -> Weight:
        if i <= l:
            return Weight.eps_unit(i, l, k)
        if m == 2 * l + 1 and i == l + 1:
            return Weight.zero(l, k)
        return Weight.eps_unit(m + 1 - i, l, k, -1)

    for mu in range(1, k + 1):
        labels.append(f"mu{mu}")
        gradings.append(1)
        xi.append((-1) ** mu)
        weights.append(odd_weight(mu))
    for i in range(1, m + 1):
        labels.append(f"i{i}")
        gradings.append(0)
        xi.append(1)
        weights.append(even_weight(i))
    for mu in range(k + 1, n + 1):
        labels.append(f"mu{mu}")
        gradings.append(1)
        xi.append((-1) ** mu)
        weights.append(odd_weight(mu))

    # bar pairs each position with the one carrying the opposite weight;
    # in this layout that is simply reversal.
    bar = tuple(dim - 1 - p for p in range(dim))

    roots = _simple_roots(m, n, l, k)
    cartan = []
    for _, ab in roots:
        norm = bilinear(ab, ab)
        row = []
        for _, ac in roots:
            pairing = bilinear(ab, ac)
            row.append(2 * pairing / norm if norm else pairing)
        cartan.append(tuple(row))

    alg = AlgebraData(
        m=m,
        n=n,
        l=l,
        k=k,
        dim=dim,
        labels=tuple(labels),
        gradings=tuple(gradings),
        bar=bar,
        xi=tuple(xi),
        weights=tuple(weights),
        simple_roots=tuple(roots),
        cartan=tuple(cartan),
        rho=_rho(m, n, l, k),
    )
    _check_invariants(alg)
    return alg


def _check_invariants(alg: AlgebraData) -> None:
    for p in range(alg.dim):
        assert alg.bar[alg.bar[p]] == p, "bar must be an involution"
        assert alg.weights[alg.bar[p]] == -alg.weights[p], "weight(bar) = -weight"
    # zero weight appears exactly once, for odd m, and is self-barred
    zeros = [p for p, w in enumerate(alg.weights) if w.is_zero()]
    if alg.m % 2 == 1:
        assert len(zeros) == 1 and alg.bar[zeros[0]] == zeros[0]
    else:
        assert not zeros
    # nonzero weights pairwise distinct
    nz = [(w.eps, w.delta) for w in alg.weights if not w.is_zero()]
    assert len(nz) == len(set(nz)), "nonzero weights must be pairwise distinct"
    # (rho, alpha) = (alpha, alpha)/2 on every simple root
    for lab, alpha in alg.simple_roots:
        assert bilinear(alg.rho, alpha) == bilinear(alpha, alpha) / 2, (
            f"rho pairing fails on alpha_{lab}"
        )
    # every simple root is positive: realized as eps_b - eps_a with b above a
    for lab, alpha in alg.simple_roots:
        found = False
        for (b, a) in alg.extended_pairs():
            if alg.weights[b] - alg.weights[a] == alpha:
                found = True
                break
        assert found, f"alpha_{lab} is not positive in the weight order"
