"""Code-level data of the pointwise frame stabilizer.

For a framed VOA with structure codes (C, D) the stabilizer is an extension of
a group P/C^perp of sigma-type lifts by the tau-involutions Z_2^n / D^perp.  P
consists of the xi with alpha * xi in C for every alpha in D.  A lift of xi has
order 2 when wt(alpha * xi) is divisible by 4 on all of D and order 4
otherwise; two lifts commute when <alpha * xi1, alpha * xi2> vanishes on D.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalConsistencyError, PreconditionError
from .gf2 import (
    DEFAULT_BUDGET,
    Budget,
    Codeword,
    LinearCode,
    dual,
    quotient_basis,
    span_words,
)


def compute_P(c: LinearCode, d: LinearCode) -> LinearCode:
    """All xi with alpha * xi in C for every alpha in D."""
    if c.n != d.n:
        raise PreconditionError("C and D have different lengths")
    checks = dual(c).rows
    return dual(LinearCode(c.n, [h & a for h in checks for a in d.rows]))


def _require_in(p: LinearCode, xi: Codeword) -> None:
    if xi not in p:
        raise PreconditionError(f"xi = {xi} does not lie in P")


def _half_weight_functional(d: LinearCode, xi: Codeword) -> list[int]:
    """wt(alpha * xi)/2 mod 2 on the basis of D, after checking it is linear."""
    x = xi.bits
    rows = d.rows
    vals = []
    for i, a in enumerate(rows):
        w = (a & x).bit_count()
        if w & 1:
            raise InternalConsistencyError("alpha * xi has odd weight for xi in P")
        vals.append((w >> 1) & 1)
        for b in rows[i + 1:]:
            if (a & b & x).bit_count() & 1:
                raise InternalConsistencyError("wt(alpha * xi)/2 mod 2 is not linear on D")
    return vals


def order_of_lift(c: LinearCode, d: LinearCode, xi: Codeword, p: LinearCode | None = None) -> int:
    p = compute_P(c, d) if p is None else p
    _require_in(p, xi)
    if xi in dual(c):
        return 1
    return 4 if any(_half_weight_functional(d, xi)) else 2


def commute_lifts(
    c: LinearCode, d: LinearCode, xi1: Codeword, xi2: Codeword, p: LinearCode | None = None
) -> bool:
    p = compute_P(c, d) if p is None else p
    _require_in(p, xi1)
    _require_in(p, xi2)
    x = xi1.bits & xi2.bits
    return all((a & x).bit_count() % 2 == 0 for a in d.rows)


@dataclass(frozen=True)
class StabilizerDescription:
    c: LinearCode
    d: LinearCode
    P: LinearCode
    tau_rank: int
    sigma_rank: int
    transversal: tuple[Codeword, ...]
    orders: tuple[int, ...]
    commutator: tuple[tuple[int, ...], ...]

    @property
    def log2_order(self) -> int:
        return self.tau_rank + self.sigma_rank

    @property
    def group_order(self) -> int:
        return 1 << self.log2_order

    def noncommuting_pairs(self) -> list[tuple[int, int]]:
        m = self.commutator
        return [(i, j) for i in range(len(m)) for j in range(i + 1, len(m)) if m[i][j]]

    def to_dict(self) -> dict:
        return {
            "n": self.c.n,
            "dim_C": self.c.dim,
            "dim_D": self.d.dim,
            "dim_P": self.P.dim,
            "tau_rank": self.tau_rank,
            "sigma_rank": self.sigma_rank,
            "log2_order": self.log2_order,
            "transversal": [str(w) for w in self.transversal],
            "orders": list(self.orders),
            "commutator": [list(r) for r in self.commutator],
        }


def describe_stabilizer(c: LinearCode, d: LinearCode) -> StabilizerDescription:
    p = compute_P(c, d)
    cperp = dual(c)
    if not cperp <= p:
        raise InternalConsistencyError("C^perp is not contained in P")
    n = c.n
    basis = [Codeword(n, r) for r in quotient_basis(p, cperp)]
    orders = tuple(order_of_lift(c, d, xi, p) for xi in basis)
    comm = tuple(
        tuple(0 if commute_lifts(c, d, a, b, p) else 1 for b in basis) for a in basis
    )
    return StabilizerDescription(
        c=c,
        d=d,
        P=p,
        tau_rank=n - dual(d).dim,
        sigma_rank=p.dim - cperp.dim,
        transversal=tuple(basis),
        orders=orders,
        commutator=comm,
    )


def _kernel(code: LinearCode, values: list[int]) -> LinearCode:
    """Kernel of the linear functional taking the given values on the basis."""
    rows = list(code.rows)
    hits = [r for r, v in zip(rows, values) if v]
    if not hits:
        return code
    first = hits[0]
    return LinearCode(code.n, [r ^ first if v else r for r, v in zip(rows, values) if r != first])


@dataclass(frozen=True)
class GradedSplit:
    """C = C^0 u C^1 by <alpha, xi>, D = D^0 u D^1 by wt(alpha * xi)/2."""

    xi: Codeword
    c0: LinearCode
    c1_rep: Codeword | None
    d0: LinearCode
    d1_rep: Codeword | None

    def z4_index(self, budget: Budget = DEFAULT_BUDGET) -> list[tuple[Codeword, int]]:
        """D^0 x {1, -1} and D^1 x {i, -i} as (word, quarter turns) pairs."""
        n = self.xi.n
        out = []
        for w in span_words(self.d0.rows, n, budget):
            w = Codeword(n, int(w))
            out += [(w, 0), (w, 2)]
            if self.d1_rep is not None:
                out += [(w + self.d1_rep, 1), (w + self.d1_rep, 3)]
        return sorted(out)


def graded_split(c: LinearCode, d: LinearCode, xi: Codeword, p: LinearCode | None = None) -> GradedSplit:
    p = compute_P(c, d) if p is None else p
    _require_in(p, xi)
    c0 = _kernel(c, [(r & xi.bits).bit_count() & 1 for r in c.rows])
    d0 = _kernel(d, _half_weight_functional(d, xi))
    c1 = c0.reduce(_first_outside(c, c0)) if c0 != c else None
    d1 = d0.reduce(_first_outside(d, d0)) if d0 != d else None
    return GradedSplit(xi, c0, c1, d0, d1)


def _first_outside(big: LinearCode, small: LinearCode) -> Codeword:
    return Codeword(big.n, next(r for r in big.rows if r not in small))


__all__ = [
    "compute_P",
    "order_of_lift",
    "commute_lifts",
    "StabilizerDescription",
    "describe_stabilizer",
    "GradedSplit",
    "graded_split",
]
