"""Self-dual and doubly even self-dual subcodes with respect to a support.

The search runs in the coordinates of beta.  A partial solution T (self-
orthogonal, or doubly even) can be completed inside the allowed space E iff
S = E cap T^perp satisfies

* S^perp is contained in S (so the form on S/S^perp is non-degenerate),
* in the doubly even case, q(x) = wt(x)/2 mod 2 vanishes on S^perp and the
  quadratic space S/S^perp has Arf invariant 0.

Every completion T' satisfies S^perp <= T' <= S, and T'/S^perp is a maximal
totally singular subspace of S/S^perp, which has half dimension exactly when
the Arf invariant is 0.  The depth-first search prunes with this test, so it
descends without backtracking on feasible inputs.
"""

from __future__ import annotations

import itertools

from .errors import BudgetExceededError, InternalConsistencyError, PreconditionError
from .gf2 import (
    DEFAULT_BUDGET,
    Budget,
    Codeword,
    LinearCode,
    dual,
    embed_code,
    full_space,
    intersect,
    mask,
    puncture,
    quotient_basis,
    subcode_supported_on,
)
from .quadratic import perp_within


def _q(x: int) -> int:
    return (x.bit_count() >> 1) & 1


def arf_invariant(space: LinearCode) -> int:
    """Arf invariant of q = wt/2 mod 2 on space/radical.

    The space must be even and q must vanish on its radical.
    """
    rad = intersect(space, dual(space))
    vecs = quotient_basis(space, rad)
    arf = 0
    while vecs:
        a = vecs.pop(0)
        j = next((i for i, b in enumerate(vecs) if (a & b).bit_count() & 1), None)
        if j is None:
            raise InternalConsistencyError("form is degenerate on the quotient")
        b = vecs.pop(j)
        arf ^= _q(a) & _q(b)
        out = []
        for c in vecs:
            if (c & b).bit_count() & 1:
                c ^= a
            if (c & a).bit_count() & 1:
                c ^= b
            out.append(c)
        vecs = out
    return arf


def completable(space: LinearCode, doubly_even: bool) -> bool:
    rad = dual(space)
    if not rad <= space:
        return False
    if doubly_even:
        if any(r.bit_count() % 4 for r in rad.rows):
            return False
        return arf_invariant(space) == 0
    return True


class _Search:
    def __init__(self, allowed: LinearCode, doubly_even: bool, budget: Budget):
        self.allowed = allowed
        self.m = allowed.n
        self.doubly_even = doubly_even
        self.limit = budget.search_nodes
        self.nodes = 0

    def run(self, start: LinearCode) -> LinearCode | None:
        return self._dfs(start)

    def _candidates(self, space: LinearCode, t: LinearCode):
        comp = quotient_basis(space, t)
        for size in range(1, len(comp) + 1):
            for combo in itertools.combinations(comp, size):
                v = 0
                for c in combo:
                    v ^= c
                if self.doubly_even and v.bit_count() % 4:
                    continue
                yield v

    def _dfs(self, t: LinearCode) -> LinearCode | None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise BudgetExceededError(
                f"self-dual subcode search exceeded {self.limit} nodes", explored=self.nodes
            )
        if 2 * t.dim == self.m:
            return t
        space = intersect(self.allowed, dual(t))
        if not completable(space, self.doubly_even):
            return None
        for v in self._candidates(space, t):
            found = self._dfs(LinearCode(self.m, t.rows + (v,)))
            if found is not None:
                return found
        return None


def is_self_dual_wrt(h: LinearCode, beta: Codeword) -> bool:
    if h.n != beta.n:
        return False
    if h.support_bits != beta.bits:
        return False
    return 2 * h.dim == beta.weight and perp_within(h, beta) == h


def _even_rows(code: LinearCode) -> LinearCode:
    return intersect(code, dual(LinearCode(code.n, [mask(code.n)])))


def find_self_dual_subcode_wrt(
    code: LinearCode,
    beta: Codeword,
    require_doubly_even: bool = False,
    budget: Budget = DEFAULT_BUDGET,
) -> LinearCode | None:
    """A subcode H of C_beta with H = H^{perp_beta} (doubly even if requested), or None."""
    if beta.n != code.n:
        raise PreconditionError("length mismatch")
    m = beta.weight
    if m % 2 or (require_doubly_even and m % 8):
        return None
    if m == 0:
        return LinearCode(code.n)
    if beta not in code:
        return None
    coords = beta.support
    local = puncture(subcode_supported_on(code, beta), coords)
    allowed = _even_rows(local)
    ones = LinearCode(m, [mask(m)])
    found = _Search(allowed, require_doubly_even, budget).run(ones)
    if found is None:
        return None
    h = embed_code(found, code.n, coords)
    if not is_self_dual_wrt(h, beta) or (require_doubly_even and not h.is_doubly_even()):
        raise InternalConsistencyError("search returned an invalid subcode")
    return h


def extend_to_doubly_even_self_dual(h: LinearCode, budget: Budget = DEFAULT_BUDGET) -> LinearCode | None:
    """A doubly even self-dual code containing h.  None only signals a budget failure."""
    n = h.n
    if n % 8:
        raise PreconditionError(f"length {n} is not divisible by 8")
    if not h.is_doubly_even():
        raise PreconditionError("h is not doubly even")
    if mask(n) not in h:
        raise PreconditionError("h does not contain the all-one vector")
    allowed = full_space(n)
    found = _Search(_even_rows(allowed), True, budget).run(h)
    if found is not None:
        if not (found.is_doubly_even() and 2 * found.dim == n and h <= found):
            raise InternalConsistencyError("extension is not doubly even self-dual")
    return found


def search_nodes_used(code: LinearCode, beta: Codeword, require_doubly_even: bool = False) -> int:
    """Node count of one search, for diagnostics."""
    coords = beta.support
    local = puncture(subcode_supported_on(code, beta), coords)
    s = _Search(_even_rows(local), require_doubly_even, DEFAULT_BUDGET)
    s.run(LinearCode(len(coords), [mask(len(coords))]) if coords else LinearCode(0))
    return s.nodes


__all__ = [
    "arf_invariant",
    "completable",
    "is_self_dual_wrt",
    "find_self_dual_subcode_wrt",
    "extend_to_doubly_even_self_dual",
]
