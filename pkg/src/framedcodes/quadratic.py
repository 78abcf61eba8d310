"""Sign cocycle and self-orthogonal bookkeeping for code VOA modules."""

from __future__ import annotations

from .errors import InternalConsistencyError, PreconditionError
from .gf2 import (
    Codeword,
    LinearCode,
    dual,
    embed_code,
    intersect,
    nullspace,
    puncture,
    reduce,
)


def epsilon(alpha: Codeword, beta: Codeword) -> int:
    """(-1)^m with m = #{(i, j) : i > j, alpha_i = 1, beta_j = 1}."""
    alpha._check(beta)
    # sweep coordinates left to right, counting beta's ones strictly to the left
    n = alpha.n
    a, b = alpha.bits, beta.bits
    m = 0
    seen = 0
    for i in range(n - 1, -1, -1):
        if a >> i & 1:
            m += seen
        if b >> i & 1:
            seen += 1
    return -1 if m & 1 else 1


def radical(code: LinearCode) -> LinearCode:
    return intersect(code, dual(code))


def _even_part(code: LinearCode) -> LinearCode:
    """Kernel of the weight-parity functional."""
    rows = list(code.rows)
    odd = [r for r in rows if r.bit_count() & 1]
    if not odd:
        return code
    first = odd[0]
    return LinearCode(code.n, [r ^ first if r.bit_count() & 1 else r for r in rows if r != first])


def maximal_self_orthogonal_subcode(code: LinearCode) -> LinearCode:
    """A maximal self-orthogonal subcode, grown deterministically from the radical.

    Every step adjoins the first canonical basis word of E cap H^perp that is
    not yet in H, where E is the even subcode.  For an even code all maximal
    self-orthogonal subcodes have dimension dim R + (dim C - dim R) / 2.
    """
    even = _even_part(code)
    h = radical(even)
    while True:
        room = intersect(even, dual(h))
        extra = next((r for r in room.rows if reduce(r, h.rows)), None)
        if extra is None:
            break
        h = LinearCode(code.n, h.rows + (extra,))
    if code.is_even():
        r = radical(code).dim
        if 2 * (h.dim - r) != code.dim - r:
            raise InternalConsistencyError(
                f"maximal self-orthogonal subcode has dim {h.dim}, expected "
                f"{r} + ({code.dim} - {r})/2"
            )
    return h


def perp_within(code: LinearCode, beta: Codeword) -> LinearCode:
    """H^{perp_beta}: words supported on beta orthogonal to every word of the code.

    Computed as a dual inside the coordinates of beta, then re-embedded, so
    coordinates outside supp(beta) never enter.
    """
    coords = beta.support
    if code.support_bits & ~beta.bits:
        raise PreconditionError("code is not supported inside supp(beta)")
    short = puncture(code, coords)
    inner = LinearCode(len(coords), nullspace(short.rows, len(coords)), _canonical=True)
    return embed_code(inner, code.n, coords)


def kappa_vector(h: LinearCode, beta: Codeword) -> Codeword:
    """Lexicographically smallest kappa on supp(beta) with <kappa, x> = wt(x)/2 on h."""
    if h.n != beta.n:
        raise PreconditionError("length mismatch")
    if h.support_bits & ~beta.bits:
        raise PreconditionError("h is not supported inside supp(beta)")
    rows = h.rows
    for i, a in enumerate(rows):
        if a.bit_count() & 1:
            raise PreconditionError("h contains an odd word; wt/2 is undefined")
        for b in rows[i + 1:]:
            if (a & b).bit_count() & 1:
                raise PreconditionError("h is not self-orthogonal; wt/2 mod 2 is not linear")
    # reduced echelon rows see exactly one pivot each, so a unit vector per
    # odd-valued row solves the system
    k = 0
    for r in rows:
        if (r.bit_count() // 2) & 1:
            k |= 1 << (r.bit_length() - 1)
    k = reduce(k, perp_within(h, beta).rows)
    return Codeword(h.n, k)


def kappa_functional_holds(h: LinearCode, kappa: Codeword) -> bool:
    return all(
        (r & kappa.bits).bit_count() % 2 == (r.bit_count() // 2) % 2 for r in h.rows
    )


__all__ = [
    "epsilon",
    "radical",
    "maximal_self_orthogonal_subcode",
    "perp_within",
    "kappa_vector",
    "kappa_functional_holds",
]
