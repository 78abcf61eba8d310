"""Labels, duality and fusion for irreducible modules of a code VOA.

A module is named by a pair (beta, gamma) with beta in C^perp.  Two pairs with
the same beta name the same module exactly when their gammas agree modulo
C + R^{perp_beta}, R being the radical of C_beta.  Labels store gamma as the
lexicographically smallest element of that coset, so equality of labels is
plain data equality.  The choice of the character iota never appears: every
choice is absorbed into a shift of gamma.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import BudgetExceededError, PreconditionError, UnsupportedFusionError
from .gf2 import (
    DEFAULT_BUDGET,
    Budget,
    Codeword,
    LinearCode,
    complement_coords,
    coset_min_weight,
    coset_words_up_to_weight,
    dual,
    puncture,
    quotient_basis,
    restrict_word,
    span_words,
    subcode_supported_on,
    sum_codes,
)
from .quadratic import kappa_vector, maximal_self_orthogonal_subcode, perp_within, radical
from .selfdual import find_self_dual_subcode_wrt

# punctured codes up to this dimension are scanned directly instead of by syndrome
_DIRECT_SCAN_DIM = 16


@lru_cache(maxsize=256)
def gamma_space(code: LinearCode, beta: Codeword) -> LinearCode:
    """C + R^{perp_beta}, the group by which gamma is taken modulo."""
    r = radical(subcode_supported_on(code, beta))
    return sum_codes(code, perp_within(r, beta))


@lru_cache(maxsize=256)
def _self_orthogonal_data(code: LinearCode, beta: Codeword) -> tuple[LinearCode, Codeword]:
    h = maximal_self_orthogonal_subcode(subcode_supported_on(code, beta))
    return h, kappa_vector(h, beta)


@dataclass(frozen=True)
class ModuleLabel:
    code: LinearCode
    beta: Codeword
    gamma: Codeword

    def __post_init__(self):
        if self.beta.n != self.code.n or self.gamma.n != self.code.n:
            raise PreconditionError("label words must have the code's length")

    def __str__(self) -> str:
        return f"{self.beta.hex()}:{self.gamma.hex()}"

    def sort_key(self) -> tuple[int, int]:
        return (self.beta.bits, self.gamma.bits)


@dataclass(frozen=True)
class ModuleSum:
    """A formal sum of labels with positive multiplicities, in label order."""

    terms: tuple[tuple[ModuleLabel, int], ...]

    @classmethod
    def of(cls, labels: Iterable[ModuleLabel]) -> "ModuleSum":
        counts = Counter(labels)
        return cls(tuple(sorted(counts.items(), key=lambda t: t[0].sort_key())))

    def __iter__(self) -> Iterator[ModuleLabel]:
        return (lab for lab, _ in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def labels(self) -> list[ModuleLabel]:
        return [lab for lab, _ in self.terms]

    def multiplicity(self, label: ModuleLabel) -> int:
        return dict(self.terms).get(label, 0)

    def __str__(self) -> str:
        return " + ".join(f"{m}*M({lab})" if m > 1 else f"M({lab})" for lab, m in self.terms)


def make_label(code: LinearCode, beta: Codeword, gamma: Codeword) -> ModuleLabel:
    if beta.n != code.n or gamma.n != code.n:
        raise PreconditionError("label words must have the code's length")
    if beta not in dual(code):
        raise PreconditionError(f"beta {beta} is not in the dual of C")
    g = gamma_space(code, beta).reduce(gamma)
    return ModuleLabel(code, beta, g)


def _same_code(m1: ModuleLabel, m2: ModuleLabel) -> LinearCode:
    if m1.code != m2.code:
        raise PreconditionError("labels belong to different codes")
    return m1.code


def dual_label(m: ModuleLabel) -> ModuleLabel:
    _, kappa = _self_orthogonal_data(m.code, m.beta)
    return make_label(m.code, m.beta, m.gamma + kappa)


def is_self_dual_module(m: ModuleLabel) -> bool:
    return dual_label(m) == m


def is_simple_current(m: ModuleLabel, budget: Budget = DEFAULT_BUDGET) -> bool:
    if not m.beta:
        return True
    return find_self_dual_subcode_wrt(m.code, m.beta, False, budget) is not None


def _transversal(code: LinearCode, beta: Codeword, budget: Budget) -> list[Codeword]:
    """Representatives of C inside C + R^{perp_beta}, one per coset."""
    extra = quotient_basis(gamma_space(code, beta), code)
    words = span_words(extra, code.n, budget)
    return [Codeword(code.n, int(w)) for w in words]


def fuse_coset(m1: ModuleLabel, m2: ModuleLabel) -> ModuleSum:
    code = _same_code(m1, m2)
    if m1.beta or m2.beta:
        raise PreconditionError("fuse_coset needs two coset modules (beta = 0)")
    return ModuleSum.of([make_label(code, m1.beta, m1.gamma + m2.gamma)])


def fuse_coset_general(alpha: Codeword, m: ModuleLabel) -> tuple[ModuleLabel, Fraction]:
    """M_C(0, alpha) fused with M; also returns the top-weight shift mod 1."""
    label = make_label(m.code, m.beta, m.gamma + alpha)
    shift = Fraction(alpha.inner(alpha + m.beta), 2)
    return label, shift


def fuse_with_dual(m: ModuleLabel, budget: Budget = DEFAULT_BUDGET) -> ModuleSum:
    code = m.code
    zero = Codeword.zero(code.n)
    out = ModuleSum.of(make_label(code, zero, d) for d in _transversal(code, m.beta, budget))
    return out


def fuse_same_beta(m1: ModuleLabel, m2: ModuleLabel, budget: Budget = DEFAULT_BUDGET) -> ModuleSum:
    code = _same_code(m1, m2)
    if m1.beta != m2.beta:
        raise PreconditionError("fuse_same_beta needs equal beta words")
    _, kappa = _self_orthogonal_data(code, m1.beta)
    base = m1.gamma + m2.gamma + kappa
    zero = Codeword.zero(code.n)
    return ModuleSum.of(make_label(code, zero, base + d) for d in _transversal(code, m1.beta, budget))


def fuse(m1: ModuleLabel, m2: ModuleLabel, budget: Budget = DEFAULT_BUDGET) -> ModuleSum:
    """Fusion product wherever a closed formula is available."""
    _same_code(m1, m2)
    if not m1.beta:
        return ModuleSum.of([fuse_coset_general(m1.gamma, m2)[0]])
    if not m2.beta:
        return ModuleSum.of([fuse_coset_general(m2.gamma, m1)[0]])
    if m1.beta == m2.beta:
        return fuse_same_beta(m1, m2, budget)
    raise UnsupportedFusionError("no closed fusion rule for two different nonzero beta words")


# Top level.  Write alpha in C as alpha' + alpha'' with alpha' supported on beta
# and alpha'' off beta.  The conformal weight of the (gamma + alpha)-summand is
# wt(beta)/16 + wt((gamma + alpha)|off beta)/2, and two alphas give the same
# summand exactly when they differ by an element of C_beta.  So the summands
# are indexed by the punctured coset gamma|off + C|off, and the lowest ones
# are its minimum-weight words.  Each carries an irreducible V_{C_beta}-module
# on supp(beta), whose top level is induced from V_H and has dimension
# [C_beta : H].


def _punctured_coset(m: ModuleLabel) -> tuple[LinearCode, Codeword]:
    off = complement_coords(m.beta)
    return puncture(m.code, off), restrict_word(m.gamma, off)


def _min_words(code: LinearCode, rep: Codeword, budget: Budget) -> tuple[int, list[Codeword]]:
    if code.dim <= _DIRECT_SCAN_DIM:
        words = [int(w) ^ rep.bits for w in span_words(code.rows, code.n, budget)]
        wmin = min(w.bit_count() for w in words)
        return wmin, sorted(Codeword(code.n, w) for w in words if w.bit_count() == wmin)
    wmin = coset_min_weight(code, rep, budget.coset_weight_bound, budget)
    if wmin is None:
        raise BudgetExceededError(
            f"coset minimum weight exceeds the bound {budget.coset_weight_bound}"
        )
    return wmin, coset_words_up_to_weight(code, rep, wmin, budget)


def top_weight(m: ModuleLabel, budget: Budget = DEFAULT_BUDGET) -> Fraction:
    code, rep = _punctured_coset(m)
    wmin, _ = _min_words(code, rep, budget)
    return Fraction(m.beta.weight, 16) + Fraction(wmin, 2)


def top_level_dimension(m: ModuleLabel, budget: Budget = DEFAULT_BUDGET) -> int:
    code, rep = _punctured_coset(m)
    wmin, words = _min_words(code, rep, budget)
    words = [w for w in words if w.weight == wmin]
    cb = subcode_supported_on(m.code, m.beta)
    h, _ = _self_orthogonal_data(m.code, m.beta)
    return (1 << (cb.dim - h.dim)) * len(words)


def count_modules_with_tau(code: LinearCode, beta: Codeword) -> int:
    if beta not in dual(code):
        raise PreconditionError(f"beta {beta} is not in the dual of C")
    return 1 << (code.n - gamma_space(code, beta).dim)


__all__ = [
    "ModuleLabel",
    "ModuleSum",
    "gamma_space",
    "make_label",
    "dual_label",
    "is_self_dual_module",
    "is_simple_current",
    "fuse_coset",
    "fuse_coset_general",
    "fuse_with_dual",
    "fuse_same_beta",
    "fuse",
    "top_weight",
    "top_level_dimension",
    "count_modules_with_tau",
]
