"""Validation of structure-code pairs (C, D) and of F-admissibility."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionError
from .gf2 import (
    DEFAULT_BUDGET,
    Budget,
    Codeword,
    LinearCode,
    dual,
    mask,
    span_words,
    sum_codes,
)
from .selfdual import find_self_dual_subcode_wrt
from .stabilizer import graded_split


@dataclass(frozen=True)
class ClauseResult:
    name: str
    passed: bool
    witness: Codeword | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "clause": self.name,
            "passed": self.passed,
            "witness": None if self.witness is None else str(self.witness),
            "detail": self.detail,
        }


@dataclass(frozen=True)
class StructureReport:
    clauses: tuple[ClauseResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses)

    def __bool__(self) -> bool:
        return self.passed

    def failures(self) -> list[ClauseResult]:
        return [c for c in self.clauses if not c.passed]

    def clause(self, name: str) -> ClauseResult:
        return next(c for c in self.clauses if c.name == name)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "clauses": [c.to_dict() for c in self.clauses]}

    def __str__(self) -> str:
        lines = []
        for c in self.clauses:
            mark = "ok  " if c.passed else "FAIL"
            extra = f" witness={c.witness}" if c.witness is not None else ""
            lines.append(f"[{mark}] {c.name}{': ' + c.detail if c.detail else ''}{extra}")
        return "\n".join(lines)


def _words(code: LinearCode, budget: Budget) -> list[int]:
    return sorted(int(w) for w in span_words(code.rows, code.n, budget))


def _first(words, pred) -> int | None:
    return next((w for w in words if pred(w)), None)


def _clause(name: str, n: int, bad: int | None, detail: str) -> ClauseResult:
    if bad is None:
        return ClauseResult(name, True)
    return ClauseResult(name, False, Codeword(n, bad), detail)


def _even_clause(c: LinearCode) -> ClauseResult:
    # parity is linear: the odd words form one coset of the even subcode, and
    # its reduced representative is the smallest odd word
    odd = [r for r in c.rows if r.bit_count() & 1]
    if not odd:
        return ClauseResult("C even", True)
    even = LinearCode(c.n, [r ^ odd[0] if r.bit_count() & 1 else r for r in c.rows if r != odd[0]])
    return _clause("C even", c.n, even.reduce(odd[0]).bits, "odd-weight codeword of C")


def _triply_even_clause(d: LinearCode, budget: Budget, name: str = "D weights 0 mod 8") -> ClauseResult:
    bad = _first(_words(d, budget), lambda w: w.bit_count() % 8)
    return _clause(name, d.n, bad, "weight not divisible by 8")


def _chain_clause(c: LinearCode, d: LinearCode) -> list[ClauseResult]:
    out = []
    bad = _first(sorted(d.rows), lambda r: r not in c)
    out.append(_clause("D in C", c.n, bad, "basis word of D outside C"))
    dp = dual(d)
    bad = _first(sorted(c.rows), lambda r: r not in dp)
    out.append(_clause("C in D^perp", c.n, bad, "basis word of C not orthogonal to D"))
    return out


def _subcode_clause(c: LinearCode, d: LinearCode, budget: Budget) -> ClauseResult:
    n = c.n
    for w in _words(d, budget):
        if w and find_self_dual_subcode_wrt(c, Codeword(n, w), True, budget) is None:
            return _clause(
                "doubly even self-dual subcodes", n, w,
                "C_alpha has no doubly even subcode self-dual w.r.t. alpha",
            )
    return ClauseResult("doubly even self-dual subcodes", True)


def validate_structure_codes(
    c: LinearCode, d: LinearCode, budget: Budget = DEFAULT_BUDGET
) -> StructureReport:
    """C even, D triply even, D <= C <= D^perp, and every C_alpha (alpha in D) has a
    doubly even subcode self-dual with respect to alpha."""
    if c.n != d.n:
        raise PreconditionError("C and D have different lengths")
    clauses = [_even_clause(c), _triply_even_clause(d, budget)]
    clauses += _chain_clause(c, d)
    clauses.append(_subcode_clause(c, d, budget))
    return StructureReport(tuple(clauses))


def _length_clause(n: int) -> ClauseResult:
    ok = n % 16 == 0
    return ClauseResult("length divisible by 16", ok, None, "" if ok else f"n = {n}")


def is_f_admissible(c: LinearCode, budget: Budget = DEFAULT_BUDGET) -> StructureReport:
    inner = validate_structure_codes(c, dual(c), budget)
    return StructureReport((_length_clause(c.n),) + inner.clauses)


def is_f_admissible_via_dual(c: LinearCode, budget: Budget = DEFAULT_BUDGET) -> bool:
    """16 | n, the all-one word in C^perp, and C^perp triply even."""
    if c.n % 16:
        return False
    d = dual(c)
    if mask(c.n) not in d:
        return False
    return _triply_even_clause(d, budget).passed


def is_holomorphic_pair(c: LinearCode, d: LinearCode, budget: Budget = DEFAULT_BUDGET) -> bool:
    return c == dual(d) and validate_structure_codes(c, d, budget).passed


def extend_structure_codes(
    c: LinearCode, d: LinearCode, e: LinearCode, budget: Budget = DEFAULT_BUDGET
) -> tuple[LinearCode, LinearCode, StructureReport]:
    """Code-level induction from V_C to V_E; returns (E, D) with E's validation report."""
    if not (c <= e and e <= dual(d)):
        raise PreconditionError("need C <= E <= D^perp")
    return e, d, validate_structure_codes(e, d, budget)


def _union_code(even: LinearCode, rep: Codeword | None, shift: Codeword) -> LinearCode:
    """even u (rep + even + shift) as a linear code: even + <rep + shift>."""
    if rep is None:
        return even
    return sum_codes(even, LinearCode(even.n, [(rep + shift).bits]))


def orbifold_codes(
    c: LinearCode,
    d: LinearCode,
    xi: Codeword,
    kappa: Codeword,
    variant: str = "4A",
    budget: Budget = DEFAULT_BUDGET,
) -> tuple[LinearCode, LinearCode, StructureReport]:
    """Structure codes after the orbifold by the order-4 lift of xi.

    "4A": (C^0 u (C^1 + kappa), D^0 u (D^1 + xi)).
    "2B": (C^0 u C^1 u (C^0 + kappa) u (C^1 + kappa), D^0) = (C + <kappa>, D^0).
    """
    split = graded_split(c, d, xi)
    if kappa.n != c.n:
        raise PreconditionError("kappa has the wrong length")
    if variant == "4A":
        c_new = _union_code(split.c0, split.c1_rep, kappa)
        d_new = _union_code(split.d0, split.d1_rep, xi)
        expect_c = split.c0.dim + (split.c1_rep is not None)
        expect_d = split.d0.dim + (split.d1_rep is not None)
        if c_new.dim != expect_c or d_new.dim != expect_d:
            raise PreconditionError("shifted cosets collide with C^0 or D^0")
    elif variant == "2B":
        c_new = sum_codes(c, LinearCode(c.n, [kappa.bits]))
        d_new = split.d0
    else:
        raise ValueError(f"unknown orbifold variant {variant!r}")
    return c_new, d_new, validate_structure_codes(c_new, d_new, budget)


__all__ = [
    "ClauseResult",
    "StructureReport",
    "validate_structure_codes",
    "is_f_admissible",
    "is_f_admissible_via_dual",
    "is_holomorphic_pair",
    "extend_structure_codes",
    "orbifold_codes",
]
