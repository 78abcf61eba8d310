"""The moonshine frame: its structure codes and the order-4 lift of xi, checked step by step."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import moonshine_data as md
from .errors import FramedCodesError
from .gf2 import (
    Codeword,
    LinearCode,
    dual,
    coset_words_up_to_weight,
    reed_muller,
    subcode_supported_on,
    sum_codes,
    weight_enumerator,
)
from .modules import fuse, make_label, top_level_dimension, top_weight
from .qseries import mckay_thompson, trunc_to_prec
from .quadratic import kappa_functional_holds, kappa_vector, perp_within
from .selfdual import is_self_dual_wrt
from .stabilizer import compute_P, graded_split, order_of_lift
from .structcheck import is_f_admissible_via_dual, is_holomorphic_pair, orbifold_codes


def _diag(alpha: str) -> str:
    return alpha * 3


def build_moonshine_codes() -> tuple[LinearCode, LinearCode]:
    """(C, D) with D spanned by the block words and the diagonal RM(1,4), C = D^perp."""
    d = LinearCode.from_strings(list(md.D_EXTRA_ROWS) + [_diag(a) for a in md.RM14_ROWS])
    c = dual(d)
    if d.dim != 7 or c.dim != 41:
        raise FramedCodesError(f"unexpected dimensions dim D = {d.dim}, dim C = {c.dim}")
    if c != expected_C():
        raise FramedCodesError("D^perp differs from the blockwise description of C")
    return c, d


def _blocks(code: LinearCode, which: tuple[int, ...]) -> LinearCode:
    """Copies of a length-16 code placed diagonally into the listed blocks."""
    out = LinearCode(md.N)
    for r in code.rows:
        s = f"{r:016b}"
        word = "".join(s if i in which else "0" * 16 for i in range(3))
        out = sum_codes(out, LinearCode.from_strings([word]))
    return out


def _even16() -> LinearCode:
    return dual(LinearCode.from_strings(["1" * 16]))


def expected_C() -> LinearCode:
    """{(a, b, c) : a, b, c even, a + b + c in RM(2,4)}, built from generators."""
    ev = _even16()
    return sum_codes(sum_codes(_blocks(ev, (0, 1)), _blocks(ev, (0, 2))), _blocks(reed_muller(2, 4), (0,)))


def expected_P() -> LinearCode:
    """{(a, b, c) : a, b, c in RM(2,4), a + b + c in RM(1,4)} built from generators.

    (a, b, c) = (b, b, 0) + (c, 0, c) + (a + b + c, 0, 0).
    """
    rm2, rm1 = reed_muller(2, 4), reed_muller(1, 4)
    return sum_codes(sum_codes(_blocks(rm2, (0, 1)), _blocks(rm2, (0, 2))), _blocks(rm1, (0,)))


@dataclass
class MoonshineFrame:
    C: LinearCode
    D: LinearCode
    xi: Codeword
    kappa: Codeword

    @classmethod
    def standard(cls, xi: Codeword | None = None, kappa: Codeword | None = None) -> "MoonshineFrame":
        c, d = build_moonshine_codes()
        xi = Codeword.from_str(md.XI) if xi is None else xi
        kappa = Codeword.from_str(md.KAPPA) if kappa is None else kappa
        return cls(c, d, xi, kappa)

    @property
    def C0(self) -> LinearCode:
        return graded_split(self.C, self.D, self.xi).c0

    @property
    def D_xi(self) -> LinearCode:
        return sum_codes(self.D, LinearCode(md.N, [self.xi.bits]))


@dataclass
class DemoStep:
    index: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def to_dict(self) -> dict:
        return {
            "step": self.index,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 4),
        }


@dataclass
class DemoReport:
    steps: list[DemoStep] = field(default_factory=list)
    series: list[tuple[int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return len(self.steps) == len(STEPS) and all(s.passed for s in self.steps)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "steps": [s.to_dict() for s in self.steps],
            "mckay_thompson": [[e, c] for e, c in self.series],
        }

    def __str__(self) -> str:
        lines = [
            f"{s.index:2d}. [{'PASS' if s.passed else 'FAIL'}] {s.name}: {s.detail}"
            for s in self.steps
        ]
        lines.append("all steps passed" if self.passed else "demo FAILED")
        return "\n".join(lines)


class _Ctx:
    def __init__(self, frame: MoonshineFrame, trunc: int):
        self.f = frame
        self.trunc = trunc
        self.P = compute_P(frame.C, frame.D)
        self.split = None
        self.series = None


def _step_P(x: _Ctx):
    ok_xi = x.f.xi in x.P
    ok_p = x.P == expected_P()
    return ok_xi and ok_p, f"xi in P: {ok_xi}; P = closed form: {ok_p}; dim P = {x.P.dim}"


def _step_split(x: _Ctx):
    x.split = s = graded_split(x.f.C, x.f.D, x.f.xi, x.P)
    d0 = LinearCode.from_strings(list(md.D_EXTRA_ROWS) + [_diag(a) for a in md.D0_DIAGONAL])
    d1 = Codeword.from_str(md.D1_REP)
    ok0 = s.d0 == d0
    ok1 = s.d1_rep is not None and d1 in x.f.D and d1 not in s.d0 and s.d0.reduce(d1) == s.d1_rep
    return ok0 and ok1, f"D^0 matches: {ok0}; D^1 = (1^8 0^8)^3 + D^0: {ok1}"


def _step_order(x: _Ctx):
    o = order_of_lift(x.f.C, x.f.D, x.f.xi, x.P)
    return o == 4, f"order {o}"


def _step_subcode(x: _Ctx):
    h = subcode_supported_on(x.split.c0, x.f.xi)
    printed = LinearCode.from_strings(md.C0_XI_ROWS)
    same = h == printed
    whole = subcode_supported_on(x.f.C, x.f.xi) == h
    sd = is_self_dual_wrt(h, x.f.xi)
    return same and sd and whole, (
        f"(C^0)_xi = printed span: {same}; = C_xi: {whole}; self-dual w.r.t. xi: {sd}"
    )


def _step_kappa(x: _Ctx):
    h = subcode_supported_on(x.split.c0, x.f.xi)
    ok = kappa_functional_holds(h, x.f.kappa)
    k = kappa_vector(h, x.f.xi)
    same_class = perp_within(h, x.f.xi).reduce(k + x.f.kappa).weight == 0
    return ok and same_class, f"functional holds: {ok}; computed kappa {k.hex()} in same class: {same_class}"


def _step_weight2(x: _Ctx):
    words = coset_words_up_to_weight(x.split.c0, x.f.kappa, 2)
    w2 = sorted(w.support for w in words if w.weight == 2)
    ok = len(w2) == 24 and w2 == sorted(md.WEIGHT2_SUPPORTS) and len(words) == 24
    return ok, f"{len(w2)} weight-2 words, supports match: {w2 == sorted(md.WEIGHT2_SUPPORTS)}"


def _step_top(x: _Ctx):
    c0, z = x.split.c0, Codeword.zero(md.N)
    a = make_label(c0, x.f.xi, z)
    b = make_label(c0, z, x.f.kappa)
    ta, da = top_weight(a), top_level_dimension(a)
    tb, db = top_weight(b), top_level_dimension(b)
    ok = (ta, da) == (Fraction(*md.TOP_XI[0]), md.TOP_XI[1]) and (tb, db) == (
        Fraction(*md.TOP_KAPPA[0]), md.TOP_KAPPA[1]
    )
    return ok, f"M(xi,0): weight {ta}, dim {da}; M(0,kappa): weight {tb}, dim {db}"


def _step_enumerators(x: _Ctx):
    wd = weight_enumerator(x.f.D)
    wx = weight_enumerator(x.f.D_xi)
    f = wx - wd
    ok = (wd.terms(), wx.terms(), f) == (md.W_D, md.W_D_XI, md.F_POLY)
    return ok, f"W_D = {wd}; W_D+xi = {wx}"


def _step_series(x: _Ctx):
    s = mckay_thompson(weight_enumerator(x.f.D), weight_enumerator(x.f.D_xi), trunc_to_prec(x.trunc))
    x.series = s
    got = {p: s.coefficient(p) for p in md.MT_COEFFS}
    ok = got == md.MT_COEFFS
    return ok, "; ".join(f"q^{p}: {c}" for p, c in got.items())


def _step_fusion(x: _Ctx):
    c0, z = x.split.c0, Codeword.zero(md.N)
    xi, k = x.f.xi, x.f.kappa

    def lab(b, g):
        return make_label(c0, b, g)

    table = [
        ((z, k), (z, k), (z, z)),
        ((z, k), (xi, z), (xi, k)),
        ((xi, z), (xi, z), (z, k)),
        ((xi, z), (xi, k), (z, z)),
    ]
    results = []
    for m1, m2, want in table:
        out = fuse(lab(*m1), lab(*m2))
        results.append(out.labels == [lab(*want)] and out.terms[0][1] == 1)
    return all(results), f"{sum(results)}/4 rules reproduced"


def _step_orbifold(x: _Ctx):
    c4, d4, r4 = orbifold_codes(x.f.C, x.f.D, x.f.xi, x.f.kappa, "4A")
    triply = is_f_admissible_via_dual(c4) and c4 == dual(d4)
    c2, d2, r2 = orbifold_codes(x.f.C, x.f.D, x.f.xi, x.f.kappa, "2B")
    holo = is_holomorphic_pair(c2, d2)
    ok = r4.passed and triply and r2.passed and holo
    return ok, f"4A valid: {r4.passed}, dual triply even: {triply}; 2B valid: {r2.passed}, holomorphic: {holo}"


STEPS: list[tuple[str, Callable[[_Ctx], tuple[bool, str]]]] = [
    ("xi in P and P closed form", _step_P),
    ("graded split D^0 / D^1", _step_split),
    ("order of the lift", _step_order),
    ("(C^0)_xi generator matrix", _step_subcode),
    ("kappa functional", _step_kappa),
    ("weight-2 words of C^0 + kappa", _step_weight2),
    ("top weights and top-level dimensions", _step_top),
    ("weight enumerators", _step_enumerators),
    ("McKay-Thompson coefficients", _step_series),
    ("fusion table", _step_fusion),
    ("orbifold structure codes", _step_orbifold),
]


def run_demo(
    trunc: int = 8, xi: Codeword | None = None, kappa: Codeword | None = None
) -> DemoReport:
    """Run every step in order; stop at the first failing step."""
    frame = MoonshineFrame.standard(xi, kappa)
    ctx = _Ctx(frame, trunc)
    report = DemoReport()
    for i, (name, fn) in enumerate(STEPS, 1):
        t0 = time.perf_counter()
        try:
            ok, detail = fn(ctx)
        except FramedCodesError as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        report.steps.append(DemoStep(i, name, ok, detail, time.perf_counter() - t0))
        if not ok:
            break
    if ctx.series is not None:
        report.series = ctx.series.pairs()
    return report


__all__ = ["build_moonshine_codes", "expected_P", "MoonshineFrame", "DemoReport", "run_demo"]
