"""Binary codewords and linear codes over GF(2).

Words are stored as Python ints used as bitsets.  Coordinate 1 is the most
significant bit, so the integer order of two words of the same length is the
lexicographic order of their bit strings.  Linear codes keep a reduced
row-echelon basis with pivots at the leftmost coordinates; two codes are
equal iff those bases are identical.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import BudgetExceededError, CodeFormatError, LengthMismatchError

MAX_LENGTH = 1024


@dataclass(frozen=True)
class Budget:
    """Enumeration limits shared by every search in the package."""

    max_enum_dim: int = 24
    coset_weight_bound: int = 4
    search_nodes: int = 10**7


DEFAULT_BUDGET = Budget()


# ---------------------------------------------------------------------------
# Codeword


@dataclass(frozen=True, order=True)
class Codeword:
    n: int
    bits: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_LENGTH:
            raise ValueError(f"length must be in 0..{MAX_LENGTH}, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError("bits do not fit in the given length")

    @classmethod
    def from_str(cls, s: str) -> "Codeword":
        s = "".join(s.split())
        if not s or set(s) - {"0", "1"}:
            raise ValueError(f"not a bit string: {s!r}")
        return cls(len(s), int(s, 2))

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "Codeword":
        """Build a word from 1-based coordinates."""
        bits = 0
        for i in support:
            if not 1 <= i <= n:
                raise ValueError(f"coordinate {i} outside 1..{n}")
            bits |= 1 << (n - i)
        return cls(n, bits)

    @classmethod
    def from_hex(cls, n: int, s: str) -> "Codeword":
        return cls(n, int(s, 16))

    @classmethod
    def zero(cls, n: int) -> "Codeword":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "Codeword":
        return cls(n, (1 << n) - 1)

    def _check(self, other: "Codeword") -> None:
        if self.n != other.n:
            raise LengthMismatchError(f"lengths differ: {self.n} vs {other.n}")

    def __add__(self, other: "Codeword") -> "Codeword":
        self._check(other)
        return Codeword(self.n, self.bits ^ other.bits)

    __xor__ = __add__

    def __mul__(self, other: "Codeword") -> "Codeword":
        self._check(other)
        return Codeword(self.n, self.bits & other.bits)

    __and__ = __mul__

    def inner(self, other: "Codeword") -> int:
        self._check(other)
        return (self.bits & other.bits).bit_count() & 1

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if self.bits >> (self.n - i) & 1)

    def __getitem__(self, i: int) -> int:
        """1-based coordinate access."""
        return self.bits >> (self.n - i) & 1

    def __bool__(self) -> bool:
        return self.bits != 0

    def __str__(self) -> str:
        return format(self.bits, f"0{self.n}b") if self.n else ""

    def hex(self) -> str:
        return format(self.bits, f"0{max(1, -(-self.n // 4))}x")


# ---------------------------------------------------------------------------
# int-level kernels


def mask(n: int) -> int:
    return (1 << n) - 1


def support_mask(n: int, coords: Iterable[int]) -> int:
    return Codeword.from_support(n, coords).bits


def echelon(rows: Iterable[int]) -> list[int]:
    """Reduced row-echelon form; pivot = highest set bit, rows sorted descending."""
    basis: list[int] = []
    for r in rows:
        for b in basis:
            if r ^ b < r:
                r ^= b
        if r:
            top = 1 << (r.bit_length() - 1)
            basis = [b ^ r if b & top else b for b in basis]
            basis.append(r)
    basis.sort(reverse=True)
    return basis


def reduce(v: int, basis: Sequence[int]) -> int:
    """Reduce v by an echelon basis.  Gives the smallest element of v + span."""
    for b in basis:
        if v ^ b < v:
            v ^= b
    return v


def nullspace(basis: Sequence[int], n: int) -> list[int]:
    """Echelon basis of {x : <x, b> = 0 for all b} from an echelon basis."""
    pivots = 0
    for b in basis:
        pivots |= 1 << (b.bit_length() - 1)
    out = []
    for pos in range(n):
        bit = 1 << pos
        if pivots & bit:
            continue
        v = bit
        for b in basis:
            if b & bit:
                v |= 1 << (b.bit_length() - 1)
        out.append(v)
    return echelon(out)


def kernel_rows(rows: Sequence[int], m: int) -> list[int]:
    """Span of combinations of rows whose bits inside the mask m cancel."""
    pairs: list[tuple[int, int]] = []
    kernel = []
    for r in rows:
        key, full = r & m, r
        for pk, pf in pairs:
            if key ^ pk < key:
                key ^= pk
                full ^= pf
        if key:
            pairs.append((key, full))
            pairs.sort(reverse=True)
        else:
            kernel.append(full)
    return echelon(kernel)


def compress(v: int, n: int, coords: Sequence[int]) -> int:
    """Restrict v to the 1-based coordinates in coords (kept in that order)."""
    m = len(coords)
    out = 0
    for j, i in enumerate(coords):
        if v >> (n - i) & 1:
            out |= 1 << (m - 1 - j)
    return out


def expand(v: int, n: int, coords: Sequence[int]) -> int:
    """Inverse of compress: place a len(coords)-bit word on coords."""
    m = len(coords)
    out = 0
    for j, i in enumerate(coords):
        if v >> (m - 1 - j) & 1:
            out |= 1 << (n - i)
    return out


def span_words(rows: Sequence[int], n: int, budget: Budget = DEFAULT_BUDGET):
    """All 2^k elements of a span.  numpy array for n <= 64, else a list."""
    if len(rows) > budget.max_enum_dim:
        raise BudgetExceededError(
            f"enumerating 2^{len(rows)} codewords exceeds budget 2^{budget.max_enum_dim}"
        )
    if n <= 64:
        words = np.zeros(1, dtype=np.uint64)
        for r in rows:
            words = np.concatenate([words, words ^ np.uint64(r)])
        return words
    words_l = [0]
    for r in rows:
        words_l += [w ^ r for w in words_l]
    return words_l


def popcounts(words) -> np.ndarray:
    if isinstance(words, np.ndarray):
        return np.bitwise_count(words).astype(np.int64)
    return np.array([w.bit_count() for w in words], dtype=np.int64)


# ---------------------------------------------------------------------------
# LinearCode


class LinearCode:
    """Subspace of GF(2)^n in canonical reduced echelon form."""

    __slots__ = ("n", "rows", "_dual")

    def __init__(self, n: int, rows: Iterable[int] = (), *, _canonical: bool = False):
        if not 0 <= n <= MAX_LENGTH:
            raise ValueError(f"length must be in 0..{MAX_LENGTH}")
        self.n = n
        rows = list(rows)
        for r in rows:
            if r < 0 or r >> n:
                raise LengthMismatchError(f"row does not fit length {n}")
        self.rows: tuple[int, ...] = tuple(rows if _canonical else echelon(rows))
        self._dual = None

    @classmethod
    def from_strings(cls, strings: Iterable[str], n: int | None = None) -> "LinearCode":
        return from_generators([Codeword.from_str(s) for s in strings], n=n)

    @property
    def dim(self) -> int:
        return len(self.rows)

    k = dim

    @property
    def basis(self) -> list[Codeword]:
        return [Codeword(self.n, r) for r in self.rows]

    @property
    def size(self) -> int:
        return 1 << self.dim

    def __len__(self) -> int:
        return self.size

    def __contains__(self, w) -> bool:
        bits = self._bits(w)
        return reduce(bits, self.rows) == 0

    def _bits(self, w) -> int:
        if isinstance(w, Codeword):
            if w.n != self.n:
                raise LengthMismatchError(f"word length {w.n} vs code length {self.n}")
            return w.bits
        return w

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearCode) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __le__(self, other: "LinearCode") -> bool:
        """Subcode test."""
        _same_length(self, other)
        return all(reduce(r, other.rows) == 0 for r in self.rows)

    def __repr__(self) -> str:
        return f"LinearCode(n={self.n}, k={self.dim})"

    def reduce(self, w) -> Codeword:
        """Lexicographically smallest element of w + C."""
        return Codeword(self.n, reduce(self._bits(w), self.rows))

    def codewords(self, budget: Budget = DEFAULT_BUDGET) -> Iterator[Codeword]:
        words = span_words(self.rows, self.n, budget)
        for w in sorted(int(x) for x in words):
            yield Codeword(self.n, w)

    def is_even(self) -> bool:
        return all(r.bit_count() % 2 == 0 for r in self.rows)

    def is_self_orthogonal(self) -> bool:
        rows = self.rows
        return all(
            (rows[i] & rows[j]).bit_count() % 2 == 0
            for i in range(len(rows))
            for j in range(i, len(rows))
        )

    def is_doubly_even(self) -> bool:
        return self.is_self_orthogonal() and all(r.bit_count() % 4 == 0 for r in self.rows)

    @property
    def support_bits(self) -> int:
        s = 0
        for r in self.rows:
            s |= r
        return s

    def check_columns(self) -> list[int]:
        """Per coordinate i (index i-1), the syndrome bit pattern against the dual basis."""
        checks = dual(self).rows
        cols = []
        for i in range(1, self.n + 1):
            bit = 1 << (self.n - i)
            c = 0
            for j, h in enumerate(checks):
                if h & bit:
                    c |= 1 << j
            cols.append(c)
        return cols

    def syndrome(self, w) -> int:
        bits = self._bits(w)
        s = 0
        for j, h in enumerate(dual(self).rows):
            if (h & bits).bit_count() & 1:
                s |= 1 << j
        return s


def _same_length(a: LinearCode, b: LinearCode) -> None:
    if a.n != b.n:
        raise LengthMismatchError(f"code lengths differ: {a.n} vs {b.n}")


def from_generators(rows: Iterable[Codeword], n: int | None = None) -> LinearCode:
    rows = list(rows)
    lengths = {r.n for r in rows}
    if n is not None:
        lengths.add(n)
    if len(lengths) > 1:
        raise LengthMismatchError(f"generator rows have mixed lengths {sorted(lengths)}")
    if not lengths:
        raise ValueError("length required for an empty generator list")
    return LinearCode(lengths.pop(), (r.bits for r in rows))


def zero_code(n: int) -> LinearCode:
    return LinearCode(n, ())


def full_space(n: int) -> LinearCode:
    return LinearCode(n, (1 << i for i in range(n - 1, -1, -1)), _canonical=True)


def supported_space(gamma: Codeword) -> LinearCode:
    """All words whose support lies inside supp(gamma)."""
    n = gamma.n
    return LinearCode(n, (1 << (n - i) for i in gamma.support), _canonical=True)


def dual(code: LinearCode) -> LinearCode:
    if code._dual is None:
        d = LinearCode(code.n, nullspace(code.rows, code.n), _canonical=True)
        d._dual = code
        code._dual = d
    return code._dual


def intersect(a: LinearCode, b: LinearCode) -> LinearCode:
    _same_length(a, b)
    return dual(sum_codes(dual(a), dual(b)))


def sum_codes(a: LinearCode, b: LinearCode) -> LinearCode:
    _same_length(a, b)
    return LinearCode(a.n, a.rows + b.rows)


def subcode_supported_on(code: LinearCode, gamma: Codeword) -> LinearCode:
    """C_gamma: codewords whose support is contained in supp(gamma)."""
    if gamma.n != code.n:
        raise LengthMismatchError("word and code lengths differ")
    outside = mask(code.n) & ~gamma.bits
    return LinearCode(code.n, kernel_rows(code.rows, outside), _canonical=True)


def puncture(code: LinearCode, coords: Iterable[int]) -> LinearCode:
    """Image of the code under restriction to the given 1-based coordinates."""
    coords = sorted(set(coords))
    if any(not 1 <= i <= code.n for i in coords):
        raise ValueError("coordinates outside 1..n")
    return LinearCode(len(coords), (compress(r, code.n, coords) for r in code.rows))


def restrict_word(w: Codeword, coords: Iterable[int]) -> Codeword:
    coords = sorted(set(coords))
    return Codeword(len(coords), compress(w.bits, w.n, coords))


def embed_code(code: LinearCode, n: int, coords: Sequence[int]) -> LinearCode:
    coords = sorted(coords)
    return LinearCode(n, (expand(r, n, coords) for r in code.rows))


def complement_coords(w: Codeword) -> list[int]:
    s = set(w.support)
    return [i for i in range(1, w.n + 1) if i not in s]


def quotient_basis(big: LinearCode, small: LinearCode) -> list[int]:
    """Canonical complement of small inside big (rows vanish on small's pivots)."""
    reduced = [reduce(r, small.rows) for r in big.rows]
    return echelon(reduced)


# ---------------------------------------------------------------------------
# low-weight coset words


def _word_budget(n: int, wmax: int) -> int:
    return sum(math.comb(n, w) for w in range(wmax + 1))


def coset_words_up_to_weight(
    code: LinearCode, rep: Codeword, wmax: int, budget: Budget = DEFAULT_BUDGET
) -> list[Codeword]:
    """Every word of weight <= wmax in rep + C, in lexicographic order."""
    if rep.n != code.n:
        raise LengthMismatchError("word and code lengths differ")
    if wmax > budget.coset_weight_bound:
        raise BudgetExceededError(
            f"weight bound {wmax} exceeds configured limit {budget.coset_weight_bound}"
        )
    if _word_budget(code.n, max(wmax, 0)) > 1 << budget.max_enum_dim:
        raise BudgetExceededError("low-weight enumeration exceeds the word budget")
    n = code.n
    cols = code.check_columns()
    target = code.syndrome(rep)
    hits = []
    for w in range(0, wmax + 1):
        for combo in itertools.combinations(range(n), w):
            s = 0
            for i in combo:
                s ^= cols[i]
            if s == target:
                bits = 0
                for i in combo:
                    bits |= 1 << (n - 1 - i)
                hits.append(bits)
    return [Codeword(n, b) for b in sorted(hits)]


def coset_min_weight(
    code: LinearCode, rep: Codeword, bound: int, budget: Budget = DEFAULT_BUDGET
) -> int | None:
    """Minimum weight of rep + C, or None when it exceeds the bound."""
    if rep.n != code.n:
        raise LengthMismatchError("word and code lengths differ")
    if bound > budget.coset_weight_bound:
        raise BudgetExceededError(
            f"weight bound {bound} exceeds configured limit {budget.coset_weight_bound}"
        )
    n = code.n
    cols = code.check_columns()
    target = code.syndrome(rep)
    for w in range(0, bound + 1):
        for combo in itertools.combinations(range(n), w):
            s = 0
            for i in combo:
                s ^= cols[i]
            if s == target:
                return w
    return None


# ---------------------------------------------------------------------------
# weight enumerators


@dataclass(frozen=True)
class WeightEnumerator:
    """W(x, y) = sum_w a_w x^(n-w) y^w."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.n + 1:
            raise ValueError("need n+1 coefficients")

    @classmethod
    def from_dict(cls, n: int, terms: dict[int, int]) -> "WeightEnumerator":
        c = [0] * (n + 1)
        for w, a in terms.items():
            c[w] = a
        return cls(n, tuple(c))

    @property
    def total(self) -> int:
        return sum(self.coeffs)

    @property
    def dim(self) -> int:
        t = self.total
        if t <= 0 or t & (t - 1):
            raise ValueError("coefficient sum is not a power of two")
        return t.bit_length() - 1

    def terms(self) -> dict[int, int]:
        return {w: a for w, a in enumerate(self.coeffs) if a}

    def __getitem__(self, w: int) -> int:
        return self.coeffs[w]

    def __sub__(self, other: "WeightEnumerator") -> dict[int, int]:
        if self.n != other.n:
            raise LengthMismatchError("enumerator lengths differ")
        return {w: a - b for w, (a, b) in enumerate(zip(self.coeffs, other.coeffs)) if a != b}

    def __str__(self) -> str:
        return format_poly(self.n, self.terms())


def format_poly(n: int, terms: dict[int, int]) -> str:
    parts = []
    for w in sorted(terms):
        a = terms[w]
        mono = "".join(
            f"{v}^{e}" if e > 1 else v for v, e in (("x", n - w), ("y", w)) if e
        )
        coef = "" if a == 1 and mono else str(a)
        parts.append(f"{coef}{mono}" or "1")
    return " + ".join(parts) if parts else "0"


def weight_enumerator(code: LinearCode, budget: Budget = DEFAULT_BUDGET) -> WeightEnumerator:
    words = span_words(code.rows, code.n, budget)
    counts = np.bincount(popcounts(words), minlength=code.n + 1)
    return WeightEnumerator(code.n, tuple(int(c) for c in counts))


def krawtchouk(n: int, j: int, w: int) -> int:
    return sum(
        (-1) ** i * math.comb(w, i) * math.comb(n - w, j - i) for i in range(0, min(w, j) + 1)
    )


def macwilliams(we: WeightEnumerator, k: int) -> WeightEnumerator:
    """Enumerator of the dual: 2^-k W(x+y, x-y), exact."""
    n = we.n
    out = []
    for j in range(n + 1):
        s = sum(a * krawtchouk(n, j, w) for w, a in enumerate(we.coeffs) if a)
        q, r = divmod(s, 1 << k)
        if r or q < 0:
            raise ArithmeticError(
                f"MacWilliams transform not integral at weight {j}; input is not a code enumerator"
            )
        out.append(q)
    return WeightEnumerator(n, tuple(out))


# ---------------------------------------------------------------------------
# Reed-Muller codes


def reed_muller(r: int, m: int) -> LinearCode:
    """RM(r, m) from evaluation of monomials of degree <= r; coordinate j+1 <-> point j."""
    n = 1 << m
    # coordinate index j (0-based) evaluates at the point whose binary digits are j
    var_rows = []
    for i in range(m):
        bits = 0
        for j in range(n):
            if j >> (m - 1 - i) & 1:
                bits |= 1 << (n - 1 - j)
        var_rows.append(bits)
    rows = []
    for deg in range(r + 1):
        for subset in itertools.combinations(range(m), deg):
            v = mask(n)
            for i in subset:
                v &= var_rows[i]
            rows.append(v)
    return LinearCode(n, rows)


# ---------------------------------------------------------------------------
# code files


def parse_code(text: str) -> tuple[LinearCode, int]:
    """Parse the text code format.  Returns (code, declared k)."""
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    if not lines:
        raise CodeFormatError("empty code file")
    head = lines[0].split()
    if len(head) != 2 or not all(h.isdigit() for h in head):
        raise CodeFormatError(f"header must be 'n k', got {lines[0]!r}")
    n, k = int(head[0]), int(head[1])
    if not 0 < n <= MAX_LENGTH:
        raise CodeFormatError(f"length {n} outside 1..{MAX_LENGTH}")
    body = lines[1:]
    if len(body) != k:
        raise CodeFormatError(f"declared {k} rows, found {len(body)}")
    rows = []
    for lineno, row in enumerate(body, start=2):
        if len(row) != n or set(row) - {"0", "1"}:
            raise CodeFormatError(f"row {lineno - 1} is not {n} characters of 0/1: {row!r}")
        rows.append(int(row, 2))
    return LinearCode(n, rows), k


def read_code(path) -> LinearCode:
    code, _ = parse_code(Path(path).read_text())
    return code


def format_code(code: LinearCode, comment: str | None = None) -> str:
    out = []
    if comment:
        out += [f"# {line}" for line in comment.splitlines()]
    out.append(f"{code.n} {code.dim}")
    out += [str(c) for c in code.basis]
    return "\n".join(out) + "\n"


def write_code(code: LinearCode, path, comment: str | None = None) -> None:
    Path(path).write_text(format_code(code, comment))
