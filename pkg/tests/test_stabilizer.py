import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import codes
from framedcodes import moonshine_data as md
from framedcodes.errors import PreconditionError
from framedcodes.gf2 import Codeword, LinearCode, dual, reed_muller, sum_codes
from framedcodes.moonshine import MoonshineFrame, expected_P
from framedcodes.quadratic import radical
from framedcodes.stabilizer import (
    commute_lifts,
    compute_P,
    describe_stabilizer,
    graded_split,
    order_of_lift,
)
from framedcodes.structcheck import validate_structure_codes


def w(s):
    return Codeword.from_str(s)


@pytest.fixture(scope="module")
def moon():
    return MoonshineFrame.standard()


@st.composite
def pairs(draw, max_n=9):
    """(C, D) with D <= C <= D^perp, C even; no triply-even requirement."""
    c = draw(codes(min_n=2, max_n=max_n, even=True))
    # D: a random subcode of the radical of C
    r = radical(c)
    picks = draw(st.lists(st.integers(0, (1 << r.dim) - 1), max_size=3))
    rows = []
    for k in picks:
        v = 0
        for i, row in enumerate(r.rows):
            if k >> i & 1:
                v ^= row
        rows.append(v)
    return c, LinearCode(c.n, rows)


@st.composite
def valid_pairs(draw):
    """Valid structure pairs on 8k coordinates: D inside the span of the block
    indicators, C a sum of planted [8,4,4] copies and random words of D^perp."""
    k = draw(st.integers(1, 3))
    n = 8 * k
    perm = draw(st.permutations(range(n)))

    def place(bits):
        return sum(1 << perm[i] for i in range(n) if bits >> i & 1)

    e8 = reed_muller(1, 3).rows
    blocks = [place(0xFF << (8 * b)) for b in range(k)]
    mix = draw(st.lists(st.integers(1, (1 << k) - 1), max_size=k))
    d_rows = []
    for m in mix:
        d_rows.append(sum(blocks[b] for b in range(k) if m >> b & 1))
    d = LinearCode(n, d_rows)
    c_rows = [place(r << (8 * b)) for b in range(k) for r in e8]
    extra = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=3))
    dp = dual(d)
    c_rows += [x for x in extra if x in dp and x.bit_count() % 2 == 0]
    return LinearCode(n, c_rows), d


def p_element(p: LinearCode, rnd: random.Random) -> Codeword:
    v = 0
    for r in p.rows:
        if rnd.random() < 0.5:
            v ^= r
    return Codeword(p.n, v)


# examples


def test_P_with_trivial_D():
    c = LinearCode.from_strings(["1100", "0011"])
    assert compute_P(c, LinearCode(4)).dim == 4


def test_order_one_for_dual_words():
    c = LinearCode.from_strings(["1100", "0011"])
    d = LinearCode.from_strings(["1111"])
    assert order_of_lift(c, d, w("1100")) == 1


def test_xi_outside_P_rejected():
    c = LinearCode.from_strings(["11000000", "00110000"])
    d = LinearCode.from_strings(["11000000"])
    assert w("10000000") not in compute_P(c, d)
    for fn in (lambda: order_of_lift(c, d, w("10000000")), lambda: graded_split(c, d, w("10000000"))):
        with pytest.raises(PreconditionError):
            fn()
    with pytest.raises(PreconditionError):
        commute_lifts(c, d, w("10000000"), w("00000000"))


def test_order_two_example():
    # C = even words of length 8, D = <1^8>: every even xi is in P
    c = dual(LinearCode.from_strings(["1" * 8]))
    d = LinearCode.from_strings(["1" * 8])
    assert order_of_lift(c, d, w("11110000")) == 2
    assert order_of_lift(c, d, w("11000000")) == 4
    s = graded_split(c, d, w("11110000"))
    assert s.d0 == d and s.d1_rep is None
    assert len(s.z4_index()) == 4


def test_split_for_dual_word_keeps_C():
    c = reed_muller(1, 3)
    d = LinearCode.from_strings(["1" * 8])
    s = graded_split(c, d, w("11110000"))
    assert s.c0 == c and s.c1_rep is None


def test_degenerate_description():
    # length 0: C = D = C^perp = 0
    s = describe_stabilizer(LinearCode(0), LinearCode(0))
    assert (s.tau_rank, s.sigma_rank, s.group_order) == (0, 0, 1)


def test_length16_even_pair_ranks():
    c = dual(LinearCode.from_strings(["1" * 16]))
    d = LinearCode.from_strings(["1" * 16])
    s = describe_stabilizer(c, d)
    p_words = oracles.stabilizer_P(set(oracles.span(c.rows)), d.rows, 16)
    assert s.P.size == len(p_words)
    assert s.tau_rank == 1 and s.sigma_rank == s.P.dim - 1 == 14
    assert s.to_dict()["log2_order"] == 15


# moonshine


def test_moonshine_P(moon):
    p = compute_P(moon.C, moon.D)
    assert p == expected_P() and p.dim == md.P_DIM
    assert moon.xi in p


def test_moonshine_description(moon):
    s = describe_stabilizer(moon.C, moon.D)
    assert (s.tau_rank, s.sigma_rank, s.log2_order) == (7, 20, 27)
    # regression data: orders on the transversal basis and the commutator pattern
    assert set(s.orders) == {2}
    assert len(s.noncommuting_pairs()) == 108
    assert all(s.commutator[i][j] == s.commutator[j][i] for i in range(20) for j in range(20))


def test_moonshine_order_and_split(moon):
    assert order_of_lift(moon.C, moon.D, moon.xi) == 4
    s = graded_split(moon.C, moon.D, moon.xi)
    d0 = LinearCode.from_strings(list(md.D_EXTRA_ROWS) + [a * 3 for a in md.D0_DIAGONAL])
    assert s.d0 == d0
    d1 = w(md.D1_REP)
    assert (d1 * moon.xi).weight == 6
    assert s.d0.reduce(d1) == s.d1_rep
    idx = s.z4_index()
    assert len(idx) == 2 * moon.D.size
    assert {t for _, t in idx} == {0, 1, 2, 3}


def test_moonshine_noncommuting_pair(moon):
    s = describe_stabilizer(moon.C, moon.D)
    i, j = s.noncommuting_pairs()[0]
    a, b = s.transversal[i], s.transversal[j]
    assert not commute_lifts(moon.C, moon.D, a, b)
    assert any(((x & a.bits & b.bits).bit_count() & 1) for x in moon.D.rows)


# properties


@given(codes(min_n=1, max_n=8, even=True), st.lists(st.integers(0, 255), max_size=3))
def test_P_matches_brute_force(c, drows):
    d = LinearCode(c.n, [r & ((1 << c.n) - 1) for r in drows])
    cw = oracles.span(c.rows)
    assert {x.bits for x in compute_P(c, d).codewords()} == oracles.stabilizer_P(cw, d.rows, c.n)


def test_valid_pairs_strategy_is_valid():
    @given(valid_pairs())
    def check(cd):
        assert validate_structure_codes(*cd).passed

    check()


@given(valid_pairs())
def test_dual_of_C_inside_P(cd):
    c, d = cd
    assert dual(c) <= compute_P(c, d)


@given(pairs(), st.randoms(use_true_random=False))
def test_P_pointwise(cd, rnd):
    c, d = cd
    p = compute_P(c, d)
    d_words = oracles.span(d.rows)
    for _ in range(30):
        xi = p_element(p, rnd)
        assert all((a & xi.bits) in c for a in d_words)


@given(valid_pairs(), st.randoms(use_true_random=False))
def test_order_and_commutation_constant_mod_C_perp(cd, rnd):
    c, d = cd
    p = compute_P(c, d)
    cp = dual(c)
    for _ in range(5):
        x1, x2 = p_element(p, rnd), p_element(p, rnd)
        e1, e2 = p_element(cp, rnd), p_element(cp, rnd)
        o = order_of_lift(c, d, x1, p)
        if x1 not in cp:
            assert order_of_lift(c, d, x1 + e1, p) == o
        assert commute_lifts(c, d, x1, x2, p) == commute_lifts(c, d, x1 + e1, x2 + e2, p)
        assert commute_lifts(c, d, x1, x1, p)
        assert commute_lifts(c, d, x1, e2, p)


@given(valid_pairs(), st.randoms(use_true_random=False))
def test_order_matches_weights_on_all_of_D(cd, rnd):
    c, d = cd
    p = compute_P(c, d)
    d_words = oracles.span(d.rows)
    for _ in range(5):
        xi = p_element(p, rnd)
        if xi in dual(c):
            continue
        want = 2 if all((a & xi.bits).bit_count() % 4 == 0 for a in d_words) else 4
        assert order_of_lift(c, d, xi, p) == want
        s = graded_split(c, d, xi, p)
        d0 = {x.bits for x in s.d0.codewords()}
        assert d0 == {a for a in d_words if (a & xi.bits).bit_count() % 4 == 0}
        c_words = oracles.span(c.rows)
        assert {x.bits for x in s.c0.codewords()} == {a for a in c_words if oracles.orth(a, xi.bits)}


@given(valid_pairs())
def test_valid_pairs_have_D_in_P(cd):
    c, d = cd
    assert d <= compute_P(c, d)


def test_validated_pairs_have_D_in_P():
    ones = LinearCode.from_strings(["1" * 16])
    rm1 = reed_muller(1, 4)
    for c, d in [(dual(ones), ones), (dual(rm1), rm1), (reed_muller(2, 4), ones)]:
        assert validate_structure_codes(c, d).passed
        assert d <= compute_P(c, d)


def test_moonshine_D_in_P(moon):
    assert moon.D <= compute_P(moon.C, moon.D)
    assert sum_codes(moon.D, dual(moon.C)) <= compute_P(moon.C, moon.D)
