import random

import pytest
import oracles
from framedcodes.errors import PreconditionError
from framedcodes.gf2 import Codeword, LinearCode, dual, reed_muller, sum_codes
from framedcodes.moonshine import MoonshineFrame
from framedcodes.stabilizer import compute_P
from framedcodes.structcheck import (
    extend_structure_codes,
    is_f_admissible,
    is_f_admissible_via_dual,
    is_holomorphic_pair,
    orbifold_codes,
    validate_structure_codes,
)

ONES16 = LinearCode.from_strings(["1" * 16])
EVEN16 = dual(ONES16)


@pytest.fixture(scope="module")
def moon():
    return MoonshineFrame.standard()


# a family of length-16/32 codes on both sides of the admissibility line


def _permute(code: LinearCode, perm: list[int]) -> LinearCode:
    rows = [sum(1 << perm[i] for i in range(code.n) if r >> i & 1) for r in code.rows]
    return LinearCode(code.n, rows)


def _random_subcode(code: LinearCode, rnd: random.Random, keep: list[int]) -> LinearCode:
    rows = [r for r in code.rows if rnd.random() < 0.6] + keep
    return LinearCode(code.n, rows)


def _triply_even_sources(n: int) -> list[LinearCode]:
    """Triply even codes containing the all-one word."""
    rm14 = reed_muller(1, 4)
    if n == 16:
        return [rm14, LinearCode.from_strings(["1" * 8 + "0" * 8, "1" * 16])]
    doubled = LinearCode(32, [r << 16 for r in rm14.rows] + list(rm14.rows))
    blocks = LinearCode(32, [0xFF << (8 * i) for i in range(4)])
    return [reed_muller(1, 5), doubled, blocks]


def admissibility_instances(count: int = 50, seed: int = 2024):
    rnd = random.Random(seed)
    out = []
    for i in range(count):
        n = 16 if i % 2 == 0 else 32
        kind = i % 5
        src = rnd.choice(_triply_even_sources(n))
        d = _random_subcode(src, rnd, [(1 << n) - 1])
        if kind == 1:
            # a weight-4 word spoils triple evenness
            d = sum_codes(d, LinearCode(n, [0b1111 << rnd.randrange(0, n - 4)]))
        elif kind == 2:
            # drop the all-one word
            d = LinearCode(n, [r for r in _random_subcode(src, rnd, []).rows if r != (1 << n) - 1])
        elif kind == 3:
            d = sum_codes(d, LinearCode(n, [rnd.getrandbits(n)]))
        perm = list(range(n))
        rnd.shuffle(perm)
        out.append(dual(_permute(d, perm)))
    return out


INSTANCES = admissibility_instances()


# examples


def test_even16_pair_passes():
    r = validate_structure_codes(EVEN16, ONES16)
    assert r.passed and bool(r)
    assert len(r.clauses) == 5 and not r.failures()


def test_weight4_word_in_D_fails():
    d = LinearCode.from_strings(["1" * 16, "1111" + "0" * 12])
    r = validate_structure_codes(EVEN16, d)
    assert not r.passed
    c = r.clause("D weights 0 mod 8")
    assert not c.passed and c.witness.weight % 8 and c.witness in d


def test_chain_witnesses():
    c = LinearCode.from_strings(["1100" + "0" * 12])
    r = validate_structure_codes(c, ONES16)
    wit = r.clause("D in C").witness
    assert wit is not None and wit in ONES16 and wit not in c
    odd = LinearCode.from_strings(["1" + "0" * 15])
    r = validate_structure_codes(odd, ONES16)
    assert r.clause("C even").witness.weight % 2 == 1
    assert r.clause("C in D^perp").witness.inner(Codeword.ones(16)) == 1


def test_missing_subcode_witness():
    # C_alpha = <1^8> for alpha = 1^8 has no subcode self-dual w.r.t. alpha
    c = LinearCode.from_strings(["1" * 8])
    d = LinearCode.from_strings(["1" * 8])
    r = validate_structure_codes(c, d)
    cl = r.clause("doubly even self-dual subcodes")
    assert not cl.passed and cl.witness == Codeword.ones(8)


def test_length_mismatch():
    with pytest.raises(PreconditionError):
        validate_structure_codes(EVEN16, LinearCode(8))


def test_report_rendering():
    r = validate_structure_codes(EVEN16, LinearCode.from_strings(["1" * 16, "1111" + "0" * 12]))
    assert "FAIL" in str(r)
    d = r.to_dict()
    assert d["passed"] is False and any(c["witness"] for c in d["clauses"])


def test_admissibility_examples():
    assert is_f_admissible(EVEN16).passed
    assert is_f_admissible_via_dual(EVEN16)
    assert not is_f_admissible(dual(reed_muller(1, 3))).passed
    r = is_f_admissible(dual(LinearCode.from_strings(["1" * 8])))
    assert not r.clause("length divisible by 16").passed
    no_ones = dual(LinearCode.from_strings(["1" * 8 + "0" * 8]))
    assert not is_f_admissible_via_dual(no_ones)
    assert not is_f_admissible(no_ones).passed


def test_holomorphic_examples():
    assert is_holomorphic_pair(EVEN16, ONES16)
    rm2 = reed_muller(2, 4)
    assert validate_structure_codes(rm2, ONES16).passed
    assert not is_holomorphic_pair(rm2, ONES16)


def test_extend_examples():
    rm1 = reed_muller(1, 4)
    c = reed_muller(2, 4)
    e, d, rep = extend_structure_codes(c, ONES16, c)
    assert (e, d) == (c, ONES16) and rep.passed
    e, d, rep = extend_structure_codes(c, ONES16, EVEN16)
    assert rep.passed and is_holomorphic_pair(e, d)
    with pytest.raises(PreconditionError):
        extend_structure_codes(EVEN16, rm1, EVEN16)


# moonshine


def test_moonshine_pair(moon):
    assert validate_structure_codes(moon.C, moon.D).passed
    assert is_f_admissible(moon.C).passed
    assert is_f_admissible_via_dual(moon.C)
    assert is_holomorphic_pair(moon.C, moon.D)


def test_moonshine_extension(moon):
    # C^0 plus one coset of C inside D^perp = C
    c0 = moon.C0
    delta = next(r for r in moon.C.rows if r not in c0)
    e, d, rep = extend_structure_codes(c0, moon.D, sum_codes(c0, LinearCode(48, [delta])))
    assert e == moon.C and rep.passed


def test_moonshine_orbifolds(moon):
    c4, d4, r4 = orbifold_codes(moon.C, moon.D, moon.xi, moon.kappa, "4A")
    assert r4.passed and c4 == dual(d4)
    assert is_f_admissible_via_dual(c4) and is_f_admissible(c4).passed
    c2, d2, r2 = orbifold_codes(moon.C, moon.D, moon.xi, moon.kappa, "2B")
    assert r2.passed and is_holomorphic_pair(c2, d2)
    with pytest.raises(ValueError):
        orbifold_codes(moon.C, moon.D, moon.xi, moon.kappa, "3C")


def test_orbifold_trivial_sigma(moon):
    # xi in D = C^perp: no grading, so the 4A variant returns (C, D)
    xi = Codeword(48, moon.D.rows[0])
    c4, d4, r4 = orbifold_codes(moon.C, moon.D, xi, Codeword.zero(48), "4A")
    assert (c4, d4) == (moon.C, moon.D) and r4.passed


# properties


def test_instance_family_is_balanced():
    verdicts = [is_f_admissible_via_dual(c) for c in INSTANCES]
    assert len(INSTANCES) == 50
    assert 10 <= sum(verdicts) <= 40
    assert {c.n for c in INSTANCES} == {16, 32}


@pytest.mark.parametrize("idx", range(len(INSTANCES)))
def test_admissibility_routes_agree(idx):
    c = INSTANCES[idx]
    assert is_f_admissible(c).passed == is_f_admissible_via_dual(c)


@pytest.mark.parametrize("idx", range(len(INSTANCES)))
def test_valid_pairs_have_D_in_P(idx):
    c = INSTANCES[idx]
    d = dual(c)
    if validate_structure_codes(c, d).passed:
        assert d <= compute_P(c, d)


@pytest.mark.parametrize("rows", [[], [0xFF00], [0x00FF], [0xFF00, 0x00FF], [0xFFFF]])
def test_block_subcodes_over_block_even_code(rows):
    # C = <1^8 0^8, 0^8 1^8>^perp with any D inside the block span
    c = dual(LinearCode(16, [0xFF00, 0x00FF]))
    d = LinearCode(16, rows)
    assert validate_structure_codes(c, d).passed
    assert all(x.bit_count() % 8 == 0 for x in oracles.span(d.rows))
    assert is_holomorphic_pair(c, d) == (d.dim == 2)
