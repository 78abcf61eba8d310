"""Literal data of the moonshine frame example (length 48, three blocks of 16)."""

N = 48

# first order Reed-Muller code RM(1,4), generator rows
RM14_ROWS = (
    "1111111111111111",
    "1111111100000000",
    "1111000011110000",
    "1100110011001100",
    "1010101010101010",
)

# the 1/16-word code D: block indicators plus diagonal copies of RM(1,4)
D_EXTRA_ROWS = (
    "1" * 16 + "0" * 32,
    "0" * 32 + "1" * 16,
)

# the sigma-type involution word and the kappa vector of the order-4 lift
XI = "1100000011000000" "0110000001100000" "1010000010100000"
KAPPA = "1000000010000000" + "0" * 32

# generator matrix of the subcode of C^0 supported on xi, blocks of 8
_Z8 = "0" * 8
C0_XI_ROWS = tuple(
    "".join(blocks)
    for blocks in (
        ("11000000", "11000000", _Z8, _Z8, _Z8, _Z8),
        (_Z8, _Z8, "01100000", "01100000", _Z8, _Z8),
        (_Z8, _Z8, _Z8, _Z8, "10100000", "10100000"),
        ("10000000", "10000000", "01000000", "01000000", _Z8, _Z8),
        ("10000000", "10000000", _Z8, _Z8, "10000000", "10000000"),
        ("11000000", _Z8, "01100000", _Z8, "10100000", _Z8),
    )
)

# RM(1,4) words alpha whose diagonal copies (alpha, alpha, alpha) span D^0 with the block words
D0_DIAGONAL = (
    "1111111111111111",
    "1111000011110000",
    "1100110011001100",
    "1010101010101010",
)
# representative of the odd part D^1
D1_REP = "1111111100000000" * 3

# weight enumerators as {weight: coefficient}
W_D = {0: 1, 16: 3, 24: 120, 32: 3, 48: 1}
W_D_XI = {0: 1, 12: 2, 16: 3, 20: 30, 24: 184, 28: 30, 32: 3, 36: 2, 48: 1}
F_POLY = {12: 2, 20: 30, 24: 64, 28: 30, 36: 2}

# leading coefficients of the McKay-Thompson series, keyed by power of q
MT_COEFFS = {-1: 1, 0: 0, 1: 276, 2: 2048}

# supports of the weight-2 words of the coset C^0 + kappa
WEIGHT2_SUPPORTS = tuple(
    (i, i + 8) for start in (1, 17, 33) for i in range(start, start + 8)
)

TOP_XI = ((3, 4), 1)  # (top weight as a fraction, top-level dimension) of M(xi, 0)
TOP_KAPPA = ((1, 1), 24)  # same for M(0, kappa)
P_DIM = 27
