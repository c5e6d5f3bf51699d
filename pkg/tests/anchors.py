"""Frozen oracle data shared by the test modules.

Every constant here was obtained independently of the code under test:
either brute force over a finite set defined from scratch in the test that
uses it, a hand-executed run of the defining walk/insertion rules, or a
printed value of the underlying sequences.  Tests treat these as ground
truth; implementations must reproduce them, never the other way round.
"""

# --- family counts -------------------------------------------------------
DC_COUNTS = {1: 1, 2: 2, 3: 7, 4: 38, 5: 295, 6: 3098}
SDC_COUNTS = {1: 1, 2: 2, 3: 3, 4: 10, 5: 21, 6: 98, 7: 267, 8: 1594}
TE_COUNTS = {1: 1, 2: 3, 3: 18, 4: 180, 5: 2700, 6: 56700, 7: 1587600}  # (n+1)!n!/2^n
TO_COUNTS = {1: 2, 2: 9, 3: 72, 4: 900, 5: 16200, 6: 396900}  # ((n+1)!)^2/2^n
SP_COUNTS = {1: 1, 2: 3, 3: 17, 4: 155, 5: 2073, 6: 38227}

# --- polynomial families (ascending coefficients) ------------------------
P_POLYS = {
    1: (1,),
    2: (1, 2),
    3: (5, 10, 6),
    4: (49, 110, 84, 24),
    5: (797, 1954, 1758, 720, 120),
}
L_VALUES = (1, 1, 4, 46, 1024)  # D_n at -1/2, n = 0..4
R_VALUES = (1, 3, 24, 402)      # D_n at  1/2, n = 0..3
L_SMALL = (1, 1, 3, 21, 267)    # D_n(0) / 2^n, n = 0..4
R_SMALL = (1, 2, 10, 98, 1594)  # D_n(1) / 2^n, n = 0..4

# --- inversion generating polynomials (ascending, variable q) ------------
POINCARE_A = {1: (1,), 2: (1, 1), 3: (1, 2, 3, 1)}
POINCARE_SP = {1: (1,), 2: (1, 1), 3: (1, 1, 1), 4: (1, 2, 3, 3, 1)}
POINCARE_SO = {1: (1,), 2: (2,), 3: (1, 2), 4: (2, 4, 4)}

# --- the 14-row worked example and its two projections --------------------
# Everything below was executed by hand from the walk and insertion rules.
REF_TE7 = (1, 1, 3, 4, 5, 5, 2, 6, 6, 7, 7, 3, 2, 4)
REF_TE7_FR = 6
REF_TE7_B = ((2, 7), (3, 12), (7, 11))
REF_TE7_R = ((4, 14), (7, 10))
REF_TE7_G = ((2, 13),)
REF_TE7_BP = ((5, 6), (6, 9))
REF_TE7_RP = ((6, 8),)
REF_TE7_COUNTS = (2, 1, 1)   # (b, r, g)
REF_TE7_PCOUNTS = (2, 1, 0)  # (b', r', g')
REF_TE7_IOTA_710 = [10, 14, 14]
REF_TE7_IOTA_711 = [11, 12, 13, 2, 7, 7]
REF_TE7_IOTA_213 = [13, 2, 2]

PI_REF = (1, 1, 3, 4, 5, 2, 6, 6, 5, 3, 2, 4)  # first projection of REF_TE7
PI_REF_X = frozenset({(2, 6), (2, 11), (3, 10), (4, 12)})
PI_REF_COUNTS = (3, 1, 1)  # (b, r, g) of the projection

P_REF = (1, 1, 3, 4, 5, 5, 6, 6, None, 4, 3, 2, 2)  # second projection of REF_TE7
P_REF_V = ((2, 13), (3, 11), (4, 10))
P_REF_G = ((2, 12),)
P_REF_LABELS = {2: "bg", 3: "b", 4: "r"}

# --- small families ------------------------------------------------------
TE2_ELEMENTS = [(1, 1, 2, 2), (1, 2, 1, 2), (1, 2, 2, 1)]
TE2_FR = [2, 1, 2]

# expansion of (1,2,2,1) with free labels (2,3)->0, (1,4)->1
SDC4_FROM_TE2 = (1, 2, 3, 1, 4, 2, 3, 4)
# expansion of (1,1,None,2,2) with free labels (2,4)->1, (2,5)->0
SDC5_FROM_TO2 = (1, 1, 3, 2, 4, 2, 4, 3, 5, 5)

# the two 3-row odd tableaux: rows -> (fr, v, g)
TO1_STATS = [((1, 1, None), (0, 0, 0)), ((1, None, 1), (1, 1, 0))]

# the nine 5-row odd tableaux: rows -> (fr, v, g); weights 2^(fr-g) x^v (1+x)^g
# sum to 6x^2 + 10x + 5
TO2_STATS = [
    ((1, 1, 2, 2, None), (1, 0, 0)),
    ((1, 1, 2, None, 2), (1, 1, 0)),
    ((1, 1, None, 2, 2), (2, 1, 1)),
    ((1, 2, 1, 2, None), (1, 0, 0)),
    ((1, 2, 1, None, 2), (1, 1, 0)),
    ((1, 2, None, 1, 2), (1, 1, 0)),
    ((1, 2, 2, 1, None), (0, 0, 0)),
    ((1, 2, 2, None, 1), (1, 1, 0)),
    ((1, 2, None, 2, 1), (2, 2, 0)),
]

# surjective pistols of size 2 with their (max, fd) statistics
SP2_STATS = [((2, 2, 4, 4), (0, 1)), ((2, 4, 4, 4), (1, 0)), ((4, 2, 4, 4), (1, 0))]

DC2_ELEMENTS = [(1, 1, 2, 2), (1, 2, 1, 2)]  # both symmetric
DC3_FIG = ((1, 2, 3, 1, 2, 3), 3)  # a 3-column configuration with 3 inversions


def ladder_rows(n):
    """Rows of the staircase tableau with points (j, j) and (j, 2n+1-j).

    Its statistics are (b, r, g) = (0, n-1, 0) and fr = n.
    """
    return tuple(list(range(1, n + 1)) + list(range(n, 0, -1)))
