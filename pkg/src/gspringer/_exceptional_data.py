"""Nilpotent orbits of the simply-connected exceptional groups.

Bala-Carter labels follow Collingwood-McGovern 8.4, in their order. Each entry
is ``(label, A(O))`` where ``A(O)`` is written as a short code:

    "1"       trivial
    "S2".."S5" symmetric group
    "m3", "m2"           image of the center only (mu_3, mu_2)
    "m3xS2", "m2xS2", "m2xS3"  center times a symmetric group

The per-orbit center images for E6/E7 are only constrained by the count
table; see the package README for the caveat.
"""

G2 = [
    ("0", "1"), ("A1", "1"), ("~A1", "1"), ("G2(a1)", "S3"), ("G2", "1"),
]

F4 = [
    ("0", "1"), ("A1", "1"), ("~A1", "S2"), ("A1+~A1", "1"), ("A2", "S2"),
    ("~A2", "1"), ("A2+~A1", "1"), ("B2", "S2"), ("~A2+A1", "1"),
    ("C3(a1)", "S2"), ("F4(a3)", "S4"), ("B3", "1"), ("C3", "1"),
    ("F4(a2)", "S2"), ("F4(a1)", "S2"), ("F4", "1"),
]

E6 = [
    ("0", "1"), ("A1", "1"), ("2A1", "1"), ("3A1", "1"), ("A2", "S2"),
    ("A2+A1", "1"), ("2A2", "m3"), ("A2+2A1", "1"), ("A3", "1"),
    ("2A2+A1", "m3"), ("A3+A1", "1"), ("D4(a1)", "S3"), ("A4", "1"),
    ("D4", "1"), ("A4+A1", "1"), ("A5", "m3"), ("D5(a1)", "1"),
    ("E6(a3)", "m3xS2"), ("D5", "1"), ("E6(a1)", "m3"), ("E6", "m3"),
]

E7 = [
    ("0", "1"), ("A1", "1"), ("2A1", "1"), ("(3A1)''", "m2"), ("(3A1)'", "1"),
    ("A2", "S2"), ("4A1", "1"), ("A2+A1", "S2"), ("A2+2A1", "1"), ("A3", "1"),
    ("2A2", "1"), ("A2+3A1", "m2"), ("(A3+A1)''", "m2"), ("2A2+A1", "1"),
    ("(A3+A1)'", "1"), ("D4(a1)", "S3"), ("A3+2A1", "1"), ("D4", "1"),
    ("D4(a1)+A1", "m2xS2"), ("A3+A2", "S2"), ("A4", "S2"), ("A3+A2+A1", "m2"),
    ("(A5)''", "m2"), ("D4+A1", "m2"), ("A4+A1", "S2"), ("D5(a1)", "S2"),
    ("A4+A2", "1"), ("(A5)'", "1"), ("A5+A1", "m2"), ("D5(a1)+A1", "1"),
    ("D6(a2)", "m2"), ("E6(a3)", "S2"), ("D5", "1"), ("E7(a5)", "m2xS3"),
    ("A6", "m2"), ("D5+A1", "m2"), ("D6(a1)", "m2"), ("E7(a4)", "m2xS2"),
    ("D6", "m2"), ("E6(a1)", "S2"), ("E6", "1"), ("E7(a3)", "m2xS2"),
    ("E7(a2)", "m2"), ("E7(a1)", "m2"), ("E7", "m2"),
]

E8 = [
    ("0", "1"), ("A1", "1"), ("2A1", "1"), ("3A1", "1"), ("A2", "S2"),
    ("4A1", "1"), ("A2+A1", "S2"), ("A2+2A1", "1"), ("A3", "1"),
    ("A2+3A1", "1"), ("2A2", "S2"), ("2A2+A1", "1"), ("A3+A1", "1"),
    ("D4(a1)", "S3"), ("D4", "1"), ("2A2+2A1", "1"), ("A3+2A1", "1"),
    ("D4(a1)+A1", "S3"), ("A3+A2", "S2"), ("A4", "S2"), ("A3+A2+A1", "1"),
    ("D4+A1", "1"), ("D4(a1)+A2", "S2"), ("A4+A1", "S2"), ("2A3", "1"),
    ("D5(a1)", "S2"), ("A4+2A1", "S2"), ("A4+A2", "1"), ("A5", "1"),
    ("D5(a1)+A1", "1"), ("A4+A2+A1", "1"), ("D4+A2", "S2"), ("E6(a3)", "S2"),
    ("D5", "1"), ("A4+A3", "1"), ("A5+A1", "1"), ("D5(a1)+A2", "1"),
    ("D6(a2)", "S2"), ("E6(a3)+A1", "S2"), ("E7(a5)", "S3"), ("D5+A1", "1"),
    ("E8(a7)", "S5"), ("A6", "1"), ("D6(a1)", "S2"), ("A6+A1", "1"),
    ("E7(a4)", "S2"), ("E6(a1)", "S2"), ("D5+A2", "1"), ("D6", "1"),
    ("E6", "1"), ("D7(a2)", "S2"), ("A7", "1"), ("E6(a1)+A1", "S2"),
    ("E7(a3)", "S2"), ("E8(b6)", "S3"), ("D7(a1)", "S2"), ("E6+A1", "S2"),
    ("E7(a2)", "1"), ("E8(a6)", "S3"), ("D7", "1"), ("E8(b5)", "S3"),
    ("E7(a1)", "1"), ("E8(a5)", "S2"), ("E8(b4)", "S2"), ("E7", "1"),
    ("E8(a4)", "S2"), ("E8(a3)", "S2"), ("E8(a2)", "1"), ("E8(a1)", "1"),
    ("E8", "1"),
]

ORBITS = {"G2": G2, "F4": F4, "E6": E6, "E7": E7, "E8": E8}

# The distinguished orbit of minimal dimension; it carries the cuspidal sheaves.
CUSPIDAL_ORBIT = {
    "G2": "G2(a1)", "F4": "F4(a3)", "E6": "E6(a3)", "E7": "E7(a5)", "E8": "E8(a7)",
}

# Center of the simply-connected group, as the order of a cyclic group.
CENTER_ORDER = {"G2": 1, "F4": 1, "E6": 3, "E7": 2, "E8": 1}

# Levi of the non-principal cuspidal support (simply-connected derived type, |pi0 Z_L|).
SUPPORT_LEVI = {"E6": ("A2+A2", 3), "E7": ("A1+A1+A1", 2)}

# Count table: number of orbits with each A(O).
COUNT_TABLE = {
    "G2": {"1": 4, "S3": 1},
    "F4": {"1": 9, "S2": 6, "S4": 1},
    "E6": {"1": 13, "S2": 1, "S3": 1, "m3": 5, "m3xS2": 1},
    "E7": {"1": 17, "S2": 8, "S3": 1, "m2": 15, "m2xS2": 3, "m2xS3": 1},
    "E8": {"1": 38, "S2": 25, "S3": 6, "S5": 1},
}
