"""Structure-constant data for the 28-dimensional Borel subalgebra of type F4.

The two tables below give the brackets [row, column] for columns x1..x12 and
x13..x24 respectively; rows run over h1..h4, x1..x24.  Both halves of every
(x_i, x_j) pair are kept even though antisymmetry makes one redundant: the
builder cross-checks them against each other, which guards the transcription.

``F4_ROOTS`` lists the positive root of each x-generator in the simple-root
basis; ``F4_CARTAN_MATRIX`` is the Cartan matrix.  Both are metadata used for
integrity checks only (brackets must be root-additive, h-rows must match the
Cartan pairing) and never as a source of structure constants.
"""

F4_HS = ("h1", "h2", "h3", "h4")
F4_XS = tuple(f"x{i}" for i in range(1, 25))

F4_CARTAN_MATRIX = (
    (2, -1, 0, 0),
    (-1, 2, -2, 0),
    (0, -1, 2, -1),
    (0, 0, -1, 2),
)

F4_ROOTS = (
    (1, 0, 0, 0),  # x1
    (0, 1, 0, 0),  # x2
    (0, 0, 1, 0),  # x3
    (0, 0, 0, 1),  # x4
    (1, 1, 0, 0),  # x5
    (0, 1, 1, 0),  # x6
    (0, 0, 1, 1),  # x7
    (1, 1, 1, 0),  # x8
    (0, 1, 2, 0),  # x9
    (0, 1, 1, 1),  # x10
    (1, 1, 2, 0),  # x11
    (1, 1, 1, 1),  # x12
    (0, 1, 2, 1),  # x13
    (1, 2, 2, 0),  # x14
    (1, 1, 2, 1),  # x15
    (0, 1, 2, 2),  # x16
    (1, 2, 2, 1),  # x17
    (1, 1, 2, 2),  # x18
    (1, 2, 3, 1),  # x19
    (1, 2, 2, 2),  # x20
    (1, 2, 3, 2),  # x21
    (1, 2, 4, 2),  # x22
    (1, 3, 4, 2),  # x23
    (2, 3, 4, 2),  # x24
)

# Columns x1 .. x12.
F4_TABLE_LOW = {
    "h1": ("2*x1", "-x2", "0", "0", "x5", "-x6", "0", "x8", "-x9", "-x10", "x11", "x12"),
    "h2": ("-x1", "2*x2", "-x3", "0", "x5", "x6", "-x7", "0", "0", "x10", "-x11", "0"),
    "h3": ("0", "-2*x2", "2*x3", "-x4", "-2*x5", "0", "x7", "0", "2*x9", "-x10", "2*x11", "-x12"),
    "h4": ("0", "0", "-x3", "2*x4", "0", "-x6", "x7", "-x8", "-2*x9", "x10", "-2*x11", "x12"),
    "x1": ("0", "x5", "0", "0", "0", "x8", "0", "0", "x11", "x12", "0", "0"),
    "x2": ("-x5", "0", "x6", "0", "0", "0", "x10", "0", "0", "0", "x14", "0"),
    "x3": ("0", "-x6", "0", "x7", "-x8", "x9", "0", "x11", "0", "x13", "0", "x15"),
    "x4": ("0", "0", "-x7", "0", "0", "-x10", "0", "-x12", "-2*x13", "0", "-2*x15", "0"),
    "x5": ("0", "0", "x8", "0", "0", "0", "x12", "0", "-x14", "0", "0", "0"),
    "x6": ("-x8", "0", "-x9", "x10", "0", "0", "-x13", "x14", "0", "0", "0", "-1/2*x17"),
    "x7": ("0", "-x10", "0", "0", "-x12", "x13", "0", "x15", "0", "-x16", "0", "-x18"),
    "x8": ("0", "0", "-x11", "x12", "0", "-x14", "-x15", "0", "0", "1/2*x17", "0", "0"),
    "x9": ("-x11", "0", "0", "2*x13", "x14", "0", "0", "0", "0", "0", "0", "-x19"),
    "x10": ("-x12", "0", "-x13", "0", "0", "0", "x16", "-1/2*x17", "0", "0", "-x19", "1/2*x20"),
    "x11": ("0", "-x14", "0", "2*x15", "0", "0", "0", "0", "0", "x19", "0", "0"),
    "x12": ("0", "0", "-x15", "0", "0", "1/2*x17", "x18", "0", "x19", "-1/2*x20", "0", "0"),
    "x13": ("-x15", "0", "0", "-x16", "-1/2*x17", "0", "0", "1/2*x19", "0", "0", "0", "1/2*x21"),
    "x14": ("0", "0", "0", "-x17", "0", "0", "-x19", "0", "0", "0", "0", "0"),
    "x15": ("0", "1/2*x17", "0", "-x18", "0", "-1/2*x19", "0", "0", "0", "-1/2*x21", "0", "0"),
    "x16": ("-x18", "0", "0", "0", "-1/2*x20", "0", "0", "x21", "0", "0", "x22", "0"),
    "x17": ("0", "0", "-x19", "-x20", "0", "0", "-x21", "0", "0", "0", "0", "0"),
    "x18": ("0", "1/2*x20", "0", "0", "0", "-x21", "0", "0", "-x22", "0", "0", "0"),
    "x19": ("0", "0", "0", "-x21", "0", "0", "-x22", "0", "0", "-x23", "0", "-x24"),
    "x20": ("0", "0", "-2*x21", "0", "0", "0", "0", "0", "2*x23", "0", "2*x24", "0"),
    "x21": ("0", "0", "-x22", "0", "0", "-x23", "0", "-x24", "0", "0", "0", "0"),
    "x22": ("0", "-x23", "0", "0", "-x24", "0", "0", "0", "0", "0", "0", "0"),
    "x23": ("-x24", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"),
    "x24": ("0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"),
}

# Columns x13 .. x24.
F4_TABLE_HIGH = {
    "h1": ("-x13", "0", "x15", "-x16", "0", "x18", "0", "0", "0", "0", "-x23", "x24"),
    "h2": ("0", "x14", "-x15", "0", "x17", "-x18", "0", "x20", "0", "-x22", "x23", "0"),
    "h3": ("x13", "0", "x15", "0", "-x17", "0", "x19", "-2*x20", "0", "2*x22", "0", "0"),
    "h4": ("0", "-2*x14", "0", "2*x16", "0", "2*x18", "-x19", "2*x20", "x21", "0", "0", "0"),
    "x1": ("x15", "0", "0", "x18", "0", "0", "0", "0", "0", "0", "x24", "0"),
    "x2": ("0", "0", "-1/2*x17", "0", "0", "-1/2*x20", "0", "0", "0", "x23", "0", "0"),
    "x3": ("0", "0", "0", "0", "x19", "0", "0", "2*x21", "x22", "0", "0", "0"),
    "x4": ("x16", "x17", "x18", "0", "x20", "0", "x21", "0", "0", "0", "0", "0"),
    "x5": ("1/2*x17", "0", "0", "1/2*x20", "0", "0", "0", "0", "0", "x24", "0", "0"),
    "x6": ("0", "0", "1/2*x19", "0", "0", "x21", "0", "0", "x23", "0", "0", "0"),
    "x7": ("0", "x19", "0", "0", "x21", "0", "x22", "0", "0", "0", "0", "0"),
    "x8": ("-1/2*x19", "0", "0", "-x21", "0", "0", "0", "0", "x24", "0", "0", "0"),
    "x9": ("0", "0", "0", "0", "0", "x22", "0", "-2*x23", "0", "0", "0", "0"),
    "x10": ("0", "0", "1/2*x21", "0", "0", "0", "x23", "0", "0", "0", "0", "0"),
    "x11": ("0", "0", "0", "-x22", "0", "0", "0", "-2*x24", "0", "0", "0", "0"),
    "x12": ("-1/2*x21", "0", "0", "0", "0", "0", "x24", "0", "0", "0", "0", "0"),
    "x13": ("0", "0", "1/2*x22", "0", "-x23", "0", "0", "0", "0", "0", "0", "0"),
    "x14": ("0", "0", "0", "-x23", "0", "-x24", "0", "0", "0", "0", "0", "0"),
    "x15": ("-1/2*x22", "0", "0", "0", "-x24", "0", "0", "0", "0", "0", "0", "0"),
    "x16": ("0", "x23", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"),
    "x17": ("x23", "0", "x24", "0", "0", "0", "0", "0", "0", "0", "0", "0"),
    "x18": ("0", "x24", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"),
    "x19": ("0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"),
    "x20": ("0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"),
    "x21": ("0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"),
    "x22": ("0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"),
    "x23": ("0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"),
    "x24": ("0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"),
}
