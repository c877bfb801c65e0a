"""Reference labellings for small instances, transcribed row by row (top row first)."""

GRID_REFERENCE = {
    (2, 7): [
        [2, 4, 6, 8, 10, 12, 14],
        [9, 11, 13, 1, 3, 5, 7],
    ],
    (2, 8): [
        [2, 4, 6, 8, 10, 12, 14, 16],
        [11, 13, 15, 1, 3, 5, 7, 9],
    ],
    (4, 7): [
        [2, 4, 6, 8, 10, 12, 14],
        [16, 18, 20, 22, 24, 26, 28],
        [9, 11, 13, 1, 3, 5, 7],
        [23, 25, 27, 15, 17, 19, 21],
    ],
    (3, 5): [
        [6, 9, 12, 15, 3],
        [11, 14, 2, 5, 8],
        [1, 4, 7, 10, 13],
    ],
    (3, 9): [
        [12, 21, 6, 15, 24, 9, 18, 27, 3],
        [23, 8, 17, 26, 2, 11, 20, 5, 14],
        [1, 10, 19, 4, 13, 22, 7, 16, 25],
    ],
    (5, 5): [
        [15, 12, 9, 6, 3],
        [17, 19, 21, 23, 25],
        [5, 2, 14, 11, 8],
        [22, 24, 16, 18, 20],
        [10, 7, 4, 1, 13],
    ],
}

# measured dispersion of each drawn labelling
GRID_REFERENCE_K = {(2, 7): 4, (2, 8): 4, (4, 7): 5, (3, 5): 3, (3, 9): 5, (5, 5): 4}
# the value originally claimed for each drawing (a lower bound on the measured value)
GRID_CLAIMED_K = {(2, 7): 4, (2, 8): 4, (4, 7): 4, (3, 5): 3, (3, 9): 5, (5, 5): 4}

# depth-3 binary tree, vertex string -> label
TREE_REFERENCE = {
    "": 1,
    "0": 10, "1": 3,
    "00": 12, "01": 14, "10": 5, "11": 7,
    "000": 2, "001": 4, "010": 6, "011": 8,
    "100": 9, "101": 11, "110": 13, "111": 15,
}

# hypercube permutation for n = 3, coordinates (x1, x2, x3)
PI_3 = [(0, 0, 0), (1, 0, 1), (0, 1, 1), (1, 1, 0), (0, 0, 1), (1, 0, 0), (0, 1, 0), (1, 1, 1)]


def tree_vertex(bits: str) -> int:
    """Heap id of a binary string vertex."""
    return (1 << len(bits)) + (int(bits, 2) if bits else 0) - 1


def tuple_to_mask(t) -> int:
    return sum(bit << i for i, bit in enumerate(t))
