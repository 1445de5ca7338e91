"""Verbatim golden tables for uniform-dims permutation matrices.

The tables are keyed by ``(d, n)`` and a 1-based label; each entry is the
claimed permutation image followed by the published column indices of the
delta-notation table, copied exactly as printed (known misprints included;
see the errata registry consumed by the verification code).

``EXAMPLE_235_TABLES`` carries the analogous worked tables for the mixed
shape (2, 3, 5), keyed by the same 1-based labels.
"""

# Label order for d = 3 and d = 4: images in lexicographic order.
SIGMA_D3 = {
    1: (1, 2, 3),
    2: (1, 3, 2),
    3: (2, 1, 3),
    4: (2, 3, 1),
    5: (3, 1, 2),
    6: (3, 2, 1),
}

SIGMA_D4 = {
    1: (1, 2, 3, 4),
    2: (1, 2, 4, 3),
    3: (1, 3, 2, 4),
    4: (1, 3, 4, 2),
    5: (1, 4, 2, 3),
    6: (1, 4, 3, 2),
    7: (2, 1, 3, 4),
    8: (2, 1, 4, 3),
    9: (2, 3, 1, 4),
    10: (2, 3, 4, 1),
    11: (2, 4, 1, 3),
    12: (2, 4, 3, 1),
    13: (3, 1, 2, 4),
    14: (3, 1, 4, 2),
    15: (3, 2, 1, 4),
    16: (3, 2, 4, 1),
    17: (3, 4, 1, 2),
    18: (3, 4, 2, 1),
    19: (4, 1, 2, 3),
    20: (4, 1, 3, 2),
    21: (4, 2, 1, 3),
    22: (4, 2, 3, 1),
    23: (4, 3, 1, 2),
    24: (4, 3, 2, 1),
}

TABLES_D3_N2 = {
    1: (1, 2, 3, 4, 5, 6, 7, 8),
    2: (1, 3, 2, 4, 5, 7, 6, 8),
    3: (1, 2, 5, 6, 3, 4, 7, 8),
    4: (1, 3, 5, 7, 2, 4, 6, 8),
    5: (1, 5, 2, 6, 3, 7, 4, 8),
    6: (1, 5, 3, 7, 2, 6, 4, 8),
}

TABLES_D3_N3 = {
    1: tuple(range(1, 28)),
    2: (1, 4, 7, 2, 5, 8, 3, 6, 9, 10, 13, 16, 11, 14, 17, 12, 15, 18,
        19, 22, 25, 20, 23, 26, 21, 24, 27),
    3: (1, 2, 3, 10, 11, 12, 19, 20, 21, 4, 5, 6, 13, 14, 15, 22, 23, 24,
        7, 8, 9, 16, 17, 18, 25, 26, 27),
    4: (1, 10, 19, 2, 11, 20, 3, 12, 21, 4, 13, 22, 5, 14, 23, 6, 15, 24,
        7, 16, 25, 8, 17, 26, 9, 18, 27),
    5: (1, 4, 7, 10, 13, 16, 19, 22, 25, 2, 5, 8, 11, 14, 17, 20, 23, 26,
        3, 6, 9, 12, 15, 18, 21, 24, 27),
    6: (1, 10, 19, 4, 13, 22, 7, 16, 25, 2, 11, 20, 5, 14, 23, 8, 17, 26,
        3, 12, 21, 6, 15, 24, 9, 18, 27),
}

TABLES_D3_N4 = {
    1: tuple(range(1, 65)),
    2: (1, 5, 9, 13, 2, 6, 10, 14, 3, 7, 11, 15, 4, 8, 12, 16,
        17, 21, 25, 29, 18, 22, 26, 30, 19, 23, 27, 31, 20, 24, 28, 32,
        33, 37, 41, 45, 34, 38, 42, 46, 35, 39, 43, 47, 36, 40, 44, 48,
        49, 53, 57, 61, 50, 54, 58, 62, 51, 55, 59, 63, 52, 56, 60, 64),
    3: (1, 2, 3, 4, 17, 18, 19, 20, 33, 34, 35, 36, 49, 50, 51, 52,
        5, 6, 7, 8, 21, 22, 23, 24, 37, 38, 39, 40, 53, 54, 55, 56,
        9, 10, 11, 12, 25, 26, 27, 28, 41, 42, 43, 44, 57, 58, 59, 60,
        13, 14, 15, 16, 29, 30, 31, 32, 45, 46, 47, 48, 61, 62, 63, 64),
    4: (1, 17, 33, 49, 2, 18, 34, 50, 3, 19, 35, 51, 4, 20, 36, 52,
        5, 21, 37, 53, 6, 22, 38, 54, 7, 23, 39, 55, 8, 24, 40, 56,
        9, 25, 41, 57, 10, 26, 42, 58, 11, 27, 43, 59, 12, 28, 44, 60,
        13, 29, 45, 61, 14, 30, 46, 62, 15, 31, 47, 63, 16, 32, 48, 64),
    # Published with the label misprinted as "W_5" of sigma_4.
    5: (1, 5, 9, 13, 17, 21, 25, 29, 33, 37, 41, 45, 49, 53, 57, 61,
        2, 6, 10, 14, 18, 22, 26, 30, 34, 38, 42, 46, 50, 54, 58, 62,
        3, 7, 11, 15, 19, 23, 27, 31, 35, 39, 43, 47, 51, 55, 59, 63,
        4, 8, 12, 16, 20, 24, 28, 32, 36, 40, 44, 48, 52, 56, 60, 64),
    # Published with the label misprinted as "W_6" of sigma_4.
    6: (1, 17, 33, 49, 5, 21, 37, 53, 9, 25, 41, 57, 13, 29, 45, 61,
        2, 18, 34, 50, 6, 22, 38, 54, 10, 26, 42, 58, 14, 30, 46, 62,
        3, 19, 35, 51, 7, 23, 39, 55, 11, 27, 43, 59, 15, 31, 47, 63,
        4, 20, 36, 52, 8, 24, 40, 56, 12, 28, 44, 60, 16, 32, 48, 64),
}

TABLES_D4_N2 = {
    1: tuple(range(1, 17)),
    2: (1, 3, 2, 4, 5, 7, 6, 8, 9, 11, 10, 12, 13, 15, 14, 16),
    3: (1, 2, 5, 6, 3, 4, 7, 8, 9, 10, 13, 14, 11, 12, 15, 16),
    4: (1, 5, 2, 6, 3, 7, 4, 8, 9, 13, 10, 14, 11, 15, 12, 16),
    5: (1, 3, 5, 7, 2, 4, 6, 8, 9, 11, 13, 15, 10, 12, 14, 16),
    6: (1, 5, 3, 7, 2, 6, 4, 8, 9, 13, 11, 15, 10, 14, 12, 16),
    7: (1, 2, 3, 4, 9, 10, 11, 12, 5, 6, 7, 8, 13, 14, 15, 16),
    8: (1, 3, 2, 4, 9, 11, 10, 12, 5, 7, 6, 8, 13, 15, 14, 16),
    # Published with the label misprinted as sigma_8.
    9: (1, 2, 9, 10, 3, 4, 11, 12, 5, 6, 13, 14, 7, 8, 15, 16),
    10: (1, 9, 2, 10, 3, 11, 4, 12, 5, 13, 6, 14, 7, 15, 8, 16),
    11: (1, 3, 9, 11, 2, 4, 10, 12, 5, 7, 13, 15, 6, 8, 14, 16),
    12: (1, 9, 3, 11, 2, 10, 4, 12, 5, 13, 7, 15, 6, 14, 8, 16),
    13: (1, 2, 5, 6, 9, 10, 13, 14, 3, 4, 7, 8, 11, 12, 15, 16),
    14: (1, 5, 2, 6, 9, 13, 10, 14, 3, 7, 4, 8, 11, 15, 12, 16),
    # Published identical to label 14.
    15: (1, 5, 2, 6, 9, 13, 10, 14, 3, 7, 4, 8, 11, 15, 12, 16),
    16: (1, 9, 2, 10, 5, 13, 6, 14, 3, 11, 4, 12, 7, 15, 8, 16),
    17: (1, 5, 9, 13, 2, 6, 10, 14, 3, 7, 11, 15, 4, 8, 12, 16),
    18: (1, 9, 5, 13, 2, 10, 6, 14, 3, 11, 7, 15, 4, 12, 8, 16),
    19: (1, 3, 5, 7, 9, 11, 13, 15, 2, 4, 6, 8, 10, 12, 14, 16),
    20: (1, 5, 3, 7, 9, 13, 11, 15, 2, 6, 4, 8, 10, 14, 12, 16),
    21: (1, 3, 9, 11, 5, 7, 13, 15, 2, 4, 10, 12, 6, 8, 14, 16),
    22: (1, 9, 3, 11, 5, 13, 7, 15, 2, 10, 4, 12, 6, 14, 8, 16),
    23: (1, 5, 9, 13, 3, 7, 11, 15, 2, 6, 10, 14, 4, 8, 12, 16),
    24: (1, 9, 5, 13, 3, 11, 7, 15, 2, 10, 6, 14, 4, 12, 8, 16),
}

TABLES_D4_N3 = {
    1: tuple(range(1, 82)),
    2: (1, 4, 7, 2, 5, 8, 3, 6, 9, 10, 13, 16, 11, 14, 17, 12, 15, 18, 19, 22,
        25, 20, 23, 26, 21, 24, 27, 28, 31, 34, 29, 32, 35, 30, 33, 36, 37, 40, 43, 38,
        41, 44, 39, 42, 45, 46, 49, 52, 47, 50, 53, 48, 51, 54, 55, 58, 61, 56, 59, 62,
        57, 60, 63, 64, 67, 70, 65, 68, 71, 66, 69, 72, 73, 76, 79, 74, 77, 80, 75, 78, 81),
    3: (1, 2, 3, 10, 11, 12, 19, 20, 21, 4, 5, 6, 13, 14, 15, 22, 23, 24, 7, 8,
        9, 16, 17, 18, 25, 26, 27, 28, 29, 30, 37, 38, 39, 46, 47, 48, 31, 32, 33, 40,
        41, 42, 49, 50, 51, 34, 35, 36, 43, 44, 45, 52, 53, 54, 55, 56, 57, 64, 65, 66,
        73, 74, 75, 58, 59, 60, 67, 68, 69, 76, 77, 78, 61, 62, 63, 70, 71, 72, 79, 80, 81),
    4: (1, 10, 19, 2, 11, 20, 3, 12, 21, 4, 13, 22, 5, 14, 23, 6, 15, 24, 7, 16,
        25, 8, 17, 26, 9, 18, 27, 28, 37, 46, 29, 38, 47, 30, 39, 48, 31, 40, 49, 32,
        41, 50, 33, 42, 51, 34, 43, 52, 35, 44, 53, 36, 45, 54, 55, 64, 73, 56, 65, 74,
        57, 66, 75, 58, 67, 76, 59, 68, 77, 60, 69, 78, 61, 70, 79, 62, 71, 80, 63, 72, 81),
    5: (1, 4, 7, 10, 13, 16, 19, 22, 25, 2, 5, 8, 11, 14, 17, 20, 23, 26, 3, 6,
        9, 12, 15, 18, 21, 24, 27, 28, 31, 34, 37, 40, 43, 46, 49, 52, 29, 32, 35, 38,
        41, 44, 47, 50, 53, 30, 33, 36, 39, 42, 45, 48, 51, 54, 55, 58, 61, 64, 67, 70,
        73, 76, 79, 56, 59, 62, 65, 68, 71, 74, 77, 80, 57, 60, 63, 66, 69, 72, 75, 78, 81),
    6: (1, 10, 19, 4, 13, 22, 7, 16, 25, 2, 11, 20, 5, 14, 23, 8, 17, 26, 3, 12,
        21, 6, 15, 24, 9, 18, 27, 28, 37, 46, 31, 40, 49, 34, 43, 52, 29, 38, 47, 32,
        41, 50, 35, 44, 53, 30, 39, 48, 33, 42, 51, 36, 45, 54, 55, 64, 73, 58, 67, 76,
        61, 70, 79, 56, 65, 74, 59, 68, 77, 62, 71, 80, 57, 66, 75, 60, 69, 78, 63, 72, 81),
    7: (1, 2, 3, 4, 5, 6, 7, 8, 9, 28, 29, 30, 31, 32, 33, 34, 35, 36, 55, 56,
        57, 58, 59, 60, 61, 62, 63, 10, 11, 12, 13, 14, 15, 16, 17, 18, 37, 38, 39, 40,
        41, 42, 43, 44, 45, 64, 65, 66, 67, 68, 69, 70, 71, 72, 19, 20, 21, 22, 23, 24,
        25, 26, 27, 46, 47, 48, 49, 50, 51, 52, 53, 54, 73, 74, 75, 76, 77, 78, 79, 80, 81),
    8: (1, 4, 7, 2, 5, 8, 3, 6, 9, 28, 31, 34, 29, 32, 35, 30, 33, 36, 55, 58,
        61, 56, 59, 62, 57, 60, 63, 10, 13, 16, 11, 14, 17, 12, 15, 18, 37, 40, 43, 38,
        41, 44, 39, 42, 45, 64, 67, 70, 65, 68, 71, 66, 69, 72, 19, 22, 25, 20, 23, 26,
        21, 24, 27, 46, 49, 52, 47, 50, 53, 48, 51, 54, 73, 76, 79, 74, 77, 80, 75, 78, 81),
    # Published with the label misprinted as sigma_8.
    9: (1, 2, 3, 28, 29, 30, 55, 56, 57, 4, 5, 6, 31, 32, 33, 58, 59, 60, 7, 8,
        9, 34, 35, 36, 61, 62, 63, 10, 11, 12, 37, 38, 39, 64, 65, 66, 13, 14, 15, 40,
        41, 42, 67, 68, 69, 16, 17, 18, 43, 44, 45, 70, 71, 72, 19, 20, 21, 46, 47, 48,
        73, 74, 75, 22, 23, 24, 49, 50, 51, 76, 77, 78, 25, 26, 27, 52, 53, 54, 79, 80, 81),
    10: (1, 28, 55, 2, 29, 56, 3, 30, 57, 4, 31, 58, 5, 32, 59, 6, 33, 60, 7, 34,
         61, 8, 35, 62, 9, 36, 63, 10, 37, 64, 11, 38, 65, 12, 39, 66, 13, 40, 67, 14,
         41, 68, 15, 42, 69, 16, 43, 70, 17, 44, 71, 18, 45, 72, 19, 46, 73, 20, 47, 74,
         21, 48, 75, 22, 49, 76, 23, 50, 77, 24, 51, 78, 25, 52, 79, 26, 53, 80, 27, 54, 81),
    11: (1, 4, 7, 28, 31, 34, 55, 58, 61, 2, 5, 8, 29, 32, 35, 56, 59, 62, 3, 6,
         9, 30, 33, 36, 57, 60, 63, 10, 13, 16, 37, 40, 43, 64, 67, 70, 11, 14, 17, 38,
         41, 44, 65, 68, 71, 12, 15, 18, 39, 42, 45, 66, 69, 72, 19, 22, 25, 46, 49, 52,
         73, 76, 79, 20, 23, 26, 47, 50, 53, 74, 77, 80, 21, 24, 27, 48, 51, 54, 75, 78, 81),
    12: (1, 28, 55, 4, 31, 58, 7, 34, 61, 2, 29, 56, 5, 32, 59, 8, 35, 62, 3, 30,
         57, 6, 33, 60, 9, 36, 63, 10, 37, 64, 13, 40, 67, 16, 43, 70, 11, 38, 65, 14,
         41, 68, 17, 44, 71, 12, 39, 66, 15, 42, 69, 18, 45, 72, 19, 46, 73, 22, 49, 76,
         25, 52, 79, 20, 47, 74, 23, 50, 77, 26, 53, 80, 21, 48, 75, 24, 51, 78, 27, 54, 81),
    # Published with a garbled, partially repeated run in the middle.
    13: (1, 2, 3, 10, 11, 12, 19, 20, 21, 28, 29, 30, 37, 38, 39, 46, 47, 48, 55, 56,
         57, 64, 65, 66, 73, 74, 75, 4, 5, 6, 13, 14, 15, 22, 23, 24, 31, 32, 56, 57,
         64, 65, 66, 73, 74, 75, 4, 5, 6, 13, 14, 15, 22, 23, 24, 31, 32, 16, 17, 18,
         25, 26, 27, 34, 35, 36, 43, 44, 45, 52, 53, 54, 61, 62, 63, 70, 71, 72, 79, 80, 81),
    14: (1, 10, 19, 2, 11, 20, 3, 12, 21, 28, 37, 46, 29, 38, 47, 30, 39, 48, 55, 64,
         73, 56, 65, 74, 57, 66, 75, 4, 13, 22, 5, 14, 23, 6, 15, 24, 31, 40, 49, 32,
         41, 50, 33, 42, 51, 58, 67, 76, 59, 68, 77, 60, 69, 78, 7, 16, 25, 8, 17, 26,
         9, 18, 27, 34, 43, 52, 35, 44, 53, 36, 45, 54, 61, 70, 79, 62, 71, 80, 63, 72, 81),
    # Published identical to label 14.
    15: (1, 10, 19, 2, 11, 20, 3, 12, 21, 28, 37, 46, 29, 38, 47, 30, 39, 48, 55, 64,
         73, 56, 65, 74, 57, 66, 75, 4, 13, 22, 5, 14, 23, 6, 15, 24, 31, 40, 49, 32,
         41, 50, 33, 42, 51, 58, 67, 76, 59, 68, 77, 60, 69, 78, 7, 16, 25, 8, 17, 26,
         9, 18, 27, 34, 43, 52, 35, 44, 53, 36, 45, 54, 61, 70, 79, 62, 71, 80, 63, 72, 81),
    # Published with the delta subscript misprinted as 16.
    16: (1, 28, 55, 2, 29, 56, 3, 30, 57, 10, 37, 64, 11, 38, 65, 12, 39, 66, 19, 46,
         73, 20, 47, 74, 21, 48, 75, 4, 31, 58, 5, 32, 59, 6, 33, 60, 13, 40, 67, 14,
         41, 68, 15, 42, 69, 22, 49, 76, 23, 50, 77, 24, 51, 78, 7, 34, 61, 8, 35, 62,
         9, 36, 63, 16, 43, 70, 17, 44, 71, 18, 45, 72, 25, 52, 79, 26, 53, 80, 27, 54, 81),
    17: (1, 10, 19, 28, 37, 46, 55, 64, 73, 2, 11, 20, 29, 38, 47, 56, 65, 74, 3, 12,
         21, 30, 39, 48, 57, 66, 75, 4, 13, 22, 31, 40, 49, 58, 67, 76, 5, 14, 23, 32,
         41, 50, 59, 68, 77, 6, 15, 24, 33, 42, 51, 60, 69, 78, 7, 16, 25, 34, 43, 52,
         61, 70, 79, 8, 17, 26, 35, 44, 53, 62, 71, 80, 9, 18, 27, 36, 45, 54, 63, 72, 81),
    18: (1, 28, 55, 10, 37, 64, 19, 46, 73, 2, 29, 56, 11, 38, 65, 20, 47, 74, 3, 30,
         57, 12, 39, 66, 21, 48, 75, 4, 31, 58, 13, 40, 67, 22, 49, 76, 5, 32, 59, 14,
         41, 68, 23, 50, 77, 6, 33, 60, 15, 42, 69, 24, 51, 78, 7, 34, 61, 16, 43, 70,
         25, 52, 79, 8, 35, 62, 17, 44, 71, 26, 53, 80, 9, 36, 63, 18, 45, 72, 27, 54, 81),
    19: (1, 4, 7, 10, 13, 16, 19, 22, 25, 28, 31, 34, 37, 40, 43, 46, 49, 52, 55, 58,
         61, 64, 67, 70, 73, 76, 79, 2, 5, 8, 11, 14, 17, 20, 23, 26, 29, 32, 35, 38,
         41, 44, 47, 50, 53, 56, 59, 62, 65, 68, 71, 74, 77, 80, 3, 6, 9, 12, 15, 18,
         21, 24, 27, 30, 33, 36, 39, 42, 45, 48, 51, 54, 57, 60, 63, 66, 69, 72, 75, 78, 81),
    20: (1, 10, 19, 4, 13, 22, 7, 16, 25, 28, 37, 46, 31, 40, 49, 34, 43, 52, 55, 64,
         73, 58, 67, 76, 61, 70, 79, 2, 11, 20, 5, 14, 23, 8, 17, 26, 29, 38, 47, 32,
         41, 50, 35, 44, 53, 56, 65, 74, 59, 68, 77, 62, 71, 80, 3, 12, 21, 6, 15, 24,
         9, 18, 27, 30, 39, 48, 33, 42, 51, 36, 45, 54, 57, 66, 75, 60, 69, 78, 63, 72, 81),
    21: (1, 4, 7, 28, 31, 34, 55, 58, 61, 10, 13, 16, 37, 40, 43, 64, 67, 70, 19, 22,
         25, 46, 49, 52, 73, 76, 79, 2, 5, 8, 29, 32, 35, 56, 59, 62, 11, 14, 17, 38,
         41, 44, 65, 68, 71, 20, 23, 26, 47, 50, 53, 74, 77, 80, 3, 6, 9, 30, 33, 36,
         57, 60, 63, 12, 15, 18, 39, 42, 45, 66, 69, 72, 21, 24, 27, 48, 51, 54, 75, 78, 81),
    22: (1, 28, 55, 4, 31, 58, 7, 34, 61, 10, 37, 64, 13, 40, 67, 16, 43, 70, 19, 46,
         73, 22, 49, 76, 25, 52, 79, 2, 29, 56, 5, 32, 59, 8, 35, 62, 11, 38, 65, 14,
         41, 68, 17, 44, 71, 20, 47, 74, 23, 50, 77, 26, 53, 80, 3, 30, 57, 6, 33, 60,
         9, 36, 63, 12, 39, 66, 15, 42, 69, 18, 45, 72, 21, 48, 75, 24, 51, 78, 27, 54, 81),
    23: (1, 10, 19, 28, 37, 46, 55, 64, 73, 4, 13, 22, 31, 40, 49, 58, 67, 76, 7, 16,
         25, 34, 43, 52, 61, 70, 79, 2, 11, 20, 29, 38, 47, 56, 65, 74, 5, 14, 23, 32,
         41, 50, 59, 68, 77, 8, 17, 26, 35, 44, 53, 62, 71, 80, 3, 12, 21, 30, 39, 48,
         57, 66, 75, 6, 15, 24, 33, 42, 51, 60, 69, 78, 9, 18, 27, 36, 45, 54, 63, 72, 81),
    24: (1, 28, 55, 10, 37, 64, 19, 46, 73, 4, 31, 58, 13, 40, 67, 22, 49, 76, 7, 34,
         61, 16, 43, 70, 25, 52, 79, 2, 29, 56, 11, 38, 65, 20, 47, 74, 5, 32, 59, 14,
         41, 68, 23, 50, 77, 8, 35, 62, 17, 44, 71, 26, 53, 80, 3, 30, 57, 12, 39, 66,
         21, 48, 75, 6, 33, 60, 15, 42, 69, 24, 51, 78, 9, 36, 63, 18, 45, 72, 27, 54, 81),
}

# Worked tables for the mixed shape (2, 3, 5); same label order as SIGMA_D3.
EXAMPLE_235_TABLES = {
    1: tuple(range(1, 31)),
    2: (1, 4, 7, 10, 13, 2, 5, 8, 11, 14, 3, 6, 9, 12, 15,
        16, 19, 22, 25, 28, 17, 20, 23, 26, 29, 18, 21, 24, 27, 30),
    3: (1, 2, 3, 4, 5, 11, 12, 13, 14, 15, 21, 22, 23, 24, 25,
        6, 7, 8, 9, 10, 16, 17, 18, 19, 20, 26, 27, 28, 29, 30),
    4: (1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29,
        2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 26, 28, 30),
    5: (1, 7, 13, 19, 25, 2, 8, 14, 20, 26, 3, 9, 15, 21, 27,
        4, 10, 16, 22, 28, 5, 11, 17, 23, 29, 6, 12, 18, 24, 30),
    6: (1, 7, 13, 19, 25, 3, 9, 15, 21, 27, 5, 11, 17, 23, 29,
        2, 8, 14, 20, 26, 4, 10, 16, 22, 28, 6, 12, 18, 24, 30),
}

# (d, n) -> {label: published column indices}
APPENDIX_TABLES = {
    (3, 2): TABLES_D3_N2,
    (3, 3): TABLES_D3_N3,
    (3, 4): TABLES_D3_N4,
    (4, 2): TABLES_D4_N2,
    (4, 3): TABLES_D4_N3,
}

SIGMA_BY_D = {3: SIGMA_D3, 4: SIGMA_D4}
