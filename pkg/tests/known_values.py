"""Hand-checked reference values used across the test suite.

``NEUMANN_ROWS``: the labelled Neumann spectrum of the square of side pi up
to eigenvalue 146, one row per ordered index pair: (i, j, i**2 + j**2,
label_lo, label_hi).  Independently recomputable by enumerating integer
pairs and ranking the sums of squares.

``PLEIJEL_LIST``: the classical elimination list quoted for the
Faber-Krahn/Pleijel rule at h = 0 over labels <= 208.
"""

NEUMANN_ROWS = [
    (0, 0, 0, 1, 1),
    (1, 0, 1, 2, 3),
    (0, 1, 1, 2, 3),
    (1, 1, 2, 4, 4),
    (2, 0, 4, 5, 6),
    (0, 2, 4, 5, 6),
    (2, 1, 5, 7, 8),
    (1, 2, 5, 7, 8),
    (2, 2, 8, 9, 9),
    (3, 0, 9, 10, 11),
    (0, 3, 9, 10, 11),
    (3, 1, 10, 12, 13),
    (1, 3, 10, 12, 13),
    (3, 2, 13, 14, 15),
    (2, 3, 13, 14, 15),
    (4, 0, 16, 16, 17),
    (0, 4, 16, 16, 17),
    (4, 1, 17, 18, 19),
    (1, 4, 17, 18, 19),
    (3, 3, 18, 20, 20),
    (4, 2, 20, 21, 22),
    (2, 4, 20, 21, 22),
    (5, 0, 25, 23, 26),
    (0, 5, 25, 23, 26),
    (4, 3, 25, 23, 26),
    (3, 4, 25, 23, 26),
    (5, 1, 26, 27, 28),
    (1, 5, 26, 27, 28),
    (5, 2, 29, 29, 30),
    (2, 5, 29, 29, 30),
    (4, 4, 32, 31, 31),
    (5, 3, 34, 32, 33),
    (3, 5, 34, 32, 33),
    (6, 0, 36, 34, 35),
    (0, 6, 36, 34, 35),
    (6, 1, 37, 36, 37),
    (1, 6, 37, 36, 37),
    (6, 2, 40, 38, 39),
    (2, 6, 40, 38, 39),
    (5, 4, 41, 40, 41),
    (4, 5, 41, 40, 41),
    (6, 3, 45, 42, 43),
    (3, 6, 45, 42, 43),
    (7, 0, 49, 44, 45),
    (0, 7, 49, 44, 45),
    (7, 1, 50, 46, 48),
    (5, 5, 50, 46, 48),
    (1, 7, 50, 46, 48),
    (6, 4, 52, 49, 50),
    (4, 6, 52, 49, 50),
    (7, 2, 53, 51, 52),
    (2, 7, 53, 51, 52),
    (7, 3, 58, 53, 54),
    (3, 7, 58, 53, 54),
    (6, 5, 61, 55, 56),
    (5, 6, 61, 55, 56),
    (8, 0, 64, 57, 58),
    (0, 8, 64, 57, 58),
    (8, 1, 65, 59, 62),
    (1, 8, 65, 59, 62),
    (7, 4, 65, 59, 62),
    (4, 7, 65, 59, 62),
    (8, 2, 68, 63, 64),
    (2, 8, 68, 63, 64),
    (6, 6, 72, 65, 65),
    (8, 3, 73, 66, 67),
    (3, 8, 73, 66, 67),
    (7, 5, 74, 68, 69),
    (5, 7, 74, 68, 69),
    (8, 4, 80, 70, 71),
    (4, 8, 80, 70, 71),
    (9, 0, 81, 72, 73),
    (0, 9, 81, 72, 73),
    (9, 1, 82, 74, 75),
    (1, 9, 82, 74, 75),
    (9, 2, 85, 76, 79),
    (2, 9, 85, 76, 79),
    (7, 6, 85, 76, 79),
    (6, 7, 85, 76, 79),
    (8, 5, 89, 80, 81),
    (5, 8, 89, 80, 81),
    (9, 3, 90, 82, 83),
    (3, 9, 90, 82, 83),
    (9, 4, 97, 84, 85),
    (4, 9, 97, 84, 85),
    (7, 7, 98, 86, 86),
    (10, 0, 100, 87, 90),
    (0, 10, 100, 87, 90),
    (8, 6, 100, 87, 90),
    (6, 8, 100, 87, 90),
    (10, 1, 101, 91, 92),
    (1, 10, 101, 91, 92),
    (10, 2, 104, 93, 94),
    (2, 10, 104, 93, 94),
    (9, 5, 106, 95, 96),
    (5, 9, 106, 95, 96),
    (10, 3, 109, 97, 98),
    (3, 10, 109, 97, 98),
    (8, 7, 113, 99, 100),
    (7, 8, 113, 99, 100),
    (10, 4, 116, 101, 102),
    (4, 10, 116, 101, 102),
    (9, 6, 117, 103, 104),
    (6, 9, 117, 103, 104),
    (11, 0, 121, 105, 106),
    (0, 11, 121, 105, 106),
    (11, 1, 122, 107, 108),
    (1, 11, 122, 107, 108),
    (11, 2, 125, 109, 112),
    (2, 11, 125, 109, 112),
    (10, 5, 125, 109, 112),
    (5, 10, 125, 109, 112),
    (8, 8, 128, 113, 113),
    (11, 3, 130, 114, 117),
    (3, 11, 130, 114, 117),
    (9, 7, 130, 114, 117),
    (7, 9, 130, 114, 117),
    (10, 6, 136, 118, 119),
    (6, 10, 136, 118, 119),
    (11, 4, 137, 120, 121),
    (4, 11, 137, 120, 121),
    (12, 0, 144, 122, 123),
    (0, 12, 144, 122, 123),
    (12, 1, 145, 124, 127),
    (9, 8, 145, 124, 127),
    (8, 9, 145, 124, 127),
    (1, 12, 145, 124, 127),
    (11, 5, 146, 128, 129),
    (5, 11, 146, 128, 129),
]

PLEIJEL_LIST = (
    {86, 95, 96, 99, 100, 103, 104, 113, 118, 119, 120, 121}
    | set(range(128, 143))
    | set(range(147, 209))
)
