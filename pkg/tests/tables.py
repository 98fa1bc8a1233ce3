"""Published per-diameter tables for the Petersen graph, frozen for tests.

Each entry maps a collection of odd constant terms (sorted) to
(number of permutations, (diameter, girth)).
"""

PETERSEN_TABLES = {
    2: {(5, 5, 5, 5, 5, 5): (1, (2, 5))},
    3: {(5, 7, 7, 7, 7, 7): (6, (3, 5))},
    4: {
        (5, 9, 9, 9, 9, 9): (6, (4, 5)),
        (7, 7, 9, 9, 9, 9): (15, (4, 7)),
    },
    5: {
        (5, 11, 11, 11, 11, 11): (6, (5, 5)),
        (9, 9, 9, 11, 11, 11): (20, (5, 9)),
        (7, 9, 11, 11, 11, 11): (30, (5, 7)),
    },
    6: {
        (5, 13, 13, 13, 13, 13): (6, (6, 5)),
        (9, 9, 13, 13, 13, 13): (15, (6, 9)),
        (11, 11, 11, 11, 13, 13): (15, (6, 11)),
        (7, 11, 13, 13, 13, 13): (30, (6, 7)),
        (9, 11, 11, 13, 13, 13): (60, (6, 9)),
    },
    7: {
        (5, 15, 15, 15, 15, 15): (6, (7, 5)),
        (13, 13, 13, 13, 13, 15): (6, (7, 13)),
        (7, 13, 15, 15, 15, 15): (30, (7, 7)),
        (9, 11, 15, 15, 15, 15): (30, (7, 9)),
        (9, 13, 13, 15, 15, 15): (60, (7, 9)),
        (11, 13, 13, 13, 15, 15): (60, (7, 11)),
        (11, 11, 13, 15, 15, 15): (60, (7, 11)),
    },
}

PETERSEN_RECORDS = {2: 1, 3: 6, 4: 21, 5: 56, 6: 126, 7: 252}
PETERSEN_ORBITS = {2: 1, 3: 1, 4: 2, 5: 3, 6: 5, 7: 7}
