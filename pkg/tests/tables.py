"""Reference Cayley tables (rows list x.0 ... x.(n-1))."""

TABLE1 = (
    (0, 0, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 0),
    (2, 1, 0, 0, 0, 0),
    (3, 1, 1, 0, 0, 0),
    (4, 2, 1, 1, 0, 1),
    (5, 3, 2, 1, 1, 0),
)

TABLE2 = (
    (0, 0, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 0),
    (2, 2, 0, 0, 0, 0),
    (3, 2, 1, 0, 1, 1),
    (4, 4, 4, 4, 0, 0),
    (5, 4, 4, 4, 1, 0),
)

# lemma2 construction, n = 5
TABLE3 = (
    (0, 0, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 0),
    (2, 1, 0, 0, 0, 0),
    (3, 1, 1, 0, 0, 0),
    (4, 2, 1, 1, 0, 1),
    (5, 3, 2, 1, 1, 0),
)

# lemma2 construction, n = 6
TABLE4 = (
    (0, 0, 0, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 0, 0),
    (2, 1, 0, 0, 0, 0, 0),
    (3, 1, 1, 0, 0, 0, 0),
    (4, 2, 1, 1, 0, 0, 0),
    (5, 3, 2, 1, 1, 0, 1),
    (6, 4, 3, 2, 1, 1, 0),
)
