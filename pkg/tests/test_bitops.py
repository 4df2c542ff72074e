import random

from shisen.bitops import (
    M64,
    fill_range_bitscan,
    fill_range_cascade,
    negation_of_leading_bit,
    new_tree,
    ortree_or,
    ortree_update,
    ortree_write,
)

from oracles import fill_range_oracle, ortree_or_oracle

BOTH = (fill_range_bitscan, fill_range_cascade)

# hand-computed gap masks
FROZEN = [
    (0, 0, M64),
    (0, 63, M64),
    (0b1001, 1, 0b0110),
    (0b101, 1, 0b010),
    (1, 5, M64 - 1),
    (1 << 63, 10, (1 << 63) - 1),
    ((1 << 10) | (1 << 20), 15, 0xFF800),
    ((1 << 10) | (1 << 20), 21, M64 ^ ((1 << 21) - 1)),
    ((1 << 10) | (1 << 20), 3, (1 << 10) - 1),
]


def test_fill_range_frozen_cases():
    for f, p, want in FROZEN:
        for impl in BOTH:
            assert impl(f, p) == want, (impl.__name__, f, p)


def _random_clear_bit(rng, f):
    clear = ~f & M64
    bits = [b for b in range(64) if clear >> b & 1]
    return rng.choice(bits)


def test_fill_range_matches_scan_oracle():
    rng = random.Random(1234)
    for _ in range(20000):
        f = rng.getrandbits(64) & rng.getrandbits(64)
        p = _random_clear_bit(rng, f)
        want = fill_range_oracle(f, p)
        assert fill_range_bitscan(f, p) == want
        assert fill_range_cascade(f, p) == want


def test_leading_bit_table():
    literal = (
        [-1, -1, -2, -2]
        + [-4] * 4
        + [-8] * 8
        + [-16] * 16
        + [-32] * 32
        + [-64] * 64
    )
    assert negation_of_leading_bit == literal
    for i in range(1, 128):
        top = 1
        while top * 2 <= i:
            top *= 2
        assert negation_of_leading_bit[i] == -top


def _valid_query(rng):
    while True:
        p1 = rng.randrange(64)
        p2 = rng.randrange(64)
        if p1 > p2:
            p1, p2 = p2, p1
        if p1 >= 1 or p2 <= 31:
            return p1, p2


def test_ortree_random_queries_match_naive():
    rng = random.Random(99)
    fill = new_tree()
    for step in range(4000):
        line = rng.randrange(64)
        value = rng.getrandbits(64) if step % 3 else 0
        ortree_write(fill, line, value)
        p1, p2 = _valid_query(rng)
        assert ortree_or(fill, p1, p2) == ortree_or_oracle(fill, p1, p2)


def test_ortree_empty_range_is_zero():
    fill = new_tree()
    for line in range(64):
        ortree_write(fill, line, M64)
    for p in range(64):
        assert ortree_or(fill, p, p) == 0


def test_ortree_update_entry_points():
    # ortree_update takes the written leaf's array index, odd by construction
    rng = random.Random(5)
    fill = new_tree()
    for _ in range(500):
        line = rng.randrange(64)
        p = 2 * line + 1
        fill[p] = rng.getrandbits(64)
        ortree_update(fill, p)
    for p1 in range(1, 64):
        for p2 in range(p1, 64):
            assert ortree_or(fill, p1, p2) == ortree_or_oracle(fill, p1, p2)
