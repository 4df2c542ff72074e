"""64-bit population vectors and interlaced OR-trees.

The playing field is a 64x64 grid of half-tile cells.  Occupancy along one
grid line is a single 64-bit integer (bit c set = cell c occupied).  The
lines of one level are kept in a 128-entry array: line k lives at index
2k+1, and the even indices cache ORs of whole line ranges, forming a binary
tree interlaced with its own leaves.  Node n at height h (n divisible by
2^h but not 2^(h+1)) covers leaves n-2^h+1 .. n+2^h-1.

Only four internal levels are kept up to date; nodes 32, 64 and 96 are
never written and never read, because range queries here always have
p1 >= 1 or p2 <= 31 (the playing field keeps a one-cell empty margin, so
no real query starts at line 0).
"""

import os

M64 = (1 << 64) - 1


def fill_range_bitscan(f, p):
    """Bits of the maximal gap of f around clear position p.

    Returns a mask whose set bits are exactly the contiguous run of clear
    bits of f containing position p, extended to the register edges when
    no set bit is in the way.  Bit p of f must be clear; 0 <= p <= 63.
    """
    assert 0 <= p <= 63 and not f >> p & 1
    g = f & ((1 << p) - 1)
    if g == 0:
        return ~f & (f - 1) & M64
    g = 2 << g.bit_length() - 1
    return ~f & (f - g) & M64


def fill_range_cascade(f, p):
    """Same contract as fill_range_bitscan, without a bit-scan primitive."""
    assert 0 <= p <= 63 and not f >> p & 1
    g = f & ((1 << p) - 1)
    if g == 0:
        return ~f & (f - 1) & M64
    g |= g >> 1
    g |= g >> 2
    g |= g >> 4
    g |= g >> 8
    g |= g >> 16
    g |= g >> 32
    g += 1
    return ~f & (f - g) & M64


# Both implementations are kept live and tested; SHISEN_FILL_RANGE=cascade
# switches the one the package binds at import time.
if os.environ.get("SHISEN_FILL_RANGE") == "cascade":
    fill_range = fill_range_cascade
else:
    fill_range = fill_range_bitscan


def new_tree():
    """Empty line array: 64 lines at odd indices, OR cache at even ones."""
    return [0] * 128


def ortree_update(fill, p):
    """Refresh the internal nodes above leaf index p (odd) after a write.

    Touches one node per maintained level; the top two levels of the full
    tree are skipped on purpose (see module docstring).
    """
    p &= -4
    fill[p + 2] = fill[p + 1] | fill[p + 3]
    p &= -8
    fill[p + 4] = fill[p + 2] | fill[p + 6]
    p &= -16
    fill[p + 8] = fill[p + 4] | fill[p + 12]
    p &= -32
    fill[p + 16] = fill[p + 8] | fill[p + 24]


def ortree_write(fill, line, value):
    """Store a line and refresh the cache above it."""
    p = 2 * line + 1
    fill[p] = value
    ortree_update(fill, p)


# negation_of_leading_bit[i] = -2**floor(log2(i)), and -1 for i = 0.
negation_of_leading_bit = [-1] + [-(1 << i.bit_length() - 1) for i in range(1, 128)]


def ortree_or(fill, p1, p2):
    """OR of lines p1 .. p2-1 (leaves 2*p1+1 .. 2*p2-1); 0 when p1 == p2.

    Requires 0 <= p1 <= p2 <= 63 and (p1 >= 1 or p2 <= 31): queries that
    start at line 0 and cross line 32 would read a node that is never
    maintained.
    """
    assert 0 <= p1 <= p2 <= 63 and (p1 >= 1 or p2 <= 31)
    p = p2 & negation_of_leading_bit[p1 ^ p2]
    base = 2 * p
    f = 0
    p1 -= p
    while p1:
        s = p1 & -p1
        f |= fill[base + 2 * p1 + s]
        p1 += s
    p2 -= p
    while p2:
        s = p2 & -p2
        p2 -= s
        f |= fill[base + 2 * p2 + s]
    return f
