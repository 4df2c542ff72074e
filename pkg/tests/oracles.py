"""Slow reference implementations the fast code is checked against.

Everything in here favors obviousness over speed: per-bit loops, BFS over
grid cells, exhaustive search without pruning.
"""

M64 = (1 << 64) - 1


def fill_range_oracle(f, p):
    """Gap around clear bit p of f, by walking one bit at a time."""
    assert not f >> p & 1
    lo = p
    while lo > 0 and not f >> (lo - 1) & 1:
        lo -= 1
    hi = p
    while hi < 63 and not f >> (hi + 1) & 1:
        hi += 1
    mask = 0
    for b in range(lo, hi + 1):
        mask |= 1 << b
    return mask


def ortree_or_oracle(fill, p1, p2):
    """OR of stored lines p1..p2-1 read leaf by leaf."""
    f = 0
    for line in range(p1, p2):
        f |= fill[2 * line + 1]
    return f


def occupied_cells(bd):
    """Set of (level, row, col) cells under tiles, straight from bd.occ."""
    cells = set()
    for s in range(len(bd.occ)):
        if bd.occ[s]:
            r, c, lev = bd.rows[s], bd.cols[s], bd.levs[s]
            for dr in (0, 1):
                for dc in (0, 1):
                    cells.add((lev, r + dr, c + dc))
    return cells


def box_cells(bd, s):
    r, c = bd.rows[s], bd.cols[s]
    return [(r, c), (r, c + 1), (r + 1, c), (r + 1, c + 1)]


def pillar_clear_oracle(bd, cells, s):
    for lev in range(bd.levs[s] + 1, 16):
        for r, c in box_cells(bd, s):
            if (lev, r, c) in cells:
                return False
    return True


def _planar_path_exists(bd, cells, lev, starts, ends, max_segments):
    """Axis-aligned path of at most max_segments straight runs through
    empty cells from one box to the other, found by layered ray walks."""
    if bd.border_paths:
        lo_r = lo_c = 0
        hi_r = hi_c = 63
    else:
        lo_r, lo_c, hi_r, hi_c = bd.layout.bbox()

    def passable(r, c):
        return (lo_r <= r <= hi_r and lo_c <= c <= hi_c
                and (lev, r, c) not in cells)

    ends = set(ends)
    frontier = list(starts)
    seen = set()
    for _ in range(max_segments):
        gained = []
        for r, c in frontier:
            for dr, dc in ((0, 1), (0, -1), (1, 0), (-1, 0)):
                rr, cc = r + dr, c + dc
                while passable(rr, cc):
                    if (rr, cc) not in seen:
                        seen.add((rr, cc))
                        gained.append((rr, cc))
                    rr += dr
                    cc += dc
                if (rr, cc) in ends:
                    return True
        frontier = gained
    return False


def mahjong_free_oracle(bd, cells, s, transposed=False, adjacent=False):
    lev, r, c = bd.levs[s], bd.rows[s], bd.cols[s]
    tops = range(lev + 1, lev + 2) if adjacent else range(lev + 1, 16)
    for up in tops:
        for rr, cc in box_cells(bd, s):
            if (up, rr, cc) in cells:
                return False
    if transposed:
        sides = ([(r - 1, c), (r - 1, c + 1)], [(r + 2, c), (r + 2, c + 1)])
    else:
        sides = ([(r, c - 1), (r + 1, c - 1)], [(r, c + 2), (r + 1, c + 2)])
    for side in sides:
        if all((lev, rr, cc) not in cells for rr, cc in side):
            return True
    return False


def shisen_pair_oracle(bd, cells, a, b):
    """Definition-level shisen test: clear pillars, then a path of at most
    three segments (cross-level pairs spend one on the pillar lift).  The
    lower tile's pillar may contain the partner itself: both leave at once."""
    la, lb = bd.levs[a], bd.levs[b]
    if la == lb:
        if not pillar_clear_oracle(bd, cells, a):
            return False
        if not pillar_clear_oracle(bd, cells, b):
            return False
        return _planar_path_exists(bd, cells, la, box_cells(bd, a),
                                   box_cells(bd, b), 3)
    low, high = (a, b) if la < lb else (b, a)
    if not pillar_clear_oracle(bd, cells, high):
        return False
    high_cells = {(bd.levs[high], r, c) for r, c in box_cells(bd, high)}
    if not pillar_clear_oracle(bd, cells - high_cells, low):
        return False
    return _planar_path_exists(bd, cells, bd.levs[high], box_cells(bd, low),
                               box_cells(bd, high), 2)
