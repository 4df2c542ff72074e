"""Pair playability: shisen connections and mahjong freedom.

Shisen: two same-face tiles may be removed when an axis-aligned path of at
most three segments joins their boxes through empty cells.  On multi-level
boards both tiles also need a fully clear pillar above, and a pair on
different levels spends one segment on the lift: the lower tile connects
straight up to its partner's level and continues with at most two planar
segments that start over its own box.

The test runs once in the row world (middle segment vertical) and once in
the column world (middle segment horizontal).  Per world it costs two to
four gap lookups per tile plus one OR-tree range query, so it is
logarithmic in board size rather than a path search.

Mahjong: a tile is free when its level above is clear (whole pillar by
default, the adjacent level only under adjacent_above) and it can slide
out left or right; the transposed rule slides up or down instead.
"""

from dataclasses import dataclass

from .bitops import fill_range, ortree_or


@dataclass(frozen=True)
class Rule:
    kind: str                    # shisen | mahjong | mahjong_transposed
    above: str = "pillar_above"  # pillar_above | adjacent_above

    def __post_init__(self):
        if self.kind not in ("shisen", "mahjong", "mahjong_transposed"):
            raise ValueError(f"unknown rule kind {self.kind!r}")
        if self.above not in ("pillar_above", "adjacent_above"):
            raise ValueError(f"unknown above variant {self.above!r}")

    @property
    def transposed(self):
        return self.kind == "mahjong_transposed"

    @property
    def adjacent(self):
        return self.above == "adjacent_above"

    def key(self):
        text = {"shisen": "shisen", "mahjong": "mahjong",
                "mahjong_transposed": "mahjong-t"}[self.kind]
        if self.kind != "shisen" and self.adjacent:
            text += ":adjacent"
        return text


SHISEN = Rule("shisen")
MAHJONG = Rule("mahjong")
MAHJONG_T = Rule("mahjong_transposed")


def parse_rule(text):
    name, _, variant = text.partition(":")
    kind = {"shisen": "shisen", "mahjong": "mahjong",
            "mahjong-t": "mahjong_transposed",
            "mahjong_transposed": "mahjong_transposed"}.get(name)
    if kind is None:
        raise ValueError(f"unknown rule {text!r}")
    if not variant:
        return Rule(kind)
    if kind == "shisen":
        raise ValueError("shisen has no above variant")
    return Rule(kind, variant)


def pillar_above_clear(bd, s):
    p = bd.pillar
    i = (bd.rows[s] << 6) + bd.cols[s]
    return (p[i] | p[i + 1] | p[i + 64] | p[i + 65]) >> bd.levs[s] + 1 == 0


def _pillar_clear_except(bd, s, partner):
    """Pillar above s clear apart from partner's own cells; a stacked pair
    removes both tiles at once, so the partner does not block the lift."""
    shift = bd.levs[s] + 1
    pbit = 1 << bd.levs[partner] - shift
    pr, pc = bd.rows[partner], bd.cols[partner]
    p = bd.pillar
    r, c = bd.rows[s], bd.cols[s]
    for rr in (r, r + 1):
        for cc in (c, c + 1):
            m = p[(rr << 6) + cc] >> shift
            if pr <= rr <= pr + 1 and pc <= cc <= pc + 1:
                m &= ~pbit
            if m:
                return False
    return True


def _pillars_ok(bd, a, b):
    """Lift preconditions for a shisen pair, partner-aware."""
    if bd.levs[a] == bd.levs[b]:
        return pillar_above_clear(bd, a) and pillar_above_clear(bd, b)
    low, high = (a, b) if bd.levs[a] < bd.levs[b] else (b, a)
    if not pillar_above_clear(bd, high):
        return False
    return (pillar_above_clear(bd, low)
            or _pillar_clear_except(bd, low, high))


def _axis_cand(t, wall, r1, c1, r2, c2, ov1, ov2):
    """Middle-segment positions (bitmask) for one world.

    t holds the stored lines of one level, wall the blocked positions when
    border paths are off.  An ov mask replaces that side's reachable runs
    with its own box; the cross-level probe passes the lower tile that way.
    Sides are normalized so r1 <= r2.
    """
    if r2 < r1:
        r1, c1, r2, c2, ov1, ov2 = r2, c2, r1, c1, ov2, ov1
    d = r2 - r1
    if d >= 3:
        if ov1 is None:
            sa = t[2 * r1 + 1] & ~(3 << c1)
            u = (fill_range(t[2 * r1 - 1] | sa | wall, c1)
                 | fill_range(sa | t[2 * r1 + 3] | wall, c1))
        else:
            u = ov1
        if ov2 is None:
            sb = t[2 * r2 + 1] & ~(3 << c2)
            v = (fill_range(t[2 * r2 - 1] | sb | wall, c2)
                 | fill_range(sb | t[2 * r2 + 3] | wall, c2))
        else:
            v = ov2
        cand = u & v
        if not cand:
            return 0
        return cand & ~ortree_or(t, r1 + 1, r2)
    if d == 2:
        mid = t[2 * r1 + 3]
        if ov1 is None:
            sa = t[2 * r1 + 1] & ~(3 << c1)
            u = (fill_range(sa | mid | wall, c1)
                 | (fill_range(t[2 * r1 - 1] | sa | wall, c1) & ~mid))
        else:
            u = ov1
        if ov2 is None:
            sb = t[2 * r2 + 1] & ~(3 << c2)
            v = (fill_range(mid | sb | wall, c2)
                 | (fill_range(sb | t[2 * r2 + 3] | wall, c2) & ~mid))
        else:
            v = ov2
        return u & v
    if d == 1:
        sa = t[2 * r1 + 1] & ~(3 << c1)
        sm = t[2 * r2 + 1] & ~(3 << c2)
        shared = sa | sm | wall
        if ov1 is None:
            u = (fill_range(t[2 * r1 - 1] | sa | wall, c1)
                 | fill_range(shared, c1))
        else:
            u = ov1
        if ov2 is None:
            v = (fill_range(shared, c2)
                 | fill_range(sm | t[2 * r2 + 3] | wall, c2))
        else:
            v = ov2
        return u & v
    # d == 0
    so = t[2 * r1 + 1] & ~(3 << c1) & ~(3 << c2)
    f1 = t[2 * r1 - 1] | so | wall
    f2 = so | t[2 * r1 + 3] | wall
    u = ov1 if ov1 is not None else fill_range(f1, c1) | fill_range(f2, c1)
    v = ov2 if ov2 is not None else fill_range(f1, c2) | fill_range(f2, c2)
    return u & v


def _connect(bd, a, b):
    """Geometric connection test; both pillars must already be clear."""
    ra, ca, la = bd.rows[a], bd.cols[a], bd.levs[a]
    rb, cb, lb = bd.rows[b], bd.cols[b], bd.levs[b]
    if la == lb:
        if _axis_cand(bd.row_trees[la], bd.wall_rows, ra, ca, rb, cb, None, None):
            return True
        return _axis_cand(bd.col_trees[la], bd.wall_cols, ca, ra, cb, rb, None, None) != 0
    if la > lb:
        ra, ca, rb, cb = rb, cb, ra, ca
        lb = la
    if _axis_cand(bd.row_trees[lb], bd.wall_rows, ra, ca, rb, cb, 3 << ca, None):
        return True
    return _axis_cand(bd.col_trees[lb], bd.wall_cols, ca, ra, cb, rb, 3 << ra, None) != 0


def shisen_pair_playable(bd, a, b):
    return _pillars_ok(bd, a, b) and _connect(bd, a, b)


def mahjong_free(bd, s, transposed=False, adjacent=False):
    p = bd.pillar
    lev = bd.levs[s]
    i = (bd.rows[s] << 6) + bd.cols[s]
    above = (p[i] | p[i + 1] | p[i + 64] | p[i + 65]) >> lev + 1
    if adjacent:
        above &= 1
    if above:
        return False
    bit = 1 << lev
    if transposed:
        if (p[i - 64] | p[i - 63]) & bit == 0:
            return True
        return (p[i + 128] | p[i + 129]) & bit == 0
    if (p[i - 1] | p[i + 63]) & bit == 0:
        return True
    return (p[i + 2] | p[i + 66]) & bit == 0


def pair_playable(bd, rule, a, b):
    """Rule-legal removal test for two distinct occupied same-face slots."""
    if rule.kind == "shisen":
        return shisen_pair_playable(bd, a, b)
    tr = rule.transposed
    adj = rule.adjacent
    return (mahjong_free(bd, a, tr, adj) and mahjong_free(bd, b, tr, adj))


def move_legal(bd, rule, a, b):
    """(True, None) or (False, reason) with a stable reason string."""
    if a == b or not (bd.occ[a] and bd.occ[b]):
        return False, "not-a-pair"
    if bd.slot_group[a] != bd.slot_group[b]:
        return False, "not-same-face"
    if rule.kind == "shisen":
        if not _pillars_ok(bd, a, b):
            return False, "blocked"
        if not _connect(bd, a, b):
            return False, "no-connection"
        return True, None
    tr = rule.transposed
    adj = rule.adjacent
    if not (mahjong_free(bd, a, tr, adj) and mahjong_free(bd, b, tr, adj)):
        return False, "blocked"
    return True, None


def playable_pairs(bd, rule):
    """All rule-legal pairs, groups ascending, slot indices ascending."""
    out = []
    occ = bd.occ
    if rule.kind == "shisen":
        for g, members in enumerate(bd.group_slots):
            if bd.remaining[g] < 2:
                continue
            alive = [s for s in members if occ[s]]
            for i, a in enumerate(alive):
                for b in alive[i + 1:]:
                    if _pillars_ok(bd, a, b) and _connect(bd, a, b):
                        out.append((a, b))
        out.sort()
        return out
    tr = rule.transposed
    adj = rule.adjacent
    for g, members in enumerate(bd.group_slots):
        if bd.remaining[g] < 2:
            continue
        free = [s for s in members if occ[s] and mahjong_free(bd, s, tr, adj)]
        for i, a in enumerate(free):
            for b in free[i + 1:]:
                out.append((a, b))
    out.sort()
    return out


def cell_occupied(bd, lev, r, c):
    return bd.pillar[(r << 6) + c] >> lev & 1


@dataclass(frozen=True)
class Connection:
    """Witness path as cell-center points (level, row, col); the first and
    last points lie inside the two tiles, a leading level change is the
    pillar segment of a cross-level pair."""
    points: tuple


def validate_connection(bd, a, b, conn):
    """Re-check a witness cell by cell against the current position."""
    pts = conn.points
    if len(pts) < 2 or len(pts) > 5:
        return False

    def in_box(pt, s):
        lev, r, c = pt
        return (lev == bd.levs[s] and bd.rows[s] <= r <= bd.rows[s] + 1
                and bd.cols[s] <= c <= bd.cols[s] + 1)

    lo, hi = (a, b) if bd.levs[a] <= bd.levs[b] else (b, a)
    if in_box(pts[0], lo) and in_box(pts[-1], hi):
        pass
    elif in_box(pts[0], hi) and in_box(pts[-1], lo):
        pts = tuple(reversed(pts))
    else:
        return False
    planar = pts
    if bd.levs[a] != bd.levs[b]:
        # leading pillar: same cell, rising level, full box clear on the way
        (l0, r0, c0), (l1, r1, c1) = pts[0], pts[1]
        if (r0, c0) != (r1, c1) or l1 != bd.levs[hi] or l0 != bd.levs[lo]:
            return False
        br, bc = bd.rows[lo], bd.cols[lo]
        hr, hc = bd.rows[hi], bd.cols[hi]
        for lev in range(l0 + 1, l1 + 1):
            for r in (br, br + 1):
                for c in (bc, bc + 1):
                    if lev == l1 and hr <= r <= hr + 1 and hc <= c <= hc + 1:
                        continue  # the partner itself
                    if cell_occupied(bd, lev, r, c):
                        return False
        planar = pts[1:]
    if len(planar) - 1 > 3 - (1 if bd.levs[a] != bd.levs[b] else 0):
        return False
    lev = planar[0][0]
    for pt in planar:
        if pt[0] != lev:
            return False
    # interior corner cells and strictly-between cells must be empty
    for (_, r1, c1), (_, r2, c2) in zip(planar, planar[1:]):
        if r1 != r2 and c1 != c2:
            return False
        if r1 == r2:
            step = 1 if c2 > c1 else -1
            between = [(r1, c) for c in range(c1 + step, c2, step)]
        else:
            step = 1 if r2 > r1 else -1
            between = [(r, c1) for r in range(r1 + step, r2, step)]
        for r, c in between:
            if cell_occupied(bd, lev, r, c):
                return False
    for _, r, c in planar[1:-1]:
        if cell_occupied(bd, lev, r, c):
            return False
    return True


def _entry_col(c, c_box):
    if c < c_box:
        return c_box
    if c > c_box + 1:
        return c_box + 1
    return c


def _dedupe(points):
    out = [points[0]]
    for pt in points[1:]:
        if pt != out[-1]:
            out.append(pt)
    return tuple(out)


def _witness_candidates(bd, a, b):
    """Yield candidate Connections, cheapest world first."""
    ra, ca, la = bd.rows[a], bd.cols[a], bd.levs[a]
    rb, cb, lb = bd.rows[b], bd.cols[b], bd.levs[b]
    if la > lb:
        ra, ca, la, rb, cb, lb = rb, cb, lb, ra, ca, la
    cross = la != lb
    for world in (0, 1):
        if world == 0:
            t, wall = bd.row_trees[lb], bd.wall_rows
            r1, c1, r2, c2 = ra, ca, rb, cb
        else:
            t, wall = bd.col_trees[lb], bd.wall_cols
            r1, c1, r2, c2 = ca, ra, cb, rb
        ov1 = (3 << c1) if cross else None
        cand = _axis_cand(t, wall, r1, c1, r2, c2, ov1, None)
        c = 0
        while cand >> c:
            if cand >> c & 1:
                for x1 in (r1, r1 + 1):
                    for x2 in (r2, r2 + 1):
                        e1 = _entry_col(c, c1)
                        e2 = _entry_col(c, c2)
                        if world == 0:
                            planar = [(lb, x1, e1), (lb, x1, c),
                                      (lb, x2, c), (lb, x2, e2)]
                        else:
                            planar = [(lb, e1, x1), (lb, c, x1),
                                      (lb, c, x2), (lb, e2, x2)]
                        pts = _dedupe(planar)
                        if cross:
                            head = (la,) + pts[0][1:]
                            pts = _dedupe((head,) + pts)
                        yield Connection(pts)
            c += 1


def shisen_connection(bd, a, b):
    """Connection witness for a playable shisen pair, else None.

    Candidates come straight from the register test; each is re-validated
    cell by cell before being returned.
    """
    if not _pillars_ok(bd, a, b):
        return None
    if not _connect(bd, a, b):
        return None
    for conn in _witness_candidates(bd, a, b):
        if validate_connection(bd, a, b, conn):
            return conn
    raise AssertionError(f"connected pair {a},{b} yielded no valid witness")
