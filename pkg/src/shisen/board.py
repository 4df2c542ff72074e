"""Mutable board positions: occupancy bit planes kept incrementally.

A Board owns, per level, one OR-tree of row lines and one of column lines
(bit c of row line r = cell (r, c) occupied, and transposed), plus a flat
64x64 array of 16-bit pillar masks (bit L = cell occupied at level L).
A slot covers four cells; removing or restoring a tile rewrites two tree
leaves and four pillar entries.

Boards usually come from deal(); gadget and service code may fix the face
of every slot explicitly with from_faces().
"""

from .bitops import M64, new_tree, ortree_update
from .layout import group_sizes
from .rng import shuffled


class Board:
    def __init__(self, layout, slot_group, border_paths=True, face_labels=None):
        slots = layout.slots
        n = len(slots)
        if len(slot_group) != n:
            raise ValueError("one group per slot required")
        ngroups = max(slot_group) + 1
        self.layout = layout
        self.border_paths = border_paths
        self.rows = [s.row for s in slots]
        self.cols = [s.col for s in slots]
        self.levs = [s.level for s in slots]
        self.slot_group = list(slot_group)
        self.group_slots = [[] for _ in range(ngroups)]
        for i, g in enumerate(slot_group):
            self.group_slots[g].append(i)
        if face_labels is None:
            face_labels = [f"g{g}" for g in range(ngroups)]
        self.face_labels = list(face_labels)
        self.row_trees = [new_tree() for _ in range(layout.levels)]
        self.col_trees = [new_tree() for _ in range(layout.levels)]
        self.pillar = [0] * 4096
        self.occ = bytearray(n)
        self.occ_mask = 0
        self.total = 0
        self.remaining = [0] * ngroups
        self.undo_log = []
        if border_paths:
            self.wall_rows = 0
            self.wall_cols = 0
        else:
            r0, c0, r1, c1 = layout.bbox()
            self.wall_rows = M64 ^ ((1 << c1 - c0 + 1) - 1 << c0)
            self.wall_cols = M64 ^ ((1 << r1 - r0 + 1) - 1 << r0)
        for i in range(n):
            self._restore(i)

    @property
    def ngroups(self):
        return len(self.group_slots)

    def _remove(self, s):
        self.occ[s] = 0
        self.occ_mask &= ~(1 << s)
        self.total -= 1
        self.remaining[self.slot_group[s]] -= 1
        r, c, lev = self.rows[s], self.cols[s], self.levs[s]
        t = self.row_trees[lev]
        i = 2 * r + 1
        t[i] &= ~(3 << c)
        ortree_update(t, i)
        t = self.col_trees[lev]
        i = 2 * c + 1
        t[i] &= ~(3 << r)
        ortree_update(t, i)
        m = ~(1 << lev)
        p = self.pillar
        i = (r << 6) + c
        p[i] &= m
        p[i + 1] &= m
        p[i + 64] &= m
        p[i + 65] &= m

    def _restore(self, s):
        self.occ[s] = 1
        self.occ_mask |= 1 << s
        self.total += 1
        self.remaining[self.slot_group[s]] += 1
        r, c, lev = self.rows[s], self.cols[s], self.levs[s]
        t = self.row_trees[lev]
        i = 2 * r + 1
        t[i] |= 3 << c
        ortree_update(t, i)
        t = self.col_trees[lev]
        i = 2 * c + 1
        t[i] |= 3 << r
        ortree_update(t, i)
        m = 1 << lev
        p = self.pillar
        i = (r << 6) + c
        p[i] |= m
        p[i + 1] |= m
        p[i + 64] |= m
        p[i + 65] |= m

    def play_pair(self, a, b):
        self._remove(a)
        self._remove(b)
        self.undo_log.append((a, b))

    def play_lone(self, s):
        self._remove(s)
        self.undo_log.append((s,))

    def unplay(self):
        for s in reversed(self.undo_log.pop()):
            self._restore(s)

    def unplay_to(self, depth):
        while len(self.undo_log) > depth:
            self.unplay()

    def __repr__(self):
        return (f"Board({self.layout.name}, {self.total}/{len(self.occ)} tiles,"
                f" {self.ngroups} groups)")


def dealt_groups(layout, seed):
    """Face of every slot for the given deal seed.

    The canonical face sequence (fours first, one final two if needed) is
    mapped onto a Fisher-Yates permutation of the slots, so every
    assignment of faces to slots is equally likely.
    """
    n = len(layout.slots)
    flat = []
    for g, size in enumerate(group_sizes(n)):
        flat.extend([g] * size)
    perm = shuffled(range(n), seed)
    slot_group = [0] * n
    for i, s in enumerate(perm):
        slot_group[s] = flat[i]
    return slot_group


def deal(layout, seed, border_paths=True):
    return Board(layout, dealt_groups(layout, seed), border_paths)


def from_faces(layout, faces, border_paths=True):
    """Board with explicit face labels per slot, first-appearance order."""
    order = {}
    for f in faces:
        if f not in order:
            order[f] = len(order)
    slot_group = [order[f] for f in faces]
    labels = [None] * len(order)
    for f, g in order.items():
        labels[g] = str(f)
    return Board(layout, slot_group, border_paths, labels)
