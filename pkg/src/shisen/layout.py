"""Board layouts: tile slot geometry, bundled shapes, file format.

Coordinates are doubled half-tile units on a 64x64 grid: a slot anchored at
(row, col, level) occupies the four cells {row, row+1} x {col, col+1} of its
level.  Anchors stay within 1..61 so every slot keeps at least one empty
cell of margin inside the grid.  Levels run 0..15, level 0 at the table.

Two grid kinds:
  shisen  - single level, anchors on even coordinates (the unit-grid games)
  mahjong - anything else; slots may sit on half-tile offsets and stack

Layout files are plain text, one "row col level" triple per line, '#' starts
a comment; the grid kind is inferred from the slot list.
"""

import hashlib
import os
from dataclasses import dataclass

MIN_ANCHOR = 1
MAX_ANCHOR = 61
MAX_LEVELS = 16


@dataclass(frozen=True, order=True)
class Slot:
    row: int
    col: int
    level: int


class Layout:
    def __init__(self, name, slots, kind=None):
        slots = tuple(
            s if isinstance(s, Slot) else Slot(*s) for s in slots
        )
        if not slots:
            raise ValueError("layout has no slots")
        seen = {}
        for s in slots:
            if not (MIN_ANCHOR <= s.row <= MAX_ANCHOR):
                raise ValueError(f"slot row {s.row} outside {MIN_ANCHOR}..{MAX_ANCHOR}")
            if not (MIN_ANCHOR <= s.col <= MAX_ANCHOR):
                raise ValueError(f"slot col {s.col} outside {MIN_ANCHOR}..{MAX_ANCHOR}")
            if not (0 <= s.level < MAX_LEVELS):
                raise ValueError(f"slot level {s.level} outside 0..{MAX_LEVELS - 1}")
            for dr in (0, 1):
                for dc in (0, 1):
                    cell = (s.level, s.row + dr, s.col + dc)
                    if cell in seen:
                        raise ValueError(f"slots {seen[cell]} and {s} overlap")
                    seen[cell] = s
        inferred = "shisen"
        for s in slots:
            if s.level or s.row % 2 or s.col % 2:
                inferred = "mahjong"
                break
        if kind is None:
            kind = inferred
        elif kind == "shisen" and inferred == "mahjong":
            raise ValueError("shisen layouts are flat with even anchors")
        elif kind not in ("shisen", "mahjong"):
            raise ValueError(f"unknown grid kind {kind!r}")
        self.name = name
        self.kind = kind
        self.slots = slots

    def __len__(self):
        return len(self.slots)

    def __repr__(self):
        return f"Layout({self.name!r}, {len(self.slots)} slots, {self.kind})"

    @property
    def levels(self):
        return max(s.level for s in self.slots) + 1

    def bbox(self):
        """(row_min, col_min, row_max, col_max) over occupied cells."""
        rows = [s.row for s in self.slots]
        cols = [s.col for s in self.slots]
        return min(rows), min(cols), max(rows) + 1, max(cols) + 1

    def fingerprint(self):
        lines = sorted(f"{s.row} {s.col} {s.level}" for s in self.slots)
        blob = self.kind + "\n" + "\n".join(lines) + "\n"
        return hashlib.sha256(blob.encode()).hexdigest()

    def transpose(self):
        slots = [Slot(s.col, s.row, s.level) for s in self.slots]
        if self.name.endswith("-transposed"):
            name = self.name[: -len("-transposed")]
        else:
            name = self.name + "-transposed"
        return Layout(name, slots, self.kind)

    def to_text(self):
        lines = [f"# layout {self.name}: {len(self.slots)} slots",
                 "# row col level (doubled half-tile units)"]
        for s in self.slots:
            lines.append(f"{s.row} {s.col} {s.level}")
        return "\n".join(lines) + "\n"


def group_sizes(n):
    """Sizes of the face groups for an n-slot layout: fours, then at most
    one two.  Odd n cannot be partitioned and is rejected."""
    if n % 2:
        raise ValueError(f"{n} slots cannot pair up")
    sizes = [4] * (n // 4)
    if n % 4:
        sizes.append(2)
    return sizes


def make_rectangle(w, h):
    """Flat w x h unit-grid rectangle; if w*h is odd the slot with the
    greatest (row, col) is dropped to keep the count even."""
    if w < 1 or h < 1 or w > 30 or h > 30:
        raise ValueError("rectangle sides must be 1..30")
    slots = [Slot(2 + 2 * r, 2 + 2 * c, 0) for r in range(h) for c in range(w)]
    if len(slots) % 2:
        slots.pop()
    if not slots:
        raise ValueError("1x1 rectangle has no pairs")
    return Layout(f"rect-{w}x{h}", slots, "shisen")


def make_default():
    """The classic 144-tile turtle: five tiers plus three side tiles."""
    slots = []
    row_cols = [
        (0, range(1, 13)),
        (1, range(3, 11)),
        (2, range(2, 12)),
        (3, range(1, 13)),
        (4, range(1, 13)),
        (5, range(2, 12)),
        (6, range(3, 11)),
        (7, range(1, 13)),
    ]
    for r, cols in row_cols:
        for c in cols:
            slots.append(Slot(2 + 2 * r, 2 + 2 * c, 0))
    slots.append(Slot(9, 2, 0))
    slots.append(Slot(9, 28, 0))
    slots.append(Slot(9, 30, 0))
    for r in range(1, 7):
        for c in range(4, 10):
            slots.append(Slot(2 + 2 * r, 2 + 2 * c, 1))
    for r in range(2, 6):
        for c in range(5, 9):
            slots.append(Slot(2 + 2 * r, 2 + 2 * c, 2))
    for r in range(3, 5):
        for c in range(6, 8):
            slots.append(Slot(2 + 2 * r, 2 + 2 * c, 3))
    slots.append(Slot(9, 15, 4))
    return Layout("default", slots, "mahjong")


def make_foo():
    """Three-tier pagoda: 9x10 base, 6x7 offset middle, 3x4 cap."""
    slots = []
    for r in range(10):
        for c in range(9):
            slots.append(Slot(2 + 2 * r, 2 + 2 * c, 0))
    for r in range(7):
        for c in range(6):
            slots.append(Slot(5 + 2 * r, 5 + 2 * c, 1))
    for r in range(4):
        for c in range(3):
            slots.append(Slot(8 + 2 * r, 8 + 2 * c, 2))
    return Layout("foo", slots, "mahjong")


def make_bar():
    """Transpose of foo."""
    lay = make_foo().transpose()
    lay.name = "bar"
    return lay


def _ring(side, level, origin=2):
    """Square ring of side x side tiles, one tile thick."""
    lo = origin
    hi = origin + 2 * (side - 1)
    cells = []
    for c in range(side):
        cells.append(Slot(lo, lo + 2 * c, level))
        cells.append(Slot(hi, lo + 2 * c, level))
    for r in range(1, side - 1):
        cells.append(Slot(lo + 2 * r, lo, level))
        cells.append(Slot(lo + 2 * r, hi, level))
    return cells


def make_deepwell():
    """Square shaft: 8x8 ring walls four levels high around a sunken 4x4
    floor two levels deep; 144 tiles, equal to its own transpose."""
    slots = []
    for level in range(4):
        slots.extend(_ring(8, level))
    for level in range(2):
        for r in range(4):
            for c in range(4):
                slots.append(Slot(6 + 2 * r, 6 + 2 * c, level))
    return Layout("deepwell", slots, "mahjong")


def make_hourglass():
    """Plan-view hourglass: two triangular lobes meeting at a narrow neck,
    tile heights mounded toward the outer columns; 144 tiles."""
    slots = []

    def lobe_col(col_doubled, top_row, count, level):
        for i in range(count):
            slots.append(Slot(top_row + 2 * i, col_doubled, level))

    # level 0: triangles over rows 0..11 (doubled 2..24), cols 0..12
    left = [(0, 0, 12), (1, 1, 10), (2, 2, 8), (3, 3, 6), (4, 4, 4), (5, 5, 2)]
    for c, r0, cnt in left:
        lobe_col(2 + 2 * c, 2 + 2 * r0, cnt, 0)
        lobe_col(2 + 2 * (12 - c), 2 + 2 * r0, cnt, 0)
    lobe_col(2 + 2 * 6, 2 + 2 * 5, 2, 0)  # neck
    # level 1
    for c, r0, cnt in [(0, 2, 8), (1, 3, 6), (2, 4, 4), (3, 5, 2)]:
        lobe_col(2 + 2 * c, 2 + 2 * r0, cnt, 1)
        lobe_col(2 + 2 * (12 - c), 2 + 2 * r0, cnt, 1)
    lobe_col(2 + 2 * 6, 2 + 2 * 5, 2, 1)  # neck second story
    # level 2
    for c, r0, cnt in [(0, 4, 4), (1, 5, 2)]:
        lobe_col(2 + 2 * c, 2 + 2 * r0, cnt, 2)
        lobe_col(2 + 2 * (12 - c), 2 + 2 * r0, cnt, 2)
    # level 3
    lobe_col(2, 2 + 2 * 5, 2, 3)
    lobe_col(2 + 2 * 12, 2 + 2 * 5, 2, 3)
    return Layout("hourglass", slots, "mahjong")


_BUILTIN = {
    "default": make_default,
    "turtle": make_default,
    "foo": make_foo,
    "bar": make_bar,
    "deepwell": make_deepwell,
    "hourglass": make_hourglass,
}

DATA_DIR_ENV = "SHISEN_DATA_DIR"


def parse_layout_text(text, name):
    slots = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 'row col level'")
        slots.append(Slot(int(parts[0]), int(parts[1]), int(parts[2])))
    return Layout(name, slots)


def load_layout_file(path):
    with open(path) as fh:
        text = fh.read()
    name = os.path.splitext(os.path.basename(path))[0]
    return parse_layout_text(text, name)


def resolve_layout(spec):
    """Layout from a CLI-style designator.

    Accepts a file path, "rect:WxH", a name found as <name>.layout under
    $SHISEN_DATA_DIR, or a built-in name (default/turtle, foo, bar,
    deepwell, hourglass).
    """
    if isinstance(spec, Layout):
        return spec
    if spec.startswith("rect:"):
        w, _, h = spec[5:].partition("x")
        return make_rectangle(int(w), int(h))
    if os.path.sep in spec or spec.endswith(".layout") or os.path.isfile(spec):
        return load_layout_file(spec)
    data_dir = os.environ.get(DATA_DIR_ENV)
    if data_dir:
        candidate = os.path.join(data_dir, spec + ".layout")
        if os.path.isfile(candidate):
            return load_layout_file(candidate)
    if spec in _BUILTIN:
        lay = _BUILTIN[spec]()
        lay.name = spec
        return lay
    raise ValueError(f"unknown layout {spec!r}")
