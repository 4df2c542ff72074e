import pytest

from shisen.layout import (
    Layout,
    Slot,
    group_sizes,
    load_layout_file,
    make_bar,
    make_deepwell,
    make_default,
    make_foo,
    make_hourglass,
    make_rectangle,
    parse_layout_text,
    resolve_layout,
)


def test_bundled_shapes_have_144_tiles():
    for make in (make_default, make_deepwell, make_hourglass):
        assert len(make()) == 144
    assert len(make_foo()) == 144
    assert len(make_bar()) == 144


def test_default_tier_sizes():
    lay = make_default()
    per_level = {}
    for s in lay.slots:
        per_level[s.level] = per_level.get(s.level, 0) + 1
    assert per_level == {0: 87, 1: 36, 2: 16, 3: 4, 4: 1}


def test_deepwell_is_self_transposed():
    lay = make_deepwell()
    assert lay.fingerprint() == lay.transpose().fingerprint()


def test_bar_is_foo_transposed():
    assert make_bar().fingerprint() == make_foo().transpose().fingerprint()
    assert make_foo().fingerprint() != make_bar().fingerprint()


def test_transpose_involution():
    lay = make_hourglass()
    back = lay.transpose().transpose()
    assert back.fingerprint() == lay.fingerprint()
    assert back.name == lay.name


def test_overlap_rejected():
    with pytest.raises(ValueError):
        Layout("bad", [Slot(2, 2, 0), Slot(3, 3, 0)])
    # same footprint on another level is fine
    Layout("ok", [Slot(2, 2, 0), Slot(2, 2, 1)])


def test_bounds_rejected():
    with pytest.raises(ValueError):
        Layout("bad", [Slot(0, 2, 0)])
    with pytest.raises(ValueError):
        Layout("bad", [Slot(2, 62, 0)])
    with pytest.raises(ValueError):
        Layout("bad", [Slot(2, 2, 16)])


def test_rectangle_odd_drops_far_corner():
    lay = make_rectangle(3, 3)
    assert len(lay) == 8
    far = max((s.row, s.col) for s in lay.slots)
    assert far == (6, 4)  # (6, 6) was dropped
    with pytest.raises(ValueError):
        make_rectangle(1, 1)


def test_group_sizes():
    assert group_sizes(8) == [4, 4]
    assert group_sizes(6) == [4, 2]
    assert group_sizes(2) == [2]
    with pytest.raises(ValueError):
        group_sizes(7)


def test_text_round_trip(tmp_path):
    lay = make_default()
    text = lay.to_text()
    again = parse_layout_text(text, "default")
    assert again.fingerprint() == lay.fingerprint()
    assert again.kind == "mahjong"
    path = tmp_path / "custom.layout"
    path.write_text(text)
    loaded = load_layout_file(str(path))
    assert loaded.name == "custom"
    assert loaded.fingerprint() == lay.fingerprint()


def test_kind_inference():
    flat = parse_layout_text("2 2 0\n2 4 0\n", "flat")
    assert flat.kind == "shisen"
    offset = parse_layout_text("2 2 0\n2 5 0\n", "offset")
    assert offset.kind == "mahjong"
    stacked = parse_layout_text("2 2 0\n2 2 1\n", "stacked")
    assert stacked.kind == "mahjong"


def test_resolve_layout(tmp_path, monkeypatch):
    assert resolve_layout("rect:4x3").name == "rect-4x3"
    assert resolve_layout("turtle").fingerprint() == make_default().fingerprint()
    path = tmp_path / "mine.layout"
    path.write_text("2 2 0\n2 4 0\n")
    assert resolve_layout(str(path)).name == "mine"
    monkeypatch.setenv("SHISEN_DATA_DIR", str(tmp_path))
    assert resolve_layout("mine").name == "mine"
    with pytest.raises(ValueError):
        resolve_layout("no-such-layout")
