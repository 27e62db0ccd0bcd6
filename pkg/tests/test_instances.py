"""Instance files: canonical JSON round trips, validation, verification."""

import pytest

from boxpierce import (
    Instance,
    InstanceFormatError,
    gen_extremal_two_line,
    gen_gadget,
    instance_from_json,
    instance_to_json,
    load_instance,
    pierce_two_lines,
    read_instance,
    verify_piercing,
    write_instance,
)
from boxpierce.instances import parse_points_document, report_to_json


def test_family_round_trip_equality():
    g = gen_gadget()
    assert instance_from_json(instance_to_json(g)).family == g


def test_file_round_trip_byte_exact(tmp_path):
    path = tmp_path / "inst.json"
    inst = Instance(gen_extremal_two_line(3), {"generator": "test", "seed": 7})
    write_instance(inst, str(path))
    first = path.read_bytes()
    write_instance(load_instance(str(path)), str(path))
    assert path.read_bytes() == first


def test_read_instance_returns_family(tmp_path):
    path = tmp_path / "inst.json"
    write_instance(gen_gadget(), str(path))
    assert read_instance(str(path)) == gen_gadget()


def test_missing_lines_gives_no_certificate():
    inst = instance_from_json('{"dim": 1, "boxes": [[[0, 2]]]}')
    assert inst.family.lines is None and inst.meta is None


def test_reversed_interval_names_box():
    with pytest.raises(InstanceFormatError, match=r"boxes\[1\]\[0\]"):
        instance_from_json('{"dim": 1, "boxes": [[[0, 2]], [[5, 3]]]}')


def test_float_coordinate_rejected():
    with pytest.raises(InstanceFormatError, match="integer"):
        instance_from_json('{"dim": 1, "boxes": [[[0, 1.5]]]}')


def test_nan_rejected():
    with pytest.raises(InstanceFormatError, match="non-finite"):
        instance_from_json('{"dim": 1, "boxes": [[[0, NaN]]]}')


def test_malformed_json_reports_location():
    with pytest.raises(InstanceFormatError, match="line 1"):
        instance_from_json('{"dim": 1, ')


def test_two_line_violation_in_file_reported():
    text = ('{"dim": 2, "boxes": [[[0, 1], [5, 6]]], '
            '"lines": {"axis": 1, "c1": 0, "c2": 2}}')
    with pytest.raises(InstanceFormatError, match="box 0"):
        instance_from_json(text)


def test_canonical_output_is_key_sorted():
    g = gen_gadget()
    text = instance_to_json(Instance(g, {"generator": "x"}))
    keys = [line.split('"')[1] for line in text.splitlines()
            if line.startswith('  "')]
    assert keys == sorted(keys)


# --- reports and verification --------------------------------------------------

def test_report_embeds_instance_for_verification():
    g = gen_gadget()
    report = pierce_two_lines(g)
    text = report_to_json(report, "twoline", None, g)
    points, embedded, guarantee = parse_points_document(text)
    assert embedded is not None and embedded.family == g
    assert guarantee == report.guarantee
    assert len(points) == report.size


def test_verify_accepts_pierce_output():
    g = gen_extremal_two_line(4)
    report = pierce_two_lines(g)
    vr = verify_piercing(g, report.points, guarantee=report.guarantee)
    assert vr.hits_all and vr.violations == ()
    assert vr.size == report.size <= vr.guarantee


def test_verify_lists_unhit_boxes():
    g = gen_gadget()
    report = pierce_two_lines(g)
    vr = verify_piercing(g, report.points[:-1])
    assert not vr.hits_all
    assert vr.violations  # at least one box lost its only point
    for i in vr.violations:
        assert not any(g.boxes[i].contains(p) for p in report.points[:-1])


def test_parse_bare_points_document():
    points, inst, guarantee = parse_points_document('{"points": [[1, 2], [3, 4]]}')
    assert inst is None and guarantee is None
    assert [p.coords for p in points] == [(1, 2), (3, 4)]
