"""Instance and report files: canonical JSON with integer coordinates.

An instance document holds `dim`, `boxes` (per-axis [lo, hi] integer
pairs), an optional `lines` certificate and optional `meta`. Writing is
canonical (sorted keys, fixed indentation, trailing newline), so
write(read(file)) reproduces the file byte for byte and equal families
serialize identically. Non-integer or NaN coordinates are rejected on
read with the offending location.

A pierce report document embeds the instance it was computed from,
which lets `verify` consume a report from a pipe without a separate
instance argument.
"""

from __future__ import annotations

import json
import sys
from dataclasses import asdict, dataclass
from typing import Any, Mapping

from .geometry import Box, BoxFamily, Point, TwoLines
from .piercing import PierceReport


class InstanceFormatError(ValueError):
    """Malformed instance or report document; the message names the location."""


def _reject_constant(token: str):
    raise InstanceFormatError(f"non-finite number {token!r} is not a valid coordinate")


def _loads(text: str) -> Any:
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _as_int(value: Any, where: str) -> int:
    if type(value) is not int:
        raise InstanceFormatError(f"{where}: expected an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class Instance:
    """A family plus free-form metadata (generator tag, seed, description)."""

    family: BoxFamily
    meta: Mapping[str, Any] | None = None


def dumps_canonical(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def instance_to_obj(inst: Instance) -> dict:
    fam = inst.family
    obj: dict[str, Any] = {
        "dim": fam.dim,
        "boxes": [[[iv.lo, iv.hi] for iv in b.sides] for b in fam.boxes],
    }
    if fam.lines is not None:
        obj["lines"] = {"axis": fam.lines.axis, "c1": fam.lines.c1, "c2": fam.lines.c2}
    if inst.meta:
        obj["meta"] = dict(inst.meta)
    return obj


def instance_to_json(inst: Instance | BoxFamily) -> str:
    if isinstance(inst, BoxFamily):
        inst = Instance(inst)
    return dumps_canonical(instance_to_obj(inst))


def obj_to_instance(obj: Any) -> Instance:
    if not isinstance(obj, dict):
        raise InstanceFormatError(f"instance document must be an object, got {type(obj).__name__}")
    dim = _as_int(obj.get("dim"), "dim")
    if dim < 1:
        raise InstanceFormatError(f"dim: must be >= 1, got {dim}")
    raw_boxes = obj.get("boxes")
    if not isinstance(raw_boxes, list):
        raise InstanceFormatError("boxes: expected a list")
    boxes = []
    for i, raw in enumerate(raw_boxes):
        if not isinstance(raw, list) or len(raw) != dim:
            raise InstanceFormatError(f"boxes[{i}]: expected {dim} [lo, hi] pairs")
        sides = []
        for ax, pair in enumerate(raw):
            if not isinstance(pair, list) or len(pair) != 2:
                raise InstanceFormatError(f"boxes[{i}][{ax}]: expected an [lo, hi] pair")
            lo = _as_int(pair[0], f"boxes[{i}][{ax}][0]")
            hi = _as_int(pair[1], f"boxes[{i}][{ax}][1]")
            if lo > hi:
                raise InstanceFormatError(f"boxes[{i}][{ax}]: lo {lo} > hi {hi}")
            sides.append((lo, hi))
        boxes.append(Box.from_bounds(sides))
    lines = None
    if obj.get("lines") is not None:
        raw_lines = obj["lines"]
        if not isinstance(raw_lines, dict):
            raise InstanceFormatError("lines: expected an object with axis, c1, c2")
        axis = _as_int(raw_lines.get("axis"), "lines.axis")
        c1 = _as_int(raw_lines.get("c1"), "lines.c1")
        c2 = _as_int(raw_lines.get("c2"), "lines.c2")
        if c1 > c2:
            raise InstanceFormatError(f"lines: c1 {c1} > c2 {c2}")
        lines = TwoLines(axis, c1, c2)
    meta = obj.get("meta")
    if meta is not None and not isinstance(meta, dict):
        raise InstanceFormatError("meta: expected an object")
    try:
        family = BoxFamily(dim, tuple(boxes), lines)
    except ValueError as exc:
        raise InstanceFormatError(str(exc)) from exc
    return Instance(family, meta)


def instance_from_json(text: str) -> Instance:
    return obj_to_instance(_loads(text))


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def load_instance(path: str) -> Instance:
    return instance_from_json(_read_text(path))


def read_instance(path: str) -> BoxFamily:
    """Read a family; metadata is available via load_instance."""
    return load_instance(path).family


def write_instance(inst: Instance | BoxFamily, path: str) -> None:
    _write_text(path, instance_to_json(inst))


# ---------------------------------------------------------------------------
# pierce reports


def report_to_obj(report: PierceReport, algo: str, policy: str | None,
                  instance: Instance | BoxFamily) -> dict:
    if isinstance(instance, BoxFamily):
        instance = Instance(instance)
    return {
        "algo": algo,
        "policy": policy,
        "size": report.size,
        "guarantee": report.guarantee,
        "nu_used": report.nu_used,
        "points": [list(p.coords) for p in report.points],
        "trace": [asdict(t) for t in report.trace],
        "instance": instance_to_obj(instance),
    }


def report_to_json(report: PierceReport, algo: str, policy: str | None,
                   instance: Instance | BoxFamily) -> str:
    return dumps_canonical(report_to_obj(report, algo, policy, instance))


def points_from_obj(obj: Any, dim: int) -> list[Point]:
    if not isinstance(obj, list):
        raise InstanceFormatError("points: expected a list")
    points = []
    for i, raw in enumerate(obj):
        if not isinstance(raw, list) or len(raw) != dim:
            raise InstanceFormatError(f"points[{i}]: expected {dim} coordinates")
        points.append(Point(tuple(_as_int(c, f"points[{i}][{j}]") for j, c in enumerate(raw))))
    return points


def parse_points_document(text: str) -> tuple[list[Point], Instance | None, float | None]:
    """Parse a report or bare points document.

    Returns (points, embedded instance or None, claimed guarantee or
    None). Accepts the output of `pierce` as well as a plain object with
    a `points` field.
    """
    obj = _loads(text)
    if not isinstance(obj, dict) or "points" not in obj:
        raise InstanceFormatError("expected an object with a 'points' field")
    instance = None
    if obj.get("instance") is not None:
        instance = obj_to_instance(obj["instance"])
    guarantee = obj.get("guarantee")
    if guarantee is not None and not isinstance(guarantee, (int, float)):
        raise InstanceFormatError("guarantee: expected a number")
    dim = instance.family.dim if instance is not None else None
    raw_points = obj["points"]
    if dim is None:
        if not isinstance(raw_points, list):
            raise InstanceFormatError("points: expected a list")
        if raw_points and isinstance(raw_points[0], list):
            dim = len(raw_points[0])
        else:
            dim = 1
    points = points_from_obj(raw_points, dim)
    return points, instance, None if guarantee is None else float(guarantee)


# ---------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class VerifyReport:
    """Containment check of a point set against a family.

    hits_all is true iff violations (indices of unhit boxes) is empty.
    """

    hits_all: bool
    size: int
    guarantee: float | None = None
    nu: int | None = None
    tau: int | None = None
    violations: tuple[int, ...] = ()


def verify_piercing(family: BoxFamily, points, guarantee: float | None = None,
                    nu: int | None = None, tau: int | None = None) -> VerifyReport:
    """Recompute containment of every box against the point list."""
    points = list(points)
    violations = tuple(
        i for i, b in enumerate(family.boxes)
        if not any(b.contains(p) for p in points)
    )
    return VerifyReport(
        hits_all=not violations,
        size=len(points),
        guarantee=guarantee,
        nu=nu,
        tau=tau,
        violations=violations,
    )


def verify_to_obj(vr: VerifyReport) -> dict:
    obj: dict[str, Any] = {
        "hits_all": vr.hits_all,
        "size": vr.size,
        "violations": list(vr.violations),
    }
    if vr.guarantee is not None:
        obj["guarantee"] = vr.guarantee
    if vr.nu is not None:
        obj["nu"] = vr.nu
    if vr.tau is not None:
        obj["tau"] = vr.tau
    return obj
