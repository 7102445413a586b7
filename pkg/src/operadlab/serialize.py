"""JSON encodings of every domain type.

Floats go through ``json`` which writes the shortest decimal that
round-trips (``float.__repr__``), so ``load(dump(x)) == x`` bit for bit.
Exact shadows of disk configurations are not serialized; a reloaded value
carries the rounded floats only.

Schemas::

    points          {"points": [[re, im], ...]}
    half-plane      {"interior": [[re, im], ...], "boundary": [[re, im], ...]}
    disks           {"disks": [{"c": [re, im], "r": r}, ...]}
    swiss cheese    {"closed_upper": [disk, ...], "open": [disk, ...]}
    tree            leaf = int (closed leaf) or {"color": "o", "leaf": k};
                    vertex = {"color": "c" | "o", "children": [...]}
    chart point     {"tree": tree, "decorations": {vertex id: points},
                     "scales": {edge id: t}, "epsilon": eps}

Vertex ids are preorder positions (root 0) in the canonical tree; the
edge above vertex ``v`` has id ``v - 1``.
"""

from __future__ import annotations

import json
from typing import Any

from .config_space import HalfPlaneConfiguration, NormalizedConfiguration, PointConfiguration
from .errors import ParameterError
from .fm_operad import (
    ChartPoint,
    ColoredChartPoint,
    ColoredDecoratedTree,
    DecoratedTree,
    decorate,
    decorate_colored,
)
from .little_disks import Disk, DiskConfiguration
from .swiss_cheese import SCConfiguration
from .trees import ColoredLeaf, ColoredTree, LabeledTree, make_colored, make_tree


def _pt(z: complex) -> list[float]:
    return [z.real, z.imag]


def _unpt(v) -> complex:
    if not (isinstance(v, list) and len(v) == 2):
        raise ParameterError("a point is encoded as [re, im]", value=v)
    return complex(float(v[0]), float(v[1]))


def _require(obj: Any, *keys: str) -> None:
    if not isinstance(obj, dict) or any(k not in obj for k in keys):
        raise ParameterError("malformed JSON object", expected=list(keys))


def points_to_json(cfg: PointConfiguration) -> dict:
    return {"points": [_pt(z) for z in cfg.points]}


def points_from_json(obj: dict, normalized: bool = False) -> PointConfiguration:
    _require(obj, "points")
    pts = tuple(_unpt(v) for v in obj["points"])
    return NormalizedConfiguration(pts) if normalized else PointConfiguration(pts)


def half_plane_to_json(h: HalfPlaneConfiguration) -> dict:
    return {"interior": [_pt(z) for z in h.interior], "boundary": [_pt(z) for z in h.boundary]}


def half_plane_from_json(obj: dict) -> HalfPlaneConfiguration:
    _require(obj, "interior", "boundary")
    return HalfPlaneConfiguration(tuple(_unpt(v) for v in obj["interior"]), tuple(_unpt(v) for v in obj["boundary"]))


def _disk(d: Disk) -> dict:
    return {"c": _pt(d.center), "r": d.radius}


def _undisk(obj: dict) -> Disk:
    _require(obj, "c", "r")
    return Disk(_unpt(obj["c"]), float(obj["r"]))


def disks_to_json(d: DiskConfiguration) -> dict:
    return {"disks": [_disk(x) for x in d.disks]}


def disks_from_json(obj: dict) -> DiskConfiguration:
    _require(obj, "disks")
    return DiskConfiguration(tuple(_undisk(x) for x in obj["disks"]))


def sc_to_json(sc: SCConfiguration) -> dict:
    return {"closed_upper": [_disk(x) for x in sc.closed_upper], "open": [_disk(x) for x in sc.open]}


def sc_from_json(obj: dict) -> SCConfiguration:
    _require(obj, "closed_upper", "open")
    return SCConfiguration(tuple(_undisk(x) for x in obj["closed_upper"]), tuple(_undisk(x) for x in obj["open"]))


def tree_to_json(t) -> Any:
    if isinstance(t, int):
        return t
    if isinstance(t, ColoredLeaf):
        return t.label if t.color == "c" else {"color": "o", "leaf": t.label}
    color = t.color if isinstance(t, ColoredTree) else "c"
    return {"color": color, "children": [tree_to_json(c) for c in t.children]}


def _is_colored(obj: Any) -> bool:
    if isinstance(obj, int):
        return False
    if "leaf" in obj or obj.get("color") == "o":
        return True
    return any(_is_colored(c) for c in obj.get("children", ()))


def tree_from_json(obj: Any) -> LabeledTree | int:
    if isinstance(obj, int):
        return obj
    _require(obj, "children")
    if obj.get("color", "c") != "c" or "leaf" in obj:
        raise ParameterError("uncoloured trees have closed vertices only")
    if len(obj["children"]) == 1 and isinstance(obj["children"][0], int):
        return LabeledTree((obj["children"][0],))
    return make_tree([tree_from_json(c) for c in obj["children"]])


def colored_tree_from_json(obj: Any) -> ColoredTree | ColoredLeaf:
    if isinstance(obj, int):
        return ColoredLeaf("c", obj)
    if "leaf" in obj:
        return ColoredLeaf(obj.get("color", "c"), int(obj["leaf"]))
    _require(obj, "color", "children")
    return make_colored(obj["color"], [colored_tree_from_json(c) for c in obj["children"]])


def _vertices(point) -> list:
    return [] if point.config is None else point.vertices()


def chart_to_json(cp: ChartPoint | ColoredChartPoint) -> dict:
    tree = cp.point.tree
    if isinstance(tree, LabeledTree) and tree.is_unit():
        tree_json: Any = {"color": "c", "children": [1]}
    else:
        tree_json = tree_to_json(tree)
    return {
        "tree": tree_json,
        "decorations": {str(k): points_to_json(v.config) for k, v in enumerate(_vertices(cp.point))},
        "scales": {str(k): t for k, t in enumerate(cp.scales)},
        "epsilon": cp.epsilon,
    }


def _decorations(obj: dict, count: int) -> list[tuple[complex, ...]]:
    decs = obj["decorations"]
    if sorted(decs, key=int) != [str(k) for k in range(count)]:
        raise ParameterError("one decoration per internal vertex", vertices=count, keys=sorted(decs))
    return [tuple(_unpt(v) for v in decs[str(k)]["points"]) for k in range(count)]


def _scales(obj: dict, count: int) -> tuple[float, ...]:
    scales = obj["scales"]
    if sorted(scales, key=int) != [str(k) for k in range(count)]:
        raise ParameterError("one scale per internal edge", edges=count, keys=sorted(scales))
    return tuple(float(scales[str(k)]) for k in range(count))


def chart_from_json(obj: dict) -> ChartPoint | ColoredChartPoint:
    """Decode a chart point; trees with open vertices or leaves give a `ColoredChartPoint`."""
    _require(obj, "tree", "decorations", "scales", "epsilon")
    if _is_colored(obj["tree"]):
        return _colored_chart_from_json(obj)
    tree = tree_from_json(obj["tree"])
    if isinstance(tree, int) or tree.is_unit():
        return ChartPoint(DecoratedTree((1,), None), (), float(obj["epsilon"]))
    count = sum(1 for _ in _tree_vertices(tree))
    decs = iter(_decorations(obj, count))

    def build(v: LabeledTree) -> DecoratedTree:
        pts = next(decs)
        children = [c if isinstance(c, int) else build(c) for c in v.children]
        return decorate(children, pts)

    point = build(tree)
    return ChartPoint(point, _scales(obj, count - 1), float(obj["epsilon"]))


def _tree_vertices(t):
    yield t
    for c in t.children:
        if not isinstance(c, (int, ColoredLeaf)):
            yield from _tree_vertices(c)


def _colored_chart_from_json(obj: dict) -> ColoredChartPoint:
    tree = colored_tree_from_json(obj["tree"])
    if isinstance(tree, ColoredLeaf) or tree.is_unit():
        raise ParameterError("coloured chart points need a decorated vertex")
    count = sum(1 for _ in _tree_vertices(tree))
    decs = iter(_decorations(obj, count))

    def build(v: ColoredTree) -> ColoredDecoratedTree:
        pts = next(decs)
        children = [c if isinstance(c, ColoredLeaf) else build(c) for c in v.children]
        return decorate_colored(v.color, children, pts)

    point = build(tree)
    return ColoredChartPoint(point, _scales(obj, count - 1), float(obj["epsilon"]))


def decorated_to_json(p: DecoratedTree) -> dict:
    """A stratum point is written as a chart point with all scales zero."""
    return chart_to_json(ChartPoint.on_boundary(p, 1.0) if p.config is not None else ChartPoint(p, (), 1.0))


def to_json(x) -> Any:
    """Encode any supported value (dispatch on type)."""
    if isinstance(x, PointConfiguration):
        return points_to_json(x)
    if isinstance(x, HalfPlaneConfiguration):
        return half_plane_to_json(x)
    if isinstance(x, DiskConfiguration):
        return disks_to_json(x)
    if isinstance(x, SCConfiguration):
        return sc_to_json(x)
    if isinstance(x, (ChartPoint, ColoredChartPoint)):
        return chart_to_json(x)
    if isinstance(x, DecoratedTree):
        return decorated_to_json(x)
    if isinstance(x, (LabeledTree, ColoredTree, ColoredLeaf, int)):
        return tree_to_json(x)
    if hasattr(x, "to_json"):
        return x.to_json()
    raise ParameterError("no JSON encoding for this type", type=type(x).__name__)


def from_json(obj: Any):
    """Decode by shape: the keys present determine the type."""
    if isinstance(obj, dict):
        if "points" in obj:
            return points_from_json(obj)
        if "interior" in obj:
            return half_plane_from_json(obj)
        if "disks" in obj:
            return disks_from_json(obj)
        if "closed_upper" in obj:
            return sc_from_json(obj)
        if "tree" in obj:
            return chart_from_json(obj)
        if "children" in obj or "leaf" in obj:
            return colored_tree_from_json(obj) if _is_colored(obj) else tree_from_json(obj)
    if isinstance(obj, int):
        return obj
    raise ParameterError("unrecognised JSON value")


def dumps(x, indent: int | None = None) -> str:
    return json.dumps(to_json(x), indent=indent)


def loads(text: str):
    return from_json(json.loads(text))
