"""Plain SVG 1.1 pictures of disk and Swiss-cheese configurations.

The unit disk is mapped onto the square ``[margin, size - margin]^2`` with
``size = min(width, height)``; the y axis is flipped so the upper half-plane
is drawn on top.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .little_disks import DiskConfiguration
from .swiss_cheese import SCConfiguration


@dataclass(frozen=True)
class RenderOptions:
    width: int = 400
    height: int = 400
    margin: int = 20
    labels: bool = True
    shade_mirrors: bool = True

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ParameterError("image dimensions must be positive", width=self.width, height=self.height)
        if not 0 <= 2 * self.margin < min(self.width, self.height):
            raise ParameterError("margin leaves no room for the picture", margin=self.margin)


class _Frame:
    def __init__(self, opts: RenderOptions):
        size = min(opts.width, opts.height)
        self.m = opts.margin
        self.half = (size - 2 * opts.margin) / 2

    def x(self, v: float) -> float:
        return self.m + (v + 1.0) * self.half

    def y(self, v: float) -> float:
        return self.m + (1.0 - v) * self.half

    def r(self, v: float) -> float:
        return v * self.half


def _f(v: float) -> str:
    return f"{v:.4f}"


def _circle(frame: _Frame, center: complex, radius: float, cls: str) -> str:
    return (
        f'<circle class="{cls}" cx="{_f(frame.x(center.real))}" cy="{_f(frame.y(center.imag))}" '
        f'r="{_f(frame.r(radius))}"/>'
    )


def _label(frame: _Frame, center: complex, text: str) -> str:
    return (
        f'<text x="{_f(frame.x(center.real))}" y="{_f(frame.y(center.imag))}" '
        f'text-anchor="middle" dominant-baseline="central" font-size="12">{text}</text>'
    )


def render_svg(cfg: DiskConfiguration | SCConfiguration, opts: RenderOptions = RenderOptions()) -> str:
    frame = _Frame(opts)
    body = [
        "<style>.unit{fill:none;stroke:black}.disk{fill:#cde;stroke:#246}"
        ".mirror{fill:#ddd;stroke:#888;stroke-dasharray:3 2}.axis{stroke:#444}</style>",
        _circle(frame, 0j, 1.0, "unit"),
    ]
    if isinstance(cfg, SCConfiguration):
        body.append(
            f'<line class="axis" x1="{_f(frame.x(-1))}" y1="{_f(frame.y(0))}" x2="{_f(frame.x(1))}" y2="{_f(frame.y(0))}"/>'
        )
        mirror_cls = "mirror" if opts.shade_mirrors else "disk"
        for k, d in enumerate(cfg.closed_upper, start=1):
            body.append(_circle(frame, d.center, d.radius, "disk"))
            body.append(_circle(frame, d.center.conjugate(), d.radius, mirror_cls))
            if opts.labels:
                body.append(_label(frame, d.center, f"c{k}"))
                body.append(_label(frame, d.center.conjugate(), f"c{k}'"))
        for k, d in enumerate(cfg.open, start=1):
            body.append(_circle(frame, d.center, d.radius, "disk"))
            if opts.labels:
                body.append(_label(frame, d.center, f"o{k}"))
    else:
        for k, d in enumerate(cfg.disks, start=1):
            body.append(_circle(frame, d.center, d.radius, "disk"))
            if opts.labels:
                body.append(_label(frame, d.center, str(k)))
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{opts.width}" height="{opts.height}" '
        f'viewBox="0 0 {opts.width} {opts.height}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"
