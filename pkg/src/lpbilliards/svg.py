"""SVG rendering of an orbit inscribed in the L^p boundary."""
from __future__ import annotations

import xml.etree.ElementTree as ET

import numpy as np

from .geometry import BoundarySpec, boundary_point

SIZE = 400
MARGIN = 30
BOUNDARY_SAMPLES = 1440


def _xy(pts):
    # y axis flipped so the picture is in math orientation
    scale = (SIZE - 2 * MARGIN) / 2.0
    cx = cy = SIZE / 2.0
    return [(cx + scale * x, cy - scale * y) for x, y in pts]


def _f(v: float) -> str:
    return f"{v:.3f}"


def render_svg(spec: BoundarySpec, theta, label: str = "") -> str:
    root = ET.Element(
        "svg", xmlns="http://www.w3.org/2000/svg", version="1.1",
        width=str(SIZE), height=str(SIZE + 30), viewBox=f"0 0 {SIZE} {SIZE + 30}",
    )
    ts = np.arange(BOUNDARY_SAMPLES + 1) / BOUNDARY_SAMPLES
    outline = _xy(boundary_point(spec, ts))
    ET.SubElement(
        root, "polyline", fill="none", stroke="#888", **{"stroke-width": "1"},
        points=" ".join(f"{_f(x)},{_f(y)}" for x, y in outline),
    )
    verts = _xy(boundary_point(spec, np.asarray(theta, dtype=float)))
    d = "M" + " L".join(f"{_f(x)} {_f(y)}" for x, y in verts) + " Z"
    ET.SubElement(root, "path", d=d, fill="none", stroke="#c03", **{"stroke-width": "1.5"})
    for x, y in verts:
        ET.SubElement(root, "circle", cx=_f(x), cy=_f(y), r="3.5", fill="#036")
    text = ET.SubElement(root, "text", x=str(SIZE // 2), y=str(SIZE + 18),
                         **{"text-anchor": "middle", "font-family": "sans-serif", "font-size": "14"})
    text.text = label
    return ET.tostring(root, encoding="unicode") + "\n"
