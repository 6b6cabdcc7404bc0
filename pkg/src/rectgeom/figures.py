"""Figure documents for claim witnesses and their matplotlib rendering."""
from __future__ import annotations

import math
from decimal import Decimal, localcontext
from fractions import Fraction

from .geometry import Circle, Line, Point
from .theorems import ClaimResult, RectConfig, TwoRectConfig

SIG_DIGITS = 17


def decimal_str(x) -> str:
    if isinstance(x, float):
        return format(x, f".{SIG_DIGITS}g")
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = SIG_DIGITS
        d = Decimal(x.numerator) / Decimal(x.denominator)
    return format(d.normalize(), "f") if d == d.to_integral_value() else str(d)


def _bbox(points: list[tuple[float, float]], margin: float = 0.1) -> tuple[float, float, float, float]:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    w = (x1 - x0) or 1.0
    h = (y1 - y0) or 1.0
    return x0 - margin * w, y0 - margin * h, x1 + margin * w, y1 + margin * h


def clip_line(line: Line, box) -> tuple[float, float, float, float] | None:
    """Segment of u*x + v*y + w = 0 inside the box, or None if it misses."""
    u, v, w = (float(t) for t in (line.u, line.v, line.w))
    x0, y0, x1, y1 = box
    hits = []
    if v != 0:
        for x in (x0, x1):
            y = -(u * x + w) / v
            if y0 <= y <= y1:
                hits.append((x, y))
    if u != 0:
        for y in (y0, y1):
            x = -(v * y + w) / u
            if x0 <= x <= x1:
                hits.append((x, y))
    if len(hits) < 2:
        return None
    # farthest pair, so duplicate corner hits collapse harmlessly
    best = max(((p, q) for p in hits for q in hits), key=lambda pq: math.dist(*pq))
    (ax, ay), (bx, by) = best
    return ax, ay, bx, by


def _segments(cfg) -> list[tuple[str, Point, Point]]:
    rects = [("", cfg)] if isinstance(cfg, RectConfig) else [("1", cfg.first), ("2", cfg.second)]
    out = []
    for k, r in rects:
        corners = [("A", r.A), ("B", r.B), ("C", r.C), ("D", r.D)]
        for (n1, p1), (n2, p2) in zip(corners, corners[1:] + corners[:1]):
            out.append((f"side_{n1}{n2}{k}", p1, p2))
    return out


def figure_doc(result: ClaimResult, cfg: RectConfig | TwoRectConfig) -> dict:
    """Named elements of a witness with decimal coordinates and a bounding box."""
    points = {k: v for k, v in result.witness.items() if isinstance(v, Point)}
    box = _bbox([(float(p.x), float(p.y)) for p in points.values()])
    elements = []
    for name, p1, p2 in _segments(cfg):
        elements.append({"name": name, "kind": "segment",
                         "coordinates": [decimal_str(t) for t in (p1.x, p1.y, p2.x, p2.y)]})
    for name, obj in result.witness.items():
        if isinstance(obj, Point):
            elements.append({"name": name, "kind": "point", "coordinates": [decimal_str(obj.x), decimal_str(obj.y)]})
        elif isinstance(obj, Line):
            seg = clip_line(obj, box)
            if seg is not None:
                elements.append({"name": name, "kind": "line", "coordinates": [decimal_str(t) for t in seg]})
        elif isinstance(obj, Circle):
            c = obj.center
            r = math.sqrt(float(obj.radius2()))
            elements.append({"name": name, "kind": "circle",
                             "coordinates": [decimal_str(c.x), decimal_str(c.y), decimal_str(r)]})
    return {
        "claim": result.claim.value,
        "params": [decimal_str(v) for v in cfg.values()],
        "elements": elements,
        "bounding_box": [decimal_str(t) for t in box],
    }


def witness_points(doc: dict) -> dict[str, Point]:
    """Point elements of a figure document parsed back as floats."""
    return {e["name"]: Point(float(e["coordinates"][0]), float(e["coordinates"][1]))
            for e in doc["elements"] if e["kind"] == "point"}


_STYLE = {
    "segment": dict(color="0.2", linewidth=1.2),
    "line": dict(color="tab:blue", linewidth=0.8, alpha=0.8),
    "circle": dict(color="tab:green", linewidth=0.8, fill=False),
}


def render_svg(doc: dict, path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    from matplotlib.figure import Figure
    from matplotlib.patches import Circle as CirclePatch

    matplotlib.rcParams["svg.hashsalt"] = "rectgeom"
    x0, y0, x1, y1 = (float(t) for t in doc["bounding_box"])
    fig = Figure(figsize=(7, 7))
    ax = fig.add_subplot()
    for e in doc["elements"]:
        c = [float(t) for t in e["coordinates"]]
        kind = e["kind"]
        if kind in ("segment", "line"):
            ax.plot([c[0], c[2]], [c[1], c[3]], **_STYLE[kind])
            if kind == "line":
                ax.annotate(e["name"], ((c[0] + c[2]) / 2, (c[1] + c[3]) / 2), fontsize=7, color="tab:blue")
        elif kind == "circle":
            ax.add_patch(CirclePatch((c[0], c[1]), c[2], **_STYLE["circle"]))
        elif kind == "point":
            ax.plot(c[0], c[1], "o", color="tab:red", markersize=3)
            ax.annotate(e["name"], (c[0], c[1]), xytext=(3, 3), textcoords="offset points", fontsize=8)
    ax.set_xlim(x0, x1)
    ax.set_ylim(y0, y1)
    ax.set_aspect("equal", adjustable="box")
    ax.set_title(f"{doc['claim']}  params = ({', '.join(doc['params'])})", fontsize=9)
    ax.grid(True, linewidth=0.3, alpha=0.5)
    fig.savefig(path, format="svg", metadata={"Date": None})
