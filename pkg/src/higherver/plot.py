"""SVG rendering of the rank-2 region picture (dominant weights coloured by ideal)."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .rootdatum import RootDatum, classify_region

_PALETTE = ["#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3", "#937860", "#da8bc3", "#8c8c8c"]
_SCALE = 18.0
_RT3_2 = 0.8660254037844386


def region_labels(datum: RootDatum, p: int, n: int, bound: int) -> dict[tuple[int, int], str]:
    if datum.rank != 2:
        raise ValueError(f"region plots need a rank 2 root datum, got {datum.label}")
    return {
        (a, b): classify_region((a, b), datum, p, n).chain for b in range(bound + 1) for a in range(bound + 1)
    }


def _xy(a: float, b: float, bound: int) -> tuple[float, float]:
    # a*w1 + b*w2 with w1, w2 at 60 degrees; y grows upwards
    x = (a - b) / 2 + bound / 2 + 1
    y = (2 * bound + 2) * _RT3_2 - (a + b) * _RT3_2
    return round(x * _SCALE, 3), round(y * _SCALE, 3)


def label_order(labels) -> list[str]:
    # A < I1\J2 < J2\I2 < I2\J3 < ... ; a bare "In" sits above everything at level n
    def key(label: str) -> float:
        if label == "A":
            return 0
        level = int(label[1:].split("\\")[0])
        if "\\" not in label:
            return 2 * level - 0.5
        return 2 * level - 1 if label.startswith("I") else 2 * level - 2

    return sorted(set(labels), key=key)


def render_svg(datum: RootDatum, p: int, n: int, bound: int) -> str:
    labels = region_labels(datum, p, n, bound)
    order = label_order(labels.values())
    colour = {lab: _PALETTE[k % len(_PALETTE)] for k, lab in enumerate(order)}
    width = round((bound + 2) * _SCALE + 160, 3)
    height = round((2 * bound + 4) * _RT3_2 * _SCALE, 3)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>{escape(datum.label)} dominant weights, p={p}, n={n}</title>",
        '<g stroke="#bbbbbb" stroke-width="0.6">',
    ]
    # walls <lambda + rho, beta^vee> = k p, i.e. the rho-shifted p-grid
    for k in range(1, (2 * bound + 2) // p + 1):
        c = k * p - 1
        if c <= bound:
            x1, y1 = _xy(c, 0, bound)
            x2, y2 = _xy(c, bound, bound)
            out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
            x1, y1 = _xy(0, c, bound)
            x2, y2 = _xy(bound, c, bound)
            out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
        s = k * p - 2  # a + b = s
        lo, hi = max(0, s - bound), min(bound, s)
        if lo <= hi:
            x1, y1 = _xy(lo, s - lo, bound)
            x2, y2 = _xy(hi, s - hi, bound)
            out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("</g>")
    out.append("<g>")
    for (a, b), lab in sorted(labels.items()):
        x, y = _xy(a, b, bound)
        out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="{colour[lab]}"><title>({a},{b}) {escape(lab)}</title></circle>')
    out.append("</g>")
    lx = round((bound + 2) * _SCALE + 10, 3)
    for k, lab in enumerate(order):
        y = round(20 + 22 * k, 3)
        out.append(f'<circle cx="{lx}" cy="{y}" r="6" fill="{colour[lab]}"/>')
        out.append(f'<text x="{lx + 12}" y="{y + 5}" font-family="sans-serif" font-size="14">{escape(lab)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
