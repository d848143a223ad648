"""CSV and SVG writers for sweep results."""

from __future__ import annotations

from pathlib import Path
from xml.sax.saxutils import escape

import numpy as np

from .config import config_lines
from .dynamics import SweepResult, describe

CSV_COLUMNS = ("t", "negativity", "ccnr", "purity", "min_eigenvalue")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def csv_text(result: SweepResult) -> str:
    lines = [f"# {k} = {v}" for k, v in config_lines(result.config)]
    lines.append(",".join(CSV_COLUMNS))
    for r in result.records:
        # tiny negative negativities are solver noise; clamp for presentation only
        row = (r.t, max(0.0, r.negativity), r.ccnr, r.measured.purity, r.measured.min_eigenvalue)
        lines.append(",".join(_fmt(x) for x in row))
    return "\n".join(lines) + "\n"


def write_csv(result: SweepResult, path: str | Path) -> None:
    path = Path(path)
    try:
        path.write_text(csv_text(result), encoding="utf-8")
    except OSError as exc:
        raise OSError(f"failed to write {path}: {exc}") from exc


def read_csv(path: str | Path) -> tuple[dict[str, str], dict[str, np.ndarray]]:
    """Return the ``# key = value`` metadata and the numeric columns of a written file."""
    meta: dict[str, str] = {}
    rows = []
    header = None
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.startswith("#"):
            key, value = line[1:].split("=", 1)
            meta[key.strip()] = value.strip()
        elif header is None:
            header = line.split(",")
        elif line:
            rows.append([float(x) for x in line.split(",")])
    data = np.array(rows, dtype=float).reshape(len(rows), len(header))
    return meta, {name: data[:, i] for i, name in enumerate(header)}


# plot geometry in SVG user units
WIDTH, HEIGHT = 720, 440
LEFT, RIGHT, TOP, BOTTOM = 70, 160, 50, 60
PAD_FRACTION = 0.05


def _y_range(values: np.ndarray) -> tuple[float, float]:
    lo, hi = float(values.min()), float(values.max())
    span = hi - lo
    pad = PAD_FRACTION * span if span > 0 else max(0.5, abs(lo) * PAD_FRACTION)
    return lo - pad, hi + pad


def svg_text(result: SweepResult) -> str:
    if len(result.records) < 2:
        raise ValueError("a plot needs at least two records")
    t = result.column("t")
    neg = np.maximum(result.column("negativity"), 0.0)
    cc = result.column("ccnr")
    x0, x1 = float(t[0]), float(t[-1])
    y0, y1 = _y_range(np.concatenate([neg, cc]))
    pw, ph = WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM

    def px(x):
        return LEFT + (x - x0) / (x1 - x0) * pw

    def py(y):
        return TOP + (y1 - y) / (y1 - y0) * ph

    def polyline(ys, style):
        pts = " ".join(f"{px(a):.3f},{py(b):.3f}" for a, b in zip(t, ys))
        return f'<polyline fill="none" {style} points="{pts}"/>'

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.1f}" y="28" text-anchor="middle" font-family="sans-serif" font-size="14">'
        f"{escape(describe(result.config))}</text>",
        f'<g id="plot-area" data-x-min="{x0!r}" data-x-max="{x1!r}" data-y-min="{y0!r}" data-y-max="{y1!r}">',
        f'<rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    for frac in np.linspace(0, 1, 5):
        xv, yv = x0 + frac * (x1 - x0), y0 + frac * (y1 - y0)
        out.append(
            f'<text x="{px(xv):.1f}" y="{TOP + ph + 18}" text-anchor="middle" font-family="sans-serif" '
            f'font-size="11">{xv:.3g}</text>'
        )
        out.append(
            f'<text x="{LEFT - 6}" y="{py(yv) + 4:.1f}" text-anchor="end" font-family="sans-serif" '
            f'font-size="11">{yv:.3g}</text>'
        )
    out += [
        polyline(neg, 'id="negativity" stroke="red" stroke-width="1.5"'),
        polyline(cc, 'id="ccnr" stroke="blue" stroke-width="1.5" stroke-dasharray="2 3"'),
        "</g>",
        f'<text x="{LEFT + pw / 2:.1f}" y="{HEIGHT - 18}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="13">t</text>',
        f'<text x="18" y="{TOP + ph / 2:.1f}" text-anchor="middle" font-family="sans-serif" font-size="13" '
        f'transform="rotate(-90 18 {TOP + ph / 2:.1f})">value</text>',
    ]
    lx, ly = WIDTH - RIGHT + 15, TOP + 20
    for i, (label, style) in enumerate(
        [("Negativity (N)", 'stroke="red"'), ("CCNR", 'stroke="blue" stroke-dasharray="2 3"')]
    ):
        y = ly + 22 * i
        out.append(f'<line x1="{lx}" y1="{y}" x2="{lx + 30}" y2="{y}" stroke-width="1.5" {style}/>')
        out.append(
            f'<text x="{lx + 36}" y="{y + 4}" font-family="sans-serif" font-size="12">{label}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_plot(result: SweepResult, path: str | Path) -> None:
    path = Path(path)
    try:
        path.write_text(svg_text(result), encoding="utf-8")
    except OSError as exc:
        raise OSError(f"failed to write {path}: {exc}") from exc
