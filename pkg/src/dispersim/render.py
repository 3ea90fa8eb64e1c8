"""Trace rendering: ASCII frames and numbered SVG frames.

Active robots are drawn as arrows pointing along their last movement
direction (up for a robot that has not moved yet), settled robots as
diamonds ('o' in ASCII).
"""

from __future__ import annotations

import os

from .errors import StepOutOfRange
from .grid import Cell

_ARROWS = {"U": "^", "R": ">", "D": "v", "L": "<"}
_SVG_ROT = {"U": 0, "R": 90, "D": 180, "L": 270}


def _frame_state(trace, t: int):
    """Robot positions and glyph directions at the end of step t.

    Returns {id: (cell, state_char, dir_char)} built by replaying the
    recorded steps, so Stay actions keep the previous arrow direction.
    """
    if trace.steps is None:
        raise ValueError("trace was recorded without steps")
    if not 1 <= t <= len(trace.steps):
        raise StepOutOfRange(f"step {t} not in [1, {len(trace.steps)}]")
    robots: dict[int, tuple[Cell, str, str]] = {}
    for step_t, spawn, rows in trace.steps[:t]:
        for rid, x, y, state, act in rows:
            prev_dir = robots[rid][2] if rid in robots else "U"
            d = act if act in _ARROWS else prev_dir
            robots[rid] = ((x, y), state, d)
        if spawn is not None:
            robots[spawn] = (trace.region.door, "A", "U")
    return robots


def ascii_frame(trace, t: int) -> str:
    """One character per bounding-box cell: '#' wall, '.' empty, 'S'
    empty door, '^>v<' active robots, 'o' settled."""
    region = trace.region
    robots = _frame_state(trace, t)
    at: dict[Cell, str] = {}
    for cell, state, d in robots.values():
        at[cell] = "o" if state == "S" else _ARROWS[d]
    x0, x1, y0, y1 = region.min_x, region.max_x, region.min_y, region.max_y
    lines = []
    for y in range(y1, y0 - 1, -1):
        row = []
        for x in range(x0, x1 + 1):
            cell = (x, y)
            if cell not in region.cells:
                row.append("#")
            elif cell in at:
                row.append(at[cell])
            elif cell == region.door:
                row.append("S")
            else:
                row.append(".")
        lines.append("".join(row))
    return "\n".join(lines)


def _svg_frame(trace, t: int) -> str:
    region = trace.region
    robots = _frame_state(trace, t)
    x0, x1, y0, y1 = region.min_x, region.max_x, region.min_y, region.max_y
    w = x1 - x0 + 1
    h = y1 - y0 + 1
    s = 20  # pixels per cell
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w * s}" height="{h * s}" viewBox="0 0 {w * s} {h * s}">',
        f'<rect width="{w * s}" height="{h * s}" fill="white"/>',
    ]

    def corner(cell: Cell) -> tuple[int, int]:
        # y axis points up in grid space, down in SVG space
        return (cell[0] - x0) * s, (y1 - cell[1]) * s

    for y in range(y1, y0 - 1, -1):
        for x in range(x0, x1 + 1):
            if (x, y) not in region.cells:
                px, py = corner((x, y))
                parts.append(f'<rect x="{px}" y="{py}" width="{s}" height="{s}" fill="#444"/>')
    dx, dy = corner(region.door)
    parts.append(
        f'<rect x="{dx}" y="{dy}" width="{s}" height="{s}" fill="none" '
        f'stroke="#2a7" stroke-width="2"/>'
    )
    for rid in sorted(robots):
        cell, state, d = robots[rid]
        px, py = corner(cell)
        cx, cy = px + s // 2, py + s // 2
        if state == "S":
            pts = f"{cx},{py + 3} {px + s - 3},{cy} {cx},{py + s - 3} {px + 3},{cy}"
            parts.append(f'<polygon points="{pts}" fill="#c33"/>')
        else:
            pts = f"{cx},{py + 3} {px + s - 4},{py + s - 4} {px + 4},{py + s - 4}"
            rot = _SVG_ROT[d]
            parts.append(
                f'<polygon points="{pts}" fill="#36c" '
                f'transform="rotate({rot} {cx} {cy})"/>'
            )
    parts.append(f'<text x="2" y="12" font-size="10" fill="#999">t={t}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def svg_frames(trace, every: int, out_dir) -> list[str]:
    """Write frame_%06d.svg for steps every, 2*every, ... plus the final
    step; returns the file paths written."""
    if every < 1:
        raise ValueError("every must be >= 1")
    if trace.steps is None:
        raise ValueError("trace was recorded without steps")
    last = len(trace.steps)
    steps = sorted(set(range(every, last + 1, every)) | {last})
    os.makedirs(out_dir, exist_ok=True)
    written = []
    for t in steps:
        path = os.path.join(out_dir, f"frame_{t:06d}.svg")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(_svg_frame(trace, t))
        written.append(path)
    return written
