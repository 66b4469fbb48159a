"""JSON and DOT encodings shared by the library and the command line."""
from __future__ import annotations

import json
import math

from .chords import Chord, ChordDiagram
from .ncpart import NCPartition


def diagram_to_json(d):
    chords = []
    for t, c in enumerate(d.chords):
        entry = {"a": c.a, "b": c.b}
        if d.labels is not None:
            entry["label"] = d.labels[t]
        if d.heads is not None:
            entry["dir"] = "ab" if d.heads[t] == c.b else "ba"
        chords.append(entry)
    return {"n_points": d.n_points, "chords": chords}


def diagram_from_json(data):
    n = int(data["n_points"]) - 1
    entries = data["chords"]
    chords, labels, heads = [], [], []
    for e in entries:
        a, b = int(e["a"]), int(e["b"])
        direction = e.get("dir")
        if direction is not None:
            if direction not in ("ab", "ba"):
                raise ValueError(f"dir must be 'ab' or 'ba', got {direction!r}")
            heads.append(b if direction == "ab" else a)
        chords.append(Chord(a, b))
        if "label" in e:
            labels.append(int(e["label"]))
    for got, name in ((labels, "label"), (heads, "dir")):
        if got and len(got) != len(entries):
            raise ValueError(f"'{name}' must be given for every chord or for none")
    return ChordDiagram(n, tuple(chords), tuple(labels) or None, tuple(heads) or None)


def point_position(p, n_points, radius=2.0):
    """Marked point ``p`` on a circle, counterclockwise from the top."""
    angle = math.radians(90.0 + 360.0 * p / n_points)
    return radius * math.cos(angle), radius * math.sin(angle)


def diagram_to_dot(d, name="diagram"):
    lines = [f"graph {name} {{", "  layout=neato;", "  node [shape=circle, width=0.3, fixedsize=true];"]
    if d.heads is not None:
        lines[0] = f"digraph {name} {{"
    for p in range(d.n_points):
        x, y = point_position(p, d.n_points)
        lines.append(f'  {p} [pos="{x:.4f},{y:.4f}!"];')
    edge = "->" if d.heads is not None else "--"
    for t, c in enumerate(d.chords):
        tail, head = (c.a, c.b) if d.heads is None else (c.other(d.heads[t]), d.heads[t])
        attrs = []
        if d.labels is not None:
            attrs.append(f'label="{d.labels[t]}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {tail} {edge} {head}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_dot(P, name="poset"):
    """Hasse diagram with edges pointing from lower to upper element."""
    index = {x: t for t, x in enumerate(P.elements)}
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for x, t in index.items():
        lines.append(f'  {t} [label="{x}"];')
    for lo, hi in sorted(P.covers, key=lambda e: (index[e[0]], index[e[1]])):
        lines.append(f"  {index[lo]} -> {index[hi]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def partition_from_json(blocks):
    return NCPartition.from_blocks(blocks)


def chain_to_json(chain):
    return [p.to_json() for p in chain]


def chain_from_json(data):
    return tuple(partition_from_json(blocks) for blocks in data)


def dumps(obj):
    """Canonical JSON text: sorted keys, compact separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
