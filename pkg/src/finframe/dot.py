"""DOT export of Hasse diagrams: covering edges only, drawn bottom-to-top."""

from __future__ import annotations

from .frame import Frame, iter_bits
from .sublocales import DEFAULT_ENUM_CAP, enumerate_sublocales

__all__ = ["export_frame_dot", "export_sublocales_dot"]


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _render(node_labels, covers) -> str:
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for i, label in enumerate(node_labels):
        lines.append(f"  n{i} [label={_quote(label)}];")
    for a, b in covers:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _covers_from_up(count, strictly_below) -> list:
    """Covering pairs of a finite order given a strict comparison predicate."""
    pairs = []
    for a in range(count):
        for b in range(count):
            if not strictly_below(a, b):
                continue
            if any(strictly_below(a, c) and strictly_below(c, b) for c in range(count)):
                continue
            pairs.append((a, b))
    return pairs


def export_frame_dot(frame: Frame) -> str:
    """Hasse diagram of the frame's element order."""
    up = frame.up

    def below(a, b):
        return a != b and (up[a] >> b) & 1

    return _render(frame.labels, _covers_from_up(frame.size, below))


def export_sublocales_dot(frame: Frame, cap: int = DEFAULT_ENUM_CAP) -> str:
    """Hasse diagram of the sublocale lattice, ordered by inclusion."""
    subs = enumerate_sublocales(frame, cap)
    masks = [s.members for s in subs]

    def below(a, b):
        return masks[a] != masks[b] and masks[a] & ~masks[b] == 0

    labels = ["{" + ",".join(frame.labels[e] for e in iter_bits(m)) + "}" for m in masks]
    return _render(labels, _covers_from_up(len(masks), below))
