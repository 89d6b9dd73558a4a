"""Text formats: the .sg signed edge-list format and matrix dumps.

.sg format: `#` starts a comment, blank lines are ignored.  The first
effective line is `n <count>`, then one line per edge `u v s` with
s in {+, -, 1, -1}.  Writers emit edges canonically (u < v, sorted).
"""
from __future__ import annotations

import numpy as np

from .errors import DuplicateEdge, ParseError, SelfLoop, VertexOutOfRange
from .graphs import SignedGraph, build_graph, parse_sign, sign_char


def parse_sg(text: str) -> SignedGraph:
    """Parse .sg text into a SignedGraph; errors carry the offending line number."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise ParseError(f"line {lineno}: expected 'n <count>', got {line!r}")
            try:
                n = int(fields[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex count {fields[1]!r}") from None
            if n < 0:
                raise ParseError(f"line {lineno}: vertex count must be non-negative")
            continue
        if len(fields) != 3:
            raise ParseError(f"line {lineno}: expected 'u v s', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"line {lineno}: bad vertex token in {line!r}") from None
        try:
            s = parse_sign(fields[2])
        except ValueError:
            raise ParseError(f"line {lineno}: bad sign token {fields[2]!r}") from None
        edges.append((lineno, u, v, s))
    if n is None:
        raise ParseError("missing 'n <count>' header line")
    try:
        return build_graph(n, [(u, v, s) for _, u, v, s in edges])
    except (SelfLoop, DuplicateEdge, VertexOutOfRange) as exc:
        # locate the first line that triggers the same class of error
        seen: set[tuple[int, int]] = set()
        for lineno, u, v, s in edges:
            if u == v:
                raise ParseError(f"line {lineno}: self-loop at vertex {u}") from exc
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"line {lineno}: vertex out of range in edge ({u}, {v})") from exc
            pair = (min(u, v), max(u, v))
            if pair in seen:
                raise ParseError(f"line {lineno}: duplicate edge ({u}, {v})") from exc
            seen.add(pair)
        raise ParseError(str(exc)) from exc


def to_sg_text(g: SignedGraph) -> str:
    """Canonical .sg text (edges sorted, u < v, trailing newline)."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v} {sign_char(s)}" for u, v, s in g.edges)
    return "\n".join(lines) + "\n"


def to_edge_string(g: SignedGraph) -> str:
    """Single-line form of the .sg content, fields joined by '; '."""
    return to_sg_text(g).strip().replace("\n", "; ")


def from_edge_string(text: str) -> SignedGraph:
    return parse_sg(text.replace("; ", "\n"))


def read_sg(path) -> SignedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_sg(fh.read())


def write_sg(path, g: SignedGraph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_sg_text(g))


def format_matrix(m: np.ndarray) -> str:
    """Matrix dump: first line the order, then rows with 17 significant digits."""
    dim = m.shape[0]
    lines = [str(dim)]
    lines.extend(" ".join(f"{float(x):.17g}" for x in row) for row in m)
    return "\n".join(lines) + "\n"


def format_spectrum(values) -> str:
    """Ascending eigenvalues on one line, 17 significant digits."""
    return " ".join(f"{float(x):.17g}" for x in values)
