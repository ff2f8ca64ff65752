"""Instance and solution file formats.

Instances use a weighted DIMACS dialect::

    c optional comments
    p edge <nodes> <edges>
    v <id> <weight>        (optional; missing nodes default to weight 1)
    e <u> <v>

Ids are 1-based in files and 0-based in memory.  :func:`write_instance`
emits the canonical form — header, then all ``v`` lines sorted by id, then
all ``e`` lines sorted with u < v, LF endings — so writing a parsed
canonical file reproduces it byte for byte.

Solutions are JSON objects with the keys ``weight``, ``optimal``,
``nodes``, ``side_a``, ``side_b`` (ids 1-based) and ``stats``.
"""

from __future__ import annotations

import json

from .graph import Bipartition, WeightedGraph, from_edge_list
from .reduction import BipartiteSolution
from .solvers import SearchStats


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def parse_instance(text: str) -> WeightedGraph:
    """Parse the weighted DIMACS dialect into a normalized graph."""
    node_count = -1
    declared_edges = -1
    header_line = 0
    weights: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "p":
            if node_count >= 0:
                raise ParseError("duplicate header", line_no)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError("malformed header, expected 'p edge <n> <m>'", line_no)
            node_count, declared_edges = _int(parts[2], line_no), _int(parts[3], line_no)
            if node_count < 0 or declared_edges < 0:
                raise ParseError("negative count in header", line_no)
            header_line = line_no
        elif kind == "v":
            if node_count < 0:
                raise ParseError("'v' line before header", line_no)
            if len(parts) != 3:
                raise ParseError("malformed 'v' line, expected 'v <id> <weight>'", line_no)
            node = _int(parts[1], line_no)
            weight = _int(parts[2], line_no)
            if not (1 <= node <= node_count):
                raise ParseError(f"node id {node} out of range 1..{node_count}", line_no)
            if node - 1 in weights:
                raise ParseError(f"duplicate weight for node {node}", line_no)
            if weight < 0:
                raise ParseError(f"negative weight {weight}", line_no)
            weights[node - 1] = weight
        elif kind == "e":
            if node_count < 0:
                raise ParseError("'e' line before header", line_no)
            if len(parts) != 3:
                raise ParseError("malformed 'e' line, expected 'e <u> <v>'", line_no)
            u = _int(parts[1], line_no)
            v = _int(parts[2], line_no)
            if u == v:
                raise ParseError(f"self-loop at node {u}", line_no)
            for node in (u, v):
                if not (1 <= node <= node_count):
                    raise ParseError(
                        f"node id {node} out of range 1..{node_count}", line_no
                    )
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {kind!r}", line_no)
    if node_count < 0:
        raise ParseError("missing 'p edge' header")
    if len(edges) != declared_edges:
        raise ParseError(
            f"header declares {declared_edges} edges but file has {len(edges)}",
            header_line,
        )
    weight_list = [weights.get(v, 1) for v in range(node_count)]
    try:
        return from_edge_list(node_count, edges, weight_list)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _int(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", line_no) from None


def write_instance(g: WeightedGraph) -> str:
    """Canonical instance text for ``g`` (see module docstring)."""
    lines = [f"p edge {g.node_count} {g.edge_count}"]
    for v in range(g.node_count):
        lines.append(f"v {v + 1} {g.weights[v]}")
    for u, v in sorted(g.edges()):
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def write_solution(
    sol: BipartiteSolution,
    *,
    optimal: bool,
    stats: SearchStats | None = None,
) -> str:
    """Render a solution as schema JSON (ids 1-based, sorted)."""
    payload: dict = {
        "weight": sol.weight,
        "optimal": optimal,
        "nodes": [v + 1 for v in sorted(sol.node_set)],
        "side_a": [v + 1 for v in sorted(sol.bipartition.side_a)],
        "side_b": [v + 1 for v in sorted(sol.bipartition.side_b)],
        "stats": {},
    }
    if stats is not None:
        payload["stats"] = {
            "search_nodes": stats.search_nodes,
            "reductions": {k: stats.reductions[k] for k in sorted(stats.reductions)},
            "elapsed_ms": round(stats.elapsed_s * 1000.0, 3),
        }
    return json.dumps(payload, indent=2) + "\n"


def parse_solution(text: str) -> tuple[BipartiteSolution, bool]:
    """Parse solution JSON into a (solution, claimed-optimal) pair.

    Only shape and id validity are checked here; semantic validity against
    a graph is the verifier's job, so tampered solutions parse fine and
    fail verification.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise ParseError("solution must be a JSON object")
    for key in ("weight", "optimal", "nodes", "side_a", "side_b"):
        if key not in payload:
            raise ParseError(f"solution is missing the {key!r} field")
    if not isinstance(payload["weight"], int) or isinstance(payload["weight"], bool):
        raise ParseError("'weight' must be an integer")
    if not isinstance(payload["optimal"], bool):
        raise ParseError("'optimal' must be a boolean")
    nodes = _id_list(payload, "nodes")
    side_a = _id_list(payload, "side_a")
    side_b = _id_list(payload, "side_b")
    sol = BipartiteSolution(
        node_set=nodes,
        bipartition=Bipartition(side_a, side_b),
        weight=payload["weight"],
    )
    return sol, payload["optimal"]


def _id_list(payload: dict, key: str) -> frozenset[int]:
    value = payload[key]
    if not isinstance(value, list):
        raise ParseError(f"{key!r} must be a list of 1-based node ids")
    out = set()
    for item in value:
        if not isinstance(item, int) or isinstance(item, bool) or item < 1:
            raise ParseError(f"{key!r} contains an invalid id: {item!r}")
        out.add(item - 1)
    return frozenset(out)
