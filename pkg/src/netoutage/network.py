"""Directed acyclic source-terminal network model and ingestion.

A network is a multigraph: edges are identified by their zero-based
position in the edge list, never by their endpoint pair, so parallel
edges are first-class.  Edge subsets are plain ``int`` bitmasks (bit j
set = edge j in the subset), which caps the edge count at 63 so a subset
fits in one machine word.

Two ingestion formats are supported and produce identical networks:

* JSON: ``{"nodes": N, "edges": [{"tail": a, "head": b}, ...],
  "source": s, "terminal": t}``
* a DOT subset: a ``digraph`` whose statements are either plain edges
  ``a -> b;`` or the graph attributes ``source = ...;``,
  ``terminal = ...;`` and optionally ``nodes = N;``.  Node tokens that
  are all numeric are used directly as node indices; otherwise names
  are assigned dense indices in order of first appearance.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field

from .errors import (
    CyclicGraph,
    InvalidNetwork,
    NonPositiveSnr,
    NotConnected,
    ParseError,
    SourceEqualsTerminal,
    TooManyEdges,
)

MAX_EDGES = 63

__all__ = [
    "MAX_EDGES",
    "Network",
    "build_network",
    "rayleigh_outage_prob",
    "mask_from_indices",
    "indices_from_mask",
    "network_from_json",
    "network_from_dot",
    "load_network",
]


def mask_from_indices(indices) -> int:
    """Bitmask for a collection of edge indices."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def indices_from_mask(mask: int) -> tuple[int, ...]:
    """Sorted edge indices present in a bitmask."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class Network:
    """Validated directed acyclic network with designated source and terminal.

    Immutable after construction; safe to share across threads.  Use
    :func:`build_network` or the parsing helpers rather than calling the
    constructor with unchecked data.
    """

    node_count: int
    edges: tuple[tuple[int, int], ...]
    source: int
    terminal: int
    # topological rank per node, derived during validation
    topo_rank: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self._validate_indices()
        object.__setattr__(self, "edges", tuple((int(a), int(b)) for a, b in self.edges))
        if self.source == self.terminal:
            raise SourceEqualsTerminal(
                f"source and terminal are both node {self.source}"
            )
        if len(self.edges) > MAX_EDGES:
            raise TooManyEdges(
                f"{len(self.edges)} edges exceeds the {MAX_EDGES}-edge bitset limit"
            )
        object.__setattr__(self, "topo_rank", self._topological_ranks())
        if not self._terminal_reachable():
            raise NotConnected(
                f"no directed path from node {self.source} to node {self.terminal}"
            )

    def _validate_indices(self):
        if self.node_count < 2:
            raise InvalidNetwork("a network needs at least two nodes")
        for name, idx in (("source", self.source), ("terminal", self.terminal)):
            if not 0 <= idx < self.node_count:
                raise InvalidNetwork(f"{name} index {idx} out of range")
        for j, (tail, head) in enumerate(self.edges):
            if not (0 <= tail < self.node_count and 0 <= head < self.node_count):
                raise InvalidNetwork(f"edge {j} endpoints ({tail}, {head}) out of range")

    def _topological_ranks(self) -> tuple[int, ...]:
        indeg = [0] * self.node_count
        succ: list[list[int]] = [[] for _ in range(self.node_count)]
        for tail, head in self.edges:
            indeg[head] += 1
            succ[tail].append(head)
        order = [v for v in range(self.node_count) if indeg[v] == 0]
        rank = [-1] * self.node_count
        seen = 0
        while order:
            v = order.pop()
            rank[v] = seen
            seen += 1
            for w in succ[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    order.append(w)
        if seen != self.node_count:
            raise CyclicGraph("the directed graph contains a cycle")
        return tuple(rank)

    def _terminal_reachable(self) -> bool:
        succ: list[list[int]] = [[] for _ in range(self.node_count)]
        for tail, head in self.edges:
            succ[tail].append(head)
        stack = [self.source]
        seen = {self.source}
        while stack:
            v = stack.pop()
            if v == self.terminal:
                return True
            for w in succ[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return False

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def full_edge_mask(self) -> int:
        return (1 << len(self.edges)) - 1

    def out_edges(self, node: int) -> tuple[int, ...]:
        return tuple(j for j, (tail, _) in enumerate(self.edges) if tail == node)

    def edges_in_topo_order(self) -> tuple[int, ...]:
        """Edge indices sorted so every edge's tail precedes its head."""
        rank = self.topo_rank
        return tuple(sorted(range(len(self.edges)), key=lambda j: (rank[self.edges[j][0]], j)))


def build_network(node_count: int, edge_list, source: int, terminal: int) -> Network:
    """Validate and construct a :class:`Network`.

    Raises :class:`SourceEqualsTerminal`, :class:`CyclicGraph`,
    :class:`NotConnected`, :class:`TooManyEdges`, or
    :class:`InvalidNetwork` on bad input.
    """
    return Network(node_count, tuple(tuple(e) for e in edge_list), source, terminal)


def rayleigh_outage_prob(mean_snr: float) -> float:
    """Link outage probability 1 - exp(-1/mean_snr) under Rayleigh fading."""
    if not mean_snr > 0:
        raise NonPositiveSnr(f"mean SNR must be positive, got {mean_snr}")
    return -math.expm1(-1.0 / mean_snr)


def network_from_json(text: str) -> Network:
    """Parse the canonical JSON network format."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("network JSON must be an object")
    try:
        nodes = doc["nodes"]
        raw_edges = doc["edges"]
        source = doc["source"]
        terminal = doc["terminal"]
    except KeyError as exc:
        raise ParseError(f"network JSON missing key {exc}") from exc
    if not isinstance(raw_edges, list):
        raise ParseError('"edges" must be an array')
    edges = []
    for j, e in enumerate(raw_edges):
        if not isinstance(e, dict) or "tail" not in e or "head" not in e:
            raise ParseError(f'edge {j} must be an object with "tail" and "head"')
        edges.append((e["tail"], e["head"]))
    return build_network(nodes, edges, source, terminal)


_DOT_EDGE = re.compile(r"^(\S+)\s*->\s*(\S+)$")
_DOT_ATTR = re.compile(r"^(\w+)\s*=\s*(\S+)$")


def network_from_dot(text: str) -> Network:
    """Parse the DOT subset (see module docstring)."""
    body = text
    if "{" in body:
        try:
            body = body[body.index("{") + 1 : body.rindex("}")]
        except ValueError as exc:
            raise ParseError("unbalanced braces in DOT input") from exc
    elif body.strip().startswith("digraph"):
        raise ParseError("digraph without a { ... } body")

    numeric = re.compile(r"^\d+$")
    name_to_index: dict[str, int] = {}
    all_numeric = True
    statements = []
    for lineno, line in enumerate(body.splitlines(), start=1):
        line = line.split("//")[0].strip()
        if not line:
            continue
        for stmt in filter(None, (s.strip() for s in line.split(";"))):
            statements.append((lineno, stmt))
            m = _DOT_EDGE.match(stmt)
            if m and not (numeric.match(m.group(1)) and numeric.match(m.group(2))):
                all_numeric = False

    def node_index(token: str) -> int:
        if all_numeric:
            return int(token)
        if token not in name_to_index:
            name_to_index[token] = len(name_to_index)
        return name_to_index[token]

    edges: list[tuple[int, int]] = []
    attrs: dict[str, str] = {}
    for lineno, stmt in statements:
        m = _DOT_EDGE.match(stmt)
        if m:
            edges.append((node_index(m.group(1)), node_index(m.group(2))))
            continue
        m = _DOT_ATTR.match(stmt)
        if m:
            attrs[m.group(1)] = m.group(2)
            continue
        raise ParseError(f"line {lineno}: cannot parse DOT statement {stmt!r}")

    for key in ("source", "terminal"):
        if key not in attrs:
            raise ParseError(f"DOT input missing graph attribute {key!r}")

    def attr_node(key: str) -> int:
        token = attrs[key]
        if token in name_to_index:
            return name_to_index[token]
        if numeric.match(token):
            return int(token)
        raise ParseError(f"{key} = {token!r} names an unknown node")

    source = attr_node("source")
    terminal = attr_node("terminal")
    max_seen = max(
        [source, terminal] + [v for e in edges for v in e],
        default=0,
    )
    if "nodes" in attrs:
        if not numeric.match(attrs["nodes"]):
            raise ParseError(f"nodes = {attrs['nodes']!r} is not an integer")
        nodes = int(attrs["nodes"])
    else:
        nodes = max_seen + 1
    return build_network(nodes, edges, source, terminal)


def load_network(path: str, fmt: str = "auto") -> Network:
    """Read a network file; fmt is 'json', 'dot', or 'auto' (by extension)."""
    with open(path, encoding="utf-8") as handle:
        text = handle.read()
    if fmt == "auto":
        lowered = path.lower()
        fmt = "dot" if lowered.endswith((".dot", ".gv")) else "json"
    if fmt == "json":
        return network_from_json(text)
    if fmt == "dot":
        return network_from_dot(text)
    raise ParseError(f"unknown network format {fmt!r}")
