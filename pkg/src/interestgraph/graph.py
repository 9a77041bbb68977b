"""Semantic interest graph: entities as nodes, similarity-gated edges.

Relatedness between two entities mixes a structural signal with a
behavioral one: rel = alpha * J + (1 - alpha) * C, where J is the Jaccard
overlap of the self-augmented outlink sets and C is same-post NPMI clamped
to [0, 1]. An edge is drawn whenever rel clears the threshold tau, and each
node's weight is its resulting degree.

Exports (DOT / GraphML / JSON) are byte-deterministic: nodes ordered
lexicographically, edges by endpoint pair.
"""

import json
import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape, quoteattr

from .errors import ConfigError, SerializationError
from .kb import KbEntity, LinkedKeyword, contains_mention, mention_token_sequences
from .extraction import tokenize

__all__ = [
    "RelatednessConfig",
    "CooccurrenceStats",
    "SemanticGraph",
    "jaccard",
    "relatedness",
    "build_interest_graph",
    "export_graph",
    "graph_from_json",
]


@dataclass(frozen=True)
class RelatednessConfig:
    """alpha mixes link overlap vs co-occurrence; tau gates edges."""

    alpha: float = 0.5
    tau: float = 0.3
    cooccurrence_window: str = "same_post"

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ConfigError(f"alpha must be in [0, 1], got {self.alpha}")
        if not 0.0 <= self.tau <= 1.0:
            raise ConfigError(f"tau must be in [0, 1], got {self.tau}")
        if self.cooccurrence_window != "same_post":
            raise ConfigError(f"unknown cooccurrence window {self.cooccurrence_window!r}")


def _pair(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


@dataclass
class CooccurrenceStats:
    """Same-post entity occurrence counts backing the NPMI term."""

    n_posts: int
    post_counts: dict[str, int]
    pair_counts: dict[tuple[str, str], int]

    @classmethod
    def from_corpus(cls, corpus, entities: list[KbEntity]) -> "CooccurrenceStats":
        """Count, per entity and entity pair, the posts mentioning them.

        A post mentions an entity when any of its surface forms occurs as a
        contiguous token sequence in the post's token stream.
        """
        sequences = {e.entity_id: mention_token_sequences(e) for e in entities}
        post_counts: dict[str, int] = {e.entity_id: 0 for e in entities}
        pair_counts: dict[tuple[str, str], int] = {}
        n_posts = 0
        for post in corpus.posts:
            n_posts += 1
            tokens = tokenize(post.text)
            present = sorted(eid for eid, seqs in sequences.items()
                             if contains_mention(tokens, seqs))
            for eid in present:
                post_counts[eid] += 1
            for i, a in enumerate(present):
                for b in present[i + 1:]:
                    key = _pair(a, b)
                    pair_counts[key] = pair_counts.get(key, 0) + 1
        return cls(n_posts=n_posts, post_counts=post_counts, pair_counts=pair_counts)

    def npmi(self, a: str, b: str) -> float:
        """Normalized PMI over same-post co-occurrence, 0 when a and b
        never co-occur, 1 in the always-co-occur limit."""
        joint = self.pair_counts.get(_pair(a, b), 0)
        if joint == 0 or self.n_posts == 0:
            return 0.0
        p_ab = joint / self.n_posts
        p_a = self.post_counts.get(a, 0) / self.n_posts
        p_b = self.post_counts.get(b, 0) / self.n_posts
        if p_ab >= 1.0:
            return 1.0
        return math.log(p_ab / (p_a * p_b)) / (-math.log(p_ab))


def jaccard(a: set, b: set) -> float:
    union = a | b
    if not union:
        return 0.0
    return len(a & b) / len(union)


def relatedness(a: KbEntity, b: KbEntity,
                cooc: CooccurrenceStats | None = None,
                cfg: RelatednessConfig = RelatednessConfig()) -> float:
    """Symmetric [0, 1] relatedness between two distinct entities.

    The link term self-augments each outlink set with the entity itself, so
    an entity pointing at another scores nonzero overlap with it. Without
    co-occurrence stats the behavioral term is 0.
    """
    j = jaccard(set(a.outlinks) | {a.entity_id}, set(b.outlinks) | {b.entity_id})
    c = 0.0
    if cooc is not None:
        c = min(1.0, max(0.0, cooc.npmi(a.entity_id, b.entity_id)))
    return cfg.alpha * j + (1.0 - cfg.alpha) * c


@dataclass
class Node:
    weight: float = 0.0
    salience: float = 0.0


@dataclass
class SemanticGraph:
    """Weighted undirected graph; no self-loops, one edge per pair."""

    nodes: dict[str, Node] = field(default_factory=dict)
    edges: dict[tuple[str, str], float] = field(default_factory=dict)

    def add_node(self, entity_id: str, salience: float = 0.0, weight: float = 0.0):
        self.nodes[entity_id] = Node(weight=weight, salience=salience)

    def add_edge(self, a: str, b: str, rel: float):
        if a == b:
            raise ValueError(f"self-loop on {a!r}")
        if a not in self.nodes or b not in self.nodes:
            raise ValueError(f"edge endpoints {a!r}, {b!r} must be nodes")
        self.edges[_pair(a, b)] = rel

    def degree(self, entity_id: str) -> int:
        return sum(1 for (a, b) in self.edges if entity_id in (a, b))

    def assign_degree_weights(self, weighted: bool = False):
        """node_weight = number of incident edges, stored as real.

        weighted=True is the optional mode that sums incident relatedness
        values instead of counting edges; builders keep the raw-degree
        default.
        """
        for entity_id, node in self.nodes.items():
            if weighted:
                node.weight = sum(rel for (a, b), rel in self.edges.items()
                                  if entity_id in (a, b))
            else:
                node.weight = float(self.degree(entity_id))

    def node_ids(self) -> list[str]:
        return sorted(self.nodes)

    def sorted_edges(self) -> list[tuple[str, str, float]]:
        return [(a, b, self.edges[(a, b)]) for (a, b) in sorted(self.edges)]

    def __len__(self) -> int:
        return len(self.nodes)


def build_interest_graph(linked: list[LinkedKeyword], corpus, kb,
                         cfg: RelatednessConfig = RelatednessConfig()) -> SemanticGraph:
    """One node per linked entity (salience = composite score); edges where
    relatedness clears tau; weights = degree."""
    graph = SemanticGraph()
    entities: list[KbEntity] = []
    for lk in linked:
        graph.add_node(lk.entity.entity_id, salience=lk.keyword.composite_score)
        entities.append(lk.entity)

    cooc = CooccurrenceStats.from_corpus(corpus, entities)
    by_id = {e.entity_id: e for e in entities}
    ids = sorted(by_id)
    for i, a in enumerate(ids):
        for b in ids[i + 1:]:
            rel = relatedness(by_id[a], by_id[b], cooc, cfg)
            if rel >= cfg.tau:
                graph.add_edge(a, b, rel)
    graph.assign_degree_weights()
    return graph


def _fmt(x: float) -> str:
    """Shortest round-tripping decimal form, '2.0' style for whole floats."""
    return repr(float(x))


def _graph_payload(g: SemanticGraph) -> dict:
    return {
        "nodes": [{"id": nid, "weight": g.nodes[nid].weight, "salience": g.nodes[nid].salience}
                  for nid in g.node_ids()],
        "edges": [{"a": a, "b": b, "rel": rel} for a, b, rel in g.sorted_edges()],
    }


def _to_json(g: SemanticGraph) -> str:
    return json.dumps(_graph_payload(g), indent=2, sort_keys=True) + "\n"


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _to_dot(g: SemanticGraph) -> str:
    lines = ["graph G {"]
    for nid in g.node_ids():
        node = g.nodes[nid]
        lines.append(f"  {_dot_quote(nid)} [weight={_fmt(node.weight)}, salience={_fmt(node.salience)}];")
    for a, b, rel in g.sorted_edges():
        lines.append(f"  {_dot_quote(a)} -- {_dot_quote(b)} [rel={_fmt(rel)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _to_graphml(g: SemanticGraph) -> str:
    lines = [
        '<?xml version="1.0" encoding="utf-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
        '  <key id="weight" for="node" attr.name="weight" attr.type="double"/>',
        '  <key id="salience" for="node" attr.name="salience" attr.type="double"/>',
        '  <key id="rel" for="edge" attr.name="rel" attr.type="double"/>',
        '  <graph edgedefault="undirected">',
    ]
    for nid in g.node_ids():
        node = g.nodes[nid]
        lines.append(f"    <node id={quoteattr(nid)}>")
        lines.append(f'      <data key="weight">{escape(_fmt(node.weight))}</data>')
        lines.append(f'      <data key="salience">{escape(_fmt(node.salience))}</data>')
        lines.append("    </node>")
    for a, b, rel in g.sorted_edges():
        lines.append(f"    <edge source={quoteattr(a)} target={quoteattr(b)}>")
        lines.append(f'      <data key="rel">{escape(_fmt(rel))}</data>')
        lines.append("    </edge>")
    lines.append("  </graph>")
    lines.append("</graphml>")
    return "\n".join(lines) + "\n"


_EXPORTERS = {"json": _to_json, "dot": _to_dot, "graphml": _to_graphml}


def export_graph(g: SemanticGraph, format: str = "json") -> bytes:
    """Serialize deterministically; format is one of dot, graphml, json."""
    try:
        exporter = _EXPORTERS[format]
    except KeyError:
        raise ConfigError(f"unknown export format: {format!r}") from None
    try:
        return exporter(g).encode("utf-8")
    except (ValueError, TypeError) as exc:
        raise SerializationError(str(exc)) from exc


def graph_from_json(data: bytes | str) -> SemanticGraph:
    """Inverse of the JSON export; stored weights are preserved as-is."""
    payload = json.loads(data)
    graph = SemanticGraph()
    for node in payload["nodes"]:
        graph.add_node(node["id"], salience=float(node["salience"]),
                       weight=float(node["weight"]))
    for edge in payload["edges"]:
        graph.add_edge(edge["a"], edge["b"], float(edge["rel"]))
    return graph
