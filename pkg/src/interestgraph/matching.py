"""Product graphs and semantic-connection scoring against a user graph.

A product graph is built like an interest graph, except products have no
corpus: edges come from link overlap alone (the mix weight is forced to 1)
and salience is unit. The match score between two graphs is the weighted
bilinear sum over all node pairs

    score = sum_{u, p} rel(u, p) * w(u) * w(p)

with rel(u, p) = 1 for the same entity and the link-only relatedness
otherwise, and w the degree-plus-one weights normalized to sum to 1 inside
each graph. The +1 smoothing keeps isolated nodes contributing, and the
normalization bounds the score in [0, 1].
"""

import json
from dataclasses import dataclass, replace
from pathlib import Path

from .errors import ConfigError, EmptyGraphError, SchemaError, UnknownEntityError
from .graph import RelatednessConfig, SemanticGraph, relatedness
from .kb import KnowledgeBase

__all__ = [
    "ProductSpec",
    "PairContribution",
    "MatchResult",
    "load_products",
    "build_product_graph",
    "match_score",
    "rank_products",
]


@dataclass(frozen=True)
class ProductSpec:
    product_id: str
    name: str
    entity_ids: tuple[str, ...]


@dataclass(frozen=True)
class PairContribution:
    user_entity: str
    product_entity: str
    pair_score: float


@dataclass
class MatchResult:
    product_id: str
    score: float
    contributions: list[PairContribution]


def load_products(path: str | Path) -> list[ProductSpec]:
    """Load the catalog: JSON array of {product_id, name, entity_ids}."""
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"product file is not valid JSON: {exc.msg}") from exc
    if not isinstance(raw, list):
        raise SchemaError("product file must be a JSON array")
    specs = []
    for entry in raw:
        for field in ("product_id", "name", "entity_ids"):
            if field not in entry:
                raise SchemaError(f"product entry missing field {field!r}")
        if not entry["entity_ids"]:
            raise SchemaError(f"product {entry['product_id']!r} has no entity_ids")
        specs.append(ProductSpec(
            product_id=entry["product_id"],
            name=entry["name"],
            entity_ids=tuple(entry["entity_ids"]),
        ))
    return specs


def build_product_graph(spec: ProductSpec, kb: KnowledgeBase,
                        cfg: RelatednessConfig = RelatednessConfig()) -> SemanticGraph:
    """Interest-graph construction with unit salience and link-only edges."""
    for entity_id in spec.entity_ids:
        if entity_id not in kb:
            raise UnknownEntityError(
                f"product {spec.product_id!r} references unknown entity {entity_id!r}")

    link_cfg = replace(cfg, alpha=1.0)  # no corpus behind a product
    graph = SemanticGraph()
    ids = sorted(set(spec.entity_ids))
    for entity_id in ids:
        graph.add_node(entity_id, salience=1.0)
    for i, a in enumerate(ids):
        for b in ids[i + 1:]:
            rel = relatedness(kb[a], kb[b], None, link_cfg)
            if rel >= cfg.tau:
                graph.add_edge(a, b, rel)
    graph.assign_degree_weights()
    return graph


def _normalized_weights(g: SemanticGraph) -> dict[str, float]:
    """(degree + 1) weights scaled onto the simplex within the graph."""
    raw = {nid: g.nodes[nid].weight + 1.0 for nid in g.node_ids()}
    total = sum(raw.values())
    return {nid: w / total for nid, w in raw.items()}


def cross_relatedness(user_entity: str, product_entity: str, kb: KnowledgeBase,
                      cfg: RelatednessConfig) -> float:
    """Pair relatedness for scoring: 1 for the same entity, otherwise the
    graph-module mix with a zero co-occurrence term."""
    if user_entity == product_entity:
        return 1.0
    return relatedness(kb[user_entity], kb[product_entity], None, cfg)


def match_score(user: SemanticGraph, product: SemanticGraph, kb: KnowledgeBase,
                cfg: RelatednessConfig = RelatednessConfig(),
                product_id: str = "") -> MatchResult:
    """Weighted bilinear relatedness sum over user x product node pairs."""
    if len(user) == 0 or len(product) == 0:
        raise EmptyGraphError("match_score requires non-empty graphs")

    w_user = _normalized_weights(user)
    w_product = _normalized_weights(product)
    contributions = []
    score = 0.0
    for u in user.node_ids():
        for p in product.node_ids():
            rel = cross_relatedness(u, p, kb, cfg)
            pair = rel * w_user[u] * w_product[p]
            score += pair
            if pair > 0.0:
                contributions.append(PairContribution(
                    user_entity=u, product_entity=p, pair_score=pair))
    contributions.sort(key=lambda c: (-c.pair_score, c.user_entity, c.product_entity))
    return MatchResult(product_id=product_id, score=score, contributions=contributions)


def rank_products(user: SemanticGraph, specs: list[ProductSpec], kb: KnowledgeBase,
                  cfg: RelatednessConfig = RelatednessConfig()) -> list[MatchResult]:
    """One MatchResult per product, descending score, product_id tie-break."""
    if not specs:
        raise ConfigError("rank_products needs at least one product spec")
    results = []
    for spec in specs:
        product = build_product_graph(spec, kb, cfg)
        results.append(match_score(user, product, kb, cfg, product_id=spec.product_id))
    results.sort(key=lambda r: (-r.score, r.product_id))
    return results
