# Product ranking. Each product is described by KB entities and becomes its
# own small graph (link-overlap edges only; products have no post corpus).
# The match score against the user graph is a weighted sum of relatedness
# over every (user node, product node) pair, where each node's weight is its
# degree + 1, normalized inside its graph. Shared entities contribute rel 1.

from interestgraph import (
    KbEntity,
    KnowledgeBase,
    ProductSpec,
    RelatednessConfig,
    build_product_graph,
    rank_products,
)
from interestgraph.graph import SemanticGraph


def entity(eid, outlinks=()):
    return KbEntity(entity_id=eid, surface_forms=frozenset({eid}),
                    short_description="", outlinks=frozenset(outlinks))


kb = KnowledgeBase([
    entity("espresso", {"caffeine", "grinder"}),
    entity("caffeine", {"espresso"}),
    entity("grinder", {"espresso"}),
    entity("guitar", {"music"}),
    entity("music", {"guitar"}),
])

# Interest graph stand-in: a coffee-heavy user, one music interest.
user = SemanticGraph()
for eid in ("espresso", "caffeine", "guitar"):
    user.add_node(eid, salience=1.0)
user.add_edge("espresso", "caffeine", 0.8)
user.assign_degree_weights()

catalog = [
    ProductSpec("barista_kit", "Home Barista Kit", ("espresso", "grinder", "caffeine")),
    ProductSpec("guitar_amp", "Tube Guitar Amp", ("guitar", "music")),
    ProductSpec("desk_lamp", "Desk Lamp", ("music",)),   # weak on all counts
]

cfg = RelatednessConfig(alpha=0.5, tau=0.3)
for spec in catalog:
    g = build_product_graph(spec, kb, cfg)
    print(f"{spec.product_id}: {len(g.nodes)} nodes, {len(g.edges)} internal edges")

print("\nranking:")
for result in rank_products(user, catalog, kb, cfg):
    print(f"  {result.score:.4f}  {result.product_id}")
    for c in result.contributions[:3]:
        print(f"          {c.pair_score:.4f} from {c.user_entity} x {c.product_entity}")
