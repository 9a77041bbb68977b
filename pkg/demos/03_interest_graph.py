# Building the interest graph. Nodes are the user's linked entities; an edge
# appears when two entities are related enough: a mix of how much their KB
# outlink neighbourhoods overlap (Jaccard) and how often they show up in the
# same posts (normalized PMI), gated by the threshold tau.

from interestgraph import (
    CooccurrenceStats,
    KbEntity,
    KnowledgeBase,
    LinkedKeyword,
    RelatednessConfig,
    build_interest_graph,
    export_graph,
    relatedness,
)
from interestgraph.corpus import Corpus, Post, assign_author_ids
from interestgraph.extraction import ScoredKeyword


def entity(eid, outlinks):
    return KbEntity(entity_id=eid, surface_forms=frozenset({eid}),
                    short_description="", outlinks=frozenset(outlinks))


def linked(ent, salience):
    kw = ScoredKeyword(phrase=ent.entity_id, frequency=1, rake_score=salience,
                       phrase_len=1, first_pos_norm=0.0, composite_score=salience)
    return LinkedKeyword(keyword=kw, entity=ent)


entities = [
    entity("espresso", {"caffeine"}),
    entity("caffeine", {"espresso"}),
    entity("guitar", {"music"}),
    entity("music", {"guitar", "caffeine"}),   # musicians drink espresso too
]
kb = KnowledgeBase(entities)

posts = [Post(id=str(i), author_screen_name="sam", author_id=0, text=t)
         for i, t in enumerate([
             "espresso before guitar practice",
             "caffeine and more espresso",
             "new guitar, loud music",
             "music needs caffeine",
         ])]
corpus = assign_author_ids(Corpus(posts=posts, author_table={}))

cfg = RelatednessConfig(alpha=0.5, tau=0.3)
cooc = CooccurrenceStats.from_corpus(corpus, entities)
print("pairwise relatedness (alpha=0.5):")
for i, a in enumerate(entities):
    for b in entities[i + 1:]:
        rel = relatedness(a, b, cooc, cfg)
        print(f"  {a.entity_id:<9} -- {b.entity_id:<9} {rel:.3f}")

graph = build_interest_graph([linked(e, 1.0) for e in entities], corpus, kb, cfg)
print(f"\ngraph at tau={cfg.tau}: {len(graph.nodes)} nodes, {len(graph.edges)} edges")
for nid in graph.node_ids():
    print(f"  {nid:<9} degree weight {graph.nodes[nid].weight:.0f}")

# Raising tau only removes edges, never adds them.
for tau in (0.0, 0.4, 0.8):
    g = build_interest_graph([linked(e, 1.0) for e in entities], corpus, kb,
                             RelatednessConfig(alpha=0.5, tau=tau))
    print(f"tau={tau}: {len(g.edges)} edges")

print("\nDOT export:")
print(export_graph(graph, "dot").decode())
