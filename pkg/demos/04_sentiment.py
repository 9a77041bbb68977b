# Opinion scoring with a plain lexicon. Every word carries (pos, neg) with
# pos + neg <= 1; the remainder is objectivity. A post averages its scored
# tokens, a keyword averages the posts that mention it, and the label comes
# from an epsilon-wide neutral band around pos == neg.

from interestgraph import LinkedKeyword, score_keyword, score_post
from interestgraph.corpus import Corpus, Post, assign_author_ids
from interestgraph.extraction import ScoredKeyword
from interestgraph.kb import KbEntity
from interestgraph.sentiment import Lexicon, LexiconEntry

lexicon = Lexicon({
    term: LexiconEntry(term=term, pos=p, neg=n)
    for term, (p, n) in {
        "love": (0.9, 0.0),
        "great": (0.8, 0.0),
        "terrible": (0.0, 0.9),
        "overpriced": (0.0, 0.6),
        "crisp": (0.6, 0.0),
    }.items()
})

posts = [Post(id=str(i), author_screen_name="kim", author_id=0, text=t)
         for i, t in enumerate([
             "I love this espresso machine, great crema",
             "espresso tastes terrible when the machine is overpriced",
             "the espresso grinder arrived today",
             "crisp morning, crisp espresso",
         ])]
corpus = assign_author_ids(Corpus(posts=posts, author_table={}))

print("per-post opinions:")
for post in corpus:
    s = score_post(post, lexicon)
    print(f"  ({s.pos:.3f} pos, {s.neg:.3f} neg, {s.obj:.3f} obj) "
          f"{s.label:<9} | {post.text}")

machine = KbEntity(entity_id="espresso", surface_forms=frozenset({"espresso"}),
                   short_description="", outlinks=frozenset())
kw = ScoredKeyword(phrase="espresso", frequency=4, rake_score=1.0, phrase_len=1,
                   first_pos_norm=0.0, composite_score=1.0)
linked = [LinkedKeyword(keyword=kw, entity=machine)]

overall = score_keyword("espresso", corpus, linked, lexicon)
print(f"\nkeyword 'espresso' over all mentioning posts: "
      f"({overall.pos:.3f}, {overall.neg:.3f}, {overall.obj:.3f}) -> {overall.label}")

# A wider neutral band flips borderline calls to objective.
cautious = score_keyword("espresso", corpus, linked, lexicon, epsilon=0.5)
print(f"same scores with epsilon=0.5 -> {cautious.label}")
