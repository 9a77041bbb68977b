# Knowledge-base filtration: keywords either resolve to a gazetteer entity
# or get dropped, because unresolvable keywords cannot become graph nodes.
# Two surface forms of the same entity merge into one linked keyword.

import json
import tempfile
from pathlib import Path

from interestgraph import filter_keywords, load_kb
from interestgraph.extraction import ScoredKeyword

GAZETTEER = [
    {
        "entity_id": "rust_language",
        "surface_forms": ["rust", "rustlang", "rust lang"],
        "short_description": "Systems programming language.",
        "outlinks": ["cargo"],
    },
    {
        "entity_id": "cargo",
        "surface_forms": ["cargo"],
        "short_description": "Rust's package manager.",
        "outlinks": ["rust_language"],
    },
]


def kw(phrase, frequency, score):
    return ScoredKeyword(phrase=phrase, frequency=frequency, rake_score=score,
                         phrase_len=len(phrase.split()), first_pos_norm=0.0,
                         composite_score=score)


with tempfile.TemporaryDirectory() as tmp:
    kb_path = Path(tmp) / "kb.json"
    kb_path.write_text(json.dumps(GAZETTEER))
    kb = load_kb(kb_path)

print(f"KB holds {len(kb)} entities")
print("lookup 'RustLang' ->", kb.resolve("RustLang").entity_id)
print("lookup 'borrow checker' ->", kb.resolve("borrow checker"))

keywords = [
    kw("rustlang", frequency=2, score=4.0),
    kw("borrow checker", frequency=3, score=3.5),   # not in the KB: dropped
    kw("cargo", frequency=1, score=2.0),
    kw("rust", frequency=5, score=1.7),             # same entity as 'rustlang'
]

print("\ninput keywords:", [k.phrase for k in keywords])
linked = filter_keywords(keywords, kb)
print("surviving entities:")
for lk in linked:
    print(f"  {lk.entity.entity_id:<14} via {lk.keyword.phrase!r}  "
          f"freq {lk.keyword.frequency}  score {lk.keyword.composite_score}")
    print(f"      {lk.entity.short_description}")

# 'rustlang' and 'rust' merged: frequencies added (2 + 5), best score kept.
# 'borrow checker' is gone; it had no KB entry to anchor it.
