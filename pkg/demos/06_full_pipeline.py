# The whole pipeline, staged: ingest -> extract -> link -> graph ->
# sentiment -> match. Each stage writes one JSON artifact into the output
# directory and reads only its predecessor's artifact, so stages can be
# rerun individually and always reproduce the same bytes.
#
# This script builds a miniature workspace in a temp directory; the same
# thing works from the shell:
#
#   interestgraph run-all --config pipeline.toml
#   interestgraph export --format dot --config pipeline.toml

import json
import tempfile
from pathlib import Path

from interestgraph.pipeline import PipelineConfig, export_stage_graph, run_all

POSTS = [
    {"id": "1", "user": "dana", "text": "I love hiking and trail running"},
    {"id": "2", "user": "dana", "text": "new trail shoes, great grip"},
    {"id": "3", "user": "dana", "text": "hiking this weekend. running later"},
    {"id": "4", "user": "eli", "text": "running shoes wear out fast, terrible"},
]

KB = [
    {"entity_id": "hiking", "surface_forms": ["hiking", "trail"],
     "short_description": "Walking long distances outdoors.", "outlinks": ["running"]},
    {"entity_id": "running", "surface_forms": ["running", "trail running"],
     "short_description": "Faster than walking.", "outlinks": ["hiking", "shoes"]},
    {"entity_id": "shoes", "surface_forms": ["shoes", "trail shoes", "running shoes"],
     "short_description": "Footwear.", "outlinks": ["running"]},
]

PRODUCTS = [
    {"product_id": "trail_shoes", "name": "Trail Shoes", "entity_ids": ["shoes", "running"]},
    {"product_id": "tent", "name": "Tent", "entity_ids": ["hiking"]},
]

LEXICON = "love\t0.9\t0.0\ngreat\t0.8\t0.0\nterrible\t0.0\t0.9\nfast\t0.3\t0.1\n"
STOPWORDS = "i\nand\nthis\nnew\nout\nlater\n"

with tempfile.TemporaryDirectory() as tmp:
    root = Path(tmp)
    (root / "posts.jsonl").write_text("\n".join(json.dumps(p) for p in POSTS))
    (root / "kb.json").write_text(json.dumps(KB))
    (root / "products.json").write_text(json.dumps(PRODUCTS))
    (root / "lexicon.tsv").write_text(LEXICON)
    (root / "stopwords.txt").write_text(STOPWORDS)

    cfg = PipelineConfig(
        corpus=root / "posts.jsonl",
        stopwords=root / "stopwords.txt",
        kb=root / "kb.json",
        lexicon=root / "lexicon.tsv",
        products=root / "products.json",
        output_dir=root / "out",
        tau=0.2,
        top_k=10,
    )
    report_path = run_all(cfg)

    print("\nfinal ranking:")
    for row in json.loads(report_path.read_text()):
        print(f"  {row['score']:.4f}  {row['product_id']}")

    print("\ninterest graph as DOT:")
    dot = export_stage_graph(cfg, "dot")
    print(dot.read_text())
