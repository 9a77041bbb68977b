"""Staged pipeline: ingest -> extract -> link -> graph -> sentiment -> match.

Every stage reads its predecessor's JSON artifact from the output directory
and writes one deterministic JSON artifact of its own, so a stage can be
rerun (or its downstream deleted) and reproduce byte-identical bytes. One
summary line per stage goes to stdout. A lock file guards the output
directory against concurrent invocations.

Configuration is a flat TOML file; every key can be overridden by a CLI
flag of the same name. Relative paths inside the file resolve against the
file's own directory.
"""

import contextlib
import json
import os
from dataclasses import asdict, dataclass, fields
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from . import corpus as corpus_mod
from . import extraction, kb as kb_mod, matching, sentiment as sentiment_mod
from .errors import (
    ConfigError,
    InterestGraphError,
    MissingUpstreamError,
    OutputLockedError,
    SerializationError,
)
from .graph import RelatednessConfig, build_interest_graph, export_graph, graph_from_json

__all__ = ["PipelineConfig", "load_config", "run_stage", "run_all",
           "export_stage_graph", "STAGES", "ARTIFACTS", "StageError"]

STAGES = ("ingest", "extract", "link", "graph", "sentiment", "match")

ARTIFACTS = {
    "ingest": "corpus.json",
    "extract": "keywords.json",
    "link": "linked.json",
    "graph": "interest_graph.json",
    "sentiment": "sentiment.json",
    "match": "match_report.json",
}

_UPSTREAM = {
    "ingest": (),
    "extract": ("ingest",),
    "link": ("extract",),
    "graph": ("link", "ingest"),
    "sentiment": ("link", "ingest"),
    "match": ("graph",),
}

_EXPORT_FORMATS = ("dot", "graphml", "json")


class StageError(InterestGraphError):
    """A stage failed; carries the stage name and the original error."""

    def __init__(self, stage: str, cause: Exception):
        self.stage = stage
        self.cause = cause
        super().__init__(f"stage '{stage}': {cause}")


@dataclass
class PipelineConfig:
    corpus: Path | None = None
    stopwords: Path | None = None
    kb: Path | None = None
    lexicon: Path | None = None
    products: Path | None = None
    output_dir: Path | None = None
    corpus_format: str = "jsonl"
    beta: float = 0.0
    gamma: float = 0.0
    max_phrase_len: int = 4
    top_k: int = 20
    alpha: float = 0.5
    tau: float = 0.3
    epsilon: float = 0.05
    export_formats: tuple[str, ...] = ("json",)

    def __post_init__(self):
        self.validate()

    def validate(self):
        """Range-check every numeric knob; raises ConfigError."""
        extraction.FeatureWeights(self.beta, self.gamma)
        RelatednessConfig(self.alpha, self.tau)
        if self.max_phrase_len < 1:
            raise ConfigError(f"max_phrase_len must be >= 1, got {self.max_phrase_len}")
        if self.top_k < 1:
            raise ConfigError(f"top_k must be >= 1, got {self.top_k}")
        if self.epsilon < 0:
            raise ConfigError(f"epsilon must be >= 0, got {self.epsilon}")
        if self.corpus_format not in ("jsonl", "plain_lines"):
            raise ConfigError(f"unknown corpus_format {self.corpus_format!r}")
        for fmt in self.export_formats:
            if fmt not in _EXPORT_FORMATS:
                raise ConfigError(f"unknown export format {fmt!r}")

    def require_path(self, name: str) -> Path:
        value = getattr(self, name)
        if value is None:
            raise ConfigError(f"config is missing the {name!r} path")
        return Path(value)

    def input_file(self, name: str) -> Path:
        path = self.require_path(name)
        if not path.is_file():
            raise FileNotFoundError(f"{name} file not found: {path}")
        return path

    def artifact_path(self, stage: str) -> Path:
        return self.require_path("output_dir") / ARTIFACTS[stage]


_PATH_KEYS = ("corpus", "stopwords", "kb", "lexicon", "products", "output_dir")


def load_config(path: str | Path) -> PipelineConfig:
    """Parse a flat TOML config; unknown keys are rejected."""
    path = Path(path)
    with open(path, "rb") as fh:
        raw = tomllib.load(fh)

    known = {f.name for f in fields(PipelineConfig)}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")

    kwargs = {}
    for key, value in raw.items():
        if key in _PATH_KEYS:
            p = Path(value)
            kwargs[key] = p if p.is_absolute() else (path.parent / p)
        elif key == "export_formats":
            kwargs[key] = tuple(value)
        else:
            kwargs[key] = value
    return PipelineConfig(**kwargs)


@contextlib.contextmanager
def _output_lock(output_dir: Path):
    output_dir.mkdir(parents=True, exist_ok=True)
    lock = output_dir / ".interestgraph.lock"
    try:
        fd = os.open(lock, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
    except FileExistsError:
        raise OutputLockedError(
            f"output directory {output_dir} is locked by another run "
            f"(remove {lock} if that run is dead)") from None
    try:
        os.close(fd)
        yield
    finally:
        with contextlib.suppress(FileNotFoundError):
            os.unlink(lock)


def _write_artifact(path: Path, payload) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    path.write_text(text, encoding="utf-8")


def _read_artifact(stage: str, cfg: PipelineConfig):
    path = cfg.artifact_path(stage)
    if not path.is_file():
        raise MissingUpstreamError(stage, str(path))
    return json.loads(path.read_text(encoding="utf-8"))


def _require_upstream(stage: str, cfg: PipelineConfig) -> None:
    for upstream in _UPSTREAM[stage]:
        if not cfg.artifact_path(upstream).is_file():
            raise MissingUpstreamError(upstream, str(cfg.artifact_path(upstream)))


def _load_corpus_artifact(cfg: PipelineConfig) -> corpus_mod.Corpus:
    data = _read_artifact("ingest", cfg)
    posts = [corpus_mod.Post(**row) for row in data["posts"]]
    return corpus_mod.Corpus(posts=posts, author_table=data["author_table"])


def _load_linked_artifact(cfg: PipelineConfig, kb: kb_mod.KnowledgeBase) -> list[kb_mod.LinkedKeyword]:
    rows = _read_artifact("link", cfg)
    linked = []
    for row in rows:
        keyword = extraction.ScoredKeyword(
            phrase=row["phrase"],
            frequency=row["frequency"],
            rake_score=row["rake_score"],
            phrase_len=row["phrase_len"],
            first_pos_norm=row["first_pos_norm"],
            composite_score=row["composite_score"],
        )
        linked.append(kb_mod.LinkedKeyword(keyword=keyword, entity=kb[row["entity_id"]]))
    return linked


def _stage_ingest(cfg: PipelineConfig):
    loaded = corpus_mod.load_corpus(cfg.input_file("corpus"), cfg.corpus_format)
    payload = {
        "author_table": loaded.author_table,
        "posts": [asdict(p) for p in loaded.posts],
    }
    _write_artifact(cfg.artifact_path("ingest"), payload)
    return f"{len(loaded.posts)} posts, {len(loaded.author_table)} authors"


def _stage_extract(cfg: PipelineConfig):
    loaded = _load_corpus_artifact(cfg)
    stopwords = extraction.load_stopwords(cfg.input_file("stopwords"))
    candidates = extraction.extract_corpus_candidates(loaded, stopwords, cfg.max_phrase_len)
    weights = extraction.FeatureWeights(cfg.beta, cfg.gamma)
    ranked = extraction.top_k(extraction.score_keywords(candidates, weights), cfg.top_k)
    _write_artifact(cfg.artifact_path("extract"), [asdict(kw) for kw in ranked])
    return f"{len(candidates)} candidates -> {len(ranked)} keywords"


def _stage_link(cfg: PipelineConfig):
    rows = _read_artifact("extract", cfg)
    keywords = [extraction.ScoredKeyword(**row) for row in rows]
    kb = kb_mod.load_kb(cfg.input_file("kb"))
    linked = kb_mod.filter_keywords(keywords, kb)
    payload = [{"entity_id": lk.entity.entity_id,
                "short_description": lk.entity.short_description,
                **asdict(lk.keyword)} for lk in linked]
    _write_artifact(cfg.artifact_path("link"), payload)
    return f"{len(linked)} of {len(keywords)} keywords resolved in KB"


def _stage_graph(cfg: PipelineConfig):
    kb = kb_mod.load_kb(cfg.input_file("kb"))
    linked = _load_linked_artifact(cfg, kb)
    loaded = _load_corpus_artifact(cfg)
    rel_cfg = RelatednessConfig(cfg.alpha, cfg.tau)
    graph = build_interest_graph(linked, loaded, kb, rel_cfg)
    cfg.artifact_path("graph").write_bytes(export_graph(graph, "json"))
    return f"{len(graph.nodes)} nodes, {len(graph.edges)} edges (tau={cfg.tau})"


def _stage_sentiment(cfg: PipelineConfig):
    kb = kb_mod.load_kb(cfg.input_file("kb"))
    linked = _load_linked_artifact(cfg, kb)
    loaded = _load_corpus_artifact(cfg)
    lexicon = sentiment_mod.load_lexicon(cfg.input_file("lexicon"))
    payload = []
    for entity_id in sorted(lk.entity.entity_id for lk in linked):
        score = sentiment_mod.score_keyword(entity_id, loaded, linked, lexicon, cfg.epsilon)
        payload.append({"entity_id": entity_id, **asdict(score)})
    _write_artifact(cfg.artifact_path("sentiment"), payload)
    labels = [row["label"] for row in payload]
    return (f"{len(payload)} entities scored "
            f"({labels.count('positive')} positive, {labels.count('negative')} negative)")


def _stage_match(cfg: PipelineConfig):
    user_graph = graph_from_json(cfg.artifact_path("graph").read_bytes())
    kb = kb_mod.load_kb(cfg.input_file("kb"))
    specs = matching.load_products(cfg.input_file("products"))
    rel_cfg = RelatednessConfig(cfg.alpha, cfg.tau)
    results = matching.rank_products(user_graph, specs, kb, rel_cfg)
    payload = [asdict(r) for r in results]
    _write_artifact(cfg.artifact_path("match"), payload)
    best = results[0]
    return f"{len(results)} products ranked, best {best.product_id!r} (score {best.score:.4f})"


_STAGE_FNS = {
    "ingest": _stage_ingest,
    "extract": _stage_extract,
    "link": _stage_link,
    "graph": _stage_graph,
    "sentiment": _stage_sentiment,
    "match": _stage_match,
}


def _execute(stage: str, cfg: PipelineConfig) -> Path:
    _require_upstream(stage, cfg)
    summary = _STAGE_FNS[stage](cfg)
    path = cfg.artifact_path(stage)
    print(f"{stage}: {summary} -> {path}")
    return path


def run_stage(stage: str, cfg: PipelineConfig) -> Path:
    """Run one stage; returns the artifact path it wrote."""
    if stage not in STAGES:
        raise ConfigError(f"unknown stage {stage!r}")
    cfg.validate()
    with _output_lock(cfg.require_path("output_dir")):
        return _execute(stage, cfg)


def run_all(cfg: PipelineConfig) -> Path:
    """Run the six stages in order; returns the final match report path."""
    cfg.validate()
    for name in _PATH_KEYS[:-1]:
        cfg.input_file(name)  # all referenced paths must exist at run start
    with _output_lock(cfg.require_path("output_dir")):
        path = None
        for stage in STAGES:
            try:
                path = _execute(stage, cfg)
            except InterestGraphError as exc:
                raise StageError(stage, exc) from exc
        return path


def export_stage_graph(cfg: PipelineConfig, format: str) -> Path:
    """Re-export the built interest graph as dot, graphml, or json."""
    cfg.validate()
    if format not in _EXPORT_FORMATS:
        raise ConfigError(f"unknown export format {format!r}")
    artifact = cfg.artifact_path("graph")
    if not artifact.is_file():
        raise MissingUpstreamError("graph", str(artifact))
    graph = graph_from_json(artifact.read_bytes())
    out = cfg.require_path("output_dir") / f"interest_graph.{format}"
    out.write_bytes(export_graph(graph, format))
    print(f"export: {len(graph.nodes)} nodes as {format} -> {out}")
    return out
