import json

import pytest

from pathlib import Path

from interestgraph import KbEntity, KnowledgeBase, Post, ScoredKeyword, load_corpus, load_kb
from interestgraph.corpus import Corpus, assign_author_ids

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def fixture_kb() -> KnowledgeBase:
    return load_kb(DATA_DIR / "kb.json")


@pytest.fixture(scope="session")
def fixture_corpus():
    return load_corpus(DATA_DIR / "corpus10.jsonl")


def make_entity(entity_id: str, outlinks=(), surfaces=(), description="") -> KbEntity:
    """Shorthand for building KB entities in tests."""
    return KbEntity(
        entity_id=entity_id,
        surface_forms=frozenset(surfaces) | {entity_id},
        short_description=description,
        outlinks=frozenset(outlinks),
    )


def make_kb(*entities: KbEntity) -> KnowledgeBase:
    return KnowledgeBase(list(entities))


def write_jsonl(path: Path, records: list[dict]) -> None:
    path.write_text("\n".join(json.dumps(r) for r in records) + "\n", encoding="utf-8")


def make_keyword(phrase: str, frequency: int = 1, composite: float = 1.0) -> ScoredKeyword:
    return ScoredKeyword(phrase=phrase, frequency=frequency, rake_score=composite,
                         phrase_len=len(phrase.split()), first_pos_norm=0.0,
                         composite_score=composite)


def corpus_of(*texts: str) -> Corpus:
    """In-memory corpus, one anonymous post per text."""
    posts = [Post(id=str(i), author_screen_name="anon", author_id=0, text=t)
             for i, t in enumerate(texts, start=1)]
    return assign_author_ids(Corpus(posts=posts, author_table={}))
