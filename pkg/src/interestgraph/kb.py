"""Offline knowledge-base gazetteer: resolve keywords to entities.

The KB file is a JSON array of entries
``{"entity_id": str, "surface_forms": [str], "short_description": str,
"outlinks": [str]}``. Outlinks must reference entities present in the same
file; surface forms must be unambiguous across the whole KB. Keywords whose
phrase resolves to no entity are dropped, which is the filtration step that
keeps only graph-usable keywords.

Surface matching is exact on the token-normalized form (same tokenizer as
extraction, casefolded, punctuation-insensitive). No fuzzy matching.
"""

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import DanglingLinkError, SchemaError
from .extraction import BOUNDARY, ScoredKeyword, tokenize

__all__ = ["KbEntity", "KnowledgeBase", "LinkedKeyword", "load_kb", "filter_keywords"]


@dataclass(frozen=True)
class KbEntity:
    entity_id: str
    surface_forms: frozenset[str]
    short_description: str
    outlinks: frozenset[str]


@dataclass(frozen=True)
class LinkedKeyword:
    keyword: ScoredKeyword
    entity: KbEntity


def surface_key(phrase: str) -> str:
    """Canonical lookup key for a surface form or keyword phrase."""
    return " ".join(t for t in tokenize(phrase) if t != BOUNDARY)


def mention_token_sequences(entity: KbEntity) -> list[tuple[str, ...]]:
    """Token sequences whose contiguous presence in a post counts as a
    mention of the entity."""
    seqs = set()
    for surface in entity.surface_forms | {entity.entity_id}:
        toks = tuple(t for t in tokenize(surface) if t != BOUNDARY)
        if toks:
            seqs.add(toks)
    return sorted(seqs)


def contains_mention(tokens: list[str], sequences: list[tuple[str, ...]]) -> bool:
    """True when any sequence occurs contiguously in the token stream."""
    for seq in sequences:
        span = len(seq)
        for start in range(len(tokens) - span + 1):
            if tuple(tokens[start:start + span]) == seq:
                return True
    return False


class KnowledgeBase:
    """Immutable entity dictionary with a surface-form index."""

    def __init__(self, entities: list[KbEntity]):
        self.entities: dict[str, KbEntity] = {}
        self._surface_index: dict[str, str] = {}
        for ent in entities:
            if ent.entity_id in self.entities:
                raise SchemaError(f"duplicate entity_id {ent.entity_id!r}")
            self.entities[ent.entity_id] = ent
        for ent in entities:
            for surface in sorted(ent.surface_forms | {ent.entity_id}):
                key = surface_key(surface)
                if not key:
                    continue
                owner = self._surface_index.get(key)
                if owner is not None and owner != ent.entity_id:
                    raise SchemaError(
                        f"surface form {surface!r} is ambiguous between "
                        f"{owner!r} and {ent.entity_id!r}")
                self._surface_index[key] = ent.entity_id
        for ent in entities:
            for link in sorted(ent.outlinks):
                if link not in self.entities:
                    raise DanglingLinkError(
                        f"entity {ent.entity_id!r} links to unknown entity {link!r}")

    def __len__(self) -> int:
        return len(self.entities)

    def __contains__(self, entity_id: str) -> bool:
        return entity_id in self.entities

    def __getitem__(self, entity_id: str) -> KbEntity:
        return self.entities[entity_id]

    def __iter__(self):
        return iter(self.entities.values())

    def resolve(self, phrase: str) -> KbEntity | None:
        """Entity whose surface forms contain the phrase, or None."""
        entity_id = self._surface_index.get(surface_key(phrase))
        return self.entities[entity_id] if entity_id is not None else None


def load_kb(path: str | Path) -> KnowledgeBase:
    """Load and validate a JSON gazetteer file."""
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"KB file is not valid JSON: {exc.msg}") from exc
    if not isinstance(raw, list):
        raise SchemaError("KB file must be a JSON array of entities")

    entities: list[KbEntity] = []
    for entry in raw:
        if not isinstance(entry, dict):
            raise SchemaError("KB entry is not a JSON object")
        entity_id = entry.get("entity_id")
        if not entity_id or not isinstance(entity_id, str):
            raise SchemaError("KB entry missing entity_id")
        for field in ("surface_forms", "short_description", "outlinks"):
            if field not in entry:
                raise SchemaError(f"entity {entity_id!r} missing field {field!r}")
        if not isinstance(entry["surface_forms"], list) or not isinstance(entry["outlinks"], list):
            raise SchemaError(f"entity {entity_id!r}: surface_forms and outlinks must be arrays")
        if not all(isinstance(s, str) for s in entry["surface_forms"] + entry["outlinks"]):
            raise SchemaError(f"entity {entity_id!r}: surface_forms and outlinks must hold strings")
        entities.append(KbEntity(
            entity_id=entity_id,
            surface_forms=frozenset(s.casefold().strip() for s in entry["surface_forms"]),
            short_description=str(entry["short_description"]),
            outlinks=frozenset(entry["outlinks"]),
        ))
    return KnowledgeBase(entities)


def filter_keywords(keywords: list[ScoredKeyword], kb: KnowledgeBase) -> list[LinkedKeyword]:
    """Keep keywords that resolve in the KB, merging same-entity duplicates.

    Ranking order of the input is preserved among survivors. Two keywords
    resolving to one entity merge into the first survivor: frequencies sum,
    the larger composite_score wins, the rest of the stats stay.
    """
    out: list[LinkedKeyword] = []
    by_entity: dict[str, int] = {}
    for kw in keywords:
        entity = kb.resolve(kw.phrase)
        if entity is None:
            continue
        if entity.entity_id in by_entity:
            idx = by_entity[entity.entity_id]
            prev = out[idx].keyword
            merged = ScoredKeyword(
                phrase=prev.phrase,
                frequency=prev.frequency + kw.frequency,
                rake_score=prev.rake_score,
                phrase_len=prev.phrase_len,
                first_pos_norm=prev.first_pos_norm,
                composite_score=max(prev.composite_score, kw.composite_score),
            )
            out[idx] = LinkedKeyword(keyword=merged, entity=entity)
        else:
            by_entity[entity.entity_id] = len(out)
            out.append(LinkedKeyword(keyword=kw, entity=entity))
    return out
