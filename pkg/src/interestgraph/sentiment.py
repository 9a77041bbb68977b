"""Lexicon-based opinion scoring: positive, negative, objective.

Every score is a point on the simplex pos + neg + obj = 1. Posts are scored
by averaging the lexicon entries of their tokens; keywords by averaging the
scores of the posts that mention them. The label falls out of an epsilon
band: positive iff pos - neg > eps, negative iff neg - pos > eps, otherwise
objective.
"""

from dataclasses import dataclass
from pathlib import Path

from .errors import RangeError, UnknownEntityError
from .extraction import BOUNDARY, tokenize
from .kb import LinkedKeyword, contains_mention, mention_token_sequences

__all__ = [
    "LexiconEntry",
    "Lexicon",
    "OpinionScore",
    "DEFAULT_EPSILON",
    "load_lexicon",
    "make_opinion",
    "score_post",
    "score_keyword",
]

DEFAULT_EPSILON = 0.05

POSITIVE = "positive"
NEGATIVE = "negative"
OBJECTIVE = "objective"


@dataclass(frozen=True)
class LexiconEntry:
    term: str
    pos: float
    neg: float

    @property
    def obj(self) -> float:
        return 1.0 - self.pos - self.neg


class Lexicon:
    def __init__(self, entries: dict[str, LexiconEntry] | None = None):
        self.entries = entries or {}

    def get(self, term: str) -> LexiconEntry | None:
        return self.entries.get(term)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, term: str) -> bool:
        return term in self.entries


@dataclass(frozen=True)
class OpinionScore:
    pos: float
    neg: float
    obj: float
    label: str


def make_opinion(pos: float, neg: float, epsilon: float = DEFAULT_EPSILON) -> OpinionScore:
    """Complete the simplex (obj = 1 - pos - neg) and attach the label."""
    obj = 1.0 - pos - neg
    if pos - neg > epsilon:
        label = POSITIVE
    elif neg - pos > epsilon:
        label = NEGATIVE
    else:
        label = OBJECTIVE
    return OpinionScore(pos=pos, neg=neg, obj=obj, label=label)


def load_lexicon(path: str | Path) -> Lexicon:
    """Load a TSV lexicon: term<TAB>pos<TAB>neg, '#' comments allowed.

    Rows with pos/neg outside [0, 1] or pos + neg > 1 raise RangeError
    naming the row. Duplicate terms: the last row wins.
    """
    entries: dict[str, LexiconEntry] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        row = line.split("#", 1)[0].rstrip()
        if not row.strip():
            continue
        parts = row.split("\t")
        if len(parts) != 3:
            raise RangeError(f"row {lineno}: expected term<TAB>pos<TAB>neg, got {line!r}")
        term, pos_s, neg_s = parts
        try:
            pos, neg = float(pos_s), float(neg_s)
        except ValueError:
            raise RangeError(f"row {lineno}: non-numeric score in {line!r}") from None
        if not (0.0 <= pos <= 1.0) or not (0.0 <= neg <= 1.0):
            raise RangeError(f"row {lineno}: scores must lie in [0, 1]")
        if pos + neg > 1.0:
            raise RangeError(f"row {lineno}: pos + neg exceeds 1 ({pos} + {neg})")
        entries[term.strip().casefold()] = LexiconEntry(term=term.strip().casefold(), pos=pos, neg=neg)
    return Lexicon(entries)


def score_post(post, lexicon: Lexicon, epsilon: float = DEFAULT_EPSILON) -> OpinionScore:
    """Mean lexicon score over the post's tokens (with multiplicity).

    A post with no lexicon hits is fully objective: (0, 0, 1).
    """
    hits = [lexicon.entries[t] for t in tokenize(post.text)
            if t != BOUNDARY and t in lexicon]
    if not hits:
        return make_opinion(0.0, 0.0, epsilon)
    pos = sum(e.pos for e in hits) / len(hits)
    neg = sum(e.neg for e in hits) / len(hits)
    return make_opinion(pos, neg, epsilon)


def score_keyword(entity_id: str, corpus, linked: list[LinkedKeyword],
                  lexicon: Lexicon, epsilon: float = DEFAULT_EPSILON) -> OpinionScore:
    """Mean opinion over the posts that mention the entity.

    Mention = any surface form occurs as a contiguous token sequence in the
    post. Raises UnknownEntityError when the entity is not among the linked
    keywords; an entity mentioned nowhere scores fully objective.
    """
    entity = None
    for lk in linked:
        if lk.entity.entity_id == entity_id:
            entity = lk.entity
            break
    if entity is None:
        raise UnknownEntityError(f"entity {entity_id!r} is not among the linked keywords")

    sequences = mention_token_sequences(entity)
    scores = [score_post(post, lexicon, epsilon) for post in corpus.posts
              if contains_mention(tokenize(post.text), sequences)]
    if not scores:
        return make_opinion(0.0, 0.0, epsilon)
    pos = sum(s.pos for s in scores) / len(scores)
    neg = sum(s.neg for s in scores) / len(scores)
    return make_opinion(pos, neg, epsilon)
