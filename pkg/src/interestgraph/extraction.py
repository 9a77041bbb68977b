"""Keyword extraction: tokenize posts, select candidate phrases, score them.

Candidate selection is stopword/punctuation splitting in the RAKE style:
the token stream is cut at stopwords and hard boundaries, and every maximal
run of content words becomes a candidate phrase. Scoring is the classic
degree/frequency word table, with two optional additive feature bonuses on
top (phrase length and earliest position in the text), controlled by
FeatureWeights. With both weights at zero the ranking is pure RAKE.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConfigError, FormatError

__all__ = [
    "BOUNDARY",
    "CandidatePhrase",
    "FeatureWeights",
    "ScoredKeyword",
    "load_stopwords",
    "tokenize",
    "extract_candidates",
    "extract_corpus_candidates",
    "score_keywords",
    "top_k",
]

# Sentinel emitted into the token stream wherever punctuation forces a hard
# phrase boundary. Cannot collide with a real token: '<' and '>' are not
# token characters.
BOUNDARY = "<break>"

_JOINERS = "'’-"  # apostrophes and hyphen join characters inside words


def _is_token_char(ch: str) -> bool:
    return ch.isalpha() or ch.isdigit() or ch in _JOINERS


def tokenize(text: str) -> list[str]:
    """Split text into casefolded word tokens and BOUNDARY sentinels.

    Tokens are maximal runs of Unicode letters/digits/apostrophes/hyphens
    that contain at least one letter or digit (leading/trailing joiners are
    trimmed). URLs and @mentions are removed outright, the '#' of a hashtag
    is stripped with the body kept. Any other non-whitespace character is
    punctuation and yields one BOUNDARY sentinel per gap.
    """
    out: list[str] = []
    run: list[str] = []
    boundary_pending = False
    i, n = 0, len(text)

    def flush_run():
        nonlocal boundary_pending
        if not run:
            return
        word = "".join(run).strip(_JOINERS)
        run.clear()
        if word:
            if boundary_pending and out:
                out.append(BOUNDARY)
            boundary_pending = False
            out.append(word.casefold())
        else:
            boundary_pending = True  # run was pure joiners: punctuation

    while i < n:
        ch = text[i]
        if ch in ("h", "H", "w", "W") and not run:
            # silent URL removal, no boundary
            for prefix in ("http://", "https://", "www."):
                if text[i:i + len(prefix)].lower() == prefix:
                    while i < n and not text[i].isspace():
                        i += 1
                    break
            else:
                run.append(ch)
                i += 1
                continue
            continue
        if ch == "@":
            # silent mention removal, no boundary
            flush_run()
            i += 1
            while i < n and _is_token_char(text[i]):
                i += 1
            continue
        if ch == "#":
            # hashtag marker: drop the '#', keep the body as a token
            flush_run()
            i += 1
            continue
        if _is_token_char(ch):
            run.append(ch)
        elif ch.isspace():
            flush_run()
        else:
            flush_run()
            boundary_pending = True
        i += 1

    flush_run()
    if boundary_pending:
        out.append(BOUNDARY)
    return out


def load_stopwords(path: str | Path) -> set[str]:
    """Load a stopword file: one word per line, '#' comments, casefolded.

    Raises FormatError when the file yields no words at all.
    """
    words: set[str] = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        word = line.split("#", 1)[0].strip()
        if word:
            words.add(word.casefold())
    if not words:
        raise FormatError(f"stopword file {path} contains no words")
    return words


@dataclass(frozen=True)
class CandidatePhrase:
    """A maximal stopword-free token run from one post.

    first_token_index is the 0-based position of the first token in the
    post's token stream (BOUNDARY sentinels included); post_token_count is
    that stream's length, kept so scores can normalize positions later.
    """

    tokens: tuple[str, ...]
    first_token_index: int
    post_id: str = ""
    post_token_count: int = 0

    @property
    def phrase(self) -> str:
        return " ".join(self.tokens)

    @property
    def first_pos_norm(self) -> float:
        return self.first_token_index / max(1, self.post_token_count)


def extract_candidates(tokens: list[str], stopwords: set[str],
                       max_phrase_len: int = 4, post_id: str = "") -> list[CandidatePhrase]:
    """Split a token stream at stopwords/boundaries into candidate phrases.

    Runs longer than max_phrase_len are chunked greedily left to right, so a
    5-word run at max 4 yields candidates of lengths 4 and 1.
    """
    if max_phrase_len < 1:
        raise ConfigError(f"max_phrase_len must be >= 1, got {max_phrase_len}")

    candidates: list[CandidatePhrase] = []
    stream_len = len(tokens)
    run_start = None
    for idx in range(stream_len + 1):
        tok = tokens[idx] if idx < stream_len else BOUNDARY
        if tok == BOUNDARY or tok in stopwords:
            if run_start is not None:
                for chunk_start in range(run_start, idx, max_phrase_len):
                    chunk = tokens[chunk_start:min(chunk_start + max_phrase_len, idx)]
                    candidates.append(CandidatePhrase(
                        tokens=tuple(chunk),
                        first_token_index=chunk_start,
                        post_id=post_id,
                        post_token_count=stream_len,
                    ))
                run_start = None
        elif run_start is None:
            run_start = idx
    return candidates


def extract_corpus_candidates(corpus, stopwords: set[str],
                              max_phrase_len: int = 4) -> list[CandidatePhrase]:
    """Tokenize every post and pool the candidates, in corpus order."""
    pooled: list[CandidatePhrase] = []
    for post in corpus.posts:
        pooled.extend(extract_candidates(tokenize(post.text), stopwords,
                                         max_phrase_len, post_id=post.id))
    return pooled


@dataclass(frozen=True)
class FeatureWeights:
    """Additive bonuses layered on the RAKE core.

    beta weights phrase length (beta * (len - 1)), gamma weights early
    position (gamma * (1 - first_pos_norm)). Both default to 0, which is
    the plain RAKE baseline.
    """

    beta: float = 0.0
    gamma: float = 0.0

    def __post_init__(self):
        if self.beta < 0 or self.gamma < 0:
            raise ConfigError(f"feature weights must be >= 0, got beta={self.beta}, gamma={self.gamma}")


@dataclass(frozen=True)
class ScoredKeyword:
    phrase: str
    frequency: int
    rake_score: float
    phrase_len: int
    first_pos_norm: float
    composite_score: float


def word_statistics(candidates: list[CandidatePhrase]) -> tuple[dict[str, int], dict[str, int]]:
    """RAKE word tables over the pooled candidates.

    freq(w) counts token occurrences inside candidate phrases; deg(w) adds
    the containing phrase's length per occurrence.
    """
    freq: dict[str, int] = defaultdict(int)
    deg: dict[str, int] = defaultdict(int)
    for cand in candidates:
        length = len(cand.tokens)
        for tok in cand.tokens:
            freq[tok] += 1
            deg[tok] += length
    return dict(freq), dict(deg)


def score_keywords(candidates: list[CandidatePhrase],
                   weights: FeatureWeights = FeatureWeights()) -> list[ScoredKeyword]:
    """Rank distinct candidate phrases by composite score, descending.

    rake_score(phrase) = sum over its tokens of deg(w)/freq(w);
    composite = rake + beta*(len-1) + gamma*(1 - first_pos_norm), where
    first_pos_norm is the earliest normalized occurrence over all posts.
    Ties break by higher frequency, then lexicographic phrase.
    """
    freq, deg = word_statistics(candidates)
    word_score = {w: deg[w] / freq[w] for w in freq}

    grouped: dict[str, list[CandidatePhrase]] = defaultdict(list)
    for cand in candidates:
        grouped[cand.phrase].append(cand)

    scored: list[ScoredKeyword] = []
    for phrase, group in grouped.items():
        tokens = group[0].tokens
        rake = sum(word_score[t] for t in tokens)
        first_pos = min(c.first_pos_norm for c in group)
        composite = (rake
                     + weights.beta * (len(tokens) - 1)
                     + weights.gamma * (1.0 - first_pos))
        scored.append(ScoredKeyword(
            phrase=phrase,
            frequency=len(group),
            rake_score=rake,
            phrase_len=len(tokens),
            first_pos_norm=first_pos,
            composite_score=composite,
        ))

    scored.sort(key=lambda kw: (-kw.composite_score, -kw.frequency, kw.phrase))
    return scored


def top_k(scored: list[ScoredKeyword], k: int) -> list[ScoredKeyword]:
    """First min(k, len) entries of the ranked list."""
    if k < 1:
        raise ConfigError(f"k must be >= 1, got {k}")
    return scored[:k]
