"""Post ingestion: load user posts from files and normalize author identities.

Two input layouts are supported. The canonical one is JSONL, one record per
line with the schema ``{"id": str, "user": str, "text": str, "created_at":
str?}`` (unknown keys ignored). ``plain_lines`` treats every non-empty line
as the text of one post by an implicit "anon" user, which keeps quick
fixtures cheap.

Screen names are matched case-insensitively (Unicode casefold); each
distinct name gets a stable integer author id in first-seen order, starting
at 1.
"""

import json
from dataclasses import dataclass, replace
from pathlib import Path

from .errors import FormatError

__all__ = ["Post", "Corpus", "load_corpus", "assign_author_ids"]


@dataclass(frozen=True)
class Post:
    id: str
    author_screen_name: str
    author_id: int
    text: str
    timestamp: str | None = None

    @property
    def is_blank(self) -> bool:
        """True when the text is empty after trimming; loaders keep such
        posts, downstream stages simply find nothing in them."""
        return not self.text.strip()


@dataclass
class Corpus:
    """An ordered, immutable-by-convention collection of posts.

    author_table maps casefolded screen name -> author id; iteration order
    of posts equals input file order.
    """

    posts: list[Post]
    author_table: dict[str, int]

    def __iter__(self):
        return iter(self.posts)

    def __len__(self) -> int:
        return len(self.posts)


def _author_key(screen_name: str) -> str:
    return screen_name.casefold()


def load_corpus(path: str | Path, format: str = "jsonl") -> Corpus:
    """Read posts from ``path`` and assign author ids in first-seen order.

    Raises OSError when the file cannot be read, FormatError (with the
    line number) on malformed records, and ValueError for an unknown
    ``format``.
    """
    if format not in ("jsonl", "plain_lines"):
        raise ValueError(f"unknown corpus format: {format!r}")

    text = Path(path).read_text(encoding="utf-8")
    posts: list[Post] = []
    seen_ids: set[str] = set()

    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if format == "jsonl":
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise FormatError(f"malformed JSON record: {exc.msg}", lineno) from exc
            if not isinstance(record, dict):
                raise FormatError("record is not a JSON object", lineno)
            for field in ("id", "user", "text"):
                if field not in record:
                    raise FormatError(f"record missing field {field!r}", lineno)
                if not isinstance(record[field], str):
                    raise FormatError(f"field {field!r} is not a string", lineno)
            post_id = record["id"]
            user = record["user"]
            body = record["text"]
            timestamp = record.get("created_at")
            if timestamp is not None and not isinstance(timestamp, str):
                raise FormatError("field 'created_at' is not a string", lineno)
        else:
            post_id = str(lineno)
            user = "anon"
            body = line
            timestamp = None

        if not post_id:
            raise FormatError("post id is empty", lineno)
        if post_id in seen_ids:
            raise FormatError(f"duplicate post id {post_id!r}", lineno)
        seen_ids.add(post_id)
        posts.append(Post(id=post_id, author_screen_name=user, author_id=0,
                          text=body, timestamp=timestamp))

    return assign_author_ids(Corpus(posts=posts, author_table={}))


def assign_author_ids(corpus: Corpus) -> Corpus:
    """(Re)assign stable author ids: 1..N in first-seen screen-name order.

    Idempotent; the returned corpus is a fresh object, the input is left
    untouched.
    """
    table: dict[str, int] = {}
    posts: list[Post] = []
    for post in corpus.posts:
        key = _author_key(post.author_screen_name)
        if key not in table:
            table[key] = len(table) + 1
        posts.append(replace(post, author_id=table[key]))
    return Corpus(posts=posts, author_table=table)
