"""interestgraph: semantic interest graphs from social posts.

The pipeline ingests user posts, extracts and ranks keyphrases
(degree/frequency scoring with optional length and position bonuses),
filters them against an offline knowledge base, builds a relatedness-gated
interest graph, attaches lexicon sentiment, and ranks product graphs by
semantic connection strength against the user's graph.
"""

from .corpus import Corpus, Post, assign_author_ids, load_corpus
from .errors import (
    ConfigError,
    DanglingLinkError,
    EmptyGraphError,
    FormatError,
    InterestGraphError,
    MissingUpstreamError,
    OutputLockedError,
    RangeError,
    SchemaError,
    SerializationError,
    UnknownEntityError,
)
from .extraction import (
    BOUNDARY,
    CandidatePhrase,
    FeatureWeights,
    ScoredKeyword,
    extract_candidates,
    extract_corpus_candidates,
    load_stopwords,
    score_keywords,
    tokenize,
    top_k,
)
from .graph import (
    CooccurrenceStats,
    RelatednessConfig,
    SemanticGraph,
    build_interest_graph,
    export_graph,
    graph_from_json,
    jaccard,
    relatedness,
)
from .kb import KbEntity, KnowledgeBase, LinkedKeyword, filter_keywords, load_kb
from .matching import (
    MatchResult,
    PairContribution,
    ProductSpec,
    build_product_graph,
    load_products,
    match_score,
    rank_products,
)
from .pipeline import PipelineConfig, load_config, run_all, run_stage
from .sentiment import (
    Lexicon,
    LexiconEntry,
    OpinionScore,
    load_lexicon,
    score_keyword,
    score_post,
)

__version__ = "0.1.0"
