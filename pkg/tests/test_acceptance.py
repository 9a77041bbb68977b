"""Acceptance suite: one test per criterion, at the stated tolerances.

Run with `pytest tests/test_acceptance.py -v -s` to see one PASS/FAIL line
per criterion. Every expected value is either computed by an independent
oracle living in oracles.py or frozen from the committed golden artifacts.
"""

import contextlib
import json
import random
import time

import pytest

from interestgraph import (
    BOUNDARY,
    CooccurrenceStats,
    LinkedKeyword,
    RelatednessConfig,
    SemanticGraph,
    build_interest_graph,
    build_product_graph,
    export_graph,
    extract_candidates,
    filter_keywords,
    graph_from_json,
    match_score,
    rank_products,
    score_keywords,
    score_post,
)
from interestgraph.cli import main as cli_main
from interestgraph.extraction import word_statistics
from interestgraph.matching import ProductSpec
from interestgraph.pipeline import ARTIFACTS
from interestgraph.sentiment import Lexicon, LexiconEntry
from conftest import DATA_DIR, corpus_of, make_entity, make_kb, make_keyword
import oracles

GOLDEN_DIR = DATA_DIR / "golden"


@contextlib.contextmanager
def criterion(number, description):
    try:
        yield
    except BaseException:
        print(f"criterion {number}: FAIL - {description}")
        raise
    print(f"criterion {number}: PASS - {description}")


def linked(entity, composite=1.0):
    return LinkedKeyword(keyword=make_keyword(entity.entity_id, composite=composite),
                         entity=entity)


def random_token_stream(rng, vocab, max_tokens):
    pool = vocab + [BOUNDARY] * 3
    return [rng.choice(pool) for _ in range(rng.randrange(1, max_tokens + 1))]


def test_criterion_1_rake_oracle_equivalence():
    with criterion(1, "RAKE scores equal brute force on 20 randomized corpora"):
        rng = random.Random(0xACE1)
        vocab = [f"w{i}" for i in range(14)]
        started = time.perf_counter()
        for _ in range(20):
            stopwords = set(rng.sample(vocab, rng.randrange(0, 9)))  # <= 8 stopwords
            tokens = random_token_stream(rng, vocab, max_tokens=50)
            candidates = extract_candidates(tokens, stopwords, max_phrase_len=4)

            freq, deg = word_statistics(candidates)
            phrases = oracles.split_candidates(tokens, stopwords, max_phrase_len=4)
            exp_freq, exp_deg, exp_word_score = oracles.rake_tables(phrases)
            assert freq == exp_freq
            assert deg == exp_deg
            for word, expected in exp_word_score.items():
                assert abs(deg[word] / freq[word] - expected) <= 1e-12

            got = {kw.phrase: kw.composite_score for kw in score_keywords(candidates)}
            expected_scores = oracles.rake_phrase_scores(phrases)
            assert set(got) == set(expected_scores)
            for phrase, expected in expected_scores.items():
                assert abs(got[phrase] - expected) <= 1e-12
        elapsed = time.perf_counter() - started
        assert elapsed < 1.0, f"took {elapsed:.3f}s"


def test_criterion_2_handshake_invariant():
    with criterion(2, "sum of node weights = 2 * edge count on 100 random graphs"):
        rng = random.Random(0xACE2)
        for _ in range(100):
            n = rng.randrange(1, 10)
            ids = [f"e{i}" for i in range(n)]
            entities = [make_entity(eid, outlinks=set(rng.sample(ids, rng.randrange(0, n))))
                        for eid in ids]
            kb = make_kb(*entities)
            texts = [" ".join(rng.sample(ids, rng.randrange(0, n))) or "void"
                     for _ in range(rng.randrange(1, 7))]
            cfg = RelatednessConfig(alpha=rng.random(), tau=rng.random())
            graph = build_interest_graph([linked(e) for e in entities],
                                         corpus_of(*texts), kb, cfg)
            assert sum(node.weight for node in graph.nodes.values()) == 2 * len(graph.edges)


def test_criterion_3_threshold_monotonicity():
    with criterion(3, "edge sets shrink as tau rises; complete at 0, empty at 1"):
        chain = {"e0": {"e1"}, "e1": {"e2"}, "e2": {"e3"}, "e3": {"e4"}, "e4": set()}
        kb = make_kb(*(make_entity(eid, outlinks=links) for eid, links in chain.items()))
        corpus = corpus_of("e0 e1", "e1 e2 e3", "e2", "e4 e0")
        lks = [linked(kb[eid]) for eid in chain]

        previous = None
        for tau in [0.0, 0.2, 0.4, 0.6, 0.8, 1.0]:
            cfg = RelatednessConfig(alpha=0.5, tau=tau)
            edges = set(build_interest_graph(lks, corpus, kb, cfg).edges)
            if previous is not None:
                assert edges <= previous, f"tau={tau} grew the edge set"
            previous = edges

        # tau = 0 admits every pair: N (N - 1) / 2 edges
        n = len(chain)
        complete = build_interest_graph(lks, corpus, kb, RelatednessConfig(alpha=0.5, tau=0.0))
        assert len(complete.edges) == n * (n - 1) // 2

        # tau = 1: no non-identical pair reaches relatedness 1
        strict = build_interest_graph(lks, corpus, kb, RelatednessConfig(alpha=0.5, tau=1.0))
        assert len(strict.edges) == 0


def test_criterion_4_sentiment_simplex():
    with criterion(4, "opinion scores stay on the simplex and obey the label rule"):
        rng = random.Random(0xACE4)
        vocab = [f"t{i}" for i in range(15)]
        for _ in range(60):
            entries = {}
            for term in rng.sample(vocab, rng.randrange(0, 10)):
                pos = rng.uniform(0, 1)
                neg = rng.uniform(0, 1 - pos)
                entries[term] = LexiconEntry(term=term, pos=pos, neg=neg)
            lexicon = Lexicon(entries)
            eps = rng.choice([0.0, 0.05, 0.1])
            texts = [" ".join(rng.choices(vocab, k=rng.randrange(1, 12)))
                     for _ in range(rng.randrange(1, 5))]
            for post in corpus_of(*texts).posts:
                s = score_post(post, lexicon, epsilon=eps)
                assert abs(s.pos + s.neg + s.obj - 1.0) <= 1e-9
                assert 0.0 <= s.pos <= 1.0 and 0.0 <= s.neg <= 1.0 and 0.0 <= s.obj <= 1.0
                if s.pos - s.neg > eps:
                    assert s.label == "positive"
                elif s.neg - s.pos > eps:
                    assert s.label == "negative"
                else:
                    assert s.label == "objective"

        # empty lexicon forces full objectivity everywhere
        empty = Lexicon({})
        for post in corpus_of("anything", "at all", "whatsoever").posts:
            s = score_post(post, empty)
            assert (s.pos, s.neg, s.obj, s.label) == (0.0, 0.0, 1.0, "objective")


def test_criterion_5_keyword_filtration_contract():
    with criterion(5, "survivors resolve in the KB, no repeats, subset of input"):
        rng = random.Random(0xACE5)
        for _ in range(50):
            n = rng.randrange(1, 9)
            entities = [make_entity(f"e{i}", surfaces={f"s{i}", f"syn{i}"})
                        for i in range(n)]
            kb = make_kb(*entities)
            phrases = [rng.choice([f"s{rng.randrange(12)}", f"syn{rng.randrange(12)}",
                                   f"noise{rng.randrange(6)}"])
                       for _ in range(rng.randrange(0, 25))]
            keywords = [make_keyword(p, frequency=rng.randrange(1, 4)) for p in phrases]
            survivors = filter_keywords(keywords, kb)

            assert len(survivors) <= len(keywords)
            ids = [lk.entity.entity_id for lk in survivors]
            assert len(ids) == len(set(ids))
            assert all(eid in kb for eid in ids)
            input_phrases = {kw.phrase for kw in keywords}
            assert all(lk.keyword.phrase in input_phrases for lk in survivors)


def fixture_kb6():
    outlinks = {
        "alpha": {"beta", "gamma"},
        "beta": {"alpha"},
        "gamma": set(),
        "delta": {"epsilon"},
        "epsilon": {"delta", "zeta"},
        "zeta": set(),
    }
    return outlinks, make_kb(*(make_entity(eid, outlinks=links)
                               for eid, links in outlinks.items()))


def test_criterion_6_match_score_oracle():
    with criterion(6, "rank_products equals the brute-force double sum to 1e-9"):
        outlinks, kb = fixture_kb6()
        cfg = RelatednessConfig(alpha=0.5, tau=0.3)

        user_entities = ["alpha", "beta", "gamma", "delta"]
        corpus = corpus_of("alpha beta", "beta gamma delta", "alpha", "delta")
        user = build_interest_graph([linked(kb[e]) for e in user_entities], corpus, kb, cfg)

        specs = [ProductSpec("prod_ab", "AB", ("alpha", "beta")),
                 ProductSpec("prod_de", "DE", ("delta", "epsilon")),
                 ProductSpec("prod_gz", "GZ", ("gamma", "zeta"))]
        results = rank_products(user, specs, kb, cfg)
        user_degrees = {nid: int(user.nodes[nid].weight) for nid in user.node_ids()}
        for res in results:
            product = build_product_graph(next(s for s in specs if s.product_id == res.product_id),
                                          kb, cfg)
            product_degrees = {nid: int(product.nodes[nid].weight) for nid in product.node_ids()}
            expected = oracles.match_double_sum(user_degrees, product_degrees, outlinks, cfg.alpha)
            assert abs(res.score - expected) <= 1e-9
            assert abs(res.score - sum(c.pair_score for c in res.contributions)) <= 1e-9
        assert [r.score for r in results] == sorted((r.score for r in results), reverse=True)

        # two isolated user nodes vs a one-node product: exactly one half
        half_user = SemanticGraph()
        half_user.add_node("gamma")
        half_user.add_node("zeta")
        half_user.assign_degree_weights()
        product = build_product_graph(ProductSpec("g", "G", ("gamma",)), kb, cfg)
        assert abs(match_score(half_user, product, kb, cfg).score - 0.5) <= 1e-9

        # identical single-entity graphs score exactly 1
        one = build_product_graph(ProductSpec("a", "A", ("alpha",)), kb, cfg)
        assert match_score(one, one, kb, cfg).score == 1.0

        # fully unrelated single-entity graphs score exactly 0
        g_only = build_product_graph(ProductSpec("g", "G", ("gamma",)), kb, cfg)
        z_only = build_product_graph(ProductSpec("z", "Z", ("zeta",)), kb, cfg)
        assert match_score(g_only, z_only, kb, cfg).score == 0.0


def run_pipeline_into(out_dir):
    config = DATA_DIR / "pipeline.toml"
    started = time.perf_counter()
    code = cli_main(["run-all", "--config", str(config), "--output-dir", str(out_dir)])
    elapsed = time.perf_counter() - started
    assert code == 0
    return elapsed


def test_criterion_7_end_to_end_determinism(tmp_path):
    with criterion(7, "run-all reproduces the golden artifacts byte for byte, twice"):
        out = tmp_path / "out"
        for attempt in (1, 2):
            elapsed = run_pipeline_into(out)
            assert elapsed < 2.0, f"run {attempt} took {elapsed:.3f}s"
            for name in ARTIFACTS.values():
                produced = (out / name).read_bytes()
                golden = (GOLDEN_DIR / name).read_bytes()
                assert produced == golden, f"{name} deviates from golden (run {attempt})"


def test_criterion_8_export_round_trip(tmp_path):
    with criterion(8, "JSON round-trips byte-identically; DOT and GraphML parse"):
        import networkx as nx

        # fixture graphs: the golden interest graph plus a dense synthetic one
        golden_graph = graph_from_json((GOLDEN_DIR / "interest_graph.json").read_bytes())
        dense = SemanticGraph()
        for nid, salience in [("n one", 1.5), ('n "two"', 2.0), ("n\\three", 0.5)]:
            dense.add_node(nid, salience=salience)
        dense.add_edge("n one", 'n "two"', 0.8)
        dense.add_edge("n one", "n\\three", 0.35)
        dense.assign_degree_weights()

        dot_parser = oracles.build_dot_parser()
        for graph in (golden_graph, dense, SemanticGraph()):
            blob = export_graph(graph, "json")
            assert export_graph(graph_from_json(blob), "json") == blob

            dot_parser.parse_string(export_graph(graph, "dot").decode(), parse_all=True)

            parsed = nx.parse_graphml(export_graph(graph, "graphml").decode())
            assert sorted(parsed.nodes) == graph.node_ids()
            assert parsed.number_of_edges() == len(graph.edges)
            for a, b, rel in graph.sorted_edges():
                assert parsed.edges[a, b]["rel"] == pytest.approx(rel)
