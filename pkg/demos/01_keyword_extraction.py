# Keyword extraction walkthrough: from raw post text to a ranked keyword list.
#
# Candidates are maximal runs of content words between stopwords/punctuation.
# Each word w gets freq(w) (occurrences inside candidates) and deg(w) (sum of
# the lengths of the candidates containing it); a phrase scores the sum of its
# words' deg/freq ratios. Longer phrases therefore accumulate higher scores,
# which is the behavior that makes this scheme work for topic phrases.

from interestgraph import (
    FeatureWeights,
    extract_candidates,
    score_keywords,
    tokenize,
    top_k,
)
from interestgraph.extraction import word_statistics

POST = ("Deep learning of deep networks and learning. "
        "Check https://example.com via @friend #deeplearning")
STOPWORDS = {"of", "and", "via", "check"}

print("post:", POST)
tokens = tokenize(POST)
print("tokens:", tokens)
# URLs and @mentions vanish; '#deeplearning' keeps its body; '.' becomes a
# hard boundary token that candidates cannot cross.

candidates = extract_candidates(tokens, STOPWORDS, max_phrase_len=4)
print("\ncandidate phrases:")
for cand in candidates:
    print(f"  {cand.phrase!r} (starts at token {cand.first_token_index})")

freq, deg = word_statistics(candidates)
print("\nword statistics (freq, deg, deg/freq):")
for word in sorted(freq):
    print(f"  {word:<14} {freq[word]}  {deg[word]}  {deg[word] / freq[word]:.2f}")

print("\nranked keywords (pure degree/frequency baseline):")
for kw in score_keywords(candidates):
    print(f"  {kw.composite_score:6.2f}  {kw.phrase!r}  (freq {kw.frequency})")

# Two optional bonuses sit on top of the baseline: beta rewards phrase
# length, gamma rewards phrases that appear early in a post.
weights = FeatureWeights(beta=1.0, gamma=2.0)
print("\nranked with beta=1 (length bonus) and gamma=2 (position bonus):")
for kw in top_k(score_keywords(candidates, weights), 3):
    print(f"  {kw.composite_score:6.2f}  {kw.phrase!r}  "
          f"(rake {kw.rake_score:.2f}, first_pos_norm {kw.first_pos_norm:.2f})")
