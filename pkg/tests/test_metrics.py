import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.spatial.distance import jensenshannon

from reactmetrics.errors import NoSpecialReactions, ZeroTotal
from reactmetrics.ingest import ReactionCounts, SPECIAL_REACTIONS
from reactmetrics.metrics import (
    diversity,
    divint_index,
    intensity,
    js_distance,
    polarity,
    score_article,
    special_distribution,
    total_reactions,
    valence,
)

SINGLE_TYPE_JSD = 0.7810163551494856  # entropy oracle: sqrt(mean of the two KL terms)


def oracle_scores(like, love, wow, laughter, sad, anger):
    """From-scratch re-implementation used as the brute-force oracle."""
    specials = [love, wow, laughter, sad, anger]
    special_total = sum(specials)
    total = like + special_total
    val = -1 if (sad + anger) > love else 1
    inten = special_total / total
    p = [c / special_total for c in specials]
    m = [(p_i + 0.2) / 2.0 for p_i in p]
    def kl(a, b):
        return sum(a_i * math.log2(a_i / b_i) for a_i, b_i in zip(a, b) if a_i > 0)
    div = 1.0 - math.sqrt(0.5 * kl(p, m) + 0.5 * kl([0.2] * 5, m))
    return val, inten, div, div * inten, val * inten


class TestValence:
    def test_positive(self):
        assert valence(ReactionCounts(love=5, sad=1, anger=1)) == 1

    def test_negative(self):
        assert valence(ReactionCounts(love=1, sad=1, anger=1)) == -1

    def test_tie_is_positive(self):
        assert valence(ReactionCounts(love=1, sad=1)) == 1

    def test_requires_specials(self):
        with pytest.raises(NoSpecialReactions):
            valence(ReactionCounts(like=10))


class TestTotalReactions:
    def test_sum(self):
        assert total_reactions(ReactionCounts(like=6, love=1, wow=2)) == 9

    def test_zero(self):
        assert total_reactions(ReactionCounts()) == 0

    def test_reshares_excluded(self):
        counts = ReactionCounts(like=1, love=1, wow=1, laughter=1, sad=1, anger=1, reshares=100)
        assert total_reactions(counts) == 6


class TestIntensity:
    def test_third(self):
        assert intensity(ReactionCounts(like=6, love=1, wow=2)) == pytest.approx(1 / 3, abs=1e-12)

    def test_like_only_is_zero(self):
        assert intensity(ReactionCounts(like=37)) == 0.0

    def test_no_likes_is_one(self):
        assert intensity(ReactionCounts(anger=4)) == 1.0

    def test_zero_total(self):
        with pytest.raises(ZeroTotal):
            intensity(ReactionCounts())


class TestSpecialDistribution:
    def test_uniform(self):
        counts = ReactionCounts(love=1, wow=1, laughter=1, sad=1, anger=1)
        assert special_distribution(counts) == (0.2, 0.2, 0.2, 0.2, 0.2)

    def test_normalization(self):
        assert special_distribution(ReactionCounts(love=3, sad=1)) == (0.75, 0, 0, 0.25, 0)

    def test_single_type(self):
        assert special_distribution(ReactionCounts(anger=7)) == (0, 0, 0, 0, 1)

    def test_requires_specials(self):
        with pytest.raises(NoSpecialReactions):
            special_distribution(ReactionCounts(like=3))


simplex5 = st.lists(st.floats(1e-6, 1.0), min_size=5, max_size=5).map(
    lambda xs: tuple(x / sum(xs) for x in xs)
)


class TestJsDistance:
    def test_identical_is_zero(self):
        p = (0.4, 0.3, 0.1, 0.1, 0.1)
        assert js_distance(p, p) == 0.0

    def test_point_mass_vs_uniform(self):
        d = js_distance((1, 0, 0, 0, 0), (0.2,) * 5)
        assert d == pytest.approx(SINGLE_TYPE_JSD, abs=1e-12)

    def test_disjoint_supports_hit_the_bound(self):
        assert js_distance((1, 0, 0, 0, 0), (0, 1, 0, 0, 0)) == 1.0

    def test_rejects_mismatched_lengths(self):
        with pytest.raises(ValueError):
            js_distance((1, 0), (1, 0, 0))

    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError):
            js_distance((0.5, 0.1, 0, 0, 0), (0.2,) * 5)

    @given(p=simplex5, q=simplex5)
    def test_matches_scipy_and_is_symmetric(self, p, q):
        d = js_distance(p, q)
        assert d == js_distance(q, p)
        assert 0.0 <= d <= 1.0
        assert d == pytest.approx(jensenshannon(p, q, base=2), abs=1e-12)

    @given(p=simplex5, q=simplex5, r=simplex5)
    def test_triangle_inequality(self, p, q, r):
        assert js_distance(p, r) <= js_distance(p, q) + js_distance(q, r) + 1e-9


class TestDiversity:
    def test_equal_counts_give_one(self):
        counts = ReactionCounts(love=1, wow=1, laughter=1, sad=1, anger=1)
        assert diversity(counts) == pytest.approx(1.0, abs=1e-12)

    def test_single_type(self):
        assert diversity(ReactionCounts(anger=7)) == pytest.approx(1 - SINGLE_TYPE_JSD, abs=1e-12)

    def test_scaled_equal_counts(self):
        counts = ReactionCounts(love=2, wow=2, laughter=2, sad=2, anger=2)
        assert diversity(counts) == pytest.approx(1.0, abs=1e-12)

    @given(perm=st.permutations(range(5)), counts=st.lists(st.integers(0, 9), min_size=5, max_size=5))
    def test_permutation_invariant(self, perm, counts):
        if sum(counts) == 0:
            counts[0] = 1
        base = ReactionCounts(**dict(zip(SPECIAL_REACTIONS, counts)))
        permuted = ReactionCounts(**dict(zip(SPECIAL_REACTIONS, (counts[i] for i in perm))))
        assert diversity(base) == pytest.approx(diversity(permuted), abs=1e-12)


class TestCombinations:
    def test_divint_identity(self):
        assert divint_index(1.0, 1.0) == 1.0

    def test_divint_annihilator(self):
        assert divint_index(0.5, 0.0) == 0.0

    def test_divint_worked_case(self):
        counts = ReactionCounts(like=5, love=1, wow=1, laughter=1, sad=1, anger=1)
        scores = score_article(counts)
        assert scores.diversity == pytest.approx(1.0, abs=1e-12)
        assert scores.intensity == 0.5
        assert scores.divint_index == pytest.approx(0.5, abs=1e-12)

    def test_polarity_extremes(self):
        assert polarity(-1, 1.0) == -1.0
        assert polarity(1, 0.0) == 0.0

    def test_polarity_composed(self):
        scores = score_article(ReactionCounts(anger=3, love=1))
        assert scores.valence == -1
        assert scores.intensity == 1.0
        assert scores.polarity == -1.0


counts_with_special = st.fixed_dictionaries(
    {name: st.integers(0, 12) for name in ("like",) + SPECIAL_REACTIONS}
).filter(lambda c: sum(c[r] for r in SPECIAL_REACTIONS) > 0)


class TestScoreProperties:
    @given(counts=counts_with_special, k=st.sampled_from([2, 10, 1000]))
    def test_scale_invariance(self, counts, k):
        base = score_article(ReactionCounts(**counts))
        scaled = score_article(ReactionCounts(**{r: v * k for r, v in counts.items()}))
        assert scaled.valence == base.valence
        assert abs(scaled.intensity - base.intensity) <= 1e-12
        assert abs(scaled.diversity - base.diversity) <= 1e-12
        assert abs(scaled.divint_index - base.divint_index) <= 1e-12
        assert abs(scaled.polarity - base.polarity) <= 1e-12

    @given(counts=counts_with_special)
    def test_polarity_magnitude_is_intensity(self, counts):
        scores = score_article(ReactionCounts(**counts))
        assert abs(scores.polarity) == scores.intensity
        assert 0.0 <= scores.intensity <= 1.0
        assert -1.0 <= scores.polarity <= 1.0

    @given(counts=counts_with_special)
    def test_matches_brute_force_oracle(self, counts):
        scores = score_article(ReactionCounts(**counts))
        val, inten, div, divint, pol = oracle_scores(
            counts["like"], counts["love"], counts["wow"],
            counts["laughter"], counts["sad"], counts["anger"],
        )
        assert scores.valence == val
        assert scores.intensity == pytest.approx(inten, abs=1e-9)
        assert scores.diversity == pytest.approx(div, abs=1e-9)
        assert scores.divint_index == pytest.approx(divint, abs=1e-9)
        assert scores.polarity == pytest.approx(pol, abs=1e-9)

    @given(counts=st.lists(st.integers(1, 9), min_size=5, max_size=5))
    def test_diversity_one_iff_equal_counts(self, counts):
        rc = ReactionCounts(**dict(zip(SPECIAL_REACTIONS, counts)))
        if len(set(counts)) == 1:
            assert diversity(rc) == pytest.approx(1.0, abs=1e-12)
        else:
            assert diversity(rc) < 1.0 - 1e-12
