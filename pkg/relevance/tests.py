"""
Unit tests for the relevance application.
Tests cover activation functions, the CR index on hand-checked concepts and
the agreement of both stability computations on random contexts.
"""

import itertools
from fractions import Fraction

from django.test import SimpleTestCase, override_settings

from concepts.context import gen_cointoss
from concepts.exceptions import ContextMismatchError
from concepts.generators import face_family, minimal_generators
from concepts.lattice import build_lattice
from concepts.tests import contranominal, random_corpus, toy3, worked3

from .activations import ACTIVATION_NAMES, activation, get_activation
from .exceptions import AttributeNotInIntentError, ExtentTooLargeError, UnknownActivationError, UnknownIndexError
from .indices import (
    BRUTE_FORCE,
    LATTICE_DP,
    alpha_in,
    beta_in,
    conceptual_relevance,
    is_relevant_attribute,
    relevant_attributes,
    score_concept,
    score_lattice,
    select_concepts,
    stability_bruteforce,
    stability_lattice,
)


class ActivationTest(SimpleTestCase):
    """Test cases for the activation functions."""

    def test_arithmetic_mean(self):
        """Test the arithmetic activation."""
        self.assertAlmostEqual(activation('arithmetic', 1 / 3, 1 / 3), 1 / 3, places=12)
        self.assertEqual(activation('arithmetic', 0.0, 1.0), 0.5)

    def test_other_means(self):
        """Test the remaining activations."""
        self.assertAlmostEqual(activation('geometric', 0.25, 1.0), 0.5)
        self.assertAlmostEqual(activation('harmonic', 0.5, 1.0), 2 / 3)
        self.assertEqual(activation('harmonic', 0.0, 0.0), 0.0)
        self.assertEqual(activation('product', 0.5, 0.5), 0.25)
        self.assertEqual(activation('min', 0.2, 0.7), 0.2)
        self.assertEqual(activation('max', 0.2, 0.7), 0.7)

    def test_all_names_resolve(self):
        """Test that every listed activation resolves."""
        for name in ACTIVATION_NAMES:
            self.assertTrue(callable(get_activation(name)))

    def test_unknown_activation(self):
        """Test that an unknown activation raises an error."""
        with self.assertRaises(UnknownActivationError) as cm:
            get_activation('sigmoidal')
        self.assertIn('sigmoidal', str(cm.exception))


class ConceptualRelevanceTest(SimpleTestCase):
    """Test cases for α, β and the CR index."""

    def test_toy3_bottom(self):
        """Test CR of the toy bottom concept."""
        lat = build_lattice(toy3())
        score = score_concept(lat, 1, 'arithmetic')
        self.assertEqual(score.alpha, 0.0)
        self.assertAlmostEqual(score.beta, 1 / 3, places=12)
        self.assertAlmostEqual(score.value, 1 / 6, places=12)
        self.assertEqual(score.n_mingens, 2)

    def test_worked_concept(self):
        """Test α, β and CR of the worked concept."""
        ctx = worked3()
        lat = build_lattice(ctx)
        concept = lat[3]
        self.assertEqual(relevant_attributes(ctx, concept), ctx.attrs('a'))
        score = conceptual_relevance(ctx, concept, face_family(lat, 3), 'arithmetic')
        self.assertAlmostEqual(score.alpha, 1 / 3, places=12)
        self.assertAlmostEqual(score.beta, 1 / 3, places=12)
        self.assertAlmostEqual(score.value, 1 / 3, places=12)

    @override_settings(FCA_DEFAULT_ACTIVATION='product')
    def test_default_activation_comes_from_settings(self):
        """Test that the activation default is read from settings."""
        lat = build_lattice(worked3())
        score = score_concept(lat, 3)
        self.assertEqual(score.activation_name, 'product')
        self.assertAlmostEqual(score.value, 1 / 9, places=12)

    def test_empty_activation_name_is_rejected(self):
        """Test that empty activation and index names raise errors."""
        lat = build_lattice(worked3())
        with self.assertRaises(UnknownActivationError):
            score_concept(lat, 3, activation='')
        with self.assertRaises(UnknownActivationError):
            score_lattice(lat, activation='')
        with self.assertRaises(UnknownIndexError):
            score_lattice(lat, index='')

    def test_top_concept_scores_zero(self):
        """Test that the top concept scores zero."""
        lat = build_lattice(toy3())
        score = score_concept(lat, 0)
        self.assertEqual((score.alpha, score.beta), (0.0, 0.0))

    def test_empty_intent(self):
        """Test α of a concept with an empty intent."""
        lat = build_lattice(worked3())
        self.assertEqual(alpha_in(lat.context, lat.top), 0.0)

    def test_single_generator_gives_zero_beta(self):
        """Test α, β and CR on contranominal scales."""
        ctx = contranominal(4)
        lat = build_lattice(ctx)
        for concept in lat:
            gens = minimal_generators(concept, face_family(lat, concept.id))
            self.assertEqual(len(gens), 1)
            self.assertEqual(beta_in(concept, gens), 0.0)
            if len(concept.intent):
                self.assertEqual(alpha_in(ctx, concept), 1.0)
                self.assertEqual(score_concept(lat, concept.id).value, 0.5)

    def test_relevance_needs_intent_attribute(self):
        """Test that relevance is only defined for intent attributes."""
        ctx = toy3()
        lat = build_lattice(ctx)
        with self.assertRaises(AttributeNotInIntentError):
            is_relevant_attribute(ctx, lat.top, ctx.attributes.index('b'))

    def test_relevant_attributes_are_shared_by_all_generators(self):
        """Test that relevant attributes are those in every minimal generator."""
        for ctx in random_corpus():
            lat = build_lattice(ctx)
            for concept in lat:
                common = minimal_generators(concept, face_family(lat, concept.id)).common()
                for m in concept.intent:
                    self.assertEqual(is_relevant_attribute(ctx, concept, m), bool(common >> m & 1))

    def test_scores_are_bounded(self):
        """Test that α, β and CR lie in [0, 1]."""
        for ctx in itertools.islice(random_corpus(), 100):
            lat = build_lattice(ctx)
            for concept in lat:
                score = score_concept(lat, concept.id)
                self.assertTrue(0.0 <= score.alpha <= 1.0)
                self.assertTrue(0.0 <= score.beta <= 1.0)
                self.assertTrue(0.0 <= score.value <= 1.0)


class StabilityTest(SimpleTestCase):
    """Test cases for brute-force and lattice stability."""

    def test_toy3(self):
        """Test brute-force stability on the toy context."""
        ctx = toy3()
        lat = build_lattice(ctx)
        self.assertEqual(stability_bruteforce(ctx, lat[1]).value, 1.0)
        self.assertEqual(stability_bruteforce(ctx, lat[0]).exact, Fraction(1, 2))
        self.assertEqual(stability_bruteforce(ctx, lat[0]).method, BRUTE_FORCE)

    def test_contranominal(self):
        """Test both stability methods on a contranominal scale."""
        ctx = contranominal(5)
        lat = build_lattice(ctx)
        dp = stability_lattice(lat)
        for concept in lat:
            expected = Fraction(1, 2 ** len(concept.extent))
            self.assertEqual(stability_bruteforce(ctx, concept).exact, expected)
            self.assertEqual(dp[concept.id].exact, expected)
            self.assertEqual(dp[concept.id].method, LATTICE_DP)

    def test_methods_agree_exactly(self):
        """Test that lattice stability equals brute-force stability."""
        for ctx in random_corpus():
            lat = build_lattice(ctx)
            dp = stability_lattice(lat, ctx)
            total = 0
            for concept in lat:
                brute = stability_bruteforce(ctx, concept)
                self.assertEqual(dp[concept.id].exact, brute.exact)
                total += brute.exact * 2 ** len(concept.extent)
            self.assertEqual(total, 2 ** ctx.n_objects)

    def test_extent_cap(self):
        """Test that the extent cap is enforced."""
        ctx = toy3()
        lat = build_lattice(ctx)
        with self.assertRaises(ExtentTooLargeError) as cm:
            stability_bruteforce(ctx, lat.top, max_extent=2)
        self.assertEqual(cm.exception.cap, 2)

    def test_lattice_from_other_context(self):
        """Test that a lattice of another context is rejected."""
        lat = build_lattice(toy3())
        with self.assertRaises(ContextMismatchError):
            stability_lattice(lat, contranominal(3))


class SelectionTest(SimpleTestCase):
    """Test cases for concept selection and whole-lattice scoring."""

    def test_select_concepts(self):
        """Test concept selection by score, count and threshold."""
        scores = {0: 0.5, 1: 0.9, 2: 0.5, 3: 0.1}
        self.assertEqual(select_concepts(scores), [1, 0, 2, 3])
        self.assertEqual(select_concepts(scores, k=2), [1, 0])
        self.assertEqual(select_concepts(scores, threshold=0.5), [1, 0, 2])
        self.assertEqual(select_concepts(scores, k=0), [])

    def test_score_lattice_cr(self):
        """Test CR rows for a whole lattice."""
        lat = build_lattice(toy3())
        rows = score_lattice(lat, index='cr', activation='arithmetic')
        self.assertEqual([row.concept_id for row in rows], [0, 1])
        self.assertAlmostEqual(rows[1].cr, 1 / 6, places=12)
        self.assertEqual(rows[1].n_mingens, 2)
        self.assertIsNone(rows[1].stability)

    def test_score_lattice_is_thread_independent(self):
        """Test that thread count does not change scores."""
        lat = build_lattice(gen_cointoss(10, 8, 0.5, seed=99))
        self.assertEqual(score_lattice(lat, threads=1), score_lattice(lat, threads=4))

    def test_score_lattice_stability_methods(self):
        """Test that both stability methods give the same rows."""
        lat = build_lattice(worked3())
        brute = score_lattice(lat, index='stability', stability_method='brute')
        dp = score_lattice(lat, index='stability', stability_method='dp')
        self.assertEqual([row.stability for row in brute], [row.stability for row in dp])

    def test_stability_above_cap_is_left_blank(self):
        """Test that stability above the cap is left empty."""
        lat = build_lattice(worked3())
        rows = score_lattice(lat, index='stability', stability_method='brute', max_extent=3)
        self.assertIsNone(rows[0].stability)
        self.assertIsNotNone(rows[3].stability)

    def test_unknown_index_and_method(self):
        """Test that unknown names raise errors."""
        lat = build_lattice(toy3())
        with self.assertRaises(UnknownIndexError):
            score_lattice(lat, index='robustness')
        with self.assertRaises(UnknownIndexError):
            score_lattice(lat, index='stability', stability_method='monte-carlo')
        with self.assertRaises(UnknownActivationError):
            score_lattice(lat, activation='sigmoidal')
