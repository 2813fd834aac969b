"""
Unit tests for the concepts application.
Tests cover bitsets, formal contexts, file formats, lattice construction and
minimal generators, checked against exhaustive oracles on random contexts.
"""

import itertools
import tempfile
from pathlib import Path

from django.test import SimpleTestCase, override_settings

from .bitsets import AttrSet, ObjSet, canonical_key, iter_indexes
from .context import FormalContext, closure_attrs, derive_extent, derive_intent, gen_cointoss
from .exceptions import (
    ContextFormatError,
    ContextMismatchError,
    NotAnUpperCoverError,
    NotASubsetError,
    OracleTooLarge,
    ResourceCapExceeded,
    UnknownConceptError,
)
from .formats import load_context, parse_csv, parse_cxt, serialize_csv, serialize_cxt
from .generators import (
    FaceFamily,
    brute_force_mingen,
    face_family,
    is_generator,
    minimal_generators,
)
from .lattice import (
    brute_force_concepts,
    build_lattice,
    intent_order,
    intentional_face,
    lattice_to_json,
    lower_covers,
    upper_covers,
)


def toy3():
    """Objects 1 and 2 have a, b, c; object 3 only a."""
    return FormalContext.from_dict(
        {'1': ['a', 'b', 'c'], '2': ['a', 'b', 'c'], '3': ['a']},
        attributes=['a', 'b', 'c'],
        name='toy3',
    )


def worked3():
    """Intent {a, b, c} with one relevant attribute and two minimal generators."""
    return FormalContext.from_dict(
        {'1': ['a', 'b', 'c'], '2': ['a', 'b', 'c'], '3': ['b', 'c'], '4': ['a']},
        attributes=['a', 'b', 'c'],
        name='worked3',
    )


def contranominal(n):
    """Object i has every attribute except i."""
    everything = (1 << n) - 1
    return FormalContext(
        [f'g{i}' for i in range(n)],
        [f'm{i}' for i in range(n)],
        [everything & ~(1 << i) for i in range(n)],
        name=f'contranominal{n}',
    )


def random_corpus(count=200):
    """Seeded coin-toss contexts up to 10x10 over densities 0.1 to 0.9."""
    for i in range(count):
        n_objects = 1 + i % 10
        n_attrs = 1 + (i * 7) % 10
        p = (i % 9 + 1) / 10
        yield gen_cointoss(n_objects, n_attrs, p, seed=1000 + i)


class BitSetTest(SimpleTestCase):
    """Test cases for fixed-width bitsets."""

    def test_membership_and_iteration(self):
        """Test that bitsets report size, members and iterate in index order."""
        attrs = AttrSet.from_indexes([0, 3], 5)
        self.assertEqual(len(attrs), 2)
        self.assertEqual(list(attrs), [0, 3])
        self.assertIn(3, attrs)
        self.assertNotIn(1, attrs)
        self.assertFalse(AttrSet.empty(5))

    def test_set_operations(self):
        """Test intersection, union, difference and subset checks."""
        a = AttrSet.from_indexes([0, 1], 3)
        b = AttrSet.from_indexes([1, 2], 3)
        self.assertEqual(list(a & b), [1])
        self.assertEqual(list(a | b), [0, 1, 2])
        self.assertEqual(list(a - b), [0])
        self.assertTrue((a & b).issubset(a))
        self.assertTrue(AttrSet.full(3).issuperset(b))

    def test_bits_must_fit_width(self):
        """Test that bits outside the width are rejected."""
        with self.assertRaises(ContextMismatchError):
            AttrSet(0b1000, 3)

    def test_mixing_universes_is_rejected(self):
        """Test that sets of different widths or kinds cannot be combined."""
        with self.assertRaises(ContextMismatchError):
            AttrSet.full(3) & AttrSet.full(4)
        with self.assertRaises(ContextMismatchError):
            AttrSet.full(3) | ObjSet.full(3)

    def test_canonical_key_orders_by_size_then_value(self):
        """Test canonical key ordering."""
        values = [0b100, 0b011, 0b001, 0b010]
        self.assertEqual(sorted(values, key=canonical_key), [0b001, 0b010, 0b100, 0b011])


class FormalContextTest(SimpleTestCase):
    """Test cases for contexts and the derivation operators."""

    def setUp(self):
        """Create the toy context."""
        self.ctx = toy3()

    def test_shape_and_names(self):
        """Test context shape and name lookup."""
        self.assertEqual(self.ctx.shape, (3, 3))
        self.assertEqual(self.ctx.attribute_names(self.ctx.attrs('a', 'c')), ['a', 'c'])

    def test_derive_extent(self):
        """Test the attributes shared by a set of objects."""
        self.assertEqual(derive_extent(self.ctx, self.ctx.objs('1', '3')), self.ctx.attrs('a'))
        self.assertEqual(derive_extent(self.ctx, ObjSet.empty(3)), self.ctx.all_attributes())

    def test_derive_intent(self):
        """Test the objects having a set of attributes."""
        self.assertEqual(derive_intent(self.ctx, self.ctx.attrs('b')), self.ctx.objs('1', '2'))
        self.assertEqual(derive_intent(self.ctx, AttrSet.empty(3)), self.ctx.all_objects())

    def test_closure(self):
        """Test attribute closure, including the empty set."""
        self.assertEqual(closure_attrs(self.ctx, self.ctx.attrs('b')), self.ctx.attrs('a', 'b', 'c'))
        self.assertEqual(closure_attrs(self.ctx, AttrSet.empty(3)), self.ctx.attrs('a'))

    def test_width_mismatch_is_rejected(self):
        """Test that sets from another universe are rejected."""
        with self.assertRaises(ContextMismatchError):
            derive_intent(self.ctx, AttrSet.full(4))
        with self.assertRaises(ContextMismatchError):
            derive_extent(self.ctx, self.ctx.attrs('a'))

    def test_duplicate_names_are_rejected(self):
        """Test that duplicate object names raise an error."""
        with self.assertRaises(ContextFormatError):
            FormalContext(['g', 'g'], ['m'], [0, 1])

    def test_galois_connection_properties(self):
        """Test that closure is extensive and idempotent on every attribute subset."""
        for ctx in random_corpus():
            m = ctx.n_attributes
            for bits in range(1 << m):
                b = AttrSet(bits, m)
                closed = closure_attrs(ctx, b)
                self.assertTrue(b.issubset(closed))
                self.assertEqual(closure_attrs(ctx, closed), closed)

    def test_triple_prime(self):
        """Test that deriving three times equals deriving once."""
        for ctx in random_corpus():
            for bits in range(1 << ctx.n_attributes):
                extent = derive_intent(ctx, AttrSet(bits, ctx.n_attributes))
                self.assertEqual(derive_intent(ctx, derive_extent(ctx, extent)), extent)

    def test_derivation_is_antitone_and_closure_monotone(self):
        """Test that adding an attribute shrinks the extent and grows the closure."""
        for ctx in random_corpus():
            m = ctx.n_attributes
            for bits in range(1 << m):
                smaller = AttrSet(bits, m)
                for extra in range(m):
                    larger = smaller.add(extra)
                    self.assertTrue(derive_intent(ctx, larger).issubset(derive_intent(ctx, smaller)))
                    self.assertTrue(closure_attrs(ctx, smaller).issubset(closure_attrs(ctx, larger)))

    def test_galois_equivalence(self):
        """Test A ⊆ B′ iff B ⊆ A′ for every pair on small contexts."""
        for ctx in random_corpus():
            n, m = ctx.shape
            if n + m > 12:
                continue
            for b_bits in range(1 << m):
                b = AttrSet(b_bits, m)
                b_prime = derive_intent(ctx, b)
                for a_bits in range(1 << n):
                    a = ObjSet(a_bits, n)
                    self.assertEqual(a.issubset(b_prime), b.issubset(derive_extent(ctx, a)))

    def test_galois_equivalence_near_closed_extents(self):
        """Test the Galois equivalence on extents and their one-object extensions."""
        for ctx in random_corpus():
            n, m = ctx.shape
            for b_bits in range(1 << m):
                b = AttrSet(b_bits, m)
                b_prime = derive_intent(ctx, b)
                for a in [b_prime] + [b_prime.add(g) for g in range(n)]:
                    self.assertEqual(a.issubset(b_prime), b.issubset(derive_extent(ctx, a)))

    def test_context_is_immutable(self):
        """Test that a context cannot be modified after construction."""
        with self.assertRaises(AttributeError):
            self.ctx.name = 'renamed'
        self.assertEqual(self.ctx.name, 'toy3')

    def test_cointoss_is_deterministic(self):
        """Test that the same seed gives the same context."""
        self.assertEqual(gen_cointoss(30, 8, 0.4, seed=7), gen_cointoss(30, 8, 0.4, seed=7))
        self.assertNotEqual(gen_cointoss(30, 8, 0.4, seed=7), gen_cointoss(30, 8, 0.4, seed=8))

    def test_cointoss_extreme_densities(self):
        """Test coin-toss contexts with p = 0 and p = 1."""
        self.assertTrue(all(row == 0 for row in gen_cointoss(10, 5, 0.0, seed=1).rows))
        self.assertTrue(all(row == 0b11111 for row in gen_cointoss(10, 5, 1.0, seed=1).rows))

    def test_cointoss_rejects_bad_probability(self):
        """Test that a probability above 1 is rejected."""
        with self.assertRaises(ValueError):
            gen_cointoss(3, 3, 1.5, seed=0)

    def test_subcontext_keeps_attributes(self):
        """Test subcontext object order and attributes."""
        sub = self.ctx.subcontext([2, 0])
        self.assertEqual(sub.objects, ('3', '1'))
        self.assertEqual(sub.attributes, self.ctx.attributes)


class FormatTest(SimpleTestCase):
    """Test cases for the .cxt and CSV readers and writers."""

    SAMPLE = 'B\n\n2\n2\no1\no2\na1\na2\nX.\nXX\n'

    def test_parse_cxt(self):
        """Test parsing a Burmeister file."""
        ctx = parse_cxt(self.SAMPLE)
        self.assertEqual(ctx.objects, ('o1', 'o2'))
        self.assertEqual(ctx.attributes, ('a1', 'a2'))
        self.assertEqual(ctx.rows, (0b01, 0b11))

    def test_parse_cxt_accepts_crlf_and_lowercase(self):
        """Test that CRLF line endings and lowercase x are accepted."""
        ctx = parse_cxt(self.SAMPLE.replace('XX', 'xX').replace('\n', '\r\n'))
        self.assertEqual(ctx.rows, (0b01, 0b11))

    def test_parse_cxt_tolerates_blank_line_after_counts(self):
        """Test the blank line some tools write after the counts."""
        text = 'B\nname\n2\n2\n\no1\no2\na1\na2\nX.\nXX\n'
        ctx = parse_cxt(text)
        self.assertEqual(ctx.name, 'name')
        self.assertEqual(ctx.objects, ('o1', 'o2'))

    def test_parse_empty_cxt(self):
        """Test parsing an empty context."""
        ctx = parse_cxt('B\n\n0\n0\n')
        self.assertEqual(ctx.shape, (0, 0))

    def test_row_length_error_reports_line(self):
        """Test that a wrong row length reports its line number."""
        with self.assertRaises(ContextFormatError) as cm:
            parse_cxt('B\n\n2\n2\no1\no2\na1\na2\nX.X\nXX\n')
        self.assertEqual(cm.exception.line, 9)
        self.assertIn('line 9', str(cm.exception))

    def test_illegal_character(self):
        """Test that unknown grid characters are rejected."""
        with self.assertRaises(ContextFormatError) as cm:
            parse_cxt('B\n\n2\n2\no1\no2\na1\na2\nX.\nX1\n')
        self.assertEqual(cm.exception.line, 10)

    def test_bad_header(self):
        """Test that a file not starting with B is rejected."""
        with self.assertRaises(ContextFormatError) as cm:
            parse_cxt('C\n\n1\n1\no\na\nX\n')
        self.assertEqual(cm.exception.line, 1)

    def test_duplicate_attribute_names(self):
        """Test that duplicate attribute names report their line."""
        with self.assertRaises(ContextFormatError) as cm:
            parse_cxt('B\n\n1\n2\no\na\na\nXX\n')
        self.assertEqual(cm.exception.line, 7)

    def test_truncated_grid(self):
        """Test that a missing grid row is rejected."""
        with self.assertRaises(ContextFormatError):
            parse_cxt('B\n\n2\n1\no1\no2\na\nX\n')

    def test_cxt_round_trip_is_byte_identical(self):
        """Test that writing a parsed file reproduces it exactly."""
        for seed in range(50):
            ctx = gen_cointoss(1 + seed % 12, 1 + seed % 7, 0.35, seed=seed)
            text = serialize_cxt(ctx)
            self.assertEqual(serialize_cxt(parse_cxt(text)), text)

    def test_parse_csv(self):
        """Test parsing a CSV table."""
        ctx = parse_csv(',a1,a2\no1,1,0\no2,X,x\n')
        self.assertEqual(ctx.rows, (0b01, 0b11))

    def test_csv_and_cxt_give_identical_lattices(self):
        """Test that both formats yield the same context and lattice."""
        ctx = gen_cointoss(9, 6, 0.4, seed=3)
        from_csv = parse_csv(serialize_csv(ctx))
        from_cxt = parse_cxt(serialize_cxt(ctx))
        self.assertEqual(from_csv, from_cxt)
        self.assertEqual(lattice_to_json(build_lattice(from_csv)), lattice_to_json(build_lattice(from_cxt)))

    def test_csv_round_trip_without_attributes(self):
        """Test that a CSV table without attributes keeps every object."""
        ctx = FormalContext(['o1', 'o2'], [], [0, 0])
        text = serialize_csv(ctx)
        self.assertEqual(text, '""\no1\no2\n')
        self.assertEqual(parse_csv(text), ctx)

    def test_csv_blank_cells_after_header_are_objects(self):
        """Test that only empty records are skipped after the header."""
        ctx = parse_csv(',a1\n\no1,1\n,0\n')
        self.assertEqual(ctx.objects, ('o1', ''))
        self.assertEqual(ctx.rows, (0b1, 0b0))

    def test_cxt_round_trip_without_attributes(self):
        """Test a Burmeister round trip without attributes."""
        ctx = FormalContext(['o1', 'o2'], [], [0, 0])
        text = serialize_cxt(ctx)
        self.assertEqual(parse_cxt(text), ctx)
        self.assertEqual(serialize_cxt(parse_cxt(text)), text)

    def test_blank_line_after_counts_without_attributes(self):
        """Test the blank line after the counts when there are no attributes."""
        for text in ('B\nname\n2\n0\n\no1\no2\n\n\n', 'B\nname\n2\n0\n\no1\no2\n'):
            ctx = parse_cxt(text)
            self.assertEqual(ctx.objects, ('o1', 'o2'))
            self.assertEqual(ctx.rows, (0, 0))

    def test_csv_ragged_row(self):
        """Test that a short CSV row reports its line number."""
        with self.assertRaises(ContextFormatError) as cm:
            parse_csv(',a1,a2\no1,1\n')
        self.assertEqual(cm.exception.line, 2)

    def test_csv_unknown_token(self):
        """Test that unknown CSV cell tokens are rejected."""
        with self.assertRaises(ContextFormatError):
            parse_csv(',a1\no1,yes\n')

    def test_load_context_uses_extension_and_stem(self):
        """Test that load_context picks the parser and names the context."""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'sample.cxt'
            path.write_text(self.SAMPLE, encoding='utf-8')
            ctx = load_context(path)
        self.assertEqual(ctx.name, 'sample')
        self.assertEqual(ctx.n_objects, 2)

    def test_load_context_keeps_name_from_file(self):
        """Test that a name inside the file wins over the file stem."""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'sample.cxt'
            path.write_text('B\nnamed\n1\n1\no\na\nX\n', encoding='utf-8')
            ctx = load_context(path)
        self.assertEqual(ctx.name, 'named')

    def test_csv_name_comes_from_file_stem(self):
        """Test that CSV contexts are named after their file."""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'table.csv'
            path.write_text(',a\no,1\n', encoding='utf-8')
            ctx = load_context(path)
        self.assertEqual(ctx.name, 'table')
        self.assertEqual(parse_csv(',a\no,1\n').name, '')

    def test_load_context_unknown_extension(self):
        """Test that an unknown extension is rejected."""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'sample.txt'
            path.write_text(self.SAMPLE, encoding='utf-8')
            with self.assertRaises(ContextFormatError):
                load_context(path)


class LatticeTest(SimpleTestCase):
    """Test cases for concept enumeration and the cover relation."""

    def test_toy3_has_two_concepts(self):
        """Test the toy context lattice."""
        ctx = toy3()
        lat = build_lattice(ctx)
        self.assertEqual(len(lat), 2)
        self.assertEqual(lat.top.extent, ctx.all_objects())
        self.assertEqual(lat.top.intent, ctx.attrs('a'))
        self.assertEqual(lat.bottom.extent, ctx.objs('1', '2'))
        self.assertEqual(upper_covers(lat, 1), [0])
        self.assertEqual(lower_covers(lat, 0), [1])

    def test_worked3_canonical_order(self):
        """Test canonical concept order and covers."""
        ctx = worked3()
        lat = build_lattice(ctx)
        self.assertEqual(
            [ctx.object_names(c.extent) for c in lat],
            [['1', '2', '3', '4'], ['1', '2', '3'], ['1', '2', '4'], ['1', '2']],
        )
        self.assertEqual(upper_covers(lat, 3), [1, 2])
        self.assertEqual(upper_covers(lat, 0), [])

    def test_empty_context(self):
        """Test that the empty context has a single concept."""
        lat = build_lattice(FormalContext([], [], []))
        self.assertEqual(len(lat), 1)
        self.assertEqual(lat.upper, ((),))

    def test_single_object_without_attributes(self):
        """Test a context with one object and no attributes."""
        lat = build_lattice(FormalContext(['g'], [], [0]))
        self.assertEqual(len(lat), 1)

    def test_contranominal_is_boolean(self):
        """Test that contranominal scales give Boolean lattices."""
        for n in range(1, 7):
            lat = build_lattice(contranominal(n))
            self.assertEqual(len(lat), 2 ** n)
            for concept in lat:
                self.assertEqual(len(lat.upper[concept.id]), len(concept.intent))

    def test_matches_brute_force_oracle(self):
        """Test lattice construction against closing every attribute subset."""
        for ctx in random_corpus():
            lat = build_lattice(ctx)
            found = {(c.extent, c.intent) for c in lat}
            self.assertEqual(len(found), len(lat))
            self.assertEqual(found, brute_force_concepts(ctx))

    def test_covers_match_reachability(self):
        """Test that covers are the transitive reduction of extent inclusion."""
        for ctx in itertools.islice(random_corpus(), 80):
            lat = build_lattice(ctx)
            extents = [c.extent.bits for c in lat]
            above = [
                sum(1 << j for j, other in enumerate(extents) if other != extent and extent & ~other == 0)
                for extent in extents
            ]
            for i in range(len(lat)):
                reachable_in_two = 0
                for k in iter_indexes(above[i]):
                    reachable_in_two |= above[k]
                self.assertEqual(list(lat.upper[i]), list(iter_indexes(above[i] & ~reachable_in_two)))

    @override_settings(FCA_COVER_PAIRWISE_LIMIT=0)
    def test_neighbour_covers_agree_with_pairwise(self):
        """Test that both cover computations agree."""
        for ctx in itertools.islice(random_corpus(), 100):
            neighbour = build_lattice(ctx)
            pairwise = build_lattice(ctx, pairwise_limit=10 ** 6)
            self.assertEqual(neighbour.upper, pairwise.upper)
            self.assertEqual(neighbour.lower, pairwise.lower)

    def test_build_is_deterministic(self):
        """Test that building twice gives the same lattice."""
        ctx = gen_cointoss(10, 10, 0.5, seed=11)
        self.assertEqual(lattice_to_json(build_lattice(ctx)), lattice_to_json(build_lattice(ctx)))

    def test_resource_cap(self):
        """Test that the concept cap is enforced."""
        with self.assertRaises(ResourceCapExceeded) as cm:
            build_lattice(toy3(), max_concepts=1)
        self.assertEqual(cm.exception.cap, 1)

    def test_unknown_concept(self):
        """Test that unknown concept ids raise an error."""
        lat = build_lattice(toy3())
        with self.assertRaises(UnknownConceptError):
            lat[5]
        with self.assertRaises(UnknownConceptError):
            upper_covers(lat, -1)

    def test_intentional_face(self):
        """Test faces against each upper cover."""
        ctx = worked3()
        lat = build_lattice(ctx)
        self.assertEqual(intentional_face(lat[3], lat[1], lat), ctx.attrs('a'))
        self.assertEqual(intentional_face(lat[3], lat[2], lat), ctx.attrs('b', 'c'))

    def test_intentional_face_rejects_non_covers(self):
        """Test that faces require an upper cover from the same lattice."""
        lat = build_lattice(worked3())
        with self.assertRaises(NotAnUpperCoverError):
            intentional_face(lat[3], lat[0], lat)
        with self.assertRaises(NotAnUpperCoverError):
            intentional_face(lat[0], lat[3], lat)
        other = build_lattice(toy3())
        with self.assertRaises(NotAnUpperCoverError):
            intentional_face(other[1], other[0], lat)

    def test_order_is_antitone(self):
        """Test that extent inclusion reverses intent inclusion."""
        for ctx in itertools.islice(random_corpus(), 100):
            lat = build_lattice(ctx)
            for c, d in itertools.product(lat, repeat=2):
                self.assertEqual(c.extent.issubset(d.extent), d.intent.issubset(c.intent))

    def test_oracle_cap(self):
        """Test that the concept oracle refuses large contexts."""
        with self.assertRaises(OracleTooLarge):
            brute_force_concepts(gen_cointoss(2, 21, 0.5, seed=0))

    def test_lattice_json(self):
        """Test the JSON export."""
        data = lattice_to_json(build_lattice(toy3()))
        self.assertEqual(data, [
            {'id': 0, 'extent': ['1', '2', '3'], 'intent': ['a'], 'upper': []},
            {'id': 1, 'extent': ['1', '2'], 'intent': ['a', 'b', 'c'], 'upper': [0]},
        ])

    def test_intent_order(self):
        """Test ordering concepts by intent."""
        lat = build_lattice(worked3())
        self.assertEqual(intent_order(lat), [0, 2, 1, 3])


class GeneratorTest(SimpleTestCase):
    """Test cases for minimal generators."""

    def test_worked3_generators(self):
        """Test the minimal generators of the worked concept."""
        ctx = worked3()
        lat = build_lattice(ctx)
        gens = minimal_generators(lat[3], face_family(lat, 3))
        self.assertEqual(list(gens), [ctx.attrs('a', 'b'), ctx.attrs('a', 'c')])
        self.assertEqual(gens.common(), ctx.attrs('a').bits)

    def test_toy3_generators(self):
        """Test the minimal generators of the toy bottom concept."""
        ctx = toy3()
        lat = build_lattice(ctx)
        self.assertEqual(list(minimal_generators(lat[1], face_family(lat, 1))), [ctx.attrs('b'), ctx.attrs('c')])

    def test_top_concept_has_empty_generator(self):
        """Test that the top concept is generated by the empty set."""
        lat = build_lattice(toy3())
        gens = minimal_generators(lat.top, face_family(lat, 0))
        self.assertEqual(list(gens), [AttrSet.empty(3)])

    def test_faces_must_belong_to_concept(self):
        """Test that faces of another concept are rejected."""
        lat = build_lattice(worked3())
        with self.assertRaises(ContextMismatchError):
            minimal_generators(lat[3], face_family(lat, 1))
        with self.assertRaises(ContextMismatchError):
            minimal_generators(lat[1], FaceFamily(1, (AttrSet.full(3),)))

    def test_matches_brute_force_oracle(self):
        """Test minimal generators against the exhaustive oracle."""
        for ctx in random_corpus():
            lat = build_lattice(ctx)
            for concept in lat:
                gens = minimal_generators(concept, face_family(lat, concept.id))
                self.assertEqual(list(gens), list(brute_force_mingen(ctx, concept)))

    def test_generators_form_an_antichain(self):
        """Test that generators are minimal and pairwise incomparable."""
        for ctx in itertools.islice(random_corpus(), 60):
            lat = build_lattice(ctx)
            for concept in lat:
                gens = list(minimal_generators(concept, face_family(lat, concept.id)))
                for g, h in itertools.permutations(gens, 2):
                    self.assertFalse(g.issubset(h))
                for g in gens:
                    self.assertTrue(is_generator(ctx, g, concept.intent))
                    for m in g:
                        self.assertFalse(is_generator(ctx, g.discard(m), concept.intent))

    def test_cover_pairs_have_distinct_generators(self):
        """Test that a concept and its upper cover never share generators."""
        for ctx in random_corpus():
            lat = build_lattice(ctx)
            generators = [
                {gen.bits for gen in minimal_generators(concept, face_family(lat, concept.id))}
                for concept in lat
            ]
            for concept in lat:
                for upper in lat.upper[concept.id]:
                    self.assertNotEqual(generators[concept.id], generators[upper])

    def test_is_generator_rejects_non_subsets(self):
        """Test that generators must lie inside the intent."""
        ctx = worked3()
        with self.assertRaises(NotASubsetError):
            is_generator(ctx, ctx.attrs('a'), ctx.attrs('b', 'c'))

    def test_oracle_cap(self):
        """Test that the generator oracle refuses large intents."""
        ctx = contranominal(4)
        lat = build_lattice(ctx)
        with self.assertRaises(OracleTooLarge):
            brute_force_mingen(ctx, lat.bottom, max_intent=2)
