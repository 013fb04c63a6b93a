from fractions import Fraction

from django.test import SimpleTestCase

from api.services.complexity_service import Alphabet, Sequence
from api.services.exceptions import DegenerateThresholdError, InvalidInputError, TableUnavailableError
from api.services.randomness_service import (
    CriticalSetSpec, RandomnessTestService, TestVerdict, critical_probability, default_threshold,
)

from .utils import WORKED_EXAMPLE, binary, cached_tables


class DefaultThresholdTests(SimpleTestCase):
    def test_exact_values(self):
        cases = {
            (2, 16): 4,
            (2, 1024): 102,
            (3, 9): 4,
            (4, 8): 5,
            (10, 1000): 333,
        }
        for (alphabet_size, length), expected in cases.items():
            with self.subTest(alphabet_size=alphabet_size, length=length):
                self.assertEqual(default_threshold(alphabet_size, length), expected)

    def test_irrational_logarithms(self):
        self.assertEqual(default_threshold(2, 3), 1)
        self.assertEqual(default_threshold(2, 10), 3)
        self.assertEqual(default_threshold(2, 100), 15)
        self.assertEqual(default_threshold(3, 10), 4)

    def test_degenerate_lengths(self):
        for alphabet_size, length in ((2, 1), (2, 2), (3, 3), (4, 2)):
            with self.subTest(alphabet_size=alphabet_size, length=length):
                with self.assertRaises(DegenerateThresholdError):
                    default_threshold(alphabet_size, length)

    def test_unary_alphabet_rejected(self):
        with self.assertRaises(InvalidInputError):
            default_threshold(1, 10)


class CriticalProbabilityTests(SimpleTestCase):
    def test_binary_values(self):
        tables = cached_tables(2, 4)
        self.assertEqual(critical_probability(tables[2], 2), Fraction(1, 2))
        self.assertEqual(critical_probability(tables[2], 3), 1)
        self.assertEqual(critical_probability(tables[3], 2), Fraction(1, 4))

    def test_shrinks_with_length(self):
        tables = cached_tables(2, 12)
        values = [critical_probability(table, 2) for table in tables[1:]]
        self.assertEqual(values[0], 1)
        for earlier, later in zip(values, values[1:]):
            self.assertLess(later, earlier)

    def test_non_decreasing_in_k(self):
        table = cached_tables(3, 7)[-1]
        values = [critical_probability(table, k) for k in table.support]
        self.assertEqual(values, sorted(values))
        self.assertEqual(values[-1], 1)

    def test_missing_table(self):
        with self.assertRaises(TableUnavailableError):
            critical_probability(None, 2)

    def test_threshold_out_of_range(self):
        with self.assertRaises(InvalidInputError):
            critical_probability(cached_tables(2, 3)[2], 4)
        with self.assertRaises(InvalidInputError):
            critical_probability(cached_tables(2, 3)[2], 0)


class RandomnessTestServiceTests(SimpleTestCase):
    def setUp(self):
        tables = {(t.alphabet_size, t.length): t for t in cached_tables(2, 10)}

        def source(alphabet_size, length):
            try:
                return tables[(alphabet_size, length)]
            except KeyError:
                raise TableUnavailableError('missing') from None

        self.service = RandomnessTestService(table_sources=[source])

    def test_worked_example_is_not_suspicious(self):
        verdict = RandomnessTestService().test_sequence(binary(WORKED_EXAMPLE))
        self.assertEqual(verdict.observed_complexity, 5)
        self.assertEqual(verdict.threshold_k, 4)
        self.assertFalse(verdict.in_critical_set)
        self.assertIsNone(verdict.significance)

    def test_constant_sequence_is_suspicious(self):
        verdict = RandomnessTestService().test_sequence(binary('0' * 16))
        self.assertEqual(verdict.observed_complexity, 2)
        self.assertTrue(verdict.in_critical_set)

    def test_significance_from_table(self):
        verdict = self.service.test_sequence(binary('0' * 10))
        self.assertEqual(verdict.threshold_k, 3)
        self.assertEqual(verdict.significance, cached_tables(2, 10)[9].cdf(3))

    def test_threshold_of_n_always_rejects(self):
        sequence = binary('0110100110')
        spec = CriticalSetSpec(alphabet_size=2, length=10, threshold_k=10)
        verdict = self.service.test_sequence(sequence, spec)
        self.assertTrue(verdict.in_critical_set)
        self.assertEqual(verdict.significance, 1)

    def test_falls_through_to_later_sources(self):
        def empty(alphabet_size, length):
            raise TableUnavailableError('nothing here')

        service = RandomnessTestService(table_sources=[empty, *self.service.table_sources])
        self.assertEqual(service.find_table(2, 4), cached_tables(2, 4)[3])
        with self.assertRaises(TableUnavailableError):
            service.find_table(2, 11)

    def test_spec_must_match_sequence(self):
        with self.assertRaises(InvalidInputError):
            self.service.test_sequence(binary('0' * 10), CriticalSetSpec(alphabet_size=2, length=9, threshold_k=3))
        ternary = Sequence(symbols=(0, 1, 2, 0), alphabet=Alphabet.of_size(3))
        with self.assertRaises(InvalidInputError):
            self.service.test_sequence(ternary, CriticalSetSpec(alphabet_size=2, length=4, threshold_k=2))

    def test_threshold_must_be_in_range(self):
        with self.assertRaises(InvalidInputError):
            CriticalSetSpec(alphabet_size=2, length=10, threshold_k=11)

    def test_verdict_to_dict(self):
        verdict = TestVerdict(alphabet_size=2, length=4, observed_complexity=2, threshold_k=2,
                              in_critical_set=True, significance=Fraction(1, 4))
        self.assertEqual(verdict.to_dict()['significance'], {'numerator': '1', 'denominator': '4'})
        self.assertIsNone(TestVerdict(2, 4, 3, 2, False).to_dict()['significance'])
