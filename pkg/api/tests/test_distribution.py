from fractions import Fraction
from itertools import islice, product

from django.test import SimpleTestCase, override_settings

from api.services.distribution_service import (
    CountTable, DistributionService, count_range, enumerate_counts, exact_mass_partial_sum,
    extend_cdf, index_tables, iter_words, split_range,
)
from api.services.exceptions import InvalidInputError, ResourceLimitError
from api.services.table_io_service import tables_to_csv

from .utils import cached_tables


class EnumerationTests(SimpleTestCase):
    def test_binary_small_lengths(self):
        one, two, three, four = (enumerate_counts(2, n) for n in range(1, 5))
        self.assertEqual(one.counts, {1: 2})
        self.assertEqual(one.exact_counts, {1: 2})
        self.assertEqual(two.counts, {1: 0, 2: 4})
        self.assertEqual(two.exact_counts, {1: 0, 2: 2})
        self.assertEqual(three.counts, {1: 0, 2: 4, 3: 4})
        self.assertEqual(three.exact_counts, {1: 0, 2: 2, 3: 0})
        self.assertEqual(four.counts, {1: 0, 2: 4, 3: 12, 4: 0})
        self.assertEqual(four.exact_counts, {1: 0, 2: 2, 3: 4, 4: 0})

    def test_ternary_small_lengths(self):
        self.assertEqual(enumerate_counts(3, 1).counts, {1: 3})
        self.assertEqual(enumerate_counts(3, 2).counts, {1: 0, 2: 9})
        self.assertEqual(enumerate_counts(3, 2).exact_counts, {1: 0, 2: 6})

    def test_complexity_two_is_rare(self):
        # only a^(n-1)b is exact with two components
        for alphabet_size, n_max in ((2, 12), (3, 8)):
            for table in cached_tables(alphabet_size, n_max)[1:]:
                self.assertEqual(table.exact_count(2), alphabet_size * (alphabet_size - 1))

    def test_invariants_hold(self):
        for alphabet_size, n_max in ((2, 12), (3, 8), (4, 6)):
            for table in cached_tables(alphabet_size, n_max):
                with self.subTest(alphabet_size=alphabet_size, n=table.length):
                    self.assertEqual(table.check_invariants(), [])

    def test_budget_exceeded(self):
        with self.assertRaises(ResourceLimitError) as raised:
            enumerate_counts(2, 40)
        self.assertEqual(raised.exception.limit, 2 ** 26)
        self.assertIn('budget', str(raised.exception))

    def test_alphabet_must_have_two_symbols(self):
        with self.assertRaises(InvalidInputError):
            enumerate_counts(1, 3)

    def test_parallel_enumeration_matches_sequential(self):
        sequential = [enumerate_counts(2, n, workers=1) for n in range(1, 13)]
        parallel = [enumerate_counts(2, n, workers=8) for n in range(1, 13)]
        self.assertEqual(sequential, parallel)
        self.assertEqual(tables_to_csv(sequential), tables_to_csv(parallel))

    def test_ranges_merge_to_the_full_table(self):
        size = 3 ** 6
        parts = [count_range(3, 6, start, stop) for start, stop in split_range(size, 7)]
        merged = parts[0]
        for part in parts[1:]:
            merged = merged + part
        self.assertEqual(merged, enumerate_counts(3, 6))

    def test_split_range_covers_everything(self):
        ranges = split_range(10, 4)
        self.assertEqual(ranges, [(0, 3), (3, 6), (6, 8), (8, 10)])
        self.assertEqual(split_range(3, 8), [(0, 1), (1, 2), (2, 3)])

    def test_words_start_mid_range(self):
        letters = [chr(i) for i in range(3)]
        expected = [''.join(word) for word in islice(product(letters, repeat=4), 17, 30)]
        self.assertEqual(list(iter_words(3, 4, 17, 30)), expected)
        self.assertEqual(list(iter_words(2, 3, 7, 8)), [chr(1) * 3])
        self.assertEqual(list(iter_words(2, 3, 4, 4)), [])


class CountTableTests(SimpleTestCase):
    def setUp(self):
        self.table = enumerate_counts(2, 3)

    def test_probabilities_are_exact(self):
        self.assertEqual(self.table.pmf(2), Fraction(1, 2))
        self.assertEqual(self.table.exact_pmf(2), Fraction(1, 4))
        self.assertEqual(self.table.cdf(1), 0)
        self.assertEqual(self.table.cdf(2), Fraction(1, 2))
        self.assertEqual(self.table.cdf(3), 1)
        self.assertEqual(self.table.cdf(10), 1)
        self.assertEqual(self.table.exact_mass(), Fraction(1, 4))
        self.assertEqual(self.table.non_exact_mass(), Fraction(3, 4))

    def test_rejects_impossible_complexity(self):
        with self.assertRaises(InvalidInputError):
            CountTable(alphabet_size=2, length=3, counts={4: 1})

    def test_merge_requires_same_shape(self):
        with self.assertRaises(InvalidInputError):
            self.table.merge(enumerate_counts(2, 4))

    def test_broken_table_reports_problems(self):
        broken = CountTable(alphabet_size=2, length=3, counts={2: 4, 3: 3}, exact_counts={2: 5})
        problems = broken.check_invariants()
        self.assertEqual(len(problems), 2)


class CdfExtensionTests(SimpleTestCase):
    def test_examples(self):
        two, three = enumerate_counts(2, 2), enumerate_counts(2, 3)
        self.assertEqual(extend_cdf(two, two.cdf_map())[2], Fraction(1, 2))
        self.assertEqual(extend_cdf(three, three.cdf_map())[2], Fraction(1, 4))
        self.assertEqual(extend_cdf(three, three.cdf_map())[4], 1)

    def test_omitted_tail_is_one(self):
        three = enumerate_counts(2, 3)
        self.assertEqual(extend_cdf(three, {1: 0, 2: Fraction(1, 2)}), extend_cdf(three, three.cdf_map()))

    def test_missing_value_rejected(self):
        with self.assertRaises(InvalidInputError):
            extend_cdf(enumerate_counts(2, 3), {2: Fraction(1, 2)})


class PartialSumTests(SimpleTestCase):
    def test_binary_values(self):
        tables = list(cached_tables(2, 10))
        self.assertEqual(exact_mass_partial_sum(tables, 1, n_max=1), 1)
        self.assertEqual(exact_mass_partial_sum(tables, 2, n_max=3), Fraction(3, 4))
        self.assertEqual(exact_mass_partial_sum(tables, 2, n_max=4), Fraction(7, 8))
        self.assertEqual(exact_mass_partial_sum(tables, 2), Fraction(511, 512))
        self.assertGreaterEqual(exact_mass_partial_sum(tables, 2), Fraction(95, 100))

    def test_index_requires_every_length(self):
        tables = list(cached_tables(2, 4))
        with self.assertRaises(InvalidInputError):
            index_tables([tables[0], tables[2]])
        with self.assertRaises(InvalidInputError):
            index_tables(tables + [tables[1]])
        with self.assertRaises(InvalidInputError):
            index_tables(tables + [enumerate_counts(3, 5)])


class DistributionServiceTests(SimpleTestCase):
    @override_settings(LZ_ENUMERATION_BUDGET=2 ** 8)
    def test_budget_from_settings(self):
        service = DistributionService()
        self.assertEqual(len(service.enumerate_tables(2, 8)), 8)
        with self.assertRaises(ResourceLimitError):
            service.enumerate_tables(2, 9)

    def test_report(self):
        report = DistributionService(workers=1).build_report(2, 6, extend=True)
        self.assertTrue(report.passed)
        self.assertEqual(report.failures, [])
        self.assertEqual(report.n_max, 6)
        self.assertEqual(report.cdf(3, 2), Fraction(1, 2))
        self.assertEqual(report.pmf(4, 3), Fraction(3, 4))
        self.assertEqual(report.exact_pmf(4, 3), Fraction(1, 4))
        self.assertEqual(report.extended_cdf[2], Fraction(4, 128))
        with self.assertRaises(InvalidInputError):
            report.table(7)
