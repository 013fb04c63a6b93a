"""
Exact distribution of the complexity random variable C_n.

Every sequence of A^n is parsed once; a CountTable records how many have
complexity k and how many of those are exact. Probabilities are counts over
a^n as ``Fraction``; nothing here uses floating point.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from django.conf import settings

from .complexity_service import parse_summary
from .exceptions import InvalidInputError, ResourceLimitError

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_BUDGET = 2 ** 26


@dataclass
class CountTable:
    """N_n(k) and N_n(k_e) for one (alphabet size, length); every k in 1..n is present."""
    alphabet_size: int
    length: int
    counts: dict = field(default_factory=dict)
    exact_counts: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.alphabet_size < 2:
            raise InvalidInputError("Count tables need an alphabet of size >= 2")
        if self.length < 1:
            raise InvalidInputError("Count tables need a length >= 1")
        for k in self.counts.keys() | self.exact_counts.keys():
            if not 1 <= k <= self.length:
                raise InvalidInputError(f"Complexity {k} is impossible at length {self.length}")
        self.counts = {k: self.counts.get(k, 0) for k in self.support}
        self.exact_counts = {k: self.exact_counts.get(k, 0) for k in self.support}

    @classmethod
    def empty(cls, alphabet_size, length):
        return cls(alphabet_size=alphabet_size, length=length)

    @property
    def support(self):
        return range(1, self.length + 1)

    @property
    def total(self):
        return self.alphabet_size ** self.length

    def count(self, k):
        return self.counts.get(k, 0)

    def exact_count(self, k):
        return self.exact_counts.get(k, 0)

    def pmf(self, k):
        """P_n(k)"""
        return Fraction(self.count(k), self.total)

    def exact_pmf(self, k):
        """P_n(k_e)"""
        return Fraction(self.exact_count(k), self.total)

    def cdf(self, k):
        """P_n(C_n <= k)"""
        return Fraction(sum(self.count(s) for s in range(1, min(k, self.length) + 1)), self.total)

    def cdf_map(self):
        return {k: self.cdf(k) for k in self.support}

    def exact_mass(self):
        """Probability that a sequence of this length is exact."""
        return Fraction(sum(self.exact_counts.values()), self.total)

    def non_exact_mass(self):
        return 1 - self.exact_mass()

    def merge(self, other):
        """Add the counts of a disjoint scan of the same (alphabet size, length)."""
        if (other.alphabet_size, other.length) != (self.alphabet_size, self.length):
            raise InvalidInputError("Only tables of the same alphabet size and length can be merged")
        return CountTable(
            alphabet_size=self.alphabet_size,
            length=self.length,
            counts={k: self.count(k) + other.count(k) for k in self.support},
            exact_counts={k: self.exact_count(k) + other.exact_count(k) for k in self.support},
        )

    __add__ = merge

    def check_invariants(self):
        """List of violated table invariants; empty when the table is consistent."""
        problems = []
        if sum(self.counts.values()) != self.total:
            problems.append(f"counts sum to {sum(self.counts.values())}, expected {self.total}")
        for k in self.support:
            if self.count(k) < 0:
                problems.append(f"negative count {self.count(k)} at k={k}")
            if not 0 <= self.exact_count(k) <= self.count(k):
                problems.append(f"exact count {self.exact_count(k)} outside [0, {self.count(k)}] at k={k}")
        if (self.count(1) > 0) != (self.length == 1):
            problems.append("only length 1 admits complexity 1")
        return problems


@dataclass
class DistributionReport:
    """Count tables for n = 1..N plus the identity checks run against them."""
    alphabet_size: int
    tables: list
    identity_results: list = field(default_factory=list)
    extended_cdf: dict = None

    @property
    def n_max(self):
        return self.tables[-1].length if self.tables else 0

    def table(self, n):
        for table in self.tables:
            if table.length == n:
                return table
        raise InvalidInputError(f"No table for length {n} in this report")

    def pmf(self, n, k):
        return self.table(n).pmf(k)

    def exact_pmf(self, n, k):
        return self.table(n).exact_pmf(k)

    def cdf(self, n, k):
        return self.table(n).cdf(k)

    @property
    def passed(self):
        return all(result.passed for result in self.identity_results if result.required)

    @property
    def failures(self):
        return [result for result in self.identity_results if result.required and not result.passed]


def check_alphabet_size(alphabet_size):
    if alphabet_size < 2:
        raise InvalidInputError("Distribution work needs an alphabet of size >= 2")


def check_budget(alphabet_size, length, budget):
    size = alphabet_size ** length
    if size > budget:
        logger.warning(f"Refusing to enumerate {alphabet_size}^{length} sequences (budget {budget})")
        raise ResourceLimitError(
            f"Enumerating {alphabet_size}^{length} = {size} sequences exceeds the enumeration budget of {budget}",
            limit=budget,
        )
    return size


def split_range(size, parts):
    """Contiguous ``[start, stop)`` ranges covering ``range(size)``."""
    parts = max(1, min(parts, size))
    step, extra = divmod(size, parts)
    ranges = []
    start = 0
    for part in range(parts):
        stop = start + step + (1 if part < extra else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


def iter_words(alphabet_size, length, start, stop):
    """Words of A^n at lexicographic indices ``[start, stop)``, symbol i spelled ``chr(i)``."""
    digits = []
    index = start
    for _ in range(length):
        index, digit = divmod(index, alphabet_size)
        digits.append(digit)
    word = [chr(digit) for digit in reversed(digits)]
    for _ in range(stop - start):
        yield ''.join(word)
        position = length - 1
        while position >= 0 and ord(word[position]) == alphabet_size - 1:
            word[position] = chr(0)
            position -= 1
        if position >= 0:
            word[position] = chr(ord(word[position]) + 1)


def count_range(alphabet_size, length, start, stop):
    """
    Tally complexity and exactness over lexicographic indices ``[start, stop)`` of A^n.

    Module-level so worker processes can unpickle it.
    """
    counts = [0] * (length + 1)
    exact_counts = [0] * (length + 1)
    for word in iter_words(alphabet_size, length, start, stop):
        k, exact = parse_summary(word)
        counts[k] += 1
        if exact:
            exact_counts[k] += 1
    return CountTable(
        alphabet_size=alphabet_size,
        length=length,
        counts=dict(enumerate(counts[1:], start=1)),
        exact_counts=dict(enumerate(exact_counts[1:], start=1)),
    )


def enumerate_counts(alphabet_size, length, budget=DEFAULT_ENUMERATION_BUDGET, workers=1, chunks_per_worker=4):
    """Visit every sequence of A^n once and build its CountTable."""
    check_alphabet_size(alphabet_size)
    if length < 1:
        raise InvalidInputError("Length must be at least 1")
    size = check_budget(alphabet_size, length, budget)
    logger.debug(f"Enumerating {size} sequences for alphabet size {alphabet_size}, length {length} with {workers} worker(s)")

    if workers <= 1:
        return count_range(alphabet_size, length, 0, size)

    ranges = split_range(size, workers * chunks_per_worker)
    table = CountTable.empty(alphabet_size, length)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(count_range, alphabet_size, length, start, stop) for start, stop in ranges]
        for (start, stop), future in zip(ranges, futures):
            table = table.merge(future.result())
            logger.debug(f"Merged range [{start}, {stop}) for length {length}")
    return table


def index_tables(tables, n_max=None):
    """Map length -> table, requiring one shared alphabet size and every length 1..N."""
    if not tables:
        raise InvalidInputError("At least one count table is required")
    alphabet_sizes = {table.alphabet_size for table in tables}
    if len(alphabet_sizes) != 1:
        raise InvalidInputError(f"Tables mix alphabet sizes {sorted(alphabet_sizes)}")
    by_length = {}
    for table in tables:
        if table.length in by_length:
            raise InvalidInputError(f"Duplicate table for length {table.length}")
        by_length[table.length] = table
    if n_max is None:
        n_max = max(by_length)
    missing = [n for n in range(1, n_max + 1) if n not in by_length]
    if missing:
        raise InvalidInputError(f"Missing count tables for lengths {missing}")
    return by_length


def extend_cdf(table, cdf):
    """
    CDF of C_{n+1} from the CDF of C_n and P_n(k_e), without enumerating length n+1.

    ``cdf`` maps k -> P_n(C_n <= k); keys k >= n may be omitted (their value is 1).
    """
    n = table.length
    extended = {}
    for k in range(1, n + 2):
        if k in cdf:
            previous = Fraction(cdf[k])
        elif k >= n:
            previous = Fraction(1)
        else:
            raise InvalidInputError(f"CDF value for k={k} at length {n} is missing")
        extended[k] = previous - table.exact_pmf(k)
    return extended


def exact_mass_partial_sum(tables, k, n_max=None):
    """sum_{r=1}^{N} P_r(k_e) over the given tables."""
    by_length = index_tables(tables, n_max)
    if n_max is None:
        n_max = max(by_length)
    return sum((by_length[r].exact_pmf(k) for r in range(1, n_max + 1)), Fraction(0))


class DistributionService:
    """Enumeration front-end carrying the configured budget and worker count"""

    def __init__(self, budget=None, workers=None):
        self.budget = budget if budget is not None else getattr(settings, 'LZ_ENUMERATION_BUDGET', DEFAULT_ENUMERATION_BUDGET)
        self.workers = workers if workers is not None else getattr(settings, 'LZ_ENUMERATION_WORKERS', 1)

    def enumerate_counts(self, alphabet_size, length):
        return enumerate_counts(alphabet_size, length, budget=self.budget, workers=self.workers)

    def enumerate_tables(self, alphabet_size, n_max):
        """Tables for n = 1..n_max; the budget is checked up front for the largest length."""
        check_alphabet_size(alphabet_size)
        if n_max < 1:
            raise InvalidInputError("n_max must be at least 1")
        check_budget(alphabet_size, n_max, self.budget)
        logger.info(f"Enumerating tables for alphabet size {alphabet_size}, n = 1..{n_max} with {self.workers} worker(s)")
        return [self.enumerate_counts(alphabet_size, n) for n in range(1, n_max + 1)]

    def build_report(self, alphabet_size, n_max, verify=True, extend=False):
        from .verification_service import run_all_checks

        tables = self.enumerate_tables(alphabet_size, n_max)
        report = DistributionReport(alphabet_size=alphabet_size, tables=tables)
        if verify:
            report.identity_results = run_all_checks(tables)
            for failure in report.failures:
                logger.warning(f"Identity '{failure.name}' failed: {failure.detail}")
        if extend:
            last = tables[-1]
            report.extended_cdf = extend_cdf(last, last.cdf_map())
        return report
