"""
Complexity as a randomness test.

A sequence of length n falls in the critical set K_{n,k} when its complexity
is at most k; low complexity marks it as suspicious. The default k is
floor(n / log_a n). The significance level P_n(K_{n,k}) is read from an exact
count table when one is available and omitted otherwise.
"""
import logging
from dataclasses import dataclass
from decimal import ROUND_FLOOR, Decimal, localcontext

from .complexity_service import complexity
from .exceptions import DegenerateThresholdError, InvalidInputError, TableUnavailableError

logger = logging.getLogger(__name__)

LOG_PRECISION = 60


def _integer_root(value, degree):
    guess = round(value ** (1.0 / degree))
    for candidate in (guess - 1, guess, guess + 1):
        if candidate >= 1 and candidate ** degree == value:
            return candidate
    return None


def _integer_log(value, base):
    """e with base**e == value, or None."""
    exponent, power = 0, 1
    while power < value:
        power *= base
        exponent += 1
    return exponent if power == value else None


def _rational_log(alphabet_size, length):
    """log_a(n) as (numerator, denominator) when it is rational, else None."""
    # write a = b**d with b not a perfect power; log_a n is rational iff n is a power of b
    for degree in range(alphabet_size.bit_length(), 0, -1):
        base = _integer_root(alphabet_size, degree)
        if base is not None and base >= 2:
            exponent = _integer_log(length, base)
            if exponent is None:
                return None
            return exponent, degree
    return None


def default_threshold(alphabet_size, length):
    """floor(n / log_a n); exact whenever log_a n is rational."""
    if alphabet_size < 2:
        raise InvalidInputError("The randomness test needs an alphabet of size >= 2")
    if length <= alphabet_size:
        raise DegenerateThresholdError(
            f"n / log_a(n) is degenerate for n={length} <= a={alphabet_size}; pass an explicit threshold k"
        )
    rational = _rational_log(alphabet_size, length)
    if rational is not None:
        numerator, denominator = rational
        return (length * denominator) // numerator
    with localcontext() as context:
        context.prec = LOG_PRECISION
        log_value = Decimal(length).ln() / Decimal(alphabet_size).ln()
        return int((Decimal(length) / log_value).to_integral_value(rounding=ROUND_FLOOR))


def critical_probability(table, k):
    """P_n(K_{n,k}) = sum_{s=1}^{k} P_n(s)"""
    if table is None:
        raise TableUnavailableError("No count table available for this alphabet size and length")
    if not 1 <= k <= table.length:
        raise InvalidInputError(f"Threshold k={k} must lie in [1, {table.length}]")
    return table.cdf(k)


@dataclass(frozen=True)
class CriticalSetSpec:
    alphabet_size: int
    length: int
    threshold_k: int

    def __post_init__(self):
        if self.alphabet_size < 2:
            raise InvalidInputError("The randomness test needs an alphabet of size >= 2")
        if not 1 <= self.threshold_k <= self.length:
            raise InvalidInputError(f"Threshold k={self.threshold_k} must lie in [1, {self.length}]")

    @classmethod
    def default(cls, alphabet_size, length):
        return cls(alphabet_size=alphabet_size, length=length,
                   threshold_k=default_threshold(alphabet_size, length))


@dataclass(frozen=True)
class TestVerdict:
    alphabet_size: int
    length: int
    observed_complexity: int
    threshold_k: int
    in_critical_set: bool
    significance: object = None

    def to_dict(self):
        significance = None
        if self.significance is not None:
            significance = {
                'numerator': str(self.significance.numerator),
                'denominator': str(self.significance.denominator),
            }
        return {
            'alphabet_size': self.alphabet_size,
            'length': self.length,
            'observed_complexity': self.observed_complexity,
            'threshold_k': self.threshold_k,
            'in_critical_set': self.in_critical_set,
            'significance': significance,
        }


class RandomnessTestService:
    """Runs the critical-set test, looking up significance in the given table sources in order"""

    def __init__(self, table_sources=()):
        self.table_sources = list(table_sources)

    def find_table(self, alphabet_size, length):
        for source in self.table_sources:
            try:
                return source(alphabet_size, length)
            except TableUnavailableError:
                continue
        raise TableUnavailableError(
            f"No count table for alphabet size {alphabet_size}, length {length}"
        )

    def test_sequence(self, sequence, spec=None):
        alphabet_size = sequence.alphabet.size
        length = len(sequence)
        if spec is None:
            spec = CriticalSetSpec.default(alphabet_size, length)
        if spec.length != length:
            raise InvalidInputError(f"Critical set is for length {spec.length}, sequence has length {length}")
        if spec.alphabet_size != alphabet_size:
            raise InvalidInputError(
                f"Critical set is for alphabet size {spec.alphabet_size}, sequence uses {alphabet_size}"
            )

        observed = complexity(sequence)
        try:
            significance = critical_probability(self.find_table(alphabet_size, length), spec.threshold_k)
        except TableUnavailableError:
            logger.info(f"No table for alphabet size {alphabet_size}, length {length}; verdict without significance")
            significance = None

        return TestVerdict(
            alphabet_size=alphabet_size,
            length=length,
            observed_complexity=observed,
            threshold_k=spec.threshold_k,
            in_critical_set=observed <= spec.threshold_k,
            significance=significance,
        )
