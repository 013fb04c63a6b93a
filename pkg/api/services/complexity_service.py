"""
Lempel-Ziv (1976) complexity of finite sequences.

Sequences are parsed into their exhaustive history: each component is the
shortest extension of the current position that does not occur in the text
preceding its own last symbol. The component count is the complexity.

All public positions are 1-based and inclusive. Internally a sequence is held
as a ``str`` with one character per symbol index so that occurrence tests are
plain ``str.find`` window scans.
"""
import math
import string
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .exceptions import InvalidInputError, ResourceLimitError

DEFAULT_ORACLE_MAX_LENGTH = 16

_DEFAULT_TOKENS = string.digits + string.ascii_lowercase + string.ascii_uppercase


@dataclass(frozen=True)
class Alphabet:
    """A finite, ordered symbol set. ``symbols[i]`` is the token for index ``i``."""
    size: int
    symbols: tuple

    def __post_init__(self):
        if self.size < 1:
            raise InvalidInputError("Alphabet size must be at least 1")
        if len(self.symbols) != self.size:
            raise InvalidInputError(
                f"Alphabet declares size {self.size} but has {len(self.symbols)} symbols"
            )
        if len(set(self.symbols)) != self.size:
            raise InvalidInputError("Alphabet symbols must be pairwise distinct")

    @classmethod
    def from_tokens(cls, tokens):
        """Build an alphabet from a string of single-character tokens, e.g. ``"01"``."""
        symbols = tuple(tokens)
        return cls(size=len(symbols), symbols=symbols)

    @classmethod
    def of_size(cls, size):
        """Default alphabet ``0-9a-zA-Z``; larger sizes fall back to hex tokens."""
        if size < 1:
            raise InvalidInputError("Alphabet size must be at least 1")
        if size <= len(_DEFAULT_TOKENS):
            return cls(size=size, symbols=tuple(_DEFAULT_TOKENS[:size]))
        width = len(f"{size - 1:x}")
        return cls(size=size, symbols=tuple(f"{i:0{width}x}" for i in range(size)))

    @property
    def is_compact(self):
        return all(len(symbol) == 1 for symbol in self.symbols)

    def index_of(self, token):
        try:
            return self.symbols.index(token)
        except ValueError:
            raise InvalidInputError(f"Symbol {token!r} is not in the alphabet") from None

    def render(self, indices):
        separator = '' if self.is_compact else ' '
        return separator.join(self.symbols[i] for i in indices)

    def require_random_testable(self):
        if self.size < 2:
            raise InvalidInputError("Distribution and randomness work need an alphabet of size >= 2")


@dataclass(frozen=True)
class Sequence:
    """A non-empty sequence of alphabet indices."""
    symbols: tuple
    alphabet: Alphabet

    def __post_init__(self):
        if not self.symbols:
            raise InvalidInputError("The empty sequence has no complexity")
        for offset, index in enumerate(self.symbols):
            if not 0 <= index < self.alphabet.size:
                raise InvalidInputError(
                    f"Symbol index {index} at position {offset + 1} is outside an alphabet of size {self.alphabet.size}"
                )

    @classmethod
    def from_string(cls, text, alphabet):
        """Decode a string of single-character tokens over ``alphabet``."""
        if not text:
            raise InvalidInputError("The empty sequence has no complexity")
        return cls(symbols=tuple(alphabet.index_of(token) for token in text), alphabet=alphabet)

    def __len__(self):
        return len(self.symbols)

    @cached_property
    def text(self):
        return ''.join(map(chr, self.symbols))

    def substring(self, i, j):
        """S(i, j) with 1-based inclusive bounds; empty when ``j < i``."""
        if j < i:
            return ()
        if i < 1 or j > len(self.symbols):
            raise InvalidInputError(f"S({i}, {j}) is outside a sequence of length {len(self.symbols)}")
        return self.symbols[i - 1:j]

    def appended(self, index):
        return Sequence(symbols=self.symbols + (index,), alphabet=self.alphabet)

    def render(self):
        return self.alphabet.render(self.symbols)


@dataclass(frozen=True)
class History:
    """A partition of a sequence given by its 1-based right boundaries h_1 < ... < h_m = n."""
    sequence: Sequence
    boundaries: tuple

    @property
    def component_count(self):
        return len(self.boundaries)

    @property
    def components(self):
        starts = (0,) + self.boundaries[:-1]
        return [self.sequence.substring(start + 1, end) for start, end in zip(starts, self.boundaries)]

    def rendered_components(self):
        return [self.sequence.alphabet.render(component) for component in self.components]

    def is_valid(self):
        return is_valid_history(self.sequence.text, self.boundaries)


@dataclass(frozen=True)
class ExhaustiveHistory:
    history: History
    is_last_exhaustive: bool

    @property
    def complexity(self):
        return self.history.component_count

    @property
    def boundaries(self):
        return self.history.boundaries

    @property
    def components(self):
        return self.history.components


def is_valid_history(text, boundaries):
    """Every component minus its last symbol occurs in the text ending two symbols before that symbol."""
    if not boundaries or boundaries[-1] != len(text):
        return False
    previous = 0
    for boundary in boundaries:
        if boundary <= previous:
            return False
        if text[previous:boundary - 1] not in text[:max(boundary - 2, 0)]:
            return False
        previous = boundary
    return True


def parse_text(text):
    """
    Exhaustive-history scan over an index-encoded string.

    Returns ``(boundaries, is_last_exhaustive)`` with 1-based boundaries.
    """
    n = len(text)
    boundaries = []
    start = 0
    last_exhaustive = False
    while start < n:
        end = start + 1
        # grow while the candidate still occurs in S(1, end - 1)
        while end <= n and text.find(text[start:end], 0, end - 1) != -1:
            end += 1
        if end > n:
            boundaries.append(n)
            last_exhaustive = False
            break
        boundaries.append(end)
        last_exhaustive = True
        start = end
    return boundaries, last_exhaustive


def parse_summary(text):
    """``(complexity, is_exact)`` for an index-encoded string; the enumeration hot path."""
    boundaries, last_exhaustive = parse_text(text)
    return len(boundaries), last_exhaustive


def exhaustive_history(sequence):
    """The unique exhaustive history of ``sequence``."""
    _require_sequence(sequence)
    boundaries, last_exhaustive = parse_text(sequence.text)
    return ExhaustiveHistory(
        history=History(sequence=sequence, boundaries=tuple(boundaries)),
        is_last_exhaustive=last_exhaustive,
    )


def complexity(sequence):
    return exhaustive_history(sequence).complexity


def is_exact(sequence):
    """True iff the last exhaustive component does not occur in S(1, n - 1)."""
    return exhaustive_history(sequence).is_last_exhaustive


def min_history_complexity(sequence, max_length=None):
    """
    Minimum component count over every valid history, by exhaustive search.

    Slow reference used to check the exhaustive parse; refuses sequences
    longer than ``max_length`` (``LZ_ORACLE_MAX_LENGTH`` when not given).
    """
    _require_sequence(sequence)
    if max_length is None:
        max_length = _configured_oracle_cap()
    n = len(sequence)
    if n > max_length:
        raise ResourceLimitError(
            f"Minimal-history search is limited to length {max_length}, got {n}",
            limit=max_length,
        )
    text = sequence.text
    if n == 1:
        return 1
    # h_1 = 1 and h_m = n are fixed; choose the m - 2 interior boundaries
    for m in range(2, n + 1):
        for interior in combinations(range(2, n), m - 2):
            if is_valid_history(text, (1,) + interior + (n,)):
                return m
    raise AssertionError("the all-singletons partition is always a valid history")


def normalized_complexity(sequence, value=None):
    """c * log_a(n) / n, for display."""
    sequence.alphabet.require_random_testable()
    n = len(sequence)
    if value is None:
        value = complexity(sequence)
    if n == 1:
        return 0.0
    return value * math.log(n, sequence.alphabet.size) / n


def _require_sequence(sequence):
    if sequence is None or len(sequence.symbols) == 0:
        raise InvalidInputError("The empty sequence has no complexity")


def _configured_oracle_cap():
    from django.conf import settings
    return getattr(settings, 'LZ_ORACLE_MAX_LENGTH', DEFAULT_ORACLE_MAX_LENGTH)


def describe(sequence):
    """Plain-data summary of the exhaustive parse, shared by the CLI and the API."""
    parsed = exhaustive_history(sequence)
    summary = {
        'n': len(sequence),
        'alphabet_size': sequence.alphabet.size,
        'complexity': parsed.complexity,
        'exact': parsed.is_last_exhaustive,
        'boundaries': list(parsed.boundaries),
        'components': parsed.history.rendered_components(),
    }
    if sequence.alphabet.size >= 2:
        summary['normalized_complexity'] = normalized_complexity(sequence, parsed.complexity)
    return summary
