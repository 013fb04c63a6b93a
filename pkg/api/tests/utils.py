"""Shared fixtures for the test modules."""
from functools import lru_cache
from itertools import product

from api.services.complexity_service import Alphabet, Sequence
from api.services.distribution_service import enumerate_counts

WORKED_EXAMPLE = '0011011101110110'


def all_sequences(alphabet_size, length):
    alphabet = Alphabet.of_size(alphabet_size)
    for symbols in product(range(alphabet_size), repeat=length):
        yield Sequence(symbols=symbols, alphabet=alphabet)


def binary(text):
    return Sequence.from_string(text, Alphabet.from_tokens('01'))


@lru_cache(maxsize=None)
def cached_tables(alphabet_size, n_max):
    return tuple(enumerate_counts(alphabet_size, n) for n in range(1, n_max + 1))
