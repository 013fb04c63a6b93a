"""Turn inline strings, files or standard input into a Sequence."""
import sys
from dataclasses import dataclass
from pathlib import Path

from .complexity_service import Alphabet, Sequence
from .exceptions import DecodeError, InvalidInputError

FORMAT_SYMBOLS = 'symbols'
FORMAT_BITS = 'bits'
FORMAT_BYTES = 'bytes'
FORMATS = (FORMAT_SYMBOLS, FORMAT_BITS, FORMAT_BYTES)

BINARY = Alphabet.from_tokens('01')


@dataclass(frozen=True)
class InputSpec:
    """Where the sequence comes from and how its bytes are read"""
    inline: str = None
    path: str = None
    format: str = FORMAT_SYMBOLS
    alphabet: Alphabet = BINARY

    def __post_init__(self):
        if self.format not in FORMATS:
            raise InvalidInputError(f"Unknown input format {self.format!r}; expected one of {', '.join(FORMATS)}")
        if self.inline is not None and self.path is not None:
            raise InvalidInputError("Give either an inline sequence or a file, not both")
        if self.format == FORMAT_BITS and self.alphabet.size != 2:
            raise InvalidInputError("The bits format forces a binary alphabet")

    def read_raw(self, stdin=None):
        if self.inline is not None:
            return self.inline.encode('utf-8')
        if self.path is not None:
            path = Path(self.path)
            if not path.exists():
                raise InvalidInputError(f"File not found: {path}")
            return path.read_bytes()
        stream = stdin if stdin is not None else sys.stdin.buffer
        return stream.read()

    def load(self, stdin=None):
        return decode(self.read_raw(stdin=stdin), self.format, self.alphabet)


def decode(raw, fmt, alphabet):
    if fmt == FORMAT_SYMBOLS:
        return decode_symbols(raw, alphabet)
    if fmt == FORMAT_BITS:
        return decode_bits(raw, alphabet)
    if fmt == FORMAT_BYTES:
        return decode_bytes(raw, alphabet)
    raise InvalidInputError(f"Unknown input format {fmt!r}")


def decode_symbols(raw, alphabet):
    """One ASCII token per byte; surrounding whitespace (a trailing newline) is ignored."""
    if not alphabet.is_compact:
        raise InvalidInputError("The symbols format needs single-character alphabet tokens")
    stripped = raw.strip()
    if not stripped:
        raise InvalidInputError("Input is empty")
    leading = len(raw) - len(raw.lstrip())
    indices = []
    for offset, value in enumerate(stripped, start=leading):
        if value > 0x7f:
            raise DecodeError("Non-ASCII byte", offset=offset, value=value)
        token = chr(value)
        if token not in alphabet.symbols:
            raise DecodeError(f"Symbol {token!r} is not in the alphabet {''.join(alphabet.symbols)!r}",
                              offset=offset, value=value)
        indices.append(alphabet.symbols.index(token))
    return Sequence(symbols=tuple(indices), alphabet=alphabet)


def decode_bits(raw, alphabet=BINARY):
    """Each byte unpacked most-significant bit first."""
    if alphabet.size != 2:
        raise InvalidInputError("The bits format forces a binary alphabet")
    if not raw:
        raise InvalidInputError("Input is empty")
    bits = tuple((value >> shift) & 1 for value in raw for shift in range(7, -1, -1))
    return Sequence(symbols=bits, alphabet=alphabet)


def decode_bytes(raw, alphabet):
    """Each byte reduced modulo the alphabet size."""
    if not raw:
        raise InvalidInputError("Input is empty")
    return Sequence(symbols=tuple(value % alphabet.size for value in raw), alphabet=alphabet)
