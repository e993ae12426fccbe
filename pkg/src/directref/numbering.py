"""Prime-power Gödel numbering over odd primes, plus the even self-coding scheme.

A symbol sequence ``s1 ... sm`` is coded as ``3**c(s1) * 5**c(s2) * ...``
using the odd primes in order.  Every symbol code is odd, so every code is
odd whatever the exponents.

Three schemes are provided:

``std``
    the prime-power code on formulas of the base language (no ``ai``);
``ext``
    the same rule with the added constants in the code table;
``nonstd``
    ``std`` except that ``Ex1((x1=0^(2k)&A))`` with ``A`` a class sign and
    ``k`` its std code is given the even code ``2k`` instead.  The numeral
    inside such a sentence names the sentence's own code.

Using the existential/conjunction form rather than plain substitution keeps
the scheme a function: the sentence's shape alone determines ``A``, so no
formula ends up with two codes.
"""

from __future__ import annotations

import enum
import threading
from itertools import count
from math import prod

from .errors import ConstantNotInL, NotACode, NumeralTooLarge, ParseError
from .syntax import (
    And, Equals, Exists, Formula, Numeral, Symbol, Var, const_symbol, constants,
    is_class_sign, parse_tokens, tokens, var_symbol,
)

GoedelNumber = int

DEFAULT_BOUND = 1000

_FIXED_CODES = {
    "0": 1, "S": 3, "+": 5, "*": 7, "=": 9, "~": 11, "&": 13, "|": 15,
    "->": 17, "E": 19, "A": 21, "(": 23, ")": 25,
}
_FIXED_BY_CODE = {c: Symbol(k) for k, c in _FIXED_CODES.items()}


class Scheme(str, enum.Enum):
    STD = "std"
    NONSTD = "nonstd"
    EXT = "ext"


def symbol_code(sym: Symbol) -> int:
    if sym.kind == "x":
        return 29 + 4 * (sym.index - 1)
    if sym.kind == "a":
        return 31 + 4 * (sym.index - 1)
    return _FIXED_CODES[sym.kind]


def symbol_for_code(code: int, allow_constants: bool = True) -> Symbol | None:
    """Inverse of :func:`symbol_code`; None if ``code`` names no symbol."""
    if code in _FIXED_BY_CODE:
        return _FIXED_BY_CODE[code]
    if code >= 29 and code % 4 == 1:
        return var_symbol((code - 29) // 4 + 1)
    if code >= 31 and code % 4 == 3 and allow_constants:
        return const_symbol((code - 31) // 4 + 1)
    return None


# --------------------------------------------------------------------------
# Odd primes


def _incremental_sieve():
    """Yield 3, 5, 7, 11, ... with an unbounded incremental sieve."""
    composites: dict[int, int] = {9: 6}
    yield 3
    for n in count(5, 2):
        step = composites.pop(n, None)
        if step is None:
            composites[n * n] = 2 * n
            yield n
        else:
            m = n + step
            while m in composites:
                m += step
            composites[m] = step


class _PrimeCache:
    # Append-only; readers only ever see a prefix of the same fixed sequence.
    def __init__(self):
        self._primes: list[int] = []
        self._gen = _incremental_sieve()
        self._lock = threading.Lock()

    def first(self, k: int) -> list[int]:
        if len(self._primes) < k:
            with self._lock:
                while len(self._primes) < k:
                    self._primes.append(next(self._gen))
        return self._primes[:k]

    def __getitem__(self, i: int) -> int:
        if i >= len(self._primes):
            self.first(i + 1)
        return self._primes[i]


_PRIMES = _PrimeCache()


def odd_primes(k: int) -> list[int]:
    """The first ``k`` odd primes, starting at 3."""
    return _PRIMES.first(k)


def encode_symbols(symbols: list[Symbol]) -> GoedelNumber:
    primes = odd_primes(len(symbols))
    return prod(pow(p, symbol_code(s)) for p, s in zip(primes, symbols))


def decode_symbols(g: GoedelNumber, allow_constants: bool = True) -> list[Symbol]:
    """Factor ``g`` over 3, 5, 7, ... and map the exponents back to symbols."""
    if not isinstance(g, int) or isinstance(g, bool) or g < 1:
        raise NotACode(f"{g!r} is not a positive integer")
    if g % 2 == 0:
        raise NotACode(f"{g} is even")
    symbols: list[Symbol] = []
    i = 0
    while g != 1:
        p = _PRIMES[i]
        e = 0
        while g % p == 0:
            g //= p
            e += 1
        if e == 0:
            raise NotACode(f"prime {p} missing from the support (gap at position {i + 1})")
        sym = symbol_for_code(e, allow_constants)
        if sym is None:
            raise NotACode(f"exponent {e} of prime {p} is not a symbol code")
        symbols.append(sym)
        i += 1
    return symbols


def _decode_formula(g: GoedelNumber, allow_constants: bool) -> Formula:
    symbols = decode_symbols(g, allow_constants)
    if not symbols:
        raise NotACode("1 codes the empty sequence")
    try:
        return parse_tokens(symbols)
    except ParseError as e:
        raise NotACode(f"symbol sequence does not parse: {e}") from None


# --------------------------------------------------------------------------
# Schemes


def gn_std(f: Formula, bound: int = DEFAULT_BOUND) -> GoedelNumber:
    """Standard prime-power code of a base-language formula.

    >>> from directref.syntax import parse
    >>> gn_std(parse("0=0"))
    41015625
    """
    if constants(f):
        raise ConstantNotInL(f"formula mentions constants {sorted(constants(f))}")
    return encode_symbols(tokens(f, bound))


def decode_std(g: GoedelNumber) -> Formula:
    return _decode_formula(g, allow_constants=False)


def gn_ext(f: Formula, bound: int = DEFAULT_BOUND) -> GoedelNumber:
    """Prime-power code in the language extended by the constants ``ai``."""
    return encode_symbols(tokens(f, bound))


def decode_ext(g: GoedelNumber) -> Formula:
    return _decode_formula(g, allow_constants=True)


def smullyan_form(class_sign: Formula, code: int) -> Formula:
    """``Ex1((x1=0^(code)&A))``."""
    return Exists(1, And(Equals(Var(1), Numeral(code)), class_sign))


def special_code(f: Formula, bound: int = DEFAULT_BOUND) -> GoedelNumber | None:
    """The even code of ``f`` if it is a self-coding sentence, else None.

    Reads the numeral node directly, so the large numeral is never expanded.
    """
    if not (isinstance(f, Exists) and f.var == 1 and isinstance(f.body, And)):
        return None
    eq, a = f.body.left, f.body.right
    if not (isinstance(eq, Equals) and eq.left == Var(1) and isinstance(eq.right, Numeral)):
        return None
    c = eq.right.count
    if c == 0 or c % 4 != 2 or not is_class_sign(a):
        return None
    try:
        k = gn_std(a, bound)
    except NumeralTooLarge:
        return None
    return c if c == 2 * k else None


def gn_nonstd(f: Formula, bound: int = DEFAULT_BOUND) -> GoedelNumber:
    """Even ``2k`` for ``Ex1((x1=0^(2k)&A))`` with ``k = gn_std(A)``, else ``gn_std``."""
    if constants(f):
        raise ConstantNotInL(f"formula mentions constants {sorted(constants(f))}")
    special = special_code(f, bound)
    return special if special is not None else gn_std(f, bound)


def decode_nonstd(g: GoedelNumber, bound: int = DEFAULT_BOUND) -> Formula:
    if isinstance(g, int) and not isinstance(g, bool) and g >= 2 and g % 2 == 0:
        k = g // 2
        if k % 2 == 0:
            raise NotACode(f"{g} = 2*{k} with {k} even")
        a = decode_std(k)
        if not is_class_sign(a):
            raise NotACode(f"{k} codes {a}, which is not a class sign")
        return smullyan_form(a, g)
    f = decode_std(g)
    if special_code(f, bound) is not None:
        raise NotACode(f"{f} carries only its even code")
    return f


def encode(f: Formula, scheme: Scheme | str, bound: int = DEFAULT_BOUND) -> GoedelNumber:
    scheme = Scheme(scheme)
    if scheme is Scheme.STD:
        return gn_std(f, bound)
    if scheme is Scheme.NONSTD:
        return gn_nonstd(f, bound)
    return gn_ext(f, bound)


def decode(g: GoedelNumber, scheme: Scheme | str, bound: int = DEFAULT_BOUND) -> Formula:
    scheme = Scheme(scheme)
    if scheme is Scheme.STD:
        return decode_std(g)
    if scheme is Scheme.NONSTD:
        return decode_nonstd(g, bound)
    return decode_ext(g)
