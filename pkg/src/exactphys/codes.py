"""Bijective encodings between structured data and non-negative integers.

Everything observable is carried by a single unbounded non-negative
integer ("code"): pairs and tuples through the quadratic pairing
function, signed integers through the fold ``zeta``, rationals through
the prime-exponent encoding ``rho``, open intervals as pairs of rational
codes, and finite bit sequences through iterated pairing.  All maps here
are exact and total; nothing is ever rounded or truncated.
"""

from __future__ import annotations

import math
from fractions import Fraction

Code = int

# rho is called heavily with a small working set of rationals (grid
# endpoints, angles), and decoding would otherwise re-factor huge
# integers; both directions share these caches.
_RHO_CACHE: dict[Fraction, int] = {}
_RHO_INV_CACHE: dict[int, Fraction] = {}

_SMALL_PRIMES: list[int] = []
_SIEVED_UPTO = 0


def pair(x: Code, y: Code) -> Code:
    """Quadratic pairing: (x^2 + 2xy + y^2 + 3x + y) / 2, a bijection N^2 -> N."""
    if x < 0 or y < 0:
        raise ValueError("pair expects non-negative integers")
    return (x * x + 2 * x * y + y * y + 3 * x + y) // 2


def unpair(z: Code) -> tuple[Code, Code]:
    """Exact inverse of pair, via the integer triangular root."""
    if z < 0:
        raise ValueError("unpair expects a non-negative integer")
    w = (math.isqrt(8 * z + 1) - 1) // 2
    x = z - w * (w + 1) // 2
    return x, w - x


def tuple_encode(xs) -> Code:
    """Left-nested pairing <<x,y>,z>...; an arity-1 tuple encodes as itself."""
    xs = list(xs)
    if not xs:
        raise ValueError("tuple_encode needs at least one element")
    acc = xs[0]
    for x in xs[1:]:
        acc = pair(acc, x)
    return acc


def tuple_decode(z: Code, arity: int) -> tuple[Code, ...]:
    """Inverse of tuple_encode at a fixed arity (nesting is ambiguous without it)."""
    if arity < 1:
        raise ValueError("arity must be at least 1")
    parts: list[Code] = []
    for _ in range(arity - 1):
        z, last = unpair(z)
        parts.append(last)
    parts.append(z)
    return tuple(reversed(parts))


def proj(z: Code, arity: int, index: int) -> Code:
    """Projection of the index-th element (1-based) of an arity-tuple code."""
    if not 1 <= index <= arity:
        raise ValueError("projection index out of range")
    return tuple_decode(z, arity)[index - 1]


def zeta(i: int) -> Code:
    """Fold the signed integers onto N: negatives to odds, non-negatives to evens."""
    return -2 * i - 1 if i < 0 else 2 * i


def zeta_inv(c: Code) -> int:
    if c < 0:
        raise ValueError("zeta_inv expects a non-negative integer")
    return c // 2 if c % 2 == 0 else -(c + 1) // 2


def _primes_upto(limit: int) -> list[int]:
    global _SMALL_PRIMES, _SIEVED_UPTO
    if _SIEVED_UPTO < limit:
        sieve = bytearray([1]) * (limit + 1)
        sieve[0:2] = b"\x00\x00"
        for p in range(2, math.isqrt(limit) + 1):
            if sieve[p]:
                sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
        _SMALL_PRIMES = [i for i, flag in enumerate(sieve) if flag]
        _SIEVED_UPTO = limit
    return _SMALL_PRIMES


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1.

    Trial division covers the everyday cases; anything with a large
    remaining cofactor is delegated to sympy (imported lazily so that
    cold starts stay cheap).
    """
    if n < 1:
        raise ValueError("can only factor positive integers")
    out: dict[int, int] = {}
    for p in _primes_upto(4096):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        if n < 4096 * 4096:
            out[n] = out.get(n, 0) + 1
        else:
            root = math.isqrt(n)
            if root * root == n:
                # Codes of rationals with squarefree-ish numerators decode
                # through a perfect square; peeling it avoids heavy factoring.
                for p, e in _factorize(root).items():
                    out[p] = out.get(p, 0) + 2 * e
            else:
                from sympy import factorint

                for p, e in factorint(n).items():
                    out[int(p)] = out.get(int(p), 0) + int(e)
    return out


def rho(q: Fraction) -> Code:
    """Encode a lowest-terms rational through signed prime-exponent differences.

    rho(a/b) = zeta(sgn(a) * prod_p p**zeta(a_p - b_p)) over the prime
    factorizations of |a| and b; rho(0) = 0 (the sign of zero is taken
    as zero, which the formula's fixed point).
    """
    q = Fraction(q)
    cached = _RHO_CACHE.get(q)
    if cached is not None:
        return cached
    if q == 0:
        code = 0
    else:
        exps: dict[int, int] = {}
        for p, e in _factorize(abs(q.numerator)).items():
            exps[p] = e
        for p, e in _factorize(q.denominator).items():
            exps[p] = exps.get(p, 0) - e
        inner = 1
        for p, d in exps.items():
            inner *= p ** zeta(d)
        if q < 0:
            inner = -inner
        code = zeta(inner)
    _RHO_CACHE[q] = code
    _RHO_INV_CACHE[code] = q
    return code


def rho_inv(c: Code) -> Fraction:
    """Decode rho by factoring the zeta-decoded integer."""
    cached = _RHO_INV_CACHE.get(c)
    if cached is not None:
        return cached
    inner = zeta_inv(c)
    if inner == 0:
        q = Fraction(0)
    else:
        num = 1
        den = 1
        for p, e in _factorize(abs(inner)).items():
            d = zeta_inv(e)
            if d >= 0:
                num *= p**d
            else:
                den *= p**-d
        q = Fraction(num if inner > 0 else -num, den)
    _RHO_INV_CACHE[c] = q
    _RHO_CACHE[q] = c
    return q


def interval_code(q: Fraction, r: Fraction) -> Code:
    """Code of the interval [q, r]: the pair of the endpoint rational codes.

    q > r is permitted; such codes denote wrapped circle intervals.
    """
    return pair(rho(q), rho(r))


def interval_decode(c: Code) -> tuple[Fraction, Fraction]:
    cq, cr = unpair(c)
    return rho_inv(cq), rho_inv(cr)


def beta(x: Code, y: int) -> tuple[int, ...]:
    """The first y bits of the binary expansion of x, most significant first.

    Only defined for x < 2**y; larger x would silently lose bits, so it
    is rejected instead.
    """
    if y < 0:
        raise ValueError("bit count must be non-negative")
    if x < 0 or x >= (1 << y):
        from .errors import RangeError

        raise RangeError(f"beta requires 0 <= x < 2**{y}, got {x}")
    return tuple((x >> (y - 1 - k)) & 1 for k in range(y))


def bits_encode(bits) -> Code:
    """Encode a finite bit sequence as an iterated-pairing tuple code."""
    bits = list(bits)
    if any(b not in (0, 1) for b in bits):
        raise ValueError("bits must be 0 or 1")
    return tuple_encode(bits)


def bits_decode(c: Code, length: int) -> tuple[int, ...]:
    bits = tuple_decode(c, length)
    if any(b not in (0, 1) for b in bits):
        from .errors import DecodeError

        raise DecodeError(f"code {c} is not a length-{length} bit sequence")
    return bits
