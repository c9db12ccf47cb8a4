"""Binary cyclic codes of length 2^m - 1 with the two nonzeros alpha^-d, alpha^-1.

A codeword is indexed by a pair (a, b) of field elements: bit i is
Tr(a*alpha^(d*i) + b*alpha^i).  For gcd(d, 2^m - 1) = 1 and d not a power of
two the code has dimension 2m and its weights come from the Walsh spectrum:

    wt(a, b) = (q - W_d(b * a^(-1/d))) / 2     for a, b both nonzero,
    wt       = q/2                             when exactly one of a, b is zero,
    wt       = 0                               for the zero pair,

and as (a, b) sweeps F* x F* the Walsh argument sweeps F* exactly q - 1 times.
weight_distribution builds the histogram from the spectrum that way;
exhaustive_weight_histogram recounts it by materializing every codeword and
popcounting, which is the independent check.

Exponents d that are powers of two modulo 2^m - 1 make the two nonzeros
conjugate: the pair map loses injectivity (all q pairs with b = a^(2^(m-j))
give the zero word) and the dimension drops to m.  Such d are accepted but
flagged degenerate; min_distance is then still the smallest positive weight.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import DomainError
from .field import Field, mod_inverse
from .walsh import Spectrum, walsh_coefficient, walsh_spectrum, _validate_element, _validate_exponent


def is_degenerate_exponent(m: int, d: int) -> bool:
    """True when d is congruent to a power of two mod 2^m - 1 (conjugate nonzeros)."""
    order = (1 << m) - 1
    return d % order in {(1 << j) % order for j in range(m)}


def _validate_coprime(field: Field, d: int) -> None:
    g = gcd(d, field.order)
    if g != 1:
        raise DomainError(f"gcd(d, 2^m - 1) = {g} != 1; the code machinery needs d invertible")


@dataclass(frozen=True)
class Codeword:
    """One codeword, bit-packed: bit i of `bits` is the coefficient at position i."""

    m: int
    d: int
    a: int
    b: int
    bits: int
    length: int

    def weight(self) -> int:
        return self.bits.bit_count()

    def bit(self, i: int) -> int:
        return (self.bits >> i) & 1

    def to_list(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.length)]


@dataclass(frozen=True)
class WeightDistribution:
    """Weight histogram over all q^2 pairs (a, b); entries sorted by weight."""

    m: int
    d: int
    modulus: int
    entries: tuple[tuple[int, int], ...]
    degenerate: bool

    def count(self, weight: int) -> int:
        for w, n in self.entries:
            if w == weight:
                return n
        return 0

    def total(self) -> int:
        return sum(n for _, n in self.entries)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)


def codeword(field: Field, d: int, a: int, b: int) -> Codeword:
    """Materialize the word for the pair (a, b) directly from traces."""
    _validate_exponent(field, d)
    _validate_element(field, a, "a")
    _validate_element(field, b, "b")
    n = field.order
    bits = 0
    x = 1  # alpha^i
    y = 1  # alpha^(d*i)
    ad = field.pow(field.alpha, d)
    for i in range(n):
        v = field.mul(a, y) ^ field.mul(b, x)
        bits |= field.trace(v) << i
        x = field.mul(x, field.alpha)
        y = field.mul(y, ad)
    return Codeword(m=field.m, d=d, a=a, b=b, bits=bits, length=n)


def weight_of_pair(field: Field, d: int, a: int, b: int) -> int:
    """Codeword weight through the Walsh relation instead of popcounting."""
    _validate_coprime(field, d)
    _validate_element(field, a, "a")
    _validate_element(field, b, "b")
    if a == 0 and b == 0:
        return 0
    if a == 0 or b == 0:
        return field.q // 2
    inv_d = mod_inverse(d, field.order)
    v = field.mul(b, field.pow(a, -inv_d))
    return (field.q - walsh_coefficient(field, d, v)) // 2


def spectrum_to_weights(field: Field, spectrum: Spectrum) -> WeightDistribution:
    """Fold a full Walsh spectrum into the code's weight histogram."""
    if spectrum.m != field.m or spectrum.modulus != field.modulus:
        raise DomainError("spectrum does not belong to this field")
    if not spectrum.coprime:
        raise DomainError("weight distribution needs gcd(d, 2^m - 1) = 1")
    q = field.q
    hist: Counter[int] = Counter()
    hist[0] += 1
    hist[q // 2] += 2 * (q - 1)
    # Restrict the spectrum to a != 0: W_d(0) = 0 for invertible d, so drop
    # one zero entry before sweeping.
    for value, n in spectrum.entries:
        if value == 0:
            n -= 1
        if n:
            hist[(q - value) // 2] += n * (q - 1)
    entries = tuple(sorted((w, c) for w, c in hist.items() if c))
    return WeightDistribution(
        m=field.m,
        d=spectrum.d,
        modulus=field.modulus,
        entries=entries,
        degenerate=is_degenerate_exponent(field.m, spectrum.d),
    )


def weight_distribution(field: Field, d: int) -> WeightDistribution:
    _validate_coprime(field, d)
    return spectrum_to_weights(field, walsh_spectrum(field, d))


def min_distance(field: Field, d: int) -> int:
    """Smallest positive codeword weight; (q - max W)/2 capped by q/2 for clean d."""
    dist = weight_distribution(field, d)
    return min(w for w, _ in dist.entries if w > 0)


def exhaustive_weight_histogram(field: Field, d: int) -> dict[int, int]:
    """Popcount every one of the q^2 codewords; the oracle for weight_distribution.

    Materializes words row-block by row-block with table arithmetic, so it
    stays usable up to m = 8 or so; beyond that the quadratic blowup bites.
    """
    _validate_exponent(field, d)
    if not field.has_tables:
        raise DomainError("exhaustive enumeration needs log tables")
    q, n = field.q, field.order
    tr = field.trace_bits()
    alog = field._alog
    log = field._log
    idx = np.arange(n, dtype=np.int64)
    di = (idx * (d % n)) % n
    # bmat[b - 1, i] = b * alpha^i for b in F*
    bmat = alog[(log[1:].reshape(-1, 1) + idx.reshape(1, -1)) % n]
    hist: Counter[int] = Counter()
    hist[0] += 1  # the (0, 0) word
    # a = 0 row: words are b * alpha^i alone
    weights = tr[bmat].sum(axis=1)
    for w in weights:
        hist[int(w)] += 1
    for a in range(1, q):
        va = alog[(int(log[a]) + di) % n]
        hist[int(tr[va].sum())] += 1  # b = 0
        weights = tr[bmat ^ va.reshape(1, -1)].sum(axis=1)
        values, counts = np.unique(weights, return_counts=True)
        for w, c in zip(values, counts):
            hist[int(w)] += int(c)
    return dict(sorted(hist.items()))
