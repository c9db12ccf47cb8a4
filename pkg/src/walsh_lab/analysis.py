"""Structural checks around the spectra: exponent classification, subfield
character sums and their square identities, solution-set evaluation of Walsh
coefficients, the sextic census, Dickson permutation tests, and the two
spectral lower-bound checks used by the scan subcommand.

Conventions shared by everything here:
  * L is the index-2 subfield GF(2^t) of GF(2^m), m = 2t.
  * c is a designated element of the order-(2^t + 1) unit subgroup, c != 1,
    so c is outside L and cbar = c^(2^t) = c^-1.  Operations that only need
    c^(2^t+1) = 1 default to the full subgroup generator; the ones tied to
    the sextic census prefer order 5 when 5 divides 2^t + 1.
  * theta = c + cbar, an element of L.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import DomainError
from .field import Field, mod_inverse
from .walsh import (
    _validate_element,
    fwht,
    truth_table,
    walsh_coefficient,
    walsh_spectrum,
)


def _v2(n: int) -> int:
    """2-adic valuation of a positive integer."""
    return (n & -n).bit_length() - 1


def _need_even(field: Field) -> int:
    if field.t is None:
        raise DomainError(f"operation needs m = 2t, but m = {field.m} is odd")
    return field.t


def _resolve_c(field: Field, c: int | None, subgroup_order: int | None, prefer_five: bool) -> tuple[int, int]:
    """Pick (c, order of c).  c must satisfy c != 1 and c^(2^t + 1) = 1."""
    t = _need_even(field)
    full = (1 << t) + 1
    if c is not None:
        if c == 1 or field.pow(c, full) != 1:
            raise DomainError(f"c = 0x{c:x} is not a nontrivial element of the order-{full} subgroup")
        k = c
        order = 1
        while k != 1:
            k = field.mul(k, c)
            order += 1
        return c, order
    if subgroup_order is None:
        subgroup_order = 5 if prefer_five and full % 5 == 0 else full
    if subgroup_order < 2 or full % subgroup_order != 0:
        raise DomainError(f"subgroup order {subgroup_order} must divide 2^t + 1 = {full} and exceed 1")
    return field.designated_generator(subgroup_order), subgroup_order


# -- exponent classification -------------------------------------------------


@dataclass(frozen=True)
class ExponentProfile:
    m: int
    d: int
    gcd_q1: int
    inv_d: int | None
    is_niho: bool | None
    family_i: int | None
    v2_ok: bool | None


def exponent_profile(m: int, d: int) -> ExponentProfile:
    """Classify an exponent: invertibility, Niho property, membership in the
    1 + 2^i + 2^(i+t) family up to cyclotomic shift (smallest i wins)."""
    order = (1 << m) - 1
    if not 1 <= d <= order - 1:
        raise DomainError(f"exponent d must be in [1, {order - 1}], got {d}")
    g = gcd(d, order)
    inv_d = mod_inverse(d, order) if g == 1 else None
    is_niho: bool | None = None
    family_i: int | None = None
    v2_ok: bool | None = None
    if m % 2 == 0:
        t = m // 2
        sub = (1 << t) - 1
        is_niho = d % sub in {pow(2, j, sub) for j in range(t)}
        shifts = {(d << j) % order for j in range(m)}
        for i in range(1, t - 1):
            if (1 + (1 << i) + (1 << (i + t))) % order in shifts:
                family_i = i
                v2_ok = _v2(i + 1) >= _v2(t)
                break
    return ExponentProfile(m=m, d=d, gcd_q1=g, inv_d=inv_d,
                           is_niho=is_niho, family_i=family_i, v2_ok=v2_ok)


# -- subfield character sums --------------------------------------------------


@dataclass(frozen=True)
class CharacterSum:
    """M_b = sum over x in L of (-1)^Tr((x + b)^d), with the sign epsilon
    fixed so that epsilon * value = -|value| (epsilon = +1 when value = 0)."""

    b: int
    value: int
    epsilon: int


def subfield_character_sum(field: Field, d: int, b: int) -> CharacterSum:
    _need_even(field)
    if d < 1:
        raise DomainError(f"exponent must be positive, got {d}")
    _validate_element(field, b, "b")
    total = 0
    for x in field.subfield_elements():
        total += 1 - 2 * field.trace(field.pow(x ^ b, d))
    eps = 1 if total <= 0 else -1
    return CharacterSum(b=b, value=total, epsilon=eps)


@dataclass(frozen=True)
class IdentityCheck:
    b: int
    lhs: int
    rhs: int
    character_sum: CharacterSum

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def weighted_walsh_identity(field: Field, d: int, b: int) -> IdentityCheck:
    """Check sum_{a in L} W_d(a) * p_b(a) = 2^m + 2^t |M_b| for b outside L,
    where p_b(a) = 1 - (-1)^Tr(b*a) * epsilon_b."""
    t = _need_even(field)
    _validate_element(field, b, "b")
    if field.in_subfield(b):
        raise DomainError("b must lie outside the subfield L")
    cs = subfield_character_sum(field, d, b)
    lhs = 0
    for a in field.subfield_elements():
        p = 1 - (1 - 2 * field.trace(field.mul(b, a))) * cs.epsilon
        lhs += walsh_coefficient(field, d, a) * p
    rhs = field.q + (1 << t) * abs(cs.value)
    return IdentityCheck(b=b, lhs=lhs, rhs=rhs, character_sum=cs)


# -- the conjugate power multiset ---------------------------------------------


@dataclass(frozen=True)
class PowerMultiset:
    """Multiset {(x + c)^d + (x + cbar)^d : x in L}, recorded as (element, count)."""

    d: int
    c: int
    c_order: int
    coeffs: tuple[tuple[int, int], ...]

    def total(self) -> int:
        return sum(n for _, n in self.coeffs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)


def conjugate_power_multiset(field: Field, d: int, c: int | None = None,
                             subgroup_order: int | None = None) -> PowerMultiset:
    t = _need_even(field)
    if d < 1:
        raise DomainError(f"exponent must be positive, got {d}")
    c, order = _resolve_c(field, c, subgroup_order, prefer_five=False)
    cbar = field.pow(c, 1 << t)
    counts: Counter[int] = Counter()
    for x in field.subfield_elements():
        counts[field.pow(x ^ c, d) ^ field.pow(x ^ cbar, d)] += 1
    for g in counts:
        if not field.in_subfield(g):
            raise RuntimeError("multiset element escaped L; field internals are inconsistent")
    return PowerMultiset(d=d, c=c, c_order=order,
                         coeffs=tuple(sorted(counts.items())))


def character_sum_from_multiset(field: Field, mult: PowerMultiset, u: int) -> int:
    """Reconstruct M_(u*c) from the multiset: sum_g a_g * (-1)^Tr_t(u^d * g), u in L."""
    if not field.in_subfield(u):
        raise DomainError("u must lie in the subfield L")
    ud = field.pow(u, mult.d)
    total = 0
    for g, n in mult.coeffs:
        total += n * (1 - 2 * field.subfield_trace(field.mul(ud, g)))
    return total


# -- square-sum identities ----------------------------------------------------


@dataclass(frozen=True)
class SquareIdentitySummary:
    t: int
    total: int
    coset_total: int
    boundary_count: int
    off_subfield_boundary: int
    c: int

    @property
    def total_identity(self) -> bool:
        return self.total == (1 << (2 * self.t)) * self.boundary_count

    @property
    def coset_identity(self) -> bool:
        return self.coset_total == (1 << self.t) * self.off_subfield_boundary

    @property
    def holds(self) -> bool:
        return self.total_identity and self.coset_identity


def character_sum_square_identities(field: Field, d: int) -> SquareIdentitySummary:
    """Vectorized check of both square-sum identities:
    sum_b M_b^2 = 2^(2t) * #{b : (1+b)^d + b^d in L} over all b in F, and
    sum_{u in L*} M_(uc)^2 = 2^t * #{b outside L : (1+b)^d + b^d in L}."""
    t = _need_even(field)
    if d < 1:
        raise DomainError(f"exponent must be positive, got {d}")
    signs = truth_table(field, d).signs
    idx = np.arange(field.q)
    msums = np.zeros(field.q, dtype=np.int64)
    for x in field.subfield_elements():
        msums += signs[idx ^ x]
    total = int((msums * msums).sum())
    powers = field.power_map(d)
    in_l = field.in_subfield_mask()
    boundary = in_l[powers[idx ^ 1] ^ powers]
    boundary_count = int(boundary.sum())
    off = int((boundary & ~in_l).sum())
    c, _ = _resolve_c(field, None, None, prefer_five=False)
    coset_total = 0
    for u in field.subfield_elements():
        if u:
            v = int(msums[field.mul(u, c)])
            coset_total += v * v
    return SquareIdentitySummary(t=t, total=total, coset_total=coset_total,
                                 boundary_count=boundary_count,
                                 off_subfield_boundary=off, c=c)


# -- solution-set route to Walsh coefficients ----------------------------------


@dataclass(frozen=True)
class SolutionSet:
    """S_b: the z in L with z + z^(2 + 2^(i+1)) + (b*theta)^(2^(i+1)) = 0."""

    i: int
    b: int
    c: int
    c_order: int
    theta: int
    elements: tuple[int, ...]


def walsh_solution_set(field: Field, i: int, b: int, c: int | None = None,
                       subgroup_order: int | None = None) -> SolutionSet:
    """Exhaustive scan of L for the solution set; the contract is the set itself."""
    t = _need_even(field)
    if not 1 <= i <= t - 2:
        raise DomainError(f"need 0 < i < t - 1 = {t - 1}, got i = {i}")
    if not field.in_subfield(b):
        raise DomainError("b must lie in the subfield L")
    c, order = _resolve_c(field, c, subgroup_order, prefer_five=True)
    theta = c ^ field.pow(c, 1 << t)
    e = 1 << (i + 1)
    shift = field.pow(field.mul(b, theta), e)
    elements = tuple(
        z for z in field.subfield_elements()
        if z ^ field.pow(z, 2 + e) ^ shift == 0
    )
    return SolutionSet(i=i, b=b, c=c, c_order=order, theta=theta, elements=elements)


def walsh_from_solutions(field: Field, i: int, a: int, b: int, c: int | None = None,
                         subgroup_order: int | None = None) -> int:
    """W_d(a + b*cbar) for d = 1 + 2^i + 2^(i+t), evaluated through the solution set:

        2^t * sum over z in S_b of (-1)^Tr_t(z^(1 + 2^(i+1)) * theta^(-2^(i+1)) + a*z)

    a and b range over L; together a + b*cbar covers every element of F once.
    """
    t = _need_even(field)
    if not field.in_subfield(a):
        raise DomainError("a must lie in the subfield L")
    d = 1 + (1 << i) + (1 << (i + t))
    g = gcd(d, field.order)
    if g != 1:
        raise DomainError(f"d = {d} shares a factor {g} with 2^m - 1")
    ss = walsh_solution_set(field, i, b, c=c, subgroup_order=subgroup_order)
    e = 1 << (i + 1)
    theta_inv_e = field.pow(ss.theta, -e)
    total = 0
    for z in ss.elements:
        arg = field.mul(field.pow(z, 1 + e), theta_inv_e) ^ field.mul(a, z)
        total += 1 - 2 * field.subfield_trace(arg)
    return (1 << t) * total


# -- sextic census -------------------------------------------------------------


@dataclass(frozen=True)
class CensusReport:
    """Solution-count census of z^6 + z = w over GF(2^t)."""

    t: int
    modulus: int
    counts: dict[int, int]
    closed_form: dict[int, int] | None
    closed_form_match: bool | None
    witnesses: dict[int, tuple[int, tuple[int, ...]]]


def _census_closed_form(t: int) -> dict[int, int]:
    six, r6 = divmod((1 << (t - 2)) - 1, 15)
    one, r1 = divmod((1 << (t + 1)) + 2, 5)
    zero, r0 = divmod((1 << t) - 1, 3)
    if r6 or r1 or r0:
        raise DomainError(f"closed forms do not divide evenly at t = {t}")
    return {0: zero, 1: one, 2: 1 << (t - 2), 6: six}


def sextic_census(field: Field) -> CensusReport:
    """Count, for every w, the solutions z of z^6 + z = w; the field IS GF(2^t)."""
    t = field.m
    q = field.q
    w = field.power_map(6) ^ np.arange(q, dtype=np.int64)
    per_target = np.bincount(w, minlength=q)
    class_hist = np.bincount(per_target)
    counts = {k: int(n) for k, n in enumerate(class_hist) if n}
    for k in (0, 1, 2, 6):
        counts.setdefault(k, 0)
    applicable = t % 4 == 2 and t >= 6
    closed = _census_closed_form(t) if applicable else None
    match = None
    if closed is not None:
        observed = {k: v for k, v in counts.items() if v}
        expected = {k: v for k, v in closed.items() if v}
        match = observed == expected
    witnesses: dict[int, tuple[int, tuple[int, ...]]] = {}
    for k in sorted(k for k, v in counts.items() if v and k > 0):
        w0 = int(np.nonzero(per_target == k)[0][0])
        sols = tuple(int(z) for z in np.nonzero(w == w0)[0])
        witnesses[k] = (w0, sols)
    return CensusReport(t=t, modulus=field.modulus, counts=dict(sorted(counts.items())),
                        closed_form=closed, closed_form_match=match, witnesses=witnesses)


# -- Dickson polynomials -------------------------------------------------------


def dickson_value(field: Field, x: int, n: int = 5) -> int:
    """D_n(x, 1) in characteristic 2 via the recurrence D_k = x*D_(k-1) + D_(k-2)."""
    if n < 1:
        raise DomainError(f"Dickson index must be positive, got {n}")
    _validate_element(field, x, "x")
    prev, cur = 0, x  # D_0 = 2 = 0, D_1 = x
    for _ in range(n - 1):
        prev, cur = cur, field.mul(x, cur) ^ prev
    return cur


def dickson_is_permutation(field: Field, n: int = 5) -> bool:
    """Permutation test by exhaustive image and by gcd(n, 2^(2t) - 1); they must agree."""
    image = {dickson_value(field, x, n) for x in range(field.q)}
    by_image = len(image) == field.q
    by_gcd = gcd(n, field.q * field.q - 1) == 1
    if by_image != by_gcd:
        raise RuntimeError("Dickson permutation criteria disagree; implementation bug")
    return by_image


# -- spectral lower bounds -----------------------------------------------------


@dataclass(frozen=True)
class BoundCheck:
    d: int
    max_walsh: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.max_walsh > self.bound


def check_bound(field: Field, d: int) -> BoundCheck:
    """Does some a != 0 reach W_d(a) > 2^t + 2^(t//2)?  (Equivalent to the
    strict minimum-distance bound for the associated code.)"""
    t = _need_even(field)
    if gcd(d, field.order) != 1:
        raise DomainError("bound check needs gcd(d, 2^m - 1) = 1")
    arr = fwht(truth_table(field, d))
    return BoundCheck(d=d, max_walsh=int(arr[1:].max()),
                      bound=(1 << t) + (1 << (t // 2)))


@dataclass(frozen=True)
class SarwateCheck:
    d: int
    threshold: int
    max_walsh: int
    witness: int | None

    @property
    def holds(self) -> bool:
        return self.max_walsh >= self.threshold


def check_sarwate(field: Field, d: int) -> SarwateCheck:
    """Does some a != 0 reach W_d(a) >= 2^(t+1)?  Conjectured to always hold;
    the witness is cross-checked against the direct-summation oracle."""
    t = _need_even(field)
    if gcd(d, field.order) != 1:
        raise DomainError("threshold check needs gcd(d, 2^m - 1) = 1")
    arr = fwht(truth_table(field, d))
    threshold = 1 << (t + 1)
    mx = int(arr[1:].max())
    witness = None
    if mx >= threshold:
        u = 1 + int(np.nonzero(arr[1:] >= threshold)[0][0])
        witness = field.dual_index_inv(u)
        if walsh_coefficient(field, d, witness) != int(arr[u]):
            raise RuntimeError("dual indexing disagrees with the oracle; implementation bug")
    return SarwateCheck(d=d, threshold=threshold, max_walsh=mx, witness=witness)


# -- excluded-value check for the even-t family ---------------------------------


@dataclass(frozen=True)
class NoSixReport:
    t: int
    d: int
    absent: bool
    c: int
    theta: int
    tr_theta_inv_is_one: bool
    theta_has_order_three: bool

    def __bool__(self) -> bool:
        return self.absent


def check_no_six(field: Field) -> NoSixReport:
    """For t = 2 mod 4, t >= 6 and d = 3 + 2^(t+1): the spectrum must not
    contain +-6 * 2^t, and for the order-5 designated c the element
    theta = c + c^-1 has order 3 with Tr_t(theta^-1) = 1."""
    t = _need_even(field)
    if t % 4 != 2 or t < 6:
        raise DomainError(f"excluded-value check needs t = 2 mod 4 and t >= 6, got t = {t}")
    d = 3 + (1 << (t + 1))
    if gcd(d, field.order) != 1:
        raise DomainError(f"d = {d} is not invertible mod 2^m - 1")
    spec = walsh_spectrum(field, d)
    banned = 6 << t
    absent = spec.multiplicity(banned) == 0 and spec.multiplicity(-banned) == 0
    c = field.designated_generator(5)
    theta = c ^ field.pow(c, 1 << t)
    tr_one = field.subfield_trace(field.inv(theta)) == 1
    order_three = theta != 1 and field.pow(theta, 3) == 1
    if not (tr_one and order_three):
        raise RuntimeError("structural facts about theta failed; implementation bug")
    return NoSixReport(t=t, d=d, absent=absent, c=c, theta=theta,
                       tr_theta_inv_is_one=tr_one, theta_has_order_three=order_three)
