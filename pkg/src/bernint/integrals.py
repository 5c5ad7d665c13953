"""Integrals of products of Bernoulli polynomials.

Central object:  I_{k_1,...,k_r}(x) = integral_0^x B_{k_1}(z)...B_{k_r}(z) dz,
with the scaled variants I~ = I / (k_1! ... k_r!) and the boundary terms
C_{k_1,...,k_r}(x) = B_{k_1}(x)...B_{k_r}(x) - B_{k_1}...B_{k_r} (C~ scaled
the same way).

Two independent evaluation routes are kept side by side:

* `oracle_integral` expands the product polynomial and integrates it
  termwise -- no theorem involved, so it serves as ground truth.
* `closed_form_integral` evaluates the finite double sum over weighted
  boundary terms; `recurrence_integral` evaluates the integration-by-parts
  family it telescopes from, with the residual integrals handed to the
  oracle so the comparison is a genuine cross-check.

The specialized two-, three- and four-factor formulas (`two_factor_formula`,
`norlund_value`, `three_factor_formula`, `three_factor_at_one`,
`four_factor_at_one`, `four_factor_even_sum`) are the classical shapes those
sums collapse to; all of them are swept against the oracle by the
verification suites.  Everything is exact: inputs and outputs are Fractions.
"""

from __future__ import annotations

import functools
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from . import kernels
from .bernoulli import DEFAULT_CACHE, BernoulliCache, Polynomial, bernoulli_polynomial
from .exact import binomial, compositions, multinomial

Scalar = int | Fraction

__all__ = [
    "IntegralSpec",
    "ScaledValue",
    "c_term",
    "closed_form_integral",
    "closed_form_integral_poly",
    "four_factor_at_one",
    "four_factor_even_sum",
    "norlund_value",
    "oracle_integral",
    "oracle_integral_poly",
    "recurrence_integral",
    "recurrence_residual_indices",
    "three_factor_at_one",
    "three_factor_formula",
    "two_factor_formula",
]


def _check_indices(ks: Sequence[int]) -> tuple[int, ...]:
    ks = tuple(ks)
    if not ks:
        raise ValueError("need at least one polynomial index")
    for k in ks:
        if k < 0:
            raise ValueError(f"polynomial indices must be nonnegative, got {ks}")
    return ks


@dataclass(frozen=True)
class IntegralSpec:
    """A request: the index tuple (k_1, ..., k_r) and the upper limit x."""

    ks: tuple[int, ...]
    upper: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "ks", _check_indices(self.ks))
        object.__setattr__(self, "upper", Fraction(self.upper))

    @property
    def r(self) -> int:
        return len(self.ks)


class ScaledValue(NamedTuple):
    """An integral value tagged with whether it carries the 1/(k_1!...k_r!) scaling."""

    value: Fraction
    scaled: bool

    def unscaled(self, ks: Sequence[int]) -> Fraction:
        if not self.scaled:
            return self.value
        return self.value * _factorial_product(ks)


def _factorial_product(ks: Sequence[int]) -> int:
    out = 1
    for k in ks:
        out *= math.factorial(k)
    return out


# ---------------------------------------------------------------------------
# cached int-coefficient Bernoulli polynomials and scaled value tables
# ---------------------------------------------------------------------------

_INT_POLY_LOCK = threading.Lock()
_int_polys: list[tuple[tuple[int, ...], int]] = []  # k -> (coeff nums, common den)

_TABLE_LOCK = threading.Lock()
# upper -> parallel grow-only lists (xnum, xden) with xnum[k]/xden[k] = B_k(upper)/k!
_tables_at: dict[Fraction, tuple[list[int], list[int]]] = {}
# onum[k]/oden[k] = B_k/k!
_zero_table: tuple[list[int], list[int]] = ([], [])


def _int_poly(k: int, cache: BernoulliCache) -> tuple[tuple[int, ...], int]:
    """B_k(x) as (integer coefficients, common denominator), memoized."""
    if k < len(_int_polys):
        return _int_polys[k]
    with _INT_POLY_LOCK:
        while len(_int_polys) <= k:
            n = len(_int_polys)
            poly = bernoulli_polynomial(n, cache)
            den = math.lcm(*(c.denominator for c in poly.coeffs))
            nums = tuple(c.numerator * (den // c.denominator) for c in poly.coeffs)
            _int_polys.append((nums, den))
    return _int_polys[k]


def _scaled_tables(
    upper: Fraction, n: int, cache: BernoulliCache
) -> tuple[list[int], list[int], list[int], list[int]]:
    """Tables of B_k(upper)/k! and B_k/k! for k = 0..n, as reduced int pairs."""
    onum, oden = _zero_table
    t = _tables_at.get(upper)
    if t is not None and len(t[0]) > n and len(onum) > n:
        return t[0], t[1], onum, oden
    with _TABLE_LOCK:
        while len(onum) <= n:
            k = len(onum)
            v = cache.number(k) / math.factorial(k)
            onum.append(v.numerator)
            oden.append(v.denominator)
        if upper not in _tables_at:
            _tables_at[upper] = ([], [])
        xnum, xden = _tables_at[upper]
        while len(xnum) <= n:
            k = len(xnum)
            v = bernoulli_polynomial(k, cache)(upper) / math.factorial(k)
            xnum.append(v.numerator)
            xden.append(v.denominator)
    return xnum, xden, onum, oden


def _btilde(k: int, cache: BernoulliCache) -> Fraction:
    """Scaled Bernoulli number B_k/k!, extended to 0 for negative k."""
    if k < 0:
        return Fraction(0)
    return cache.number(k) / math.factorial(k)


# ---------------------------------------------------------------------------
# brute-force oracle
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _oracle_poly_cached(ks: tuple[int, ...], cache: BernoulliCache) -> Polynomial:
    nums, den = _int_poly(ks[0], cache)
    nums = list(nums)
    for k in ks[1:]:
        nk, dk = _int_poly(k, cache)
        nums = kernels.convolve(nums, list(nk))
        den *= dk
    product = Polynomial(Fraction(c, den) for c in nums)
    return product.antiderivative()


def oracle_integral_poly(
    ks: Sequence[int], cache: BernoulliCache | None = None
) -> Polynomial:
    """The function x -> I_{k_1,...,k_r}(x) as an exact polynomial.

    Built by direct expansion: multiply the Bernoulli polynomials and take
    the antiderivative that vanishes at 0.  No closed-form theorem is
    involved, which is what makes this the package's ground truth.
    """
    ks = _check_indices(ks)
    return _oracle_poly_cached(ks, cache or DEFAULT_CACHE)


def oracle_integral(
    ks: Sequence[int],
    upper: Scalar = Fraction(1),
    cache: BernoulliCache | None = None,
) -> Fraction:
    """Brute-force value of the integral from 0 to `upper`."""
    return oracle_integral_poly(ks, cache)(Fraction(upper))


# ---------------------------------------------------------------------------
# boundary terms and the general closed form
# ---------------------------------------------------------------------------


def c_term(
    ks: Sequence[int],
    upper: Scalar = Fraction(1),
    scaled: bool = False,
    cache: BernoulliCache | None = None,
) -> Fraction:
    """Boundary term C (or C~ when scaled) for the given index tuple."""
    ks = _check_indices(ks)
    upper = Fraction(upper)
    cache = cache or DEFAULT_CACHE
    xnum, xden, onum, oden = _scaled_tables(upper, max(ks), cache)
    at_x = Fraction(1)
    at_0 = Fraction(1)
    for k in ks:
        at_x *= Fraction(xnum[k], xden[k])
        at_0 *= Fraction(onum[k], oden[k])
    scaled_val = at_x - at_0
    if scaled:
        return scaled_val
    return scaled_val * _factorial_product(ks)


def closed_form_integral(
    ks: Sequence[int],
    upper: Scalar = Fraction(1),
    scaled: bool = False,
    cache: BernoulliCache | None = None,
) -> Fraction:
    """Closed-form value of the integral from 0 to `upper`.

    Evaluates the finite double sum: over a = 0..k_1+...+k_{r-1} and over
    compositions (i_1,...,i_{r-1}) of a, add (-1)^a times the multinomial
    coefficient of the composition times the scaled boundary term with
    indices (k_1-i_1, ..., k_{r-1}-i_{r-1}, k_r+a+1).  Compositions with
    any i_j > k_j carry weight 0 by the extended-zero convention, so the
    sum is really over the box 0 <= i_j <= k_j.  For r = 1 the box is
    empty and the sum degenerates to (B_{k+1}(x) - B_{k+1})/(k+1)!.
    """
    ks = _check_indices(ks)
    upper = Fraction(upper)
    cache = cache or DEFAULT_CACHE
    tables = _scaled_tables(upper, sum(ks) + 1, cache)
    num, den = kernels.closed_form_sum(ks, *tables)
    value = Fraction(num, den)
    if scaled:
        return value
    return value * _factorial_product(ks)


def closed_form_integral_poly(
    ks: Sequence[int], cache: BernoulliCache | None = None
) -> Polynomial:
    """The closed form assembled symbolically as a polynomial in x.

    Each boundary term is a product of Bernoulli polynomials whose constant
    coefficient is exactly the product of the Bernoulli numbers, so C~ as a
    polynomial is the scaled product with its constant term zeroed.
    Coefficient-wise equal to `oracle_integral_poly`.
    """
    ks = _check_indices(ks)
    cache = cache or DEFAULT_CACHE
    heads = ks[:-1]
    kr = ks[-1]
    degree = sum(ks) + 1
    acc = [Fraction(0)] * (degree + 1)

    def add_term(comp: tuple[int, ...], a: int, weight: int) -> None:
        idx = tuple(h - i for h, i in zip(heads, comp)) + (kr + a + 1,)
        nums, den = _int_poly(idx[0], cache)
        nums = list(nums)
        for k in idx[1:]:
            nk, dk = _int_poly(k, cache)
            nums = kernels.convolve(nums, list(nk))
            den *= dk
        den *= _factorial_product(idx)
        sign = -weight if a & 1 else weight
        for i, c in enumerate(nums):
            if i and c:  # constant term dropped: that is the -B_{k_1}...B_{k_r} part
                acc[i] += Fraction(sign * c, den)

    for comp in _box_compositions(heads):
        a = sum(comp)
        add_term(comp, a, multinomial(a, comp))

    return Polynomial(acc) * _factorial_product(ks)


def _box_compositions(heads: tuple[int, ...]):
    """All (i_1,...,i_{r-1}) with 0 <= i_j <= k_j; the terms that survive."""
    if not heads:
        yield ()
        return
    for i in range(heads[0] + 1):
        for rest in _box_compositions(heads[1:]):
            yield (i,) + rest


# ---------------------------------------------------------------------------
# integration-by-parts recurrence (one identity per mu >= 1)
# ---------------------------------------------------------------------------


def recurrence_residual_indices(ks: Sequence[int], mu: int) -> list[tuple[int, ...]]:
    """Index tuples of the residual integrals left after mu reduction steps.

    Empty exactly when mu reaches k_1 + ... + k_{r-1} + 1: every composition
    of mu then drives some head index negative and the zero convention
    removes the term.
    """
    ks = _check_indices(ks)
    if mu < 1:
        raise ValueError(f"mu must be >= 1 (got {mu})")
    heads, kr = ks[:-1], ks[-1]
    out = []
    for comp in compositions(mu, len(heads)):
        idx = tuple(h - i for h, i in zip(heads, comp))
        if min(idx, default=0) < 0:
            continue
        out.append(idx + (kr + mu,))
    return out


def recurrence_integral(
    ks: Sequence[int],
    upper: Scalar = Fraction(1),
    mu: int = 1,
    cache: BernoulliCache | None = None,
) -> Fraction:
    """Scaled integral via the mu-step reduction; independent of mu.

    The first mu rounds of integration by parts leave a signed sum of scaled
    boundary terms plus (-1)^mu times a sum of residual scaled integrals.
    The residuals are evaluated with the brute-force oracle rather than
    recursively, so agreement with `closed_form_integral` across mu values
    checks the identity instead of assuming it.
    """
    ks = _check_indices(ks)
    if mu < 1:
        raise ValueError(f"mu must be >= 1 (got {mu})")
    upper = Fraction(upper)
    cache = cache or DEFAULT_CACHE
    heads, kr = ks[:-1], ks[-1]

    acc = Fraction(0)
    for a in range(mu):
        sign = -1 if a & 1 else 1
        for comp in compositions(a, len(heads)):
            idx = tuple(h - i for h, i in zip(heads, comp))
            if min(idx, default=0) < 0:
                continue
            w = multinomial(a, comp)
            acc += sign * w * c_term(idx + (kr + a + 1,), upper, scaled=True, cache=cache)

    sign = -1 if mu & 1 else 1
    for comp in compositions(mu, len(heads)):
        idx = tuple(h - i for h, i in zip(heads, comp))
        if min(idx, default=0) < 0:
            continue
        w = multinomial(mu, comp)
        residual = idx + (kr + mu,)
        value = oracle_integral(residual, upper, cache) / _factorial_product(residual)
        acc += sign * w * value
    return acc


# ---------------------------------------------------------------------------
# specialized formulas for r = 2, 3, 4
# ---------------------------------------------------------------------------


def two_factor_formula(
    k: int,
    m: int,
    upper: Scalar = Fraction(1),
    cache: BernoulliCache | None = None,
) -> Fraction:
    """I_{k,m}(x) as the single alternating binomial sum over boundary pairs."""
    ks = _check_indices((k, m))
    k, m = ks
    upper = Fraction(upper)
    cache = cache or DEFAULT_CACHE
    xnum, xden, onum, oden = _scaled_tables(upper, k + m + 1, cache)

    def b_at(n: int) -> Fraction:
        return Fraction(xnum[n], xden[n]) * math.factorial(n)

    acc = Fraction(0)
    for j in range(k + 1):
        w = binomial(k + m + 1, k - j)
        term = b_at(k - j) * b_at(m + j + 1) - cache.number(k - j) * cache.number(m + j + 1)
        acc += (-w if j & 1 else w) * term
    return Fraction(math.factorial(k) * math.factorial(m), math.factorial(k + m + 1)) * acc


def norlund_value(k: int, l: int, cache: BernoulliCache | None = None) -> Fraction:
    """The classical value of the two-factor integral over [0, 1].

    (-1)^(k-1) * k! l! / (k+l)! * B_{k+l}, valid for k, l >= 1.
    """
    if k < 1 or l < 1:
        raise ValueError(f"both indices must be >= 1 (got k={k}, l={l})")
    cache = cache or DEFAULT_CACHE
    value = Fraction(math.factorial(k) * math.factorial(l), math.factorial(k + l))
    value *= cache.number(k + l)
    return -value if k % 2 == 0 else value


def three_factor_formula(
    n: int,
    m: int,
    k: int,
    upper: Scalar = Fraction(1),
    cache: BernoulliCache | None = None,
) -> Fraction:
    """I_{n,m,k}(x) via the double binomial sum over boundary triples."""
    ks = _check_indices((n, m, k))
    n, m, k = ks
    upper = Fraction(upper)
    cache = cache or DEFAULT_CACHE
    acc = Fraction(0)
    for a in range(n + m + 1):
        sign = -1 if a & 1 else 1
        for i in range(a + 1):
            n1, m1 = n - a + i, m - i
            if n1 < 0 or m1 < 0:
                continue
            w = binomial(a, i)
            acc += sign * w * c_term((n1, m1, k + a + 1), upper, scaled=True, cache=cache)
    return acc * _factorial_product(ks)


def three_factor_at_one(
    k: int, l: int, m: int, cache: BernoulliCache | None = None
) -> Fraction:
    """I_{k,l,m}(1) for k, l, m >= 1; zero when k+l+m is odd."""
    if k < 1 or l < 1 or m < 1:
        raise ValueError(f"all indices must be >= 1 (got {(k, l, m)})")
    if (k + l + m) % 2:
        return Fraction(0)
    cache = cache or DEFAULT_CACHE
    acc = Fraction(0)
    for a in range(k + l + 1):
        w = binomial(a, l - 1) + binomial(a, k - 1)
        if w == 0:
            continue
        acc += w * _btilde(m + a + 1, cache) * _btilde(k + l - a - 1, cache)
    sign = 1 if (m + 1) % 2 == 0 else -1
    return sign * _factorial_product((k, l, m)) * acc


def four_factor_even_sum(
    ks: Sequence[int], cache: BernoulliCache | None = None
) -> Fraction:
    """Scaled I~_{k_1,k_2,k_3,k_4}(1) via the symmetrized triple sum.

    This is the intermediate form obtained by evaluating the boundary terms
    at 1 with the reflection identity, before any parity case analysis; it
    requires an even index sum (the odd case vanishes identically).
    """
    ks = _check_indices(ks)
    if len(ks) != 4:
        raise ValueError(f"need exactly four indices (got {len(ks)})")
    if sum(ks) % 2:
        raise ValueError(f"index sum must be even (got {ks}); the odd case is 0")
    cache = cache or DEFAULT_CACHE
    k1, k2, k3, k4 = ks
    acc = Fraction(0)
    for a in range(k1 + k2 + k3 + 1):
        bt = _btilde(k4 + a + 1, cache)
        if bt == 0:
            continue
        inner = Fraction(0)
        for i1 in range(min(a, k1) + 1):
            b1 = _btilde(k1 - i1, cache)
            if b1 == 0:
                continue
            for i2 in range(min(a - i1, k2) + 1):
                i3 = a - i1 - i2
                if i3 > k3:
                    continue
                b2 = _btilde(k2 - i2, cache)
                if b2 == 0:
                    continue
                b3 = _btilde(k3 - i3, cache)
                if b3 == 0:
                    continue
                inner += multinomial(a, (i1, i2, i3)) * b1 * b2 * b3
        sign = 1 if (a + 1) % 2 == 0 else -1
        acc += 2 * sign * bt * inner
    return acc


def four_factor_at_one(
    k1: int,
    k2: int,
    k3: int,
    k4: int,
    variant: str = "corrected",
    cache: BernoulliCache | None = None,
) -> Fraction:
    """I_{k1,k2,k3,k4}(1) by the parity-case formula; zero for odd index sums.

    The case analysis splits the symmetrized triple sum by which of the
    first three reduced indices is odd (an odd reduced index contributes
    only when it equals 1), plus a closed term for the all-odd cell.  The
    `variant` flag selects:

    * "printed": the case formula exactly as classically stated.  Its
      derivation assumes the trailing scaled Bernoulli factor vanishes for
      odd index, which fails for index 1: the a = 0 cell (reachable only
      when k4 == 0) is then misattributed by the parity cases, and the
      formula disagrees with the oracle on tuples like (2, 0, 0, 0) or
      (1, 1, 2, 0).
    * "corrected" (default): replaces the formula's a = 0 contribution by
      the cell's true value B_{k1}/k1! * B_{k2}/k2! * B_{k3}/k3! when
      k4 == 0.  Matches the oracle on every even-sum tuple.

    The `carlitz4` verification suite adjudicates both variants against the
    oracle and attributes the discrepancy cell by cell.
    """
    if variant not in ("printed", "corrected"):
        raise ValueError(f"variant must be 'printed' or 'corrected' (got {variant!r})")
    ks = _check_indices((k1, k2, k3, k4))
    k1, k2, k3, k4 = ks
    if sum(ks) % 2:
        return Fraction(0)
    cache = cache or DEFAULT_CACHE

    def btil(n: int) -> Fraction:
        return _btilde(n, cache)

    def case_sum(lead: int, pair_hi: int, other: int, a: int) -> Fraction:
        # lead plays the role of the index pinned to 1; the inner binomial
        # sum runs over the split of the remaining budget a - lead + 1.
        w = binomial(a, lead - 1)
        if w == 0:
            return Fraction(0)
        inner = Fraction(0)
        for i in range(a - lead + 2):
            inner += binomial(a - lead + 1, i) * btil(other - i) * btil(pair_hi + i - a - 1)
        return w * inner

    replace_a0 = variant == "corrected" and k4 == 0

    acc = Fraction(0)
    for a in range(k1 + k2 + k3 + 1):
        if a == 0 and replace_a0:
            continue
        bt = btil(k4 + a + 1)
        if bt == 0:
            continue
        total = (
            case_sum(k1, k1 + k2, k3, a)
            + case_sum(k2, k2 + k3, k1, a)
            + case_sum(k3, k2 + k3, k1, a)
        )
        acc += (bt if a % 2 == 0 else -bt) * total

    d_sign = 1 if (k1 + k2 + k3) % 2 == 0 else -1
    acc += (
        Fraction(d_sign, 2)
        * binomial(k1 + k2 + k3 - 3, k1 - 1)
        * binomial(k2 + k3 - 2, k2 - 1)
        * btil(k1 + k2 + k3 + k4 - 2)
    )

    if replace_a0:
        acc += btil(k1) * btil(k2) * btil(k3)

    return acc * _factorial_product(ks)
