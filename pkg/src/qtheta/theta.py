"""Generators for theta-type series and their structured two-term splits.

The central objects are the bilateral quadratic-exponent series

    f(a, b)   = sum over all integers n of a^(n(n+1)/2) * b^(n(n-1)/2)
    Psi(a, b) = the same sum with every n <= -1 term negated

for monomial arguments a, b in q, together with the Euler products
f_m = (q^m; q^m)_infinity and the one-sided triangular-number series.
All generators return exact-ring series with min_exp 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import EXACT, DomainError, TruncatedSeries


@dataclass(frozen=True)
class Monomial:
    """A signed power of q: sign * q^exp."""

    sign: int
    exp: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise DomainError("monomial sign must be +1 or -1")
        if self.exp < 0:
            raise DomainError("monomial exponent must be >= 0")

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.sign * other.sign, self.exp + other.exp)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.sign * other.sign, self.exp - other.exp)

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(self.sign if k % 2 else 1, self.exp * k)

    def __str__(self) -> str:
        s = "-" if self.sign < 0 else ""
        if self.exp == 0:
            return s + "1"
        if self.exp == 1:
            return s + "q"
        return f"{s}q^{self.exp}"


def q(exp: int = 1, sign: int = 1) -> Monomial:
    return Monomial(sign, exp)


@dataclass(frozen=True)
class ThetaSpec:
    a: Monomial
    b: Monomial

    def __post_init__(self) -> None:
        if self.a.exp + self.b.exp < 1:
            raise DomainError("theta spec needs a.exp + b.exp >= 1")

    def swapped(self) -> "ThetaSpec":
        return ThetaSpec(self.b, self.a)

    def __str__(self) -> str:
        return f"f({self.a},{self.b})"


@dataclass(frozen=True)
class FalseThetaSpec:
    a: Monomial
    b: Monomial

    def __post_init__(self) -> None:
        if self.a.exp + self.b.exp < 1:
            raise DomainError("false theta spec needs a.exp + b.exp >= 1")

    def __str__(self) -> str:
        return f"Psi({self.a},{self.b})"


@dataclass(frozen=True)
class EulerSpec:
    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise DomainError("Euler product index must be >= 1")


def theta(a_sign: int, a_exp: int, b_sign: int, b_exp: int) -> ThetaSpec:
    return ThetaSpec(Monomial(a_sign, a_exp), Monomial(b_sign, b_exp))


def _term(spec, n: int) -> tuple[int, int]:
    """Exponent and sign of the index-n term of f(a, b)."""
    ta = n * (n + 1) // 2
    tb = n * (n - 1) // 2
    e = spec.a.exp * ta + spec.b.exp * tb
    sign = (spec.a.sign if ta % 2 else 1) * (spec.b.sign if tb % 2 else 1)
    return e, sign


def _bilateral(spec, order: int, negate_negative: bool) -> TruncatedSeries:
    if order < 1:
        raise DomainError("order must be >= 1")
    c = [0] * order
    n = 0
    while True:
        e, sign = _term(spec, n)
        if e < 0:
            raise DomainError(f"negative exponent {e} at index {n} for {spec}")
        if e >= order:
            break
        c[e] += sign
        n += 1
    n = -1
    while True:
        e, sign = _term(spec, n)
        if e < 0:
            raise DomainError(f"negative exponent {e} at index {n} for {spec}")
        if e >= order:
            break
        c[e] += -sign if negate_negative else sign
        n -= 1
    return TruncatedSeries(EXACT, 0, c)


def theta_series(spec: ThetaSpec, order: int) -> TruncatedSeries:
    """Expand f(a, b) by direct bilateral summation."""
    return _bilateral(spec, order, negate_negative=False)


def false_theta_series(spec: FalseThetaSpec, order: int) -> TruncatedSeries:
    """Expand Psi(a, b): n >= 0 terms added, n <= -1 terms subtracted."""
    return _bilateral(spec, order, negate_negative=True)


_PENTAGONAL = ThetaSpec(Monomial(-1, 1), Monomial(-1, 2))


def euler_series(spec: EulerSpec | int, order: int) -> TruncatedSeries:
    """Expand f_m = (q^m; q^m)_infinity via the pentagonal-number series."""
    m = spec.m if isinstance(spec, EulerSpec) else EulerSpec(spec).m
    base = theta_series(_PENTAGONAL, -(-order // m))
    return base.inflate(m).truncated(order)


def triangular_series(order: int) -> TruncatedSeries:
    """One-sided sum of q^(m(m+1)/2) over m >= 0."""
    if order < 1:
        raise DomainError("order must be >= 1")
    c = [0] * order
    m = 0
    while m * (m + 1) // 2 < order:
        c[m * (m + 1) // 2] += 1
        m += 1
    return TruncatedSeries(EXACT, 0, c)


def triple_product_series(spec: ThetaSpec, order: int) -> TruncatedSeries:
    """Expand f(a, b) as the product (-a; ab)(-b; ab)(ab; ab), all infinite.

    Each factor (1 + c*q^e) is multiplied in by one linear pass; factor
    exponents grow linearly, so roughly 3*order/(a.exp+b.exp) factors
    contribute below the truncation order.
    """
    if order < 1:
        raise DomainError("order must be >= 1")
    u, su = spec.a.exp, spec.a.sign
    v, sv = spec.b.exp, spec.b.sign
    step = u + v
    sq = su * sv
    # factor (1 + base_sign * sq^k * q^(start + k*step)) from (-x; ab) with
    # x = a or b; factor (1 - sq^k * q^(k*step)), k >= 1, from (ab; ab).
    factors: list[tuple[int, int]] = []
    for start, base_sign in ((u, su), (v, sv)):
        e, k = start, 0
        while e < order:
            factors.append((e, base_sign * (sq if k % 2 else 1)))
            k += 1
            e = start + k * step
    e, k = step, 1
    while e < order:
        factors.append((e, -(sq if k % 2 else 1)))
        k += 1
        e = k * step
    res = [0] * order
    res[0] = 1
    for e, cfac in factors:
        if e == 0:
            scale = 1 + cfac
            res = [scale * x for x in res]
            continue
        for i in range(order - 1, e - 1, -1):
            if res[i - e]:
                res[i] += cfac * res[i - e]
    return TruncatedSeries(EXACT, 0, res)


def entry30_parts(spec: ThetaSpec) -> tuple[
    tuple[Monomial, ThetaSpec], tuple[Monomial, ThetaSpec]
]:
    """Two-term split of f(a, b) into f(a^3 b, a b^3) + a f(b/a, a^5 b^3)."""
    a, b = spec.a, spec.b
    if b.exp < a.exp:
        raise DomainError("two-term split requires b.exp >= a.exp")
    first = (Monomial(1, 0), ThetaSpec(a ** 3 * b, a * b ** 3))
    second = (a, ThetaSpec(b / a, a ** 5 * b ** 3))
    return first, second


def entry29_parts(s1: ThetaSpec, s2: ThetaSpec) -> tuple[
    tuple[Monomial, ThetaSpec, ThetaSpec],
    tuple[Monomial, ThetaSpec, ThetaSpec],
]:
    """Product-to-sum split of f(a,b) f(c,d) for ab = cd.

    Returns the two summands of
    f(ac, bd) f(ad, bc) + a f(b/c, a c^2 d) f(b/d, a c d^2).
    """
    a, b = s1.a, s1.b
    c, d = s2.a, s2.b
    if a * b != c * d:
        raise DomainError("product-to-sum split requires ab = cd")
    if b.exp < max(c.exp, d.exp):
        raise DomainError("split requires b.exp >= max(c.exp, d.exp)")
    first = (
        Monomial(1, 0),
        ThetaSpec(a * c, b * d),
        ThetaSpec(a * d, b * c),
    )
    second = (
        a,
        ThetaSpec(b / c, a * c ** 2 * d),
        ThetaSpec(b / d, a * c * d ** 2),
    )
    return first, second


def bilateral_quadratic_spec(A: int, B: int) -> tuple[int, ThetaSpec]:
    """Match the bilateral sum of q^(A m^2 + B m) to a shifted theta series.

    Returns (c, spec) with the sum equal to q^c * f(spec); c may be
    negative when the quadratic dips below zero.  Requires A >= 1.
    """
    if A < 1:
        raise DomainError("quadratic leading coefficient must be >= 1")
    # shift the index m -> m + t so the linear coefficient lands in [-A, A]
    t = round(-B / (2 * A))
    for cand in (t, t - 1, t + 1):
        b2 = B + 2 * A * cand
        if abs(b2) <= A:
            t = cand
            break
    b2 = B + 2 * A * t
    c = A * t * t + B * t
    alpha, beta = A + b2, A - b2
    if alpha == 0 or beta == 0:
        raise DomainError(
            "degenerate quadratic: linear coefficient congruent to A mod 2A"
        )
    return c, ThetaSpec(Monomial(1, alpha), Monomial(1, beta))
