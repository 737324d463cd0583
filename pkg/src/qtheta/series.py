"""Truncated Laurent-style formal power series in one variable q.

A series tracks a dense coefficient window [min_exp, order): coefficients
at exponents below min_exp are known to be zero, coefficients at or above
order are unknown.  Truncation orders propagate pessimistically through
arithmetic, and comparisons refuse to look past the guaranteed window.

Two coefficient rings are supported: exact arbitrary-precision integers,
and canonical residues mod 2^w.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels


class SeriesError(ValueError):
    """Base class for series-layer errors."""


class RingMismatchError(SeriesError):
    pass


class NotInvertibleError(SeriesError):
    pass


class TruncationError(SeriesError):
    """A computation would need coefficients beyond the known window."""


class DomainError(SeriesError):
    """Arguments outside the supported domain (e.g. negative exponents)."""


@dataclass(frozen=True)
class Ring:
    """Coefficient ring: exact integers, or integers mod 2^w."""

    kind: str
    w: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "exact":
            if self.w is not None:
                raise DomainError("exact ring takes no bit width")
        elif self.kind == "mod2w":
            if self.w is None or not 1 <= self.w <= 64:
                raise DomainError("mod2w bit width must satisfy 1 <= w <= 64")
        else:
            raise DomainError(f"unknown ring kind {self.kind!r}")

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    @property
    def modulus(self) -> int | None:
        return None if self.w is None else 1 << self.w

    def reduce(self, v: int) -> int:
        return v if self.is_exact else v % (1 << self.w)

    def is_unit(self, v: int) -> bool:
        return v in (1, -1) if self.is_exact else v % 2 == 1

    def __str__(self) -> str:
        return "exact" if self.is_exact else f"mod2^{self.w}"


EXACT = Ring("exact")
MOD2 = Ring("mod2w", 1)


def mod2w(w: int) -> Ring:
    return Ring("mod2w", w)


def parse_ring(text: str) -> Ring:
    """Parse ``exact``, ``mod2``, or ``mod2^w``."""
    t = text.strip().lower()
    if t == "exact":
        return EXACT
    if t == "mod2":
        return MOD2
    if t.startswith("mod2^"):
        try:
            return mod2w(int(t[5:]))
        except ValueError:
            pass
    raise DomainError(f"unrecognized ring {text!r}")


@dataclass(frozen=True)
class ProgressionSelector:
    """Arithmetic progression of exponents: m*n + j for n = 0, 1, 2, ..."""

    m: int
    j: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise DomainError("selector modulus must be positive")
        if not 0 <= self.j < self.m:
            raise DomainError("selector residue must satisfy 0 <= j < m")


@dataclass(frozen=True)
class EqReport:
    """Outcome of a window comparison; falsy when a mismatch was found."""

    equal: bool
    exponent: int | None = None
    left: int | None = None
    right: int | None = None

    def __bool__(self) -> bool:
        return self.equal


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


class TruncatedSeries:
    """Immutable dense coefficient window over a Ring.

    The constructor canonicalizes coefficients into the ring; treat
    instances as frozen values.
    """

    __slots__ = ("ring", "min_exp", "order", "_c")

    def __init__(self, ring: Ring, min_exp: int, coeffs: list[int]):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "min_exp", min_exp)
        object.__setattr__(self, "order", min_exp + len(coeffs))
        if ring.is_exact:
            c = [int(v) for v in coeffs]
        else:
            mod = 1 << ring.w
            c = [int(v) % mod for v in coeffs]
        object.__setattr__(self, "_c", c)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- basic access -------------------------------------------------------

    def __len__(self) -> int:
        return len(self._c)

    @property
    def coeffs(self) -> list[int]:
        return list(self._c)

    def coeff(self, e: int) -> int:
        """Coefficient at exponent e; zero below the window, error above."""
        if e >= self.order:
            raise TruncationError(
                f"coefficient at q^{e} is beyond the known order {self.order}"
            )
        if e < self.min_exp:
            return 0
        return self._c[e - self.min_exp]

    def nonzero_terms(self) -> list[tuple[int, int]]:
        return [
            (self.min_exp + i, v) for i, v in enumerate(self._c) if v != 0
        ]

    def __repr__(self) -> str:
        show = self.nonzero_terms()[:6]
        body = " + ".join(f"{v}*q^{e}" for e, v in show) or "0"
        more = " + ..." if len(self.nonzero_terms()) > 6 else ""
        return f"<series {self.ring} [{self.min_exp},{self.order}): {body}{more}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.ring != other.ring or self.order != other.order:
            return False
        lo = min(self.min_exp, other.min_exp)
        return all(
            self.coeff(e) == other.coeff(e) for e in range(lo, self.order)
        )

    def __hash__(self):
        return hash((self.ring, self.order, tuple(self.nonzero_terms())))

    def _require_same_ring(self, other: "TruncatedSeries") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(
                f"ring mismatch: {self.ring} vs {other.ring}"
            )

    # -- arithmetic ---------------------------------------------------------

    def add(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same_ring(other)
        lo = min(self.min_exp, other.min_exp)
        hi = min(self.order, other.order)
        out = [0] * max(hi - lo, 0)
        for s in (self, other):
            base = s.min_exp - lo
            for i, v in enumerate(s._c):
                if s.min_exp + i >= hi:
                    break
                out[base + i] += v
        return TruncatedSeries(self.ring, lo, out)

    def neg(self) -> "TruncatedSeries":
        return TruncatedSeries(self.ring, self.min_exp, [-v for v in self._c])

    def sub(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self.add(other.neg())

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same_ring(other)
        out_len = min(len(self._c), len(other._c))
        if self.ring.is_exact:
            c = kernels.conv_exact(self._c, other._c, out_len)
        else:
            c = kernels.conv_mod(self._c, other._c, out_len, self.ring.w)
        return TruncatedSeries(self.ring, self.min_exp + other.min_exp, c)

    def pow(self, k: int) -> "TruncatedSeries":
        if k < 1:
            raise DomainError("power exponent must be >= 1")
        acc = self
        for _ in range(k - 1):
            acc = acc.mul(self)
        return acc

    def invert(self, n: int, method: str = "newton") -> "TruncatedSeries":
        """Reciprocal to order n: mul(self, result) == 1 + O(q^n)."""
        if self.min_exp != 0:
            raise NotInvertibleError(
                f"invert requires min_exp 0, got {self.min_exp}"
            )
        if n < 1:
            raise DomainError("inversion order must be >= 1")
        if n > self.order:
            raise TruncationError(
                f"inversion to order {n} needs operand order >= {n},"
                f" have {self.order}"
            )
        if not self._c or not self.ring.is_unit(self._c[0]):
            raise NotInvertibleError(
                "constant term is not a unit in the coefficient ring"
            )
        if method == "naive":
            c = kernels.invert_naive(self._c, n, self.ring.w)
        elif self.ring.is_exact:
            c = kernels.invert_exact(self._c, n)
        else:
            c = kernels.invert_mod(self._c, n, self.ring.w)
        return TruncatedSeries(self.ring, 0, c)

    # -- structural operations ---------------------------------------------

    def extract(self, m, j: int | None = None) -> "TruncatedSeries":
        """Keep exponents congruent to j mod m and replace q^m by q."""
        if isinstance(m, ProgressionSelector):
            sel = m
        else:
            sel = ProgressionSelector(m, 0 if j is None else j)
        if self.min_exp < 0:
            raise DomainError("extract requires min_exp >= 0")
        new_order = _ceil_div(self.order - sel.j, sel.m)
        new_min = max(0, _ceil_div(self.min_exp - sel.j, sel.m))
        out = []
        for n in range(new_min, max(new_order, new_min)):
            e = sel.m * n + sel.j
            out.append(self._c[e - self.min_exp] if e >= self.min_exp else 0)
        return TruncatedSeries(self.ring, new_min, out)

    def inflate(self, m: int) -> "TruncatedSeries":
        """Replace q by q^m."""
        if m < 1:
            raise DomainError("inflation factor must be positive")
        if m == 1:
            return self
        out = [0] * (m * len(self._c))
        for i, v in enumerate(self._c):
            out[m * i] = v
        return TruncatedSeries(self.ring, m * self.min_exp, out)

    def shift(self, d: int) -> "TruncatedSeries":
        """Multiply by q^d."""
        if d == 0:
            return self
        return TruncatedSeries(self.ring, self.min_exp + d, list(self._c))

    def reduce_mod(self, w: int) -> "TruncatedSeries":
        if not self.ring.is_exact:
            raise RingMismatchError("reduce_mod applies to exact series")
        return TruncatedSeries(mod2w(w), self.min_exp, self._c)

    def truncated(self, n: int) -> "TruncatedSeries":
        """Restrict the known window to order n (n <= order)."""
        if n > self.order:
            raise TruncationError(
                f"cannot extend window: have order {self.order}, asked {n}"
            )
        if n >= self.order:
            return self
        keep = max(n - self.min_exp, 0)
        return TruncatedSeries(self.ring, min(self.min_exp, n), self._c[:keep])

    # -- comparison ----------------------------------------------------------

    def eq_upto(self, other: "TruncatedSeries", n: int) -> EqReport:
        """Compare coefficients at all exponents below n; loud on short windows."""
        self._require_same_ring(other)
        if n > self.order or n > other.order:
            raise TruncationError(
                f"comparison to order {n} exceeds known orders"
                f" ({self.order}, {other.order})"
            )
        lo = min(self.min_exp, other.min_exp)
        for e in range(lo, n):
            a = self._c[e - self.min_exp] if e >= self.min_exp else 0
            b = other._c[e - other.min_exp] if e >= other.min_exp else 0
            if a != b:
                return EqReport(False, e, a, b)
        return EqReport(True)

    # -- operators ------------------------------------------------------------

    __add__ = add
    __sub__ = sub
    __neg__ = neg
    __mul__ = mul
    __pow__ = pow


def make_series(ring: Ring, min_exp: int, coeffs: list[int]) -> TruncatedSeries:
    """Build a series from an explicit coefficient window."""
    if not coeffs:
        raise DomainError("coefficient list must be nonempty")
    return TruncatedSeries(ring, min_exp, list(coeffs))


def zero_series(ring: Ring, order: int) -> TruncatedSeries:
    return TruncatedSeries(ring, 0, [0] * max(order, 0))


def one_series(ring: Ring, order: int) -> TruncatedSeries:
    c = [0] * max(order, 1)
    c[0] = 1
    return TruncatedSeries(ring, 0, c)


def monomial_series(ring: Ring, sign: int, exp: int, order: int) -> TruncatedSeries:
    """sign * q^exp as a window [0, order); zero window if exp >= order."""
    c = [0] * max(order, 0)
    if 0 <= exp < order:
        c[exp] = sign
    return TruncatedSeries(ring, 0, c)
