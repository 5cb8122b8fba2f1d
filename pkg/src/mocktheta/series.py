"""Truncated formal power series in q with exact integer coefficients.

A ``Series`` of order N is known modulo q^(N+1).  Univariate series hold
plain ints; bivariate series hold ``AlphaPoly`` coefficients (polynomials in
a second variable, written ``a`` in text output).  Binary operations demand
equal orders and equal arity so precision is never lost silently; use
``truncate`` and ``as_bivariate`` to adjust explicitly.

All the named builders (``mock_f``, ``theta_gauss``, the Pochhammer
wrappers, the signed interpretation sums) live here as well.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator, Sequence

from .partitions import PartitionClass, enumerate_class, rank

PolyLike = "int | AlphaPoly"


class AlphaPoly:
    """Polynomial in the auxiliary variable with exact int coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", tuple(coeffs[:end]))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def at_one(self) -> int:
        return sum(self.coeffs)

    def shift(self, powers: int) -> "AlphaPoly":
        if not self.coeffs:
            return self
        return AlphaPoly((0,) * powers + self.coeffs)

    @staticmethod
    def _coerce(value: "int | AlphaPoly") -> "AlphaPoly":
        if isinstance(value, AlphaPoly):
            return value
        return AlphaPoly((value,))

    def __add__(self, other: "int | AlphaPoly") -> "AlphaPoly":
        o = self._coerce(other)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, v in enumerate(b):
            merged[i] += v
        return AlphaPoly(merged)

    __radd__ = __add__

    def __neg__(self) -> "AlphaPoly":
        return AlphaPoly(tuple(-v for v in self.coeffs))

    def __sub__(self, other: "int | AlphaPoly") -> "AlphaPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "AlphaPoly":
        return self._coerce(other) + (-self)

    def __mul__(self, other: "int | AlphaPoly") -> "AlphaPoly":
        if isinstance(other, int):
            return AlphaPoly(tuple(other * v for v in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return AlphaPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    out[i + j] += u * v
        return AlphaPoly(out)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        if isinstance(other, AlphaPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"AlphaPoly({self.coeffs})"


_POLY_ONE = AlphaPoly((1,))


class Series:
    """Truncated power series; coefficient ``coeffs[j]`` belongs to q^j."""

    __slots__ = ("order", "coeffs", "bivariate")

    def __init__(self, coeffs: Sequence[int | AlphaPoly], *, bivariate: bool = False):
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        if bivariate or any(isinstance(c, AlphaPoly) for c in coeffs):
            norm = tuple(AlphaPoly._coerce(c) for c in coeffs)
            bivariate = True
        else:
            norm = tuple(coeffs)
        self.order = len(norm) - 1
        self.coeffs = norm
        self.bivariate = bivariate

    @classmethod
    def zero(cls, order: int, *, bivariate: bool = False) -> "Series":
        return cls([0] * (order + 1), bivariate=bivariate)

    @classmethod
    def one(cls, order: int, *, bivariate: bool = False) -> "Series":
        return cls([1] + [0] * order, bivariate=bivariate)

    @classmethod
    def term(cls, coeff: int, q_pow: int, order: int, *, alpha_pow: int = 0) -> "Series":
        """coeff * a^alpha_pow * q^q_pow, truncated to ``order``."""
        coeffs: list[int | AlphaPoly] = [0] * (order + 1)
        if q_pow <= order:
            value: int | AlphaPoly = coeff
            if alpha_pow:
                value = AlphaPoly((0,) * alpha_pow + (coeff,))
            coeffs[q_pow] = value
        return cls(coeffs, bivariate=alpha_pow > 0)

    def coefficient(self, j: int) -> int | AlphaPoly:
        return self.coeffs[j]

    def _check(self, other: "Series") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} != {other.order}")
        if self.bivariate != other.bivariate:
            raise ValueError("cannot mix univariate and bivariate series; lift explicitly")

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], bivariate=self.bivariate)

    def __sub__(self, other: "Series") -> "Series":
        self._check(other)
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)], bivariate=self.bivariate)

    def __neg__(self) -> "Series":
        return Series([-a for a in self.coeffs], bivariate=self.bivariate)

    def __mul__(self, other: "Series") -> "Series":
        self._check(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        out: list[int | AlphaPoly] = [0] * (n + 1)
        for i, u in enumerate(a):
            if not u:
                continue
            for j in range(n + 1 - i):
                v = b[j]
                if v:
                    out[i + j] = out[i + j] + u * v
        return Series(out, bivariate=self.bivariate)

    def scale(self, factor: int | AlphaPoly) -> "Series":
        if isinstance(factor, AlphaPoly) and not self.bivariate:
            raise ValueError("cannot scale a univariate series by a polynomial")
        return Series([c * factor for c in self.coeffs], bivariate=self.bivariate)

    def __rmul__(self, factor: int) -> "Series":
        return self.scale(factor)

    def reciprocal(self) -> "Series":
        """Multiplicative inverse; the constant term must be exactly 1."""
        c0 = self.coeffs[0]
        if not (c0 == 1):
            raise ValueError("reciprocal requires constant term 1")
        n = self.order
        a = self.coeffs
        one: int | AlphaPoly = _POLY_ONE if self.bivariate else 1
        inv: list[int | AlphaPoly] = [one] + [0] * n
        for k in range(1, n + 1):
            acc: int | AlphaPoly = 0
            for i in range(1, k + 1):
                if a[i]:
                    acc = acc + a[i] * inv[k - i]
            inv[k] = -acc if acc else (AlphaPoly() if self.bivariate else 0)
        return Series(inv, bivariate=self.bivariate)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[: order + 1], bivariate=self.bivariate)

    def as_bivariate(self) -> "Series":
        if self.bivariate:
            return self
        return Series(self.coeffs, bivariate=True)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __repr__(self) -> str:
        kind = "bi" if self.bivariate else "uni"
        return f"Series(order={self.order}, {kind}, {render_series(self)!r})"


def twist_q_negate(s: Series) -> Series:
    """Flip the sign of every odd-power coefficient (the q -> -q substitution)."""
    return Series(
        [c if j % 2 == 0 else -c for j, c in enumerate(s.coeffs)],
        bivariate=s.bivariate,
    )


def substitute_alpha(s: Series, target: str) -> Series:
    """Specialize the auxiliary variable: 'one' sets a=1, 'q' maps a^i q^j to q^(i+j)."""
    if not s.bivariate:
        raise ValueError("substitution only applies to bivariate series")
    n = s.order
    if target == "one":
        return Series([c.at_one() for c in s.coeffs])
    if target == "q":
        out = [0] * (n + 1)
        for j, poly in enumerate(s.coeffs):
            for i, v in enumerate(poly.coeffs):
                if v and i + j <= n:
                    out[i + j] += v
        return Series(out)
    raise ValueError(f"unknown substitution target {target!r}")


# ---------------------------------------------------------------------------
# Pochhammer products
# ---------------------------------------------------------------------------

FactorSpec = tuple[int, int, int]  # (sign, alpha power, q power) -> 1 + sign*a^i*q^b


def geometric_factors(sign: int, alpha_pow: int, first_q: int, q_step: int,
                      count: int | None = None) -> Iterator[FactorSpec]:
    """Factor family (1 + sign*a^i*q^(first_q + k*q_step)) for k = 0, 1, ..."""
    indices = range(count) if count is not None else itertools.count()
    return ((sign, alpha_pow, first_q + k * q_step) for k in indices)


def pochhammer(factors: Iterable[FactorSpec], order: int, *, bivariate: bool = False) -> Series:
    """Exact truncated product of factors (1 + s*a^i*q^b).

    Factor streams must be nondecreasing in the q power; production stops at
    the first factor whose q power exceeds the order, so infinite families
    are safe.
    """
    if bivariate:
        coeffs: list[int | AlphaPoly] = [_POLY_ONE] + [AlphaPoly()] * order
    else:
        coeffs = [1] + [0] * order
    for sign, alpha_pow, q_pow in factors:
        if q_pow > order:
            break
        if q_pow < 1:
            raise ValueError("factor q powers must be positive")
        if alpha_pow and not bivariate:
            raise ValueError("alpha powers require a bivariate product")
        if alpha_pow:
            for j in range(order, q_pow - 1, -1):
                base = coeffs[j - q_pow]
                if base:
                    coeffs[j] = coeffs[j] + (base * sign).shift(alpha_pow)
        else:
            for j in range(order, q_pow - 1, -1):
                base = coeffs[j - q_pow]
                if base:
                    coeffs[j] = coeffs[j] + sign * base
    return Series(coeffs, bivariate=bivariate)


def qq_inf(order: int) -> Series:
    """(q;q)_inf."""
    return pochhammer(geometric_factors(-1, 0, 1, 1), order)


def negq_inf(order: int) -> Series:
    """(-q;q)_inf."""
    return pochhammer(geometric_factors(1, 0, 1, 1), order)


def negq_n(n: int, order: int) -> Series:
    """(-q;q)_n."""
    return pochhammer(geometric_factors(1, 0, 1, 1, n), order)


def negq2_q2_n(n: int, order: int) -> Series:
    """(-q^2;q^2)_n."""
    return pochhammer(geometric_factors(1, 0, 2, 2, n), order)


def q_q2_n(n: int, order: int) -> Series:
    """(q;q^2)_n."""
    return pochhammer(geometric_factors(-1, 0, 1, 2, n), order)


def neg_alphaq_inf(order: int) -> Series:
    """(-aq;q)_inf."""
    return pochhammer(geometric_factors(1, 1, 1, 1), order, bivariate=True)


def neg_alpha_inf(order: int) -> Series:
    """(-a;q)_inf = (1+a) * (-aq;q)_inf."""
    series = neg_alphaq_inf(order)
    return series + series.scale(AlphaPoly((0, 1)))


def neg_alphaq_n(n: int, order: int) -> Series:
    """(-aq;q)_n."""
    return pochhammer(geometric_factors(1, 1, 1, 1, n), order, bivariate=True)


def neg_alphaq2_q2_n(n: int, order: int) -> Series:
    """(-aq^2;q^2)_n."""
    return pochhammer(geometric_factors(1, 1, 2, 2, n), order, bivariate=True)


def neg_alphaq_q2_n(n: int, order: int) -> Series:
    """(-aq;q^2)_n."""
    return pochhammer(geometric_factors(1, 1, 1, 2, n), order, bivariate=True)


def alphaq_q2_n(n: int, order: int) -> Series:
    """(aq;q^2)_n."""
    return pochhammer(geometric_factors(-1, 1, 1, 2, n), order, bivariate=True)


# ---------------------------------------------------------------------------
# Mock theta builders (direct summation; the n-th summand starts at q^(n*n))
# ---------------------------------------------------------------------------

def mock_f(order: int) -> Series:
    """f(q) = sum q^(n^2) / (-q;q)_n^2."""
    acc = Series.zero(order)
    for n in range(math.isqrt(order) + 1):
        block = negq_n(n, order).reciprocal()
        acc = acc + Series.term(1, n * n, order) * block * block
    return acc


def mock_phi(order: int) -> Series:
    """phi(q) = sum q^(n^2) / (-q^2;q^2)_n."""
    acc = Series.zero(order)
    for n in range(math.isqrt(order) + 1):
        acc = acc + Series.term(1, n * n, order) * negq2_q2_n(n, order).reciprocal()
    return acc


def mock_psi(order: int) -> Series:
    """psi(q) = sum over n >= 1 of q^(n^2) / (q;q^2)_n."""
    acc = Series.zero(order)
    for n in range(1, math.isqrt(order) + 1):
        acc = acc + Series.term(1, n * n, order) * q_q2_n(n, order).reciprocal()
    return acc


def theta_gauss(order: int) -> Series:
    """One-sided square sum: sum over k >= 1 of (-1)^k q^(k^2)."""
    coeffs = [0] * (order + 1)
    for k in range(1, math.isqrt(order) + 1):
        coeffs[k * k] = -1 if k % 2 else 1
    return Series(coeffs)


def theta_gauss_two_sided(order: int) -> Series:
    """Two-sided square sum 1 + 2 * sum over k >= 1 of (-1)^k q^(k^2)."""
    return Series.one(order) + 2 * theta_gauss(order)


def mock_f_alpha(order: int, twisted: bool = False) -> Series:
    """f(aq;q) = sum a^n q^(n^2) / ((-q;q)_n (-aq;q)_n); its twist is itself."""
    acc = Series.zero(order, bivariate=True)
    for n in range(math.isqrt(order) + 1):
        term = Series.term(1, n * n, order, alpha_pow=n)
        term = term * negq_n(n, order).as_bivariate().reciprocal()
        term = term * neg_alphaq_n(n, order).reciprocal()
        acc = acc + term
    return acc


def mock_phi_alpha(order: int, twisted: bool = False) -> Series:
    """phi(aq;q), or with ``twisted`` the form phi(-aq;-q).

    Both sum q^(n^2) / (-aq^2;q^2)_n; the twist contributes (-1)^n.
    """
    acc = Series.zero(order, bivariate=True)
    for n in range(math.isqrt(order) + 1):
        sign = -1 if (twisted and n % 2) else 1
        acc = acc + Series.term(sign, n * n, order).as_bivariate() * \
            neg_alphaq2_q2_n(n, order).reciprocal()
    return acc


def mock_psi_alpha(order: int, twisted: bool = False) -> Series:
    """psi(aq;q), or with ``twisted`` the form psi(-aq;-q)."""
    acc = Series.zero(order, bivariate=True)
    for n in range(1, math.isqrt(order) + 1):
        if twisted:
            sign = -1 if n % 2 else 1
            block = neg_alphaq_q2_n(n, order)
        else:
            sign = 1
            block = alphaq_q2_n(n, order)
        acc = acc + Series.term(sign, n * n, order).as_bivariate() * block.reciprocal()
    return acc


# ---------------------------------------------------------------------------
# Signed interpretation sums (exhaustive enumeration over partition classes)
# ---------------------------------------------------------------------------

INTERPRETATIONS = ("INT_F", "INT_PHI", "INT_PSI", "INT_F_G", "INT_PHI_G", "INT_PSI_G")


def signed_interpretation(interp: str, order: int) -> Series:
    """Partition-sum forms of the mock theta functions.

    INT_F    1 + sum over nonempty partitions of (-1)^rank q^size
    INT_PHI  1 + sum over distinct-odd partitions of (-1)^((largest+1)/2) q^size
    INT_PSI  sum over nonempty gap-free odd partitions of (-1)^length q^size
    The _G variants add the weights a^largest, a^((largest+1)/2 - length) and
    a^(length - (largest+1)/2) respectively.
    """
    if interp not in INTERPRETATIONS:
        raise ValueError(f"unknown interpretation {interp!r}")
    generalized = interp.endswith("_G")
    coeffs: list[int | AlphaPoly] = [AlphaPoly() if generalized else 0] * (order + 1)
    coeffs = list(coeffs)

    if interp in ("INT_F", "INT_F_G"):
        coeffs[0] = _POLY_ONE if generalized else 1
        for n in range(1, order + 1):
            acc: int | AlphaPoly = 0
            for lam in enumerate_class(PartitionClass.P, n):
                sign = -1 if rank(lam) % 2 else 1
                acc = acc + (AlphaPoly((0,) * lam.largest + (sign,)) if generalized else sign)
            coeffs[n] = acc
    elif interp in ("INT_PHI", "INT_PHI_G"):
        coeffs[0] = _POLY_ONE if generalized else 1
        for n in range(1, order + 1):
            acc = 0
            for lam in enumerate_class(PartitionClass.DO, n):
                half = (lam.largest + 1) // 2
                sign = -1 if half % 2 else 1
                if generalized:
                    exp = half - lam.length
                    assert exp >= 0
                    acc = acc + AlphaPoly((0,) * exp + (sign,))
                else:
                    acc = acc + sign
            coeffs[n] = acc
    else:
        for n in range(1, order + 1):
            acc = 0
            for lam in enumerate_class(PartitionClass.OC, n):
                if lam.is_empty:
                    continue
                sign = -1 if lam.length % 2 else 1
                if generalized:
                    exp = lam.length - (lam.largest + 1) // 2
                    assert exp >= 0
                    acc = acc + AlphaPoly((0,) * exp + (sign,))
                else:
                    acc = acc + sign
            coeffs[n] = acc
    return Series(coeffs, bivariate=generalized)


# ---------------------------------------------------------------------------
# Rendering and JSON
# ---------------------------------------------------------------------------

def _render_poly(poly: AlphaPoly, symbol: str) -> str:
    pieces: list[str] = []
    for i, c in enumerate(poly.coeffs):
        if c == 0:
            continue
        if i == 0:
            body = str(c)
        else:
            var = symbol if i == 1 else f"{symbol}^{i}"
            if c == 1:
                body = var
            elif c == -1:
                body = f"-{var}"
            else:
                body = f"{c}{var}"
        if pieces and not body.startswith("-"):
            pieces.append(f"+ {body}")
        elif pieces:
            pieces.append(f"- {body[1:]}")
        else:
            pieces.append(body)
    return " ".join(pieces) if pieces else "0"


def render_series(s: Series, symbol: str = "a") -> str:
    """Human-readable form, q powers ascending, polynomials parenthesized."""
    pieces: list[str] = []
    for j, c in enumerate(s.coeffs):
        if not c:
            continue
        qpart = "" if j == 0 else ("q" if j == 1 else f"q^{j}")
        if isinstance(c, AlphaPoly) and not c.is_constant:
            body = f"({_render_poly(c, symbol)}){qpart}" if qpart else f"({_render_poly(c, symbol)})"
            sign = "+"
        else:
            value = c.constant() if isinstance(c, AlphaPoly) else c
            sign = "-" if value < 0 else "+"
            mag = abs(value)
            if not qpart:
                body = str(mag)
            elif mag == 1:
                body = qpart
            else:
                body = f"{mag}{qpart}"
        if not pieces:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f"{sign} {body}")
    return " ".join(pieces) if pieces else "0"


def series_to_json(s: Series) -> dict:
    """JSON shape {order, coeffs}; bivariate coefficients as arrays, constant first."""
    if s.bivariate:
        coeffs = [list(c.coeffs) if c.coeffs else [0] for c in s.coeffs]
    else:
        coeffs = list(s.coeffs)
    return {"order": s.order, "coeffs": coeffs}
