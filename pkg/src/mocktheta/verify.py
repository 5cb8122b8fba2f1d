"""Registry of the q-series identities and coefficient-exact verification.

Every identity pairs a left and a right builder that flow through disjoint
construction paths, so no side is ever compared against itself:

  R1, R2        twisted direct sums for phi, psi   vs  direct sum for f / eta quotient
  GAUSS         two-sided square sum               vs  (q;q)inf / (-q;q)inf
  FINE_MID      alternating Pochhammer-quotient sum vs direct sum for f
  FINE_RIGHT    tail-product transform of the same  vs direct sum for f
  PI1..PI3,     series products                    vs  enumeration-derived
  ADD1, ADD2,                                          partition counts
  BP
  RG1, RG2      bivariate twisted sums             vs  bivariate f / eta quotient
  PI1G..PI3G    bivariate series products          vs  alpha-weighted counts
  INT_*         partition-sum interpretations      vs  direct summation builders
  SPEC_A1_*     bivariate sums specialized at a=1  vs  univariate twisted sums

Orders are capped per identity where the enumeration side grows too fast
(the INT_* family); everything else verifies at the requested order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import involutions as inv
from . import series as qs
from .partitions import PartitionClass, distinct_part_profile, enumerate_class
from .series import AlphaPoly, Series


@dataclass(frozen=True)
class Identity:
    tag: str
    bivariate: bool
    left: Callable[[int], Series]
    right: Callable[[int], Series]
    cap: int | None = None


@dataclass
class VerifyReport:
    id: str
    order: int
    passed: bool
    first_mismatch: tuple[int, str, str] | None
    elapsed: float

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out: dict = {
            "id": self.id,
            "order": self.order,
            "status": self.status,
            "elapsed_ms": round(self.elapsed * 1000.0, 3),
        }
        if self.first_mismatch is not None:
            power, left, right = self.first_mismatch
            out["first_mismatch"] = {"power": power, "left": left, "right": right}
        return out


def _pdo_counts(order: int) -> Series:
    """sum of pdo(n) q^n from the exhaustive distinct-partition walk."""
    profile = distinct_part_profile(order)
    return Series([0] + list(profile.pdo[1:]))


def _pdo_even_counts(order: int) -> Series:
    profile = distinct_part_profile(order)
    return Series([0] + list(profile.pdo_even_length[1:]))


def _pdo_odd_counts(order: int) -> Series:
    profile = distinct_part_profile(order)
    return Series([0] + list(profile.pdo_odd_length[1:]))


def _bp_difference(order: int) -> Series:
    profile = distinct_part_profile(order)
    coeffs = [e - o for e, o in zip(profile.pdo_even_length, profile.pdo_odd_length)]
    return Series(coeffs)


def _pdo_alpha_weighted(order: int) -> Series:
    """sum over odd-smallest distinct partitions of a^length q^size."""
    coeffs: list[AlphaPoly] = [AlphaPoly() for _ in range(order + 1)]
    for n in range(1, order + 1):
        acc: dict[int, int] = {}
        for p in enumerate_class(PartitionClass.PDO, n):
            acc[p.length] = acc.get(p.length, 0) + 1
        if acc:
            poly = [0] * (max(acc) + 1)
            for exp, count in acc.items():
                poly[exp] = count
            coeffs[n] = AlphaPoly(poly)
    return Series(coeffs, bivariate=True)


def _phi_neg(order: int) -> Series:
    return qs.twist_q_negate(qs.mock_phi(order))


def _psi_neg(order: int) -> Series:
    return qs.twist_q_negate(qs.mock_psi(order))


def _fine_mid(order: int) -> Series:
    acc = Series.one(order)
    for k in range(1, order + 1):
        sign = 1 if k % 2 else -1
        acc = acc + Series.term(sign, k, order) * qs.negq_n(k, order).reciprocal()
    return acc


def _fine_right(order: int) -> Series:
    tail = Series.zero(order)
    for k in range(1, order + 1):
        sign = 1 if k % 2 else -1
        shifted = qs.pochhammer(qs.geometric_factors(1, 0, k + 1, 1), order)
        tail = tail + Series.term(sign, k, order) * shifted
    return Series.one(order) + qs.negq_inf(order).reciprocal() * tail


def _eta_quotient_squared(order: int) -> Series:
    block = qs.negq_inf(order).reciprocal()
    return qs.qq_inf(order) * block * block


def _one_plus_alpha() -> AlphaPoly:
    return AlphaPoly((1, 1))


def _rg_left(order: int, relative_sign: int) -> Series:
    phi_part = qs.mock_phi_alpha(order, twisted=True)
    psi_part = qs.mock_psi_alpha(order, twisted=True).scale(_one_plus_alpha())
    return phi_part + psi_part.scale(relative_sign)


def _rg2_right(order: int) -> Series:
    uni = qs.qq_inf(order) * qs.negq_inf(order).reciprocal()
    return uni.as_bivariate() * qs.neg_alphaq_inf(order).reciprocal()


def _theta_bi(order: int) -> Series:
    return qs.theta_gauss(order).as_bivariate()


_REGISTRY_ITEMS: list[Identity] = [
    Identity("R1", False,
             lambda n: _phi_neg(n) - 2 * _psi_neg(n),
             lambda n: qs.mock_f(n)),
    Identity("R2", False,
             lambda n: _phi_neg(n) + 2 * _psi_neg(n),
             _eta_quotient_squared),
    Identity("GAUSS", False,
             lambda n: qs.theta_gauss_two_sided(n),
             lambda n: qs.qq_inf(n) * qs.negq_inf(n).reciprocal()),
    Identity("FINE_MID", False, _fine_mid, lambda n: qs.mock_f(n)),
    Identity("FINE_RIGHT", False, _fine_right, lambda n: qs.mock_f(n)),
    Identity("PI1", False,
             lambda n: qs.negq_inf(n) * qs.mock_f(n),
             lambda n: Series.one(n) + 2 * _pdo_counts(n)),
    Identity("ADD1", False,
             lambda n: qs.negq_inf(n) * _phi_neg(n),
             lambda n: Series.one(n) + _pdo_counts(n) + qs.theta_gauss(n)),
    Identity("ADD2", False,
             lambda n: 2 * (qs.negq_inf(n) * _psi_neg(n)),
             lambda n: -_pdo_counts(n) + qs.theta_gauss(n)),
    Identity("BP", False, _bp_difference, lambda n: qs.theta_gauss(n)),
    Identity("PI2", False,
             lambda n: qs.negq_inf(n) * _phi_neg(n),
             lambda n: Series.one(n) + 2 * _pdo_even_counts(n)),
    Identity("PI3", False,
             lambda n: qs.negq_inf(n) * _psi_neg(n),
             lambda n: -_pdo_odd_counts(n)),
    Identity("RG1", True,
             lambda n: _rg_left(n, -1),
             lambda n: qs.mock_f_alpha(n)),
    Identity("RG2", True,
             lambda n: _rg_left(n, 1),
             _rg2_right),
    Identity("PI1G", True,
             lambda n: qs.neg_alphaq_inf(n) * qs.mock_f_alpha(n),
             lambda n: Series.one(n, bivariate=True) + 2 * _pdo_alpha_weighted(n)),
    Identity("PI2G", True,
             lambda n: qs.neg_alphaq_inf(n) * qs.mock_phi_alpha(n, twisted=True),
             lambda n: Series.one(n, bivariate=True) + _pdo_alpha_weighted(n) + _theta_bi(n)),
    Identity("PI3G", True,
             lambda n: qs.neg_alpha_inf(n) * qs.mock_psi_alpha(n, twisted=True),
             lambda n: -_pdo_alpha_weighted(n) + _theta_bi(n)),
    Identity("INT_F", False,
             lambda n: qs.signed_interpretation("INT_F", n),
             lambda n: qs.mock_f(n), cap=40),
    Identity("INT_PHI", False,
             lambda n: qs.signed_interpretation("INT_PHI", n),
             _phi_neg, cap=40),
    Identity("INT_PSI", False,
             lambda n: qs.signed_interpretation("INT_PSI", n),
             _psi_neg, cap=40),
    Identity("INT_F_G", True,
             lambda n: qs.signed_interpretation("INT_F_G", n),
             lambda n: qs.mock_f_alpha(n), cap=25),
    Identity("INT_PHI_G", True,
             lambda n: qs.signed_interpretation("INT_PHI_G", n),
             lambda n: qs.mock_phi_alpha(n, twisted=True), cap=25),
    Identity("INT_PSI_G", True,
             lambda n: qs.signed_interpretation("INT_PSI_G", n),
             lambda n: qs.mock_psi_alpha(n, twisted=True), cap=25),
    Identity("SPEC_A1_R1", True,
             lambda n: qs.substitute_alpha(_rg_left(n, -1), "one"),
             lambda n: _phi_neg(n) - 2 * _psi_neg(n)),
    Identity("SPEC_A1_R2", True,
             lambda n: qs.substitute_alpha(_rg_left(n, 1), "one"),
             lambda n: _phi_neg(n) + 2 * _psi_neg(n)),
]

REGISTRY: dict[str, Identity] = {item.tag: item for item in _REGISTRY_ITEMS}
ALL_IDENTITY_TAGS = tuple(REGISTRY)


def _describe(value) -> str:
    if isinstance(value, AlphaPoly):
        return str(tuple(value.coeffs))
    return str(value)


def verify(tag: str, order: int) -> VerifyReport:
    """Build both sides independently and compare every coefficient."""
    if tag not in REGISTRY:
        raise ValueError(f"unknown identity {tag!r}")
    if order < 1:
        raise ValueError("order must be at least 1")
    identity = REGISTRY[tag]
    effective = min(order, identity.cap) if identity.cap else order
    start = time.perf_counter()
    left = identity.left(effective)
    right = identity.right(effective)
    mismatch: tuple[int, str, str] | None = None
    for j in range(effective + 1):
        if left.coeffs[j] != right.coeffs[j]:
            mismatch = (j, _describe(left.coeffs[j]), _describe(right.coeffs[j]))
            break
    elapsed = time.perf_counter() - start
    return VerifyReport(tag, effective, mismatch is None, mismatch, elapsed)


def verify_all(order_uni: int, order_bi: int) -> list[VerifyReport]:
    """Run every registered identity at the arity-appropriate order."""
    return [
        verify(tag, order_bi if REGISTRY[tag].bivariate else order_uni)
        for tag in ALL_IDENTITY_TAGS
    ]


def cancellation_check(which: str, n: int) -> VerifyReport:
    """Single-coefficient involution check at size n.

    The alpha-weighted signed sum over the full domain must equal the same
    sum restricted to excluded and surviving elements, since paired elements
    cancel two by two.
    """
    start = time.perf_counter()
    full = inv.signed_domain_sum(which, n)
    leftovers = inv.excluded_survivor_sum(which, n)
    elapsed = time.perf_counter() - start
    mismatch = None if full == leftovers else (n, _describe(full), _describe(leftovers))
    return VerifyReport(f"cancel-{which}", n, mismatch is None, mismatch, elapsed)


def involution_series_coefficient(which: str, n: int, order: int) -> AlphaPoly:
    """Coefficient of q^n in the analytic form of each involution's domain sum.

    upsilon: (-aq;q)inf * f(aq;q)
    phi:     (-aq;q)inf * (phi(-aq;-q) - 1) ... minus the distinct-part layer
    psi:     (-a;q)inf * psi(-aq;-q)
    Built purely from series arithmetic, independent of the enumeration path.
    """
    if n > order:
        raise ValueError("coefficient index beyond series order")
    if which == "upsilon":
        series = qs.neg_alphaq_inf(order) * qs.mock_f_alpha(order)
    elif which == "phi":
        poch = qs.neg_alphaq_inf(order)
        series = poch * qs.mock_phi_alpha(order, twisted=True) - poch
    elif which == "psi":
        series = qs.neg_alpha_inf(order) * qs.mock_psi_alpha(order, twisted=True)
    else:
        raise ValueError(f"unknown involution {which!r}")
    return series.coeffs[n]
