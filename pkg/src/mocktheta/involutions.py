"""Three sign-reversing involutions on bipartition classes, with audits.

Each map acts on pairs (lam, mu) of total size n and either pairs the input
with another domain element (flipping the relevant sign statistic while
preserving size and a conserved alpha statistic), or marks it as excluded /
surviving.  The unmatched elements produce the right-hand sides of the
partition identities, which is what the audits verify exhaustively:

  upsilon  domain P x D;      sign (-1)^rank(lam);        conserves largest(lam) + len(mu)
  phi      domain DO x D;     sign (-1)^((lam1+1)/2);     conserves (lam1+1)/2 - len(lam) + len(mu)
  psi      domain OC x D0;    sign (-1)^len(lam);         conserves len(lam) - (lam1+1)/2 + len0(mu)

(len0 counts the zero part.)  For phi and psi the first component must be
nonempty.  Case labels are stable strings; paired elements always map back
under the complementary label.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .partitions import (
    ABSENT,
    Bipartition,
    Partition,
    PartitionClass,
    enumerate_class,
    format_partition,
    is_member,
    is_staircase,
    rank,
    smallest_repeated_part,
    staircase,
    stats,
)
from .series import AlphaPoly

INVOLUTIONS = ("upsilon", "phi", "psi")


class OutcomeKind(Enum):
    PAIRED = "paired"
    EXCLUDED = "excluded"
    SURVIVOR = "survivor"


@dataclass(frozen=True)
class MapOutcome:
    kind: OutcomeKind
    case_label: str
    image: Bipartition | None = None
    companion: Partition | None = None


@dataclass
class AuditReport:
    n: int
    domain_size: int = 0
    paired_count: int = 0
    excluded_counts: dict[str, int] = field(default_factory=dict)
    survivor_count: int = 0
    violations: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


_COMPLEMENT = {
    "V-1": "V-2", "V-2": "V-1",
    "U-merge": "U-split", "U-split": "U-merge",
    "I-a": "I-b", "I-b": "I-a",
    "II-a": "II-b", "II-b": "II-a",
    "III-a": "III-b", "III-b": "III-a",
}


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def upsilon(bp: Bipartition) -> MapOutcome:
    """Rank-parity pairing on plain x distinct bipartitions.

    Away from the flat inputs the map trades the smallest part of mu against
    the multiplicity of the largest part of lam.  Inputs (empty, mu) and
    (all ones, mu with smallest part beyond the length) are handled by
    collapsing or expanding runs of ones; those with an odd part survive and
    carry the merged distinct partition (odd smallest part) as companion.
    """
    lam, mu = bp.first, bp.second
    _require(not lam.has_zero, "first component must have no zero part")
    _require(is_member(mu, PartitionClass.D), f"{mu} is not a distinct-parts partition")

    if lam.is_empty:
        if mu.is_empty:
            return MapOutcome(OutcomeKind.SURVIVOR, "U-survivor-empty")
        s = mu.parts[-1]
        if s % 2:
            return MapOutcome(OutcomeKind.SURVIVOR, "U-survivor-merged", companion=mu)
        ones = Partition((1,) * s)
        return MapOutcome(OutcomeKind.PAIRED, "U-split",
                          image=Bipartition(ones, mu.remove_part(s)))

    all_ones = lam.largest == 1
    k = lam.length
    if all_ones and mu.smallest > k:
        merged = mu.add_part(k)
        if k % 2:
            return MapOutcome(OutcomeKind.SURVIVOR, "U-survivor-ones", companion=merged)
        return MapOutcome(OutcomeKind.PAIRED, "U-merge",
                          image=Bipartition(Partition(), merged))

    s = mu.smallest
    m = stats(lam).m
    if s <= m:
        s = int(s)
        grown = tuple(v + 1 if i < s else v for i, v in enumerate(lam.parts))
        return MapOutcome(OutcomeKind.PAIRED, "V-1",
                          image=Bipartition(Partition(grown), mu.remove_part(s)))
    assert lam.largest >= 2, "flat first components never reach V-2"
    shrunk = tuple(v - 1 if i < m else v for i, v in enumerate(lam.parts))
    return MapOutcome(OutcomeKind.PAIRED, "V-2",
                      image=Bipartition(Partition(shrunk), mu.add_part(m)))


def phi(bp: Bipartition) -> MapOutcome:
    """Pairing on distinct-odd x distinct bipartitions.

    Part I trades the smallest even part of mu against twice the leading run
    of consecutive odd parts of lam.  Staircase inputs whose run cannot
    absorb the smallest even part fall through to Part II, which moves the
    bottom step in and out of mu.  Excluded: staircases with empty mu, and
    ((1), mu) whose smallest odd part merges with the extra 1 into a
    distinct partition with even smallest part (the companion).
    """
    lam, mu = bp.first, bp.second
    _require(not lam.is_empty and is_member(lam, PartitionClass.DO),
             f"{lam} is not a nonempty distinct-odd partition")
    _require(is_member(mu, PartitionClass.D), f"{mu} is not a distinct-parts partition")

    if mu.is_empty and is_staircase(lam):
        return MapOutcome(OutcomeKind.EXCLUDED, "excluded-staircase")

    mu_stats = stats(mu)
    s_o, s_e = mu_stats.s_o, mu_stats.s_e
    if lam.parts == (1,) and s_o + 1 < s_e:
        companion = mu.remove_part(int(s_o)).add_part(int(s_o) + 1)
        assert is_member(companion, PartitionClass.PDE)
        return MapOutcome(OutcomeKind.EXCLUDED, "excluded-merged", companion=companion)

    c = stats(lam).c
    if 2 * c >= s_e:
        j = int(s_e) // 2
        grown = tuple(v + 2 if i < j else v for i, v in enumerate(lam.parts))
        return MapOutcome(OutcomeKind.PAIRED, "I-a",
                          image=Bipartition(Partition(grown), mu.remove_part(int(s_e))))
    if lam.parts[c - 1] > 1:
        shrunk = tuple(v - 2 if i < c else v for i, v in enumerate(lam.parts))
        return MapOutcome(OutcomeKind.PAIRED, "I-b",
                          image=Bipartition(Partition(shrunk), mu.add_part(2 * c)))

    # Leading run ends at 1, so lam is exactly the staircase with c steps.
    k = c
    assert is_staircase(lam) and lam.length == k and s_e > 2 * k
    if s_e > s_o + (2 * k - 1):
        assert k >= 2, "k = 1 with a dominant even part is excluded above"
        new_mu = mu.remove_part(int(s_o)).add_part(int(s_o) + 2 * k - 1)
        return MapOutcome(OutcomeKind.PAIRED, "II-a",
                          image=Bipartition(staircase(k - 1), new_mu))
    leftover = int(s_e) - (2 * k + 1)
    assert 1 <= leftover < s_o
    new_mu = mu.remove_part(int(s_e)).add_part(leftover)
    return MapOutcome(OutcomeKind.PAIRED, "II-b",
                      image=Bipartition(lam.add_part(2 * k + 1), new_mu))


def psi(bp: Bipartition) -> MapOutcome:
    """Pairing on gap-free-odd x distinct-with-zero bipartitions.

    Part I trades the smallest odd part of mu against the smallest repeated
    part of lam (moving the smaller of the two keeps the map self-inverse).
    Staircases whose smallest odd mu-part exceeds the bottom step go to
    Parts II and III: II swaps the bottom step against the zero part, III
    merges or splits against the smallest even part.  Excluded: staircases
    with truly empty mu, and ((1), mu) whose smallest even part (possibly
    the zero part) merges with the extra 1 into a distinct partition with
    odd smallest part (the companion).
    """
    lam, mu = bp.first, bp.second
    _require(not lam.is_empty and is_member(lam, PartitionClass.OC),
             f"{lam} is not a nonempty gap-free odd partition")
    _require(is_member(mu, PartitionClass.D0), f"{mu} is not a distinct-parts partition")

    if mu.is_empty and is_staircase(lam):
        return MapOutcome(OutcomeKind.EXCLUDED, "excluded-staircase")

    mu_stats = stats(mu)
    s_o, s_e = mu_stats.s_o, mu_stats.s_e
    if lam.parts == (1,) and s_e + 1 < s_o:
        if mu.has_zero and s_e == 0:
            companion = mu.with_zero(False).add_part(1)
        else:
            companion = mu.remove_part(int(s_e)).add_part(int(s_e) + 1)
        assert is_member(companion, PartitionClass.PDO)
        return MapOutcome(OutcomeKind.EXCLUDED, "excluded-merged", companion=companion)

    k = lam.length
    if is_staircase(lam) and s_o > 2 * k - 1:
        if mu.has_zero:
            assert k >= 2, "k = 1 with a zero part is excluded above"
            new_mu = mu.with_zero(False).add_part(2 * k - 1)
            return MapOutcome(OutcomeKind.PAIRED, "II-a",
                              image=Bipartition(staircase(k - 1), new_mu))
        if s_o == 2 * k + 1:
            new_mu = mu.remove_part(2 * k + 1).with_zero(True)
            return MapOutcome(OutcomeKind.PAIRED, "II-b",
                              image=Bipartition(staircase(k + 1), new_mu))
        if s_o > s_e + (2 * k - 1):
            assert k >= 2, "k = 1 with a dominant odd part is excluded above"
            new_mu = mu.remove_part(int(s_e)).add_part(int(s_e) + 2 * k - 1)
            return MapOutcome(OutcomeKind.PAIRED, "III-a",
                              image=Bipartition(staircase(k - 1), new_mu))
        leftover = int(s_o) - (2 * k + 1)
        assert 2 <= leftover < s_e and leftover % 2 == 0
        new_mu = mu.remove_part(int(s_o)).add_part(leftover)
        return MapOutcome(OutcomeKind.PAIRED, "III-b",
                          image=Bipartition(lam.add_part(2 * k + 1), new_mu))

    repeated = smallest_repeated_part(lam)
    if s_o > repeated:
        v = int(repeated)
        return MapOutcome(OutcomeKind.PAIRED, "I-a",
                          image=Bipartition(lam.remove_part(v), mu.add_part(v)))
    w = int(s_o)
    return MapOutcome(OutcomeKind.PAIRED, "I-b",
                      image=Bipartition(lam.add_part(w), mu.remove_part(w)))


_MAPS = {"upsilon": upsilon, "phi": phi, "psi": psi}

_DOMAIN_CLASSES = {
    "upsilon": (PartitionClass.P, PartitionClass.D, False),
    "phi": (PartitionClass.DO, PartitionClass.D, True),
    "psi": (PartitionClass.OC, PartitionClass.D0, True),
}


def apply_involution(which: str, bp: Bipartition) -> MapOutcome:
    if which not in _MAPS:
        raise ValueError(f"unknown involution {which!r}")
    return _MAPS[which](bp)


def domain(which: str, n: int) -> list[Bipartition]:
    """All bipartitions of size n the involution acts on, in stable order."""
    cls_a, cls_b, nonempty_first = _DOMAIN_CLASSES[which]
    out: list[Bipartition] = []
    start = 1 if nonempty_first else 0
    for a in range(n, start - 1, -1):
        for lam in enumerate_class(cls_a, a):
            if nonempty_first and lam.is_empty:
                continue
            for mu in enumerate_class(cls_b, n - a):
                out.append(Bipartition(lam, mu))
    return out


def sign_and_exponent(which: str, bp: Bipartition) -> tuple[int, int]:
    """Sign and conserved alpha exponent of a domain element."""
    lam, mu = bp.first, bp.second
    if which == "upsilon":
        sign = -1 if rank(lam) % 2 else 1
        return sign, lam.largest + mu.length
    if which == "phi":
        half = (lam.largest + 1) // 2
        sign = -1 if half % 2 else 1
        return sign, half - lam.length + mu.length
    if which == "psi":
        sign = -1 if lam.length % 2 else 1
        return sign, lam.length - (lam.largest + 1) // 2 + mu.length_with_zero
    raise ValueError(f"unknown involution {which!r}")


def signed_domain_sum(which: str, n: int) -> AlphaPoly:
    """Sum of sign * a^exponent over the whole domain at size n."""
    acc: dict[int, int] = {}
    for bp in domain(which, n):
        sign, exp = sign_and_exponent(which, bp)
        acc[exp] = acc.get(exp, 0) + sign
    return _dict_to_poly(acc)


def excluded_survivor_sum(which: str, n: int) -> AlphaPoly:
    """Same weighted sum restricted to excluded and surviving elements."""
    acc: dict[int, int] = {}
    for bp in domain(which, n):
        outcome = apply_involution(which, bp)
        if outcome.kind is OutcomeKind.PAIRED:
            continue
        sign, exp = sign_and_exponent(which, bp)
        acc[exp] = acc.get(exp, 0) + sign
    return _dict_to_poly(acc)


def _dict_to_poly(acc: dict[int, int]) -> AlphaPoly:
    if not acc:
        return AlphaPoly()
    coeffs = [0] * (max(acc) + 1)
    for exp, value in acc.items():
        coeffs[exp] = value
    return AlphaPoly(coeffs)


def audit(which: str, n: int) -> AuditReport:
    """Exhaustively apply the map at size n and verify every claimed property.

    Checks: the map is an involution with complementary case labels, flips
    the sign statistic, preserves size, class membership and the conserved
    alpha exponent; excluded and surviving elements match the expected
    census and their companions biject onto the right partition family.
    """
    report = AuditReport(n=n)
    cls_a, cls_b, _ = _DOMAIN_CLASSES[which]
    elements = domain(which, n)
    report.domain_size = len(elements)
    element_set = set(elements)
    merged_companions: list[Partition] = []
    survivor_companions: list[Partition] = []
    empty_survivors = 0

    def violation(bp: Bipartition, message: str) -> None:
        report.violations.append((str(bp), message))

    for bp in elements:
        outcome = apply_involution(which, bp)
        if outcome.kind is OutcomeKind.PAIRED:
            report.paired_count += 1
            image = outcome.image
            if image is None:
                violation(bp, "paired outcome has no image")
                continue
            if image.size != n:
                violation(bp, f"image size {image.size} != {n}")
            if image not in element_set:
                violation(bp, f"image {image} left the domain")
            if not is_member(image.first, cls_a) or not is_member(image.second, cls_b):
                violation(bp, f"image {image} violates class membership")
            sign_x, exp_x = sign_and_exponent(which, bp)
            sign_y, exp_y = sign_and_exponent(which, image)
            if sign_x == sign_y:
                violation(bp, "sign statistic did not flip")
            if exp_x != exp_y:
                violation(bp, f"conserved statistic changed: {exp_x} -> {exp_y}")
            back = apply_involution(which, image)
            if back.kind is not OutcomeKind.PAIRED or back.image != bp:
                violation(bp, f"not an involution: image {image} maps to {back}")
            elif back.case_label != _COMPLEMENT.get(outcome.case_label):
                violation(bp, f"labels not complementary: {outcome.case_label} / {back.case_label}")
        elif outcome.kind is OutcomeKind.EXCLUDED:
            label = outcome.case_label
            report.excluded_counts[label] = report.excluded_counts.get(label, 0) + 1
            if label == "excluded-staircase":
                k = bp.first.length
                if k * k != n or k < 1:
                    violation(bp, "excluded staircase of wrong size")
            elif outcome.companion is None:
                violation(bp, "merged exclusion lacks a companion")
            else:
                if outcome.companion.size != n:
                    violation(bp, "companion size mismatch")
                merged_companions.append(outcome.companion)
        else:
            report.survivor_count += 1
            if outcome.companion is None:
                empty_survivors += 1
            else:
                survivor_companions.append(outcome.companion)

    if report.paired_count % 2:
        report.violations.append((f"n={n}", "paired count is odd"))

    expect_staircase = 1 if n >= 1 and math.isqrt(n) ** 2 == n else 0
    if which == "upsilon":
        if report.excluded_counts:
            report.violations.append((f"n={n}", "upsilon has no excluded elements"))
        expected = sorted(enumerate_class(PartitionClass.PDO, n) * 2, key=_partition_key)
        if sorted(survivor_companions, key=_partition_key) != expected:
            report.violations.append(
                (f"n={n}", "survivor companions are not the odd-smallest distinct partitions, doubled"))
        if empty_survivors != (1 if n == 0 else 0):
            report.violations.append((f"n={n}", "unexpected companion-free survivor"))
    else:
        if report.survivor_count:
            report.violations.append((f"n={n}", f"{which} has no survivors"))
        if report.excluded_counts.get("excluded-staircase", 0) != expect_staircase:
            report.violations.append((f"n={n}", "staircase exclusion census mismatch"))
        target = PartitionClass.PDE if which == "phi" else PartitionClass.PDO
        expected = sorted(enumerate_class(target, n), key=_partition_key)
        if sorted(merged_companions, key=_partition_key) != expected:
            report.violations.append(
                (f"n={n}", f"merged-exclusion companions do not biject onto {target.value}"))
    return report


def _partition_key(p: Partition) -> tuple:
    return (p.parts, p.has_zero)


def trace_line(which: str, bp: Bipartition) -> str:
    outcome = apply_involution(which, bp)
    if outcome.kind is OutcomeKind.PAIRED:
        result = f"-> {outcome.image}"
    elif outcome.companion is not None:
        result = f"companion {format_partition(outcome.companion)}"
    else:
        result = "-"
    return f"{bp} | {outcome.kind.value} | {outcome.case_label} | {result}"


def trace_lines(which: str, n: int) -> list[str]:
    """One stable line per domain element: input, outcome kind, case, result."""
    return [trace_line(which, bp) for bp in domain(which, n)]
