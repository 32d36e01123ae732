"""Exact verification of the matrix identities, each by independent routes.

Every report row compares a left and a right side.  Each side may be
computed by several methods (recurrence matrix, closed form, brute-force
enumeration, bijection images); the row passes only if every computed
value on both sides agrees.  Enumeration legs beyond their row bound are
listed under ``skipped`` and never count as passing evidence.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Union

from .bijections import elevate, phi, phi_inverse, sigma, sigma_inverse
from .compositions import enumerate_compositions
from .errors import ParameterError
from .marked import enumerate_marked_paths
from .matrices import (
    check_kt,
    matrix_vector_product,
    recurrence_matrix,
    riordan_matrix,
    triangle_from_first_column,
    weighted_riordan_array,
)
from .paths import PathClass, WeightSpec, count_weighted, enumerate_paths, weight

Value = Union[int, tuple[int, ...]]

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


def _fmt(v: Value) -> str:
    return ",".join(map(str, v)) if isinstance(v, tuple) else str(v)


@dataclass(frozen=True)
class ReportRow:
    i: int
    lhs: Value
    rhs: Value
    methods: tuple[str, ...]
    verdict: str
    skipped: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "lhs": _fmt(self.lhs),
            "rhs": _fmt(self.rhs),
            "methods": list(self.methods),
            "verdict": self.verdict,
            "skipped": list(self.skipped),
        }


@dataclass
class IdentityReport:
    identity: str
    params: dict
    rows: list[ReportRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.rows) and all(r.verdict == PASS for r in self.rows)

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "params": dict(self.params),
            "rows": [r.to_json() for r in self.rows],
            "passed": self.passed,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def lines(self) -> list[str]:
        out = []
        for r in self.rows:
            extra = f"  (skipped: {', '.join(r.skipped)})" if r.skipped else ""
            out.append(f"i={r.i:<3} lhs={_fmt(r.lhs)}  rhs={_fmt(r.rhs)}  {r.verdict}  [{', '.join(r.methods)}]{extra}")
        return out


def compare(i: int, lhs: dict[str, Value], rhs: dict[str, Value], skipped=()) -> ReportRow:
    """Build a row from per-method values; the first method of each side is primary."""
    values = list(lhs.values()) + list(rhs.values())
    verdict = PASS if all(v == values[0] for v in values) else FAIL
    methods = tuple(f"lhs:{m}" for m in lhs) + tuple(f"rhs:{m}" for m in rhs)
    return ReportRow(i, next(iter(lhs.values())), next(iter(rhs.values())), methods, verdict, tuple(skipped))


def _leg(enabled: bool, name: str, compute: Callable[[], Value], into: dict, skipped: list) -> None:
    if enabled:
        into[name] = compute()
    else:
        skipped.append(name)


def geometric_column(t: int, rows: int) -> list[int]:
    """``(1, 1+t, 1+t+t^2, ...)``."""
    return [sum(t**e for e in range(j)) for j in range(1, rows + 1)]


def feasible_column(t: int, rows: int) -> list[int]:
    """``t^j - (t-1)^j`` for ``j = 1..rows``."""
    return [t**j - (t - 1) ** j for j in range(1, rows + 1)]


def elevation_weight_sum(n: int, w: WeightSpec) -> int:
    """Total weight of all elevations of all partial paths of length ``n``."""
    total = 0
    for p in enumerate_paths(PathClass.partial_motzkin(), n):
        for line in range(p.end_level + 1):
            total += weight(elevate(p, line), w)
    return total


def verify_weighted_identity(k: int, t: int, rows: int, brute_force_rows: int = 9) -> IdentityReport:
    """``sum_j m[i,j] (1 + t + ... + t^(j-1)) = k^(i-1)`` for ``i = 1..rows``."""
    check_kt(k, t)
    w = WeightSpec.from_kt(k, t)
    lhs = matrix_vector_product(recurrence_matrix(k, t, rows), geometric_column(t, rows))
    report = IdentityReport("weighted", {"k": k, "t": t, "rows": rows})
    for i in range(1, rows + 1):
        left: dict[str, Value] = {"recurrence-matrix": lhs[i - 1]}
        right: dict[str, Value] = {"power": k ** (i - 1)}
        skipped: list[str] = []
        on = i <= brute_force_rows
        _leg(on, "elevation-sum", lambda: elevation_weight_sum(i - 1, w), left, skipped)
        _leg(on, "free-path-sum", lambda: count_weighted(PathClass.free_motzkin(), i - 1, weights=w), right, skipped)
        report.rows.append(compare(i, left, right, skipped))
    return report


def composition_matrix_entry(i: int, j: int) -> int:
    """Closed form ``(j / i) * C(2i, i - j)`` for compositions with ``j`` segments."""
    v = Fraction(j, i) * comb(2 * i, i - j)
    if v.denominator != 1:
        raise ArithmeticError(f"non-integral entry ({i}, {j})")
    return v.numerator


def _phi_image_size(i: int) -> int:
    """Distinct phi words of rooted compositions of length ``2i``; asserts the round trip."""
    words = set()
    for c in enumerate_compositions(2 * i, rooted=True):
        w = phi(c)
        if len(w) != i - 1 or phi_inverse(w) != c:
            return -1
        words.add(str(w))
    return len(words)


def verify_rooted_sum(i: int, enumeration_rows: int = 8, phi_rows: int = 7) -> IdentityReport:
    """``sum_j j * a[i,j] = 4^(i-1)`` for rows ``1..i``."""
    if i < 1:
        raise ParameterError("i must be >= 1")
    M = recurrence_matrix(4, 1, i)
    lhs = matrix_vector_product(M, list(range(1, i + 1)))
    report = IdentityReport("rooted-sum", {"i": i})
    for n in range(1, i + 1):
        skipped: list[str] = []
        left: dict[str, Value] = {
            "recurrence-matrix": lhs[n - 1],
            "closed-form": sum(j * composition_matrix_entry(n, j) for j in range(1, n + 1)),
        }
        _leg(n <= enumeration_rows, "rooted-composition-count",
             lambda: sum(1 for _ in enumerate_compositions(2 * n, rooted=True)), left, skipped)
        right: dict[str, Value] = {"power": 4 ** (n - 1)}
        _leg(n <= phi_rows, "phi-image", lambda: _phi_image_size(n), right, skipped)
        report.rows.append(compare(n, left, right, skipped))
    return report


def cameron_sum(i: int, m: int) -> int:
    """``sum_j (j/i) C(j+m, 2m+1) C(2i, i-j)``, exactly."""
    total = sum(Fraction(j, i) * comb(j + m, 2 * m + 1) * comb(2 * i, i - j) for j in range(1, i + 1))
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral sum {total}")
    return total.numerator


def dotted_path_count(n: int, m: int) -> int:
    """Free 3-Motzkin paths of length ``n`` with exactly ``m`` dotted steps, by enumeration."""
    cls = PathClass.free_motzkin(horizontal_colors=3)
    return sum(1 for f in enumerate_paths(cls, n) if f.count("H", 3) == m)


def verify_cameron(i: int, m: int, enumeration_rows: int = 8, enumeration_marks: int = 2) -> IdentityReport:
    """``C(i-1, m) 4^(i-1-m) = sum_j (j/i) C(j+m, 2m+1) C(2i, i-j)`` for rows ``1..i``."""
    if i < 1 or m < 0:
        raise ParameterError("need i >= 1 and m >= 0")
    report = IdentityReport("cameron", {"i": i, "m": m})
    for n in range(1, i + 1):
        skipped: list[str] = []
        on = n <= enumeration_rows and m <= enumeration_marks
        left: dict[str, Value] = {"closed-form": comb(n - 1, m) * 4 ** max(n - 1 - m, 0)}
        _leg(on, "dotted-path-count", lambda: dotted_path_count(n - 1, m), left, skipped)
        right: dict[str, Value] = {"closed-form": cameron_sum(n, m)}
        _leg(on, "marked-path-count", lambda: sum(1 for _ in enumerate_marked_paths(n - 1, m)), right, skipped)
        report.rows.append(compare(n, left, right, skipped))
    return report


def verify_cameron_general(i: int, m: int, k: int, enumeration_rows: int = 9) -> IdentityReport:
    """``C(i-1, m) k^(i-1-m) = sum_j a[i,j,k-2] C(j+m, 2m+1)`` for rows ``1..i``.

    ``a[i,j,k-2]`` counts partial Motzkin paths of length ``i-1`` ending at
    level ``j-1`` whose horizontal steps come in ``k-2`` colors.
    """
    if k < 2:
        raise ParameterError("k must be >= 2")
    if i < 1 or m < 0:
        raise ParameterError("need i >= 1 and m >= 0")
    w = WeightSpec(k - 2, 1)
    M = recurrence_matrix(k, 1, i)
    report = IdentityReport("cameron-general", {"i": i, "m": m, "k": k})
    for n in range(1, i + 1):
        skipped: list[str] = []
        left: dict[str, Value] = {"closed-form": comb(n - 1, m) * k ** max(n - 1 - m, 0)}
        right: dict[str, Value] = {}
        _leg(n <= enumeration_rows, "brute-force-partial",
             lambda: sum(count_weighted(PathClass.partial_motzkin(), n - 1, j - 1, w) * comb(j + m, 2 * m + 1)
                         for j in range(1, n + 1)), right, skipped)
        right["recurrence-matrix"] = sum(M.entry(n, j) * comb(j + m, 2 * m + 1) for j in range(1, n + 1))
        report.rows.append(compare(n, left, right, skipped))
    return report


def colored_matrix(t: int, rows: int):
    """Triangle with first column the ``(t^2-t)``-colored Dyck counts, filled by
    ``m[i,j] = m[i-1,j-1] + (t^2-t+1) m[i-1,j] + (t^2-t) m[i-1,j+1]``."""
    if t < 2:
        raise ParameterError("t must be >= 2")
    c = t * t - t
    head = [count_weighted(PathClass.colored_dyck(c), 2 * i) for i in range(1, rows + 1)]
    return triangle_from_first_column(head, c + 1, c)


def _sigma_legs(t: int, i: int) -> tuple[int, int]:
    """(domain size, distinct image words) of sigma on length ``2i``; -1 image on a round-trip miss."""
    size = 0
    words = set()
    ok = True
    for comp in enumerate_compositions(2 * i, color_count=t * t - t, t=t):
        size += 1
        w = sigma(comp, t)
        if len(w) != i - 1 or sigma_inverse(w, t) != comp:
            ok = False
        words.add(str(w))
    return size, len(words) if ok else -1


def verify_colored(t: int, rows: int, enumeration_rows: int = 5, enumeration_max_t: int = 3) -> IdentityReport:
    """``sum_j m[i,j] (t^j - (t-1)^j) = (t^2+t)^(i-1)`` for ``i = 1..rows``."""
    M = colored_matrix(t, rows)
    lhs = matrix_vector_product(M, feasible_column(t, rows))
    report = IdentityReport("colored", {"t": t, "rows": rows})
    for i in range(1, rows + 1):
        skipped: list[str] = []
        left: dict[str, Value] = {"recurrence-matrix": lhs[i - 1]}
        right: dict[str, Value] = {"power": (t * t + t) ** (i - 1)}
        if i <= enumeration_rows and t <= enumeration_max_t:
            size, image = _sigma_legs(t, i)
            left["sigma-domain-count"] = size
            right["sigma-image"] = image
        else:
            skipped += ["sigma-domain-count", "sigma-image"]
        report.rows.append(compare(i, left, right, skipped))
    return report


def cross_check_matrix(k: int, t: int, rows: int, enumeration_rows: int = 9) -> IdentityReport:
    """Recurrence matrix, Riordan matrix and brute-force path counts, row by row."""
    check_kt(k, t)
    w = WeightSpec.from_kt(k, t)
    rec = recurrence_matrix(k, t, rows)
    rio = riordan_matrix(weighted_riordan_array(k, t, max(rows - 1, 1)), rows)
    report = IdentityReport("cross-check", {"k": k, "t": t, "rows": rows})
    for i in range(1, rows + 1):
        skipped: list[str] = []
        left: dict[str, Value] = {"recurrence-matrix": rec.rows[i - 1]}
        right: dict[str, Value] = {"riordan-matrix": rio.rows[i - 1]}
        _leg(i <= enumeration_rows, "brute-force",
             lambda: tuple(count_weighted(PathClass.partial_motzkin(), i - 1, j - 1, w) for j in range(1, i + 1)),
             right, skipped)
        report.rows.append(compare(i, left, right, skipped))
    return report


IDENTITIES = {
    "weighted": verify_weighted_identity,
    "rooted-sum": verify_rooted_sum,
    "cameron": verify_cameron,
    "cameron-general": verify_cameron_general,
    "colored": verify_colored,
    "cross-check": cross_check_matrix,
}
