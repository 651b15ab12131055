"""Truncated power series with exact integer coefficients, and the
convolution identities for central binomial / trinomial numbers.

Square roots are never taken: identities about ``1/sqrt(...)`` series are
checked after squaring both sides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .census import VerificationReport, end_counts
from .errors import NonUnitConstantTerm

DEFAULT_T_VALUES = (0, 1, 2, 3, 5)


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0..c_N of a power series known modulo X^(N+1)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def from_poly(cls, coeffs: Sequence[int], degree: int) -> TruncatedSeries:
        padded = list(coeffs[: degree + 1]) + [0] * (degree + 1 - len(coeffs))
        return cls(tuple(padded))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def _cap(self, other: TruncatedSeries) -> int:
        return min(self.degree, other.degree)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = self._cap(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = self._cap(other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs)))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.degree, b.degree)
    out = [0] * (n + 1)
    for i, x in enumerate(a.coeffs[: n + 1]):
        if x:
            for j, y in enumerate(b.coeffs[: n + 1 - i]):
                out[i + j] += x * y
    return TruncatedSeries(tuple(out))


def series_reciprocal(p: TruncatedSeries) -> TruncatedSeries:
    c0 = p.coeffs[0]
    if c0 not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {c0} is not a unit")
    out = [c0]
    for k in range(1, p.degree + 1):
        acc = sum(p.coeffs[i] * out[k - i] for i in range(1, k + 1))
        out.append(-acc * c0)
    return TruncatedSeries(tuple(out))


def r_coeffs(t: int, n: int) -> list[int]:
    """Number of recurrent walks of length 0..n with t neutral step kinds."""
    out = []
    row = {0: 1}
    for _ in range(n + 1):
        out.append(row.get(0, 0))
        nxt: dict[int, int] = {}
        for h, c in row.items():
            for d, weight in ((1, 1), (0, t), (-1, 1)):
                if weight:
                    nxt[h + d] = nxt.get(h + d, 0) + c * weight
        row = nxt
    return out


def _report(name: str, checks: Iterable[tuple[str, bool]]) -> VerificationReport:
    checks = list(checks)
    return VerificationReport(
        name=name, domain_size=len(checks), codomain_size=len(checks), preserved_stats=checks
    )


def check_eq1(n: int) -> VerificationReport:
    """Sum over i+j=k of C(2i,i) C(2j,j) equals 4^k for every k <= n."""
    return _report(
        "eq1",
        (
            (f"n={k}", sum(math.comb(2 * i, i) * math.comb(2 * (k - i), k - i) for i in range(k + 1)) == 4**k)
            for k in range(n + 1)
        ),
    )


def eq2_sides(t: int, l: int) -> tuple[int, int]:
    r = r_coeffs(t, l)
    lhs = sum(r[i] * r[l - i] for i in range(l + 1))
    num = (t + 2) ** (l + 1) - (t - 2) ** (l + 1)
    if num % 4:
        raise ArithmeticError(f"closed form numerator {num} not divisible by 4")
    return lhs, num // 4


def check_eq2(t: int, max_l: int) -> VerificationReport:
    """Convolution of R_t against the closed form, plus a walk count of the same number.

    The DP count is of walks of length l+1 ending at a positive odd number.
    """
    checks = []
    for l in range(max_l + 1):
        try:
            lhs, rhs = eq2_sides(t, l)
        except ArithmeticError:
            checks.append((f"l={l}", False))
            continue
        odd = sum(c for e, c in end_counts(l + 1, t).items() if e > 0 and e % 2)
        checks.append((f"l={l}", lhs == rhs == odd))
    return _report(f"eq2[t={t}]", checks)


def check_eq3(t: int, n: int) -> VerificationReport:
    """Square of the R_t series against 1/(1 - 2tX + (t^2-4)X^2), coefficient-wise."""
    r = TruncatedSeries(tuple(r_coeffs(t, n)))
    square = r * r
    rhs = series_reciprocal(TruncatedSeries.from_poly([1, -2 * t, t * t - 4], n))
    return _report(f"eq3[t={t}]", ((f"n={k}", square[k] == rhs[k]) for k in range(n + 1)))


def check_t2_coincidence(n: int) -> VerificationReport:
    r = r_coeffs(2, n)
    return _report("t2", ((f"n={k}", r[k] == math.comb(2 * k, k)) for k in range(n + 1)))
