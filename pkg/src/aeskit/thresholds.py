"""Exact minimum-degree thresholds under a maximum-degree constraint,
for K_{r+1}-free graphs and for graphs with no short odd cycle.

Every verdict is decided with :class:`fractions.Fraction` or with integer
inequalities; floats only ever appear in display columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, NamedTuple

from .errors import ParameterError

Rational = Fraction


class Mode(NamedTuple):
    """Which family is in play: ``clique`` with parameter r, or ``odd`` with parameter k."""

    family: Literal["clique", "odd"]
    param: int

    @classmethod
    def clique(cls, r: int) -> "Mode":
        return cls("clique", r)

    @classmethod
    def odd(cls, k: int) -> "Mode":
        return cls("odd", k)

    @property
    def parts(self) -> int:
        """Number of classes the conclusion promises."""
        return self.param if self.family == "clique" else 2

    def __str__(self):
        return f"clique(r={self.param})" if self.family == "clique" else f"odd(k={self.param})"


@dataclass(frozen=True)
class HypothesisVerdict:
    threshold: Fraction
    branch: Literal["first", "second"]
    holds: bool
    integer_form_holds: bool
    first: Fraction
    second: Fraction

    def to_dict(self) -> dict:
        return {
            "threshold": _frac_str(self.threshold),
            "branch": self.branch,
            "holds": self.holds,
            "integer_form_holds": self.integer_form_holds,
            "branches": [_frac_str(self.first), _frac_str(self.second)],
        }


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _check_degrees(n: int, Delta: int) -> None:
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if not 0 <= Delta <= n - 1:
        raise ParameterError(f"Delta={Delta} outside 0..{n - 1}")


def clique_branches(n: int, r: int, Delta: int) -> tuple[Fraction, Fraction]:
    if r < 2:
        raise ParameterError(f"r must be >= 2, got {r}")
    _check_degrees(n, Delta)
    first = Fraction((3 * r - 4) * n - Delta, 3 * r - 2)
    second = Fraction((r - 1) * n - Delta - 1, r - 1)
    return first, second


def odd_branches(n: int, k: int, Delta: int) -> tuple[Fraction, Fraction]:
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    _check_degrees(n, Delta)
    first = Fraction(2 * n - Delta, 2 * k + 2)
    second = Fraction(n - 1 - Delta, k)
    return first, second


def clique_threshold(n: int, r: int, Delta: int) -> Fraction:
    """min{ ((3r-4)n - Delta)/(3r-2), n - (Delta+1)/(r-1) }."""
    return min(clique_branches(n, r, Delta))


def odd_threshold(n: int, k: int, Delta: int) -> Fraction:
    """min{ n/(k+1) - Delta/(2k+2), (n-1-Delta)/k }.

    At k = 1 this coincides with ``clique_threshold(n, 2, Delta)``.
    """
    return min(odd_branches(n, k, Delta))


def threshold(n: int, mode: Mode, Delta: int) -> Fraction:
    if mode.family == "clique":
        return clique_threshold(n, mode.param, Delta)
    return odd_threshold(n, mode.param, Delta)


def clique_integer_form(n: int, r: int, delta: int, Delta: int) -> bool:
    return (3 * r - 2) * delta + Delta > (3 * r - 4) * n or (r - 1) * delta + Delta >= (r - 1) * n


def odd_integer_form(n: int, k: int, delta: int, Delta: int) -> bool:
    # cleared denominators of the two branches; delta, Delta integral
    return (2 * k + 2) * delta + Delta > 2 * n or k * delta + Delta + 1 > n


def _verdict(first: Fraction, second: Fraction, delta: int, integer_ok: bool) -> HypothesisVerdict:
    thr, branch = (first, "first") if first <= second else (second, "second")
    holds = delta > thr
    if holds != integer_ok:
        raise AssertionError(
            f"rational verdict {holds} disagrees with integer form {integer_ok} (threshold {thr}, delta {delta})"
        )
    return HypothesisVerdict(thr, branch, holds, integer_ok, first, second)


def _check_profile(n: int, delta: int, Delta: int) -> None:
    if delta > Delta:
        raise ParameterError(f"delta={delta} exceeds Delta={Delta}")
    if delta < 0:
        raise ParameterError(f"delta must be >= 0, got {delta}")
    _check_degrees(n, Delta)


def clique_hypothesis(n: int, r: int, delta: int, Delta: int) -> HypothesisVerdict:
    _check_profile(n, delta, Delta)
    first, second = clique_branches(n, r, Delta)
    return _verdict(first, second, delta, clique_integer_form(n, r, delta, Delta))


def odd_hypothesis(n: int, k: int, delta: int, Delta: int) -> HypothesisVerdict:
    _check_profile(n, delta, Delta)
    if k < 2:
        raise ParameterError(f"odd-cycle hypothesis needs k >= 2 (k = 1 is clique_hypothesis with r = 2), got {k}")
    first, second = odd_branches(n, k, Delta)
    return _verdict(first, second, delta, odd_integer_form(n, k, delta, Delta))


def hypothesis(n: int, mode: Mode, delta: int, Delta: int) -> HypothesisVerdict:
    if mode.family == "clique":
        return clique_hypothesis(n, mode.param, delta, Delta)
    if mode.param == 1:
        return clique_hypothesis(n, 2, delta, Delta)
    return odd_hypothesis(n, mode.param, delta, Delta)


def classical_bound(n: int, mode: Mode) -> Fraction:
    """The original minimum-degree bounds: (3r-4)n/(3r-1) and 2n/(2k+3)."""
    if mode.family == "clique":
        r = mode.param
        return Fraction((3 * r - 4) * n, 3 * r - 1)
    return Fraction(2 * n, 2 * mode.param + 3)


def aes_corollary_holds(n: int, mode: Mode, delta: int, Delta: int) -> bool:
    """True iff (delta above the classical bound) implies the max-degree hypothesis."""
    if delta > Delta:
        raise ParameterError(f"delta={delta} exceeds Delta={Delta}")
    if not delta > classical_bound(n, mode):
        return True
    return hypothesis(n, mode, delta, Delta).holds
