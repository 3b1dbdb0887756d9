"""Closed-form right-hand sides of the gibonacci summation identities.

Every operation evaluates a partial sum S(n) = sum_{j=1}^{n} term_j in
O(log(|t| + |n|)) big-integer operations, where the naive sum needs O(n).
All of them share one convention for the summation bound: S(0) = 0 and,
for n < 0, S(n) = -(sum_{j=n+1}^{0} term_j). That is the unique reading
under which S(n) - S(n-1) = term_n holds at every integer n, so the
telescoping identities stay valid verbatim on the whole integer line.

Divisions are carried out exactly. Integer-valued forms assert
divisibility and raise IntegralityError on violation; that error signals
a bug in this module, never bad input.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, IntegralityError, ZeroTermError
from .sequences import (
    SequenceSpec,
    characteristic_e,
    fib,
    first_zero_in_window,
    lucas,
    reciprocal_window,
    term,
)

__all__ = [
    "sum_squares_closed",
    "sum_sixth_closed",
    "fib_sixth_closed",
    "lucas_sixth_closed",
    "alt_sum_fifth_closed",
    "fib_alt_f5l_closed",
    "lucas_alt_l5f_closed",
    "sum_cubes_product_closed",
    "recip_sum_closed",
    "treeby_f3_closed",
    "treeby_l3_closed",
    "recip_fib_special",
    "recip_lucas_special",
]


def _exact_quarter(num: int, op: str) -> int:
    q, r = divmod(num, 4)
    if r:
        # keep the huge numerator out of the message; the remainder suffices
        raise IntegralityError(f"{op}: numerator not divisible by 4 (remainder {r})")
    return q


def _require_integral(value: Fraction, op: str) -> Fraction:
    if value.denominator != 1:
        raise IntegralityError(f"{op}: result has denominator {value.denominator}, expected 1")
    return value


def _triple_square(spec: SequenceSpec, m: int) -> int:
    """(G(m) G(m+1) G(m+2))^2, the window product both cube-sum forms anchor on."""
    p = term(spec, m) * term(spec, m + 1) * term(spec, m + 2)
    return p * p


def sum_squares_closed(spec: SequenceSpec, t: int, n: int) -> int:
    """Sum of G(j+t)^2 for j in 1..n: G(n+t)G(n+t+1) - G(t)G(t+1)."""
    return term(spec, n + t) * term(spec, n + t + 1) - term(spec, t) * term(spec, t + 1)


def sum_sixth_closed(spec: SequenceSpec, t: int, n: int) -> int:
    """Sum of G(j+t)^6 for j in 1..n.

    Evaluates [G(n+t)^5 G(n+t+3) - G(t)^5 G(t+3)
               + e^2 (G(n+t)(G(n+t+1) + G(n+t-1)) - G(t)(G(t+1) + G(t-1)))] / 4
    with e the characteristic constant of the seeds.
    """
    hi, lo = term(spec, n + t), term(spec, t)
    e2 = characteristic_e(spec) ** 2
    num = (
        hi**5 * term(spec, n + t + 3)
        - lo**5 * term(spec, t + 3)
        + e2 * (hi * (term(spec, n + t + 1) + term(spec, n + t - 1))
                - lo * (term(spec, t + 1) + term(spec, t - 1)))
    )
    return _exact_quarter(num, "sum_sixth_closed")


def fib_sixth_closed(t: int, n: int) -> int:
    """Sum of F(j+t)^6 for j in 1..n, in the Fibonacci-only shape.

    Uses F(2k) directly instead of the e^2 term:
    [F(n+t)^5 F(n+t+3) - F(t)^5 F(t+3) + F(2n+2t) - F(2t)] / 4.
    """
    num = (
        fib(n + t) ** 5 * fib(n + t + 3)
        - fib(t) ** 5 * fib(t + 3)
        + fib(2 * n + 2 * t)
        - fib(2 * t)
    )
    return _exact_quarter(num, "fib_sixth_closed")


def lucas_sixth_closed(t: int, n: int) -> int:
    """Sum of L(j+t)^6 for j in 1..n, in the Lucas-only shape.

    [L(n+t)^5 L(n+t+3) - L(t)^5 L(t+3) + 125 (F(2n+2t) - F(2t))] / 4;
    at t = 0 this collapses to (L(n)^5 L(n+3) + 125 F(2n)) / 4 - 32.
    """
    num = (
        lucas(n + t) ** 5 * lucas(n + t + 3)
        - lucas(t) ** 5 * lucas(t + 3)
        + 125 * (fib(2 * n + 2 * t) - fib(2 * t))
    )
    return _exact_quarter(num, "lucas_sixth_closed")


def alt_sum_fifth_closed(spec: SequenceSpec, t: int, n: int) -> Fraction:
    """Alternating sum of (-1)^(j-1) G(j+t)^5 (G(j+t+1) + G(j+t-1)) for j in 1..n.

    With P(m) = (G(m) G(m+1) G(m+2))^2 and Q(m) = G(m+1)^4 G(m)^2 the value is
    (-1)^(n+1)/2 P(n+t) + 1/2 P(t) + (-1)^n Q(n+t) - Q(t). Always an integer;
    returned as a den = 1 rational and asserted so.
    """
    sign = -1 if n % 2 else 1  # (-1)^n
    p_hi = _triple_square(spec, n + t)
    p_lo = _triple_square(spec, t)
    q_hi = term(spec, n + t + 1) ** 4 * term(spec, n + t) ** 2
    q_lo = term(spec, t + 1) ** 4 * term(spec, t) ** 2
    value = Fraction(p_lo - sign * p_hi, 2) + sign * q_hi - q_lo
    return _require_integral(value, "alt_sum_fifth_closed")


def fib_alt_f5l_closed(n: int) -> Fraction:
    """Alternating sum of (-1)^(j-1) F(j)^5 L(j) for j in 1..n.

    Published closed form with the leading sign corrected to (-1)^n:
    (-1)^n / 2 * F(n)^2 F(n+1)^2 (F(n+1)^2 - F(n) F(n+3)). The printed
    (-1)^(n+1) version contradicts the brute-force sum already at n = 1.
    """
    if n < 0:
        raise DomainError(f"fib_alt_f5l_closed requires n >= 0, got {n}")
    sign = -1 if n % 2 else 1
    fn, fn1 = fib(n), fib(n + 1)
    value = Fraction(sign * fn**2 * fn1**2 * (fn1**2 - fn * fib(n + 3)), 2)
    return _require_integral(value, "fib_alt_f5l_closed")


def lucas_alt_l5f_closed(n: int) -> Fraction:
    """Alternating sum of (-1)^(j-1) L(j)^5 F(j) for j in 1..n.

    Sign-corrected closed form
    (-1)^n / 10 * L(n)^2 L(n+1)^2 (L(n+1)^2 - L(n) L(n+3)) + 14/5.
    At n = 0 the two parts cancel to 0, matching the empty sum, so the
    formula is valid for every n >= 0.
    """
    if n < 0:
        raise DomainError(f"lucas_alt_l5f_closed requires n >= 0, got {n}")
    sign = -1 if n % 2 else 1
    ln, ln1 = lucas(n), lucas(n + 1)
    value = Fraction(sign * ln**2 * ln1**2 * (ln1**2 - ln * lucas(n + 3)), 10) + Fraction(14, 5)
    return _require_integral(value, "lucas_alt_l5f_closed")


def sum_cubes_product_closed(spec: SequenceSpec, t: int, n: int) -> int:
    """Sum of G(j+t)^3 G(j+t+1)^3 for j in 1..n: (P(n+t) - P(t)) / 4."""
    num = _triple_square(spec, n + t) - _triple_square(spec, t)
    return _exact_quarter(num, "sum_cubes_product_closed")


def recip_sum_closed(spec: SequenceSpec, t: int, n: int) -> Fraction:
    """Sum of 1 / (G(j+t-1)^2 G(j+t) G(j+t+1) G(j+t+2)^2) for j in 1..n.

    Evaluates (1/P(t) - 1/P(n+t)) / 4. The whole index window the summands
    touch is scanned for zero terms first, so this fails on exactly the
    inputs the brute-force sum fails on, naming the same index.
    """
    lo, hi = reciprocal_window(t, n)
    zero = first_zero_in_window(spec, lo, hi)
    if zero is not None:
        raise ZeroTermError(zero, spec.seeds)
    return Fraction(1, 4) * (
        Fraction(1, _triple_square(spec, t)) - Fraction(1, _triple_square(spec, n + t))
    )


def treeby_f3_closed(n: int) -> int:
    """Sum of F(j)^3 F(j+1)^3 for j in 1..n: F(n)^2 F(n+1)^2 F(n+2)^2 / 4."""
    if n < 0:
        raise DomainError(f"treeby_f3_closed requires n >= 0, got {n}")
    p = fib(n) * fib(n + 1) * fib(n + 2)
    return _exact_quarter(p * p, "treeby_f3_closed")


def treeby_l3_closed(n: int) -> int:
    """Sum of L(j)^3 L(j+1)^3 for j in 1..n: L(n)^2 L(n+1)^2 L(n+2)^2 / 4 - 9."""
    if n < 0:
        raise DomainError(f"treeby_l3_closed requires n >= 0, got {n}")
    p = lucas(n) * lucas(n + 1) * lucas(n + 2)
    return _exact_quarter(p * p, "treeby_l3_closed") - 9


def recip_fib_special(n: int) -> Fraction:
    """Sum of 1 / (F(j)^2 F(j+1) F(j+2) F(j+3)^2) for j in 1..n.

    (1/4 - 1/(F(n+1) F(n+2) F(n+3))^2) / 4; the inner 1/4 is
    1/(F(1) F(2) F(3))^2, anchoring the general form at shift 1.
    """
    if n < 1:
        raise DomainError(f"recip_fib_special requires n >= 1, got {n}")
    p = fib(n + 1) * fib(n + 2) * fib(n + 3)
    return Fraction(1, 4) * (Fraction(1, 4) - Fraction(1, p * p))


def recip_lucas_special(n: int) -> Fraction:
    """Sum of 1 / (L(j)^2 L(j+1) L(j+2) L(j+3)^2) for j in 1..n.

    (1/144 - 1/(L(n+1) L(n+2) L(n+3))^2) / 4; the inner 1/144 is
    1/(L(1) L(2) L(3))^2, anchoring the general form at shift 1.
    """
    if n < 1:
        raise DomainError(f"recip_lucas_special requires n >= 1, got {n}")
    p = lucas(n + 1) * lucas(n + 2) * lucas(n + 3)
    return Fraction(1, 4) * (Fraction(1, 144) - Fraction(1, p * p))
