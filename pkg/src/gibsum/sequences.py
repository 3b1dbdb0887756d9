"""Generalized Fibonacci (gibonacci) sequences over signed indices.

A gibonacci sequence is fixed by two integer seeds (G0, G1), not both zero,
and obeys G(k) = G(k-1) + G(k-2) for every integer k; running the recurrence
backwards, G(k) = G(k+2) - G(k+1), extends it to negative indices. All terms
are exact Python ints, so nothing overflows at any magnitude.

The Fibonacci numbers are the (0, 1) sequence and the Lucas numbers the
(2, 1) sequence. Every other sequence is a linear combination of Fibonacci
terms: G(k) = G1*F(k) + G0*F(k-1), which is what makes O(log|k|) term access
possible.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SequenceSpec:
    """Seeds of a gibonacci sequence: the terms at index 0 and 1."""

    g0: int
    g1: int

    def __post_init__(self):
        if self.g0 == 0 and self.g1 == 0:
            raise ValueError("invalid seeds (0, 0): at least one seed must be nonzero")

    @property
    def seeds(self) -> tuple[int, int]:
        return (self.g0, self.g1)


FIBONACCI = SequenceSpec(0, 1)
LUCAS = SequenceSpec(2, 1)


def _fib_pair(k: int) -> tuple[int, int]:
    """(F(k), F(k+1)) for k >= 0, by fast doubling over the bits of k."""
    a, b = 0, 1
    for i in range(k.bit_length() - 1, -1, -1):
        c = a * (2 * b - a)  # F(2m)
        d = a * a + b * b    # F(2m+1)
        if (k >> i) & 1:
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def fib(k: int) -> int:
    """The k-th Fibonacci number, any integer k; F(-k) = (-1)^(k+1) F(k)."""
    if k >= 0:
        return _fib_pair(k)[0]
    f = _fib_pair(-k)[0]
    return f if k & 1 else -f


def lucas(k: int) -> int:
    """The k-th Lucas number, any integer k."""
    return term(LUCAS, k)


def term(spec: SequenceSpec, k: int) -> int:
    """Exact term G(k) in O(log|k|) big-integer operations.

    Evaluates G(k) = G1*F(k) + G0*F(k-1) with one fast-doubling pass;
    negative k goes through the Fibonacci reflection rule.
    """
    if k >= 0:
        fk, fk1 = _fib_pair(k)
        fkm1 = fk1 - fk
    else:
        m = -k
        fm, fm1 = _fib_pair(m)
        if m & 1:
            fk, fkm1 = fm, -fm1   # F(-m) = F(m), F(-m-1) = -F(m+1)
        else:
            fk, fkm1 = -fm, fm1
    return spec.g1 * fk + spec.g0 * fkm1


def term_naive(spec: SequenceSpec, k: int) -> int:
    """G(k) by |k| single steps of the recurrence; the oracle for term()."""
    a, b = spec.g0, spec.g1
    if k >= 0:
        for _ in range(k):
            a, b = b, a + b
    else:
        for _ in range(-k):
            a, b = b - a, a
    return a


def characteristic_e(spec: SequenceSpec) -> int:
    """The sequence constant e = G0^2 - G1^2 + G0*G1.

    Nonzero for every integer seed pair other than (0, 0); equals -1 for
    Fibonacci and 5 for Lucas.
    """
    return spec.g0 * spec.g0 - spec.g1 * spec.g1 + spec.g0 * spec.g1


def first_zero_in_window(spec: SequenceSpec, lo: int, hi: int) -> int | None:
    """Smallest index in [lo, hi] whose term is zero, or None.

    Walks the window with single recurrence steps; an empty window (hi < lo)
    has no zeros.
    """
    if hi < lo:
        return None
    a, b = term(spec, lo), term(spec, lo + 1)
    for idx in range(lo, hi + 1):
        if a == 0:
            return idx
        a, b = b, a + b
    return None


def reciprocal_window(t: int, n: int) -> tuple[int, int]:
    """Inclusive index window touched by the reciprocal summand for (t, n).

    Covers every index used by any summand of the partial sum, in both the
    n >= 0 and the negated n < 0 reading.
    """
    return (t, n + t + 2) if n >= 0 else (n + t, t + 2)
