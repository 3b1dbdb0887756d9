"""Identity registry, closed-form-vs-oracle sweeps, and property suites.

The registry binds each identity id to its closed form, its summand family,
and its validity domain (fixed seeds, fixed shift, smallest supported n).
verify_one() compares one grid point, sweep() walks a whole grid in a fixed
deterministic order, and the telescoping / point-identity suites realize the
properties the closed forms are derived from.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union

from . import closed_forms
from .closed_forms import (
    alt_sum_fifth_closed,
    fib_alt_f5l_closed,
    fib_sixth_closed,
    lucas_alt_l5f_closed,
    lucas_sixth_closed,
    recip_fib_special,
    recip_lucas_special,
    recip_sum_closed,
    sum_cubes_product_closed,
    sum_sixth_closed,
    sum_squares_closed,
    treeby_f3_closed,
    treeby_l3_closed,
)
from .errors import UnknownIdentityError, ZeroTermError
from .oracle import SummandKind, oracle_sum, oracle_term
from .sequences import FIBONACCI, LUCAS, SequenceSpec, characteristic_e, lucas, term

# Reports render exact values as decimal strings; the default CPython cap on
# int-to-str conversion is far too small for sixth powers near F(100000).
if hasattr(sys, "set_int_max_str_digits"):
    if sys.get_int_max_str_digits() != 0 and sys.get_int_max_str_digits() < 2_000_000:
        sys.set_int_max_str_digits(2_000_000)

ExactValue = Union[int, Fraction]


def render_value(value: ExactValue) -> str:
    """Canonical text form: integers as decimals, others as reduced "p/q"."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


TSV_COLUMNS = ("identity", "g0", "g1", "t", "n", "closed", "oracle", "match", "error")


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one closed-form-vs-oracle comparison at a single point."""

    identity: str
    g0: int
    g1: int
    t: int
    n: int
    closed: Optional[str]
    oracle: Optional[str]
    match: bool
    error: Optional[str] = None

    def as_dict(self) -> dict:
        # seeds and values as strings: arbitrary-precision integers do not
        # survive as native JSON numbers in common consumers
        return {
            "identity": self.identity,
            "g0": str(self.g0),
            "g1": str(self.g1),
            "t": self.t,
            "n": self.n,
            "closed": self.closed,
            "oracle": self.oracle,
            "match": self.match,
            "error": self.error,
        }

    def as_tsv_row(self) -> str:
        cells = (
            self.identity,
            str(self.g0),
            str(self.g1),
            str(self.t),
            str(self.n),
            self.closed or "",
            self.oracle or "",
            "true" if self.match else "false",
            self.error or "",
        )
        return "\t".join(cells)


@dataclass(frozen=True)
class GridSpec:
    """Sweep domain: seed pairs and inclusive t and n intervals."""

    seeds: tuple[tuple[int, int], ...]
    t_range: tuple[int, int]
    n_range: tuple[int, int]

    def __post_init__(self):
        if not self.seeds:
            raise ValueError("grid needs at least one seed pair")
        for g0, g1 in self.seeds:
            SequenceSpec(g0, g1)  # rejects (0, 0)
        for name, (lo, hi) in (("t", self.t_range), ("n", self.n_range)):
            if lo > hi:
                raise ValueError(f"empty {name} range {lo}..{hi}")


@dataclass(frozen=True)
class IdentityDescriptor:
    """Registry entry binding an identity id to its closed form and domain."""

    id: str
    kind: SummandKind
    operation: str  # closed-forms function name, for the registry self-check
    summand: str
    closed_form: str
    source: str
    evaluate: Callable[[SequenceSpec, int, int], ExactValue]
    seeds: Optional[SequenceSpec] = None  # fixed seeds; None = seed-free
    fixed_t: Optional[int] = None         # fixed shift; None = t-free
    min_n: Optional[int] = None           # smallest supported n; None = all integers
    oracle_scale: Fraction = Fraction(1)  # closed form = oracle_sum * scale


REGISTRY: tuple[IdentityDescriptor, ...] = (
    IdentityDescriptor(
        id="sum_g6",
        kind=SummandKind.SIXTH_POWER,
        operation="sum_sixth_closed",
        summand="G(j+t)^6",
        closed_form="[G(n+t)^5 G(n+t+3) - G(t)^5 G(t+3) + e^2 (G(n+t)(G(n+t+1)+G(n+t-1)) - G(t)(G(t+1)+G(t-1)))] / 4",
        source="extends the Fibonacci/Lucas sixth-power sums of Ohtsuka and Nakamura (2010)",
        evaluate=sum_sixth_closed,
    ),
    IdentityDescriptor(
        id="sum_g2",
        kind=SummandKind.SQUARE,
        operation="sum_squares_closed",
        summand="G(j+t)^2",
        closed_form="G(n+t) G(n+t+1) - G(t) G(t+1)",
        source="classical telescoping of consecutive-term products",
        evaluate=sum_squares_closed,
    ),
    IdentityDescriptor(
        id="alt_g5",
        kind=SummandKind.ALT_FIFTH_NEIGHBOR,
        operation="alt_sum_fifth_closed",
        summand="(-1)^(j-1) G(j+t)^5 (G(j+t+1) + G(j+t-1))",
        closed_form="(-1)^(n+1)/2 P(n+t) + 1/2 P(t) + (-1)^n Q(n+t) - Q(t), P(m) = (G(m)G(m+1)G(m+2))^2, Q(m) = G(m+1)^4 G(m)^2",
        source="alternating telescoping over the squared triple-product window",
        evaluate=alt_sum_fifth_closed,
    ),
    IdentityDescriptor(
        id="sum_g3g3",
        kind=SummandKind.CUBE_PRODUCT,
        operation="sum_cubes_product_closed",
        summand="G(j+t)^3 G(j+t+1)^3",
        closed_form="(P(n+t) - P(t)) / 4",
        source="extends the cube-product sums of Treeby (2016)",
        evaluate=sum_cubes_product_closed,
    ),
    IdentityDescriptor(
        id="recip",
        kind=SummandKind.RECIPROCAL_WINDOW,
        operation="recip_sum_closed",
        summand="1 / (G(j+t-1)^2 G(j+t) G(j+t+1) G(j+t+2)^2)",
        closed_form="(1/P(t) - 1/P(n+t)) / 4",
        source="reciprocal companion of the cube-product telescoping",
        evaluate=recip_sum_closed,
    ),
    IdentityDescriptor(
        id="fib6",
        kind=SummandKind.SIXTH_POWER,
        operation="fib_sixth_closed",
        summand="F(j+t)^6",
        closed_form="[F(n+t)^5 F(n+t+3) - F(t)^5 F(t+3) + F(2n+2t) - F(2t)] / 4",
        source="Ohtsuka and Nakamura (2010), shifted form",
        evaluate=lambda spec, t, n: fib_sixth_closed(t, n),
        seeds=FIBONACCI,
    ),
    IdentityDescriptor(
        id="lucas6",
        kind=SummandKind.SIXTH_POWER,
        operation="lucas_sixth_closed",
        summand="L(j+t)^6",
        closed_form="[L(n+t)^5 L(n+t+3) - L(t)^5 L(t+3) + 125 (F(2n+2t) - F(2t))] / 4",
        source="Ohtsuka and Nakamura (2010), shifted form",
        evaluate=lambda spec, t, n: lucas_sixth_closed(t, n),
        seeds=LUCAS,
    ),
    IdentityDescriptor(
        id="fib_alt_f5l",
        kind=SummandKind.ALT_FIFTH_NEIGHBOR,
        operation="fib_alt_f5l_closed",
        summand="(-1)^(j-1) F(j)^5 L(j)",
        closed_form="(-1)^n / 2 F(n)^2 F(n+1)^2 (F(n+1)^2 - F(n) F(n+3))",
        source="specialization of alt_g5 at Fibonacci seeds; leading sign corrected (see README)",
        evaluate=lambda spec, t, n: fib_alt_f5l_closed(n),
        seeds=FIBONACCI,
        fixed_t=0,
        min_n=0,
    ),
    IdentityDescriptor(
        id="lucas_alt_l5f",
        kind=SummandKind.ALT_FIFTH_NEIGHBOR,
        operation="lucas_alt_l5f_closed",
        summand="(-1)^(j-1) L(j)^5 F(j)",
        closed_form="(-1)^n / 10 L(n)^2 L(n+1)^2 (L(n+1)^2 - L(n) L(n+3)) + 14/5",
        source="specialization of alt_g5 at Lucas seeds; leading sign corrected (see README)",
        evaluate=lambda spec, t, n: lucas_alt_l5f_closed(n),
        seeds=LUCAS,
        fixed_t=0,
        min_n=0,
        oracle_scale=Fraction(1, 5),  # L(j+1) + L(j-1) = 5 F(j)
    ),
    IdentityDescriptor(
        id="treeby_f3",
        kind=SummandKind.CUBE_PRODUCT,
        operation="treeby_f3_closed",
        summand="F(j)^3 F(j+1)^3",
        closed_form="F(n)^2 F(n+1)^2 F(n+2)^2 / 4",
        source="Treeby (2016)",
        evaluate=lambda spec, t, n: treeby_f3_closed(n),
        seeds=FIBONACCI,
        fixed_t=0,
        min_n=0,
    ),
    IdentityDescriptor(
        id="treeby_l3",
        kind=SummandKind.CUBE_PRODUCT,
        operation="treeby_l3_closed",
        summand="L(j)^3 L(j+1)^3",
        closed_form="L(n)^2 L(n+1)^2 L(n+2)^2 / 4 - 9",
        source="Treeby (2016)",
        evaluate=lambda spec, t, n: treeby_l3_closed(n),
        seeds=LUCAS,
        fixed_t=0,
        min_n=0,
    ),
    IdentityDescriptor(
        id="recip_fib",
        kind=SummandKind.RECIPROCAL_WINDOW,
        operation="recip_fib_special",
        summand="1 / (F(j)^2 F(j+1) F(j+2) F(j+3)^2)",
        closed_form="(1/4 - 1/(F(n+1) F(n+2) F(n+3))^2) / 4",
        source="reciprocal companion of Treeby (2016), Fibonacci seeds",
        evaluate=lambda spec, t, n: recip_fib_special(n),
        seeds=FIBONACCI,
        fixed_t=1,
        min_n=1,
    ),
    IdentityDescriptor(
        id="recip_lucas",
        kind=SummandKind.RECIPROCAL_WINDOW,
        operation="recip_lucas_special",
        summand="1 / (L(j)^2 L(j+1) L(j+2) L(j+3)^2)",
        closed_form="(1/144 - 1/(L(n+1) L(n+2) L(n+3))^2) / 4",
        source="reciprocal companion of Treeby (2016), Lucas seeds",
        evaluate=lambda spec, t, n: recip_lucas_special(n),
        seeds=LUCAS,
        fixed_t=1,
        min_n=1,
    ),
)

_BY_ID = {d.id: d for d in REGISTRY}


def identity_ids() -> tuple[str, ...]:
    return tuple(d.id for d in REGISTRY)


def descriptor(identity_id: str) -> IdentityDescriptor:
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise UnknownIdentityError(
            f"unknown identity {identity_id!r}; known: {', '.join(identity_ids())}"
        ) from None


def registry_self_check() -> None:
    """Fail if the registry and the closed-forms surface ever drift apart."""
    ids = [d.id for d in REGISTRY]
    if len(set(ids)) != len(ids):
        raise RuntimeError("duplicate identity ids in registry")
    registered = [d.operation for d in REGISTRY]
    if len(set(registered)) != len(registered):
        raise RuntimeError("a closed-forms operation appears in two descriptors")
    exported = set(closed_forms.__all__)
    if set(registered) != exported:
        missing = sorted(exported - set(registered))
        unknown = sorted(set(registered) - exported)
        raise RuntimeError(
            f"registry out of sync with closed forms: unregistered {missing}, unknown {unknown}"
        )


def effective_inputs(desc: IdentityDescriptor, spec: SequenceSpec, t: int) -> tuple[SequenceSpec, int]:
    """Substitute the descriptor's fixed seeds and shift, where present."""
    if desc.seeds is not None:
        spec = desc.seeds
    if desc.fixed_t is not None:
        t = desc.fixed_t
    return spec, t


def verify_one(identity_id: str, spec: SequenceSpec, t: int, n: int) -> VerificationReport:
    """Compare the closed form against the brute-force sum at one point.

    Outside the identity's n-domain the point passes vacuously with an
    explanatory error. When both sides fail with the identical zero-term
    error the point also passes vacuously (the identity holds wherever it
    is defined); differing errors are a mismatch.
    """
    desc = descriptor(identity_id)
    spec, t = effective_inputs(desc, spec, t)
    if desc.min_n is not None and n < desc.min_n:
        return VerificationReport(
            desc.id, spec.g0, spec.g1, t, n,
            closed=None, oracle=None, match=True,
            error=f"domain: requires n >= {desc.min_n}",
        )
    closed_value: Optional[ExactValue] = None
    oracle_value: Optional[Fraction] = None
    closed_err: Optional[str] = None
    oracle_err: Optional[str] = None
    try:
        closed_value = desc.evaluate(spec, t, n)
    except ZeroTermError as exc:
        closed_err = str(exc)
    try:
        oracle_value = oracle_sum(desc.kind, spec, t, n) * desc.oracle_scale
    except ZeroTermError as exc:
        oracle_err = str(exc)
    closed_text = None if closed_value is None else render_value(closed_value)
    oracle_text = None if oracle_value is None else render_value(oracle_value)
    if closed_err is not None or oracle_err is not None:
        if closed_err == oracle_err:
            return VerificationReport(
                desc.id, spec.g0, spec.g1, t, n,
                closed=closed_text, oracle=oracle_text, match=True, error=closed_err,
            )
        return VerificationReport(
            desc.id, spec.g0, spec.g1, t, n,
            closed=closed_text, oracle=oracle_text, match=False,
            error=f"closed: {closed_err or 'ok'}; oracle: {oracle_err or 'ok'}",
        )
    match = Fraction(closed_value) == oracle_value
    return VerificationReport(
        desc.id, spec.g0, spec.g1, t, n,
        closed=closed_text, oracle=oracle_text, match=match,
    )


def sweep(identity_id: str, grid: GridSpec) -> list[VerificationReport]:
    """One report per grid point, in (seeds, t, n) order.

    Dimensions the identity fixes (seeds, shift) collapse to their fixed
    value, so a seed-fixed identity yields one report per (t, n) no matter
    how many seed pairs the grid lists.
    """
    desc = descriptor(identity_id)
    if desc.seeds is not None:
        seed_pairs: tuple[tuple[int, int], ...] = (desc.seeds.seeds,)
    else:
        seed_pairs = grid.seeds
    if desc.fixed_t is not None:
        shifts = range(desc.fixed_t, desc.fixed_t + 1)
    else:
        shifts = range(grid.t_range[0], grid.t_range[1] + 1)
    reports = []
    for g0, g1 in seed_pairs:
        spec = SequenceSpec(g0, g1)
        for t in shifts:
            for n in range(grid.n_range[0], grid.n_range[1] + 1):
                reports.append(verify_one(identity_id, spec, t, n))
    return reports


def check_telescoping(
    identity_id: str, spec: SequenceSpec, t: int, n_range: tuple[int, int]
) -> list[VerificationReport]:
    """Verify S(n) - S(n-1) = term(n) for each n in the inclusive range.

    The left side uses only the closed form, the right side only the
    brute-force summand. The range is clipped so both S(n) and S(n-1) lie
    in the identity's n-domain. Points where either side hits a zero term
    pass vacuously with the error recorded.
    """
    desc = descriptor(identity_id)
    spec, t = effective_inputs(desc, spec, t)
    lo, hi = n_range
    if desc.min_n is not None:
        lo = max(lo, desc.min_n + 1)
    reports = []
    for n in range(lo, hi + 1):
        try:
            diff = Fraction(desc.evaluate(spec, t, n)) - Fraction(desc.evaluate(spec, t, n - 1))
            expected = oracle_term(desc.kind, spec, t, n) * desc.oracle_scale
        except ZeroTermError as exc:
            reports.append(VerificationReport(
                desc.id, spec.g0, spec.g1, t, n,
                closed=None, oracle=None, match=True, error=str(exc),
            ))
            continue
        reports.append(VerificationReport(
            desc.id, spec.g0, spec.g1, t, n,
            closed=render_value(diff), oracle=render_value(expected),
            match=diff == expected,
        ))
    return reports


POINT_IDENTITY_IDS = (
    "vajda28",
    "vajda10a",
    "catalan_shift2",
    "doubling_sub",
    "doubling_add",
    "square_window_sum",
    "square_window_diff",
)


def check_point_identities(
    spec: SequenceSpec, r_range: tuple[int, int], s_range: tuple[int, int]
) -> list[VerificationReport]:
    """Evaluate both sides of the classical point identities over a grid.

    Reports reuse the sweep shape: the identity's r lands in the t field and
    (for the two-index identity vajda10a) s lands in the n field; closed
    holds the left side, oracle the right.
    """
    e = characteristic_e(spec)
    reports = []
    for r in range(r_range[0], r_range[1] + 1):
        g = {off: term(spec, r + off) for off in range(-2, 3)}
        sign = -1 if r % 2 else 1  # (-1)^r
        p_hi = g[0] ** 2 * g[1] ** 2 * g[2] ** 2
        p_lo = g[-1] ** 2 * g[0] ** 2 * g[1] ** 2
        one_index = (
            ("vajda28", g[0] * g[2], g[1] ** 2 + sign * e),
            ("catalan_shift2", g[-2] * g[2], g[0] ** 2 + sign * e),
            ("doubling_sub", g[2] - g[-1], 2 * g[0]),
            ("doubling_add", g[2] + g[-1], 2 * g[1]),
            ("square_window_sum", p_hi + p_lo, 2 * g[0] ** 4 * g[1] ** 2 + 2 * g[1] ** 4 * g[0] ** 2),
            ("square_window_diff", p_hi - p_lo, 4 * g[0] ** 3 * g[1] ** 3),
        )
        for pid, left, right in one_index:
            reports.append(VerificationReport(
                pid, spec.g0, spec.g1, r, 0,
                closed=render_value(left), oracle=render_value(right),
                match=left == right,
            ))
        for s in range(s_range[0], s_range[1] + 1):
            s_sign = -1 if s % 2 else 1  # (-1)^s
            left = term(spec, r + s) + s_sign * term(spec, r - s)
            right = lucas(s) * g[0]
            reports.append(VerificationReport(
                "vajda10a", spec.g0, spec.g1, r, s,
                closed=render_value(left), oracle=render_value(right),
                match=left == right,
            ))
    return reports
