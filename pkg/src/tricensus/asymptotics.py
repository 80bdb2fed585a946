"""Numeric side of the coefficient analysis: growth constants and fits.

Exact integer/rational data flows in from :mod:`tricensus.census`; this
module turns it into high-precision numbers (mpmath), growth-rate
estimates, and rigorous rational enclosures where a genuine bound is
available.  Functions that fit or extrapolate say so; functions that
bound return :class:`~tricensus.series_core.RationalInterval`.

The value A = g(27/256) is enclosed by exact partial sums plus a proven
tail bound.  A geometric term-ratio bound cannot exist here (the term
ratios increase to 1 at the radius), so the tail is dominated instead by
t_{n+1}/t_n <= (n/(n+1))^(3/2), an inequality this module proves on the
fly by exhibiting a nonnegative-coefficient polynomial certificate; the
resulting budget sum_{n>N} t_n <= 2N*t_N is then spent through
``eval_enclosure``'s geometric budget with q = 2N/(2N+1).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, isqrt, log10
from numbers import Rational

import mpmath
from mpmath import mp

from .census import ClaimRecord, ClaimStatus, g_coeffs, g_ratio
from .series_core import RationalInterval, TruncatedSeries, eval_enclosure, make_series

DEFAULT_DIGITS = 50

SINGULARITY = Fraction(27, 256)
H_IMPLIED_RADIUS = Fraction(4, 27)


class EstimationError(RuntimeError):
    """A fit or growth estimate could not be carried out."""


# ---------------------------------------------------------------------------
# gamma and the coefficient formula for (1-x)^(-alpha)
# ---------------------------------------------------------------------------

def _as_rational(alpha) -> Fraction | None:
    if isinstance(alpha, (int, Rational)):
        return Fraction(alpha)
    return None


def gamma_real(alpha, digits: int = DEFAULT_DIGITS) -> mpmath.mpf:
    """Gamma(alpha) for real alpha, exact-path at integers and half-integers.

    Integer and half-integer arguments are reduced by the recurrence
    Gamma(z+1) = z*Gamma(z) to Gamma(1) = 1 or Gamma(1/2) = sqrt(pi), so the
    only rounding is the final square root.  Other arguments go through
    mpmath's gamma at the working precision.
    """
    rat = _as_rational(alpha)
    if rat is not None and rat <= 0 and rat.denominator == 1:
        raise ValueError(f"gamma pole at {rat}")
    with mp.workdps(digits):
        if rat is not None and rat.denominator in (1, 2):
            if rat.denominator == 1:
                return mp.mpf(factorial(int(rat) - 1))
            # rat = m + 1/2: walk to Gamma(1/2)
            factor = Fraction(1)
            z = rat
            while z > Fraction(1, 2):
                z -= 1
                factor *= z
            while z < Fraction(1, 2):
                factor /= z
                z += 1
            return mp.mpf(factor.numerator) / factor.denominator * mp.sqrt(mp.pi)
        return mp.gamma(mp.mpf(alpha))


def fundamental_coeff(alpha, n: int, digits: int = DEFAULT_DIGITS) -> tuple[Fraction, mpmath.mpf]:
    """Exact and first-order values of [x^n](1-x)^(-alpha).

    The exact value is the rising-factorial binomial C(n+alpha-1, n),
    a rational number for rational alpha; the companion is the model
    n^(alpha-1)/Gamma(alpha) whose relative error is O(1/n).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    a = _as_rational(alpha)
    if a is None:
        raise TypeError("alpha must be an exact rational for the exact branch")
    if a <= 0 and a.denominator == 1:
        raise ValueError(f"gamma pole at alpha = {a}")
    exact = Fraction(1)
    for k in range(n):
        exact *= (a + k) / (k + 1)
    with mp.workdps(digits):
        asym = mp.mpf(n) ** (mp.mpf(a.numerator) / a.denominator - 1) / gamma_real(a, digits)
    return exact, asym


def fundamental_exact_sequence(alpha, nmax: int):
    """Yield (n, exact [x^n](1-x)^(-alpha)) for n = 1..nmax incrementally."""
    a = Fraction(alpha)
    if a <= 0 and a.denominator == 1:
        raise ValueError(f"gamma pole at alpha = {a}")
    c = Fraction(1)
    for n in range(1, nmax + 1):
        c *= (a + n - 1) / n
        yield n, c


# ---------------------------------------------------------------------------
# growth formulas for the census coefficients
# ---------------------------------------------------------------------------

def g_asym(n: int, digits: int = DEFAULT_DIGITS) -> mpmath.mpf:
    """First-order model (1/16) sqrt(3/(2 pi)) n^(-5/2) (256/27)^(n+1)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    with mp.workdps(digits):
        return (
            mp.sqrt(mp.mpf(3) / (2 * mp.pi))
            / 16
            * mp.mpf(n) ** mp.mpf("-2.5")
            * (mp.mpf(256) / 27) ** (n + 1)
        )


def g_asym_rel_error(n: int, exact: int | None = None, digits: int = DEFAULT_DIGITS) -> mpmath.mpf:
    """|model/exact - 1| against the exact coefficient."""
    if exact is None:
        exact = g_coeffs(n)[-1]
    with mp.workdps(digits):
        return abs(g_asym(n, digits) / mp.mpf(exact) - 1)


def h_asym(n: int, digits: int = DEFAULT_DIGITS) -> mpmath.mpf:
    """The quoted model (1/128) sqrt(3/pi) n^(-5/2) (27/4)^(n+1).

    Its growth base implies radius 4/27 (exposed as H_IMPLIED_RADIUS); how
    that squares with the measured growth of the reversion-defined series
    is a ledger report, not an assertion.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    with mp.workdps(digits):
        return (
            mp.sqrt(mp.mpf(3) / mp.pi)
            / 128
            * mp.mpf(n) ** mp.mpf("-2.5")
            * (mp.mpf(27) / 4) ** (n + 1)
        )


def const_B(digits: int = DEFAULT_DIGITS) -> mpmath.mpf:
    """Closed form B = (16/27) sqrt(3/(2 pi))."""
    with mp.workdps(digits):
        return mp.mpf(16) / 27 * mp.sqrt(mp.mpf(3) / (2 * mp.pi))


def const_B_enclosure(digits: int = 20) -> RationalInterval:
    """Rational enclosure of B, independent of mpmath.

    pi is bracketed by alternating partial sums of the Machin arctangent
    series; the square root is bracketed with integer isqrt.  Used as the
    independent cross-check of :func:`const_B`.
    """
    if digits < 1:
        raise ValueError("digits must be positive")
    eps = Fraction(1, 10 ** (digits + 6))

    def arctan_inv(x: int) -> tuple[Fraction, Fraction]:
        lo = hi = Fraction(0)
        term = Fraction(1, x)
        k = 0
        val = Fraction(0)
        while term > eps:
            val += term if k % 2 == 0 else -term
            k += 1
            term = Fraction(1, (2 * k + 1) * x ** (2 * k + 1))
        # alternating series: truncation error bounded by the next term
        if k % 2 == 0:
            lo, hi = val, val + term
        else:
            lo, hi = val - term, val
        return lo, hi

    a5 = arctan_inv(5)
    a239 = arctan_inv(239)
    pi_lo = 16 * a5[0] - 4 * a239[1]
    pi_hi = 16 * a5[1] - 4 * a239[0]
    bsq_lo = Fraction(128, 243) / pi_hi
    bsq_hi = Fraction(128, 243) / pi_lo

    scale = 10 ** (digits + 3)

    def sqrt_lo(f: Fraction) -> Fraction:
        return Fraction(isqrt(f.numerator * f.denominator * scale * scale), f.denominator * scale)

    def sqrt_hi(f: Fraction) -> Fraction:
        return Fraction(
            isqrt(f.numerator * f.denominator * scale * scale) + 1, f.denominator * scale
        )

    return RationalInterval(sqrt_lo(bsq_lo), sqrt_hi(bsq_hi))


# ---------------------------------------------------------------------------
# rigorous enclosure of A = g(27/256)
# ---------------------------------------------------------------------------

def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _poly_shift(p: list[int], c: int) -> list[int]:
    """Coefficients of p(m + c)."""
    out = [0] * len(p)
    for i, a in enumerate(p):
        for j in range(i + 1):
            out[j] += a * comb(i, j) * c ** (i - j)
    return out


@functools.lru_cache(maxsize=1)
def _prove_tail_domination() -> bool:
    """Certify t_{n+1}/t_n <= (n/(n+1))^(3/2) for all n >= 1.

    Squaring removes the half power; the claim becomes a polynomial
    inequality, proven by shifting to n = m+1 and checking that every
    coefficient of the difference is nonnegative.
    """
    p = [1]
    for a, b in ((4, 5), (4, 4), (4, 3), (4, 2)):
        p = _poly_mul(p, [b, a])
    q = [1]
    for a, b in ((1, 2), (3, 5), (3, 4), (3, 3)):
        q = _poly_mul(q, [b, a])
    lhs = [729 * c for c in _poly_mul(p, p)]
    for _ in range(3):
        lhs = _poly_mul(lhs, [1, 1])  # *(n+1)^3
    rhs = [65536 * c for c in _poly_mul(q, q)]
    rhs = _poly_mul(rhs, [0, 0, 0, 1])  # *n^3
    size = max(len(lhs), len(rhs))
    diff = [
        (rhs[i] if i < len(rhs) else 0) - (lhs[i] if i < len(lhs) else 0) for i in range(size)
    ]
    shifted = _poly_shift(diff, 1)
    if not all(c >= 0 for c in shifted):
        raise AssertionError("tail domination certificate failed")
    return True


def _terms_needed(digits: int) -> int:
    """Smallest N with proven tail budget 2N * t_N <= 10^-digits."""
    target = -digits
    lg = 0.0  # log10 g_n, tracked incrementally
    lr = log10(27.0 / 256.0)
    n = 1
    while True:
        bound = log10(2.0 * n) + lg + n * lr
        if bound <= target - 0.05:
            return n
        n += 1
        r = g_ratio(n - 1)
        lg += log10(r.numerator) - log10(r.denominator)


@functools.lru_cache(maxsize=8)
def _g_partial_enclosure(n_terms: int) -> RationalInterval:
    """Enclosure of A from the first n_terms exact terms plus the tail budget."""
    _prove_tail_domination()
    coeffs = g_coeffs(n_terms)
    series = make_series([0] + coeffs, n_terms)
    q = Fraction(2 * n_terms, 2 * n_terms + 1)  # q/(1-q) = 2N
    return eval_enclosure(series, SINGULARITY, q)


@functools.lru_cache(maxsize=8)
def eval_A(digits: int = 6) -> RationalInterval:
    """Rigorous rational enclosure of A = g(27/256), width <= 10^-digits.

    Cost and memory scale like 10^(2*digits/3) (the partial sums converge
    only polynomially at the radius), so desk-scale use stays at single-digit
    targets; 6 digits means roughly nine thousand exact terms.
    """
    if digits < 6:
        raise ValueError(f"digits must be >= 6, got {digits}")
    interval = _g_partial_enclosure(_terms_needed(digits))
    if interval.width > Fraction(1, 10**digits):
        raise AssertionError("enclosure wider than requested")
    return interval


def eval_A_paper_literal(digits: int = 6) -> RationalInterval:
    """The other reading: 27/256 + 2 * sum_{n>=2} g_n (27/256)^(n+1).

    Taken at face value this doubles the factor already inside g_n and
    shifts the exponent; it is computed so the ledger can show both values
    side by side.  Monotone image of the eval_A enclosure.
    """
    a = eval_A(digits)
    r = SINGULARITY

    def image(x: Fraction) -> Fraction:
        return r + 2 * r * (x - r)

    return RationalInterval(image(a.lo), image(a.hi))


# ---------------------------------------------------------------------------
# ratio table, radius estimation, fits
# ---------------------------------------------------------------------------

def fit_intercept_in_reciprocal(points: list[tuple[int, mpmath.mpf]], digits: int = 30) -> mpmath.mpf:
    """Least-squares intercept of y = a + b/n over (n, y) points."""
    if len(points) < 2:
        raise EstimationError("need at least two points to extrapolate")
    with mp.workdps(digits):
        s0 = mp.mpf(len(points))
        s1 = mp.fsum(mp.mpf(1) / n for n, _ in points)
        s2 = mp.fsum(mp.mpf(1) / n**2 for n, _ in points)
        sy = mp.fsum(y for _, y in points)
        sxy = mp.fsum(y / n for n, y in points)
        det = s0 * s2 - s1 * s1
        if det == 0:
            raise EstimationError("degenerate extrapolation system")
        return (s2 * sy - s1 * sxy) / det


@dataclass
class RatioTable:
    """Exact convolution ratios [x^n]g^2 / [x^n]g with reference constants."""

    rows: list[tuple[int, Fraction, float]]
    extrapolated: mpmath.mpf
    two_a: mpmath.mpf                 # 2*g(27/256): the standard prediction
    paper_constant: mpmath.mpf        # (27/2) sqrt(3/2) A B, as printed
    implied_constant: mpmath.mpf      # (81/32) sqrt(2/3) A B, from dividing the
                                      # two displayed coefficient forms
    a_interval: RationalInterval


@functools.lru_cache(maxsize=4)
def ratio_table(order: int, digits: int = 30) -> RatioTable:
    """Exact ratios for n <= order plus the three candidate limits."""
    if order < 10:
        raise ValueError(f"order must be >= 10, got {order}")
    g = g_coeffs(order)  # g[k] = g_{k+1}
    sq = [0] * (order + 1)
    for i in range(1, order):
        gi = g[i - 1]
        for j in range(1, order + 1 - i):
            sq[i + j] += gi * g[j - 1]
    rows = [(n, Fraction(sq[n], g[n - 1]), sq[n] / g[n - 1]) for n in range(2, order + 1)]
    window = max(2, order // 4)
    with mp.workdps(digits):
        pts = [(n, mp.mpf(rat.numerator) / rat.denominator) for n, rat, _ in rows[-window:]]
        extrapolated = fit_intercept_in_reciprocal(pts, digits)
        a_int = eval_A(6)
        a_mid = mp.mpf(a_int.midpoint.numerator) / a_int.midpoint.denominator
        b = const_B(digits)
        two_a = 2 * a_mid
        paper_constant = mp.mpf(27) / 2 * mp.sqrt(mp.mpf(3) / 2) * a_mid * b
        implied_constant = mp.mpf(81) / 32 * mp.sqrt(mp.mpf(2) / 3) * a_mid * b
    return RatioTable(rows, extrapolated, two_a, paper_constant, implied_constant, a_int)


def radius_estimate(coeffs, window: int, first_index: int = 0, digits: int = 30) -> mpmath.mpf:
    """Growth-rate radius estimate: ratio test plus linear-in-1/n intercept.

    Uses the trailing ``window`` consecutive ratios |c_n / c_{n+1}|.  Zero
    coefficients inside the window defeat the ratio test and raise
    :class:`EstimationError`.
    """
    if window < 4:
        raise ValueError(f"window must be >= 4, got {window}")
    cs = [Fraction(c) for c in coeffs]
    if len(cs) < window + 1:
        raise EstimationError(f"need {window + 1} coefficients, got {len(cs)}")
    tail = cs[-(window + 1):]
    if any(c == 0 for c in tail):
        raise EstimationError("zero coefficient inside the ratio window")
    base = first_index + len(cs) - (window + 1)
    with mp.workdps(digits):
        pts = []
        for k in range(window):
            ratio = abs(tail[k] / tail[k + 1])
            pts.append((base + k, mp.mpf(ratio.numerator) / ratio.denominator))
        return fit_intercept_in_reciprocal(pts, digits)


def f32_check(order: int) -> ClaimRecord:
    """Exact check of the hypergeometric term structure behind g.

    (a) the normalized coefficients f_{1,n} = 2 (4n-3)!/(3n-1)! satisfy the
    closed-form term ratio ((n+1/4)(n-1/4)(n-1/2)) / ((n+2/3)(n+1/3)) * 4^4/3^3;
    (b) rescaling x by 27/256 reproduces the 3F2(1/4,-1/4,-1/2; 2/3,1/3)
    Taylor terms scaled by 3/4, constant term dropped.
    """
    if order < 3:
        raise ValueError(f"order must be >= 3, got {order}")
    bad: list[tuple[int, Fraction]] = []
    # c_n = 2 (4n-3)! / (n! (3n-1)!) built incrementally
    c = {1: Fraction(1)}
    for n in range(1, order):
        c[n + 1] = c[n] * Fraction(
            (4 * n + 1) * (4 * n) * (4 * n - 1) * (4 * n - 2),
            (n + 1) * (3 * n + 2) * (3 * n + 1) * (3 * n),
        )
    for n in range(1, order):
        f1_ratio = c[n + 1] / c[n] * (n + 1)  # f_{1,n} = n! c_n
        stated = (
            (Fraction(n) + Fraction(1, 4))
            * (Fraction(n) - Fraction(1, 4))
            * (Fraction(n) - Fraction(1, 2))
            / ((Fraction(n) + Fraction(2, 3)) * (Fraction(n) + Fraction(1, 3)))
            * Fraction(256, 27)
        )
        if f1_ratio != stated:
            bad.append((n, f1_ratio - stated))
    # part (b)
    upper = (Fraction(1, 4), Fraction(-1, 4), Fraction(-1, 2))
    lower = (Fraction(2, 3), Fraction(1, 3))
    poch_u = [Fraction(1)] * 3
    poch_l = [Fraction(1)] * 2
    fact = 1
    for n in range(1, order + 1):
        for k, a in enumerate(upper):
            poch_u[k] *= a + n - 1
        for k, a in enumerate(lower):
            poch_l[k] *= a + n - 1
        fact *= n
        term = poch_u[0] * poch_u[1] * poch_u[2] / (poch_l[0] * poch_l[1] * fact)
        lhs = c[n] * SINGULARITY**n
        rhs = Fraction(3, 4) * term
        if lhs != rhs:
            bad.append((n, lhs - rhs))
    status = ClaimStatus.PASS if not bad else ClaimStatus.FAIL
    return ClaimRecord(
        claim_id="F32-term-structure",
        paper_ref="term ratio and 3F2(1/4,-1/4,-1/2; 2/3,1/3; x) match for f1(27x/256)",
        status=status,
        residual=bad,
        detail=f"both identities checked exactly for n <= {order}",
    )


@dataclass
class SingularExpansion:
    """Local-expansion constants recovered from the exact coefficients."""

    A: mpmath.mpf
    A1: mpmath.mpf
    B: mpmath.mpf                    # fitted coefficient of n^(-5/2)
    r: Fraction
    closed_form_B: mpmath.mpf
    fit_tolerance: float
    residual_two_term: mpmath.mpf    # rms of the c1 n^-5/2 + c2 n^-7/2 model
    residual_one_term: mpmath.mpf    # rms with c2 forced to zero

    def __post_init__(self):
        if self.r != SINGULARITY:
            raise ValueError("singularity location is pinned to 27/256")
        gap = abs(self.B / self.closed_form_B - 1)
        if gap > self.fit_tolerance:
            raise EstimationError(
                f"fitted B off by {float(gap):.3%} > declared {self.fit_tolerance:.1%}"
            )


def singular_fit(order: int, digits: int = 30) -> SingularExpansion:
    """Fit g_n (27/256)^n against c1 n^(-5/2) + c2 n^(-7/2).

    The fit runs over the trailing half of the range.  A is the midpoint of
    the rigorous enclosure; A1 comes from extrapolating partial sums of the
    derivative series in powers of n^(-1/2) (a fit, labelled as such).
    """
    if order < 100:
        raise ValueError(f"order must be >= 100, got {order}")
    g = g_coeffs(order)
    r = SINGULARITY
    with mp.workdps(digits):
        rv = mp.mpf(r.numerator) / r.denominator
        ts = []
        rpow = mp.mpf(1)
        for n in range(1, order + 1):
            rpow *= rv
            ts.append((n, mp.mpf(g[n - 1]) * rpow))
        half = ts[order // 2 - 1:]
        # 2x2 normal equations for basis (n^-5/2, n^-7/2)
        s11 = mp.fsum(mp.mpf(n) ** -5 for n, _ in half)
        s12 = mp.fsum(mp.mpf(n) ** -6 for n, _ in half)
        s22 = mp.fsum(mp.mpf(n) ** -7 for n, _ in half)
        b1 = mp.fsum(t * mp.mpf(n) ** mp.mpf("-2.5") for n, t in half)
        b2 = mp.fsum(t * mp.mpf(n) ** mp.mpf("-3.5") for n, t in half)
        det = s11 * s22 - s12 * s12
        if det == 0:
            raise EstimationError("singular normal equations in coefficient fit")
        c1 = (s22 * b1 - s12 * b2) / det
        c2 = (s11 * b2 - s12 * b1) / det
        res2 = mp.sqrt(
            mp.fsum(
                (t - c1 * mp.mpf(n) ** mp.mpf("-2.5") - c2 * mp.mpf(n) ** mp.mpf("-3.5")) ** 2
                for n, t in half
            )
            / len(half)
        )
        c1_only = b1 / s11
        res1 = mp.sqrt(
            mp.fsum((t - c1_only * mp.mpf(n) ** mp.mpf("-2.5")) ** 2 for n, t in half)
            / len(half)
        )
        a_mid = eval_A(6).midpoint
        a_val = mp.mpf(a_mid.numerator) / a_mid.denominator
        # A1 = g'(27/256): partial sums T_N = sum n g_n r^(n-1) grow to the
        # limit like a - const/sqrt(N); fit a + b N^(-1/2) + c N^(-3/2).
        partial = mp.mpf(0)
        samples = []
        rpow = mp.mpf(1)
        for n in range(1, order + 1):
            partial += n * mp.mpf(g[n - 1]) * rpow
            rpow *= rv
            if n >= order // 2:
                samples.append((n, partial))
        a1 = _fit_three_term_sqrt(samples, digits)
        tol = 0.02 if order >= 1000 else min(0.5, 20.0 / order)
    return SingularExpansion(
        A=a_val,
        A1=a1,
        B=c1,
        r=r,
        closed_form_B=const_B(digits),
        fit_tolerance=tol,
        residual_two_term=res2,
        residual_one_term=res1,
    )


def _fit_three_term_sqrt(points: list[tuple[int, mpmath.mpf]], digits: int) -> mpmath.mpf:
    """Intercept of y = a + b n^(-1/2) + c n^(-3/2) by least squares."""
    with mp.workdps(digits):
        basis = [lambda n: mp.mpf(1), lambda n: mp.mpf(n) ** mp.mpf("-0.5"),
                 lambda n: mp.mpf(n) ** mp.mpf("-1.5")]
        m = mp.zeros(3, 3)
        rhs = mp.zeros(3, 1)
        for n, y in points:
            vals = [f(n) for f in basis]
            for i in range(3):
                rhs[i] += vals[i] * y
                for j in range(3):
                    m[i, j] += vals[i] * vals[j]
        try:
            sol = mp.lu_solve(m, rhs)
        except ZeroDivisionError as exc:
            raise EstimationError("degenerate three-term fit") from exc
        return sol[0]
