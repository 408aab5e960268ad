"""Completed symmetric-cube L-functions by a smoothed approximate functional equation.

For Lambda(s) = N^(s/2) gamma(s) L(s) with Lambda(s) = eps * Lambda(w - s),
w = 3k - 2, and any split x > 0,

    Lambda(s) = x^-s I(s, sqrt(N) x) + eps x^(w-s) I(w - s, sqrt(N) / x),
    I(s, Y)   = 1/(2 pi i) \\int_(c) gamma(z) D(z) Y^z dz / (z - s),

where D(z) = sum b_n n^-z.  The line integral is a trapezoidal sum over
z = c + i m h.  One line (fixed c, h, node values gamma(z) D(z)) serves every
s with max(Re s, Re(w - s)) <= c - delta, so the critical points share it.

Error radii combine: the trapezoid refinement difference, the height
truncation (Stirling estimate), the n-tail (rigorous, from
|G_s(t)| <= gamma(sigma) t^-sigma for sigma >= Re s, valid because the inverse
Mellin transform of gamma is positive, together with |b_n| <= 8 n^(3k/2)),
and accumulated rounding.  The quadrature and truncation parts are
heuristic estimates rather than proofs.
"""

from __future__ import annotations

import logging
import math
import threading
from dataclasses import dataclass, field

import gmpy2
import mpmath
from mpmath import mpc, mpf

from ..errors import InsufficientPrecisionError, RootNumberError, RootNumberUnknownError
from ..modforms import Eigenform
from ..sym3rep import euler_factor_sym3
from .ball import ErrorBall
from .characters import DirichletCharacter, trivial_character
from .gamma import GammaFactor

log = logging.getLogger(__name__)

# Distance from the line to the nearest singularity served by it.
DELTA = 10.0
# Splits x used when solving for the root number; also the largest split planned for.
ROOT_SPLIT = 1.2
MAX_SPLIT = 1.3
# Extra decimal digits demanded of every evaluation beyond the requested ones.
SAFETY_DIGITS = 10
HEURISTIC_NOTE = (
    "quadrature and height-truncation radii are refinement/Stirling estimates; "
    "the Dirichlet-tail radius is a rigorous bound"
)


def dirichlet_coefficients(f: Eigenform, twist: DirichletCharacter | None = None, n_terms: int | None = None):
    """b_0..b_N of L(Sym^3 f x twist, s) (b_0 = 0), from the inverted local factors."""
    n_terms = f.precision if n_terms is None else n_terms
    if n_terms > f.precision:
        raise InsufficientPrecisionError(
            f"need a_p for p <= {n_terms}, eigenform known to {f.precision}",
            needed=n_terms,
            available=f.precision,
        )
    twist = twist or trivial_character()
    spf = list(range(n_terms + 1))
    for i in range(2, math.isqrt(n_terms) + 1):
        if spf[i] == i:
            for j in range(i * i, n_terms + 1, i):
                if spf[j] == j:
                    spf[j] = i
    local = {}
    b = [0] * (n_terms + 1)
    if n_terms >= 1:
        b[1] = 1
    for n in range(2, n_terms + 1):
        p = spf[n]
        m, e = n, 0
        while m % p == 0:
            m //= p
            e += 1
        if p not in local:
            depth = 1
            while p ** (depth + 1) <= n_terms:
                depth += 1
            local[p] = euler_factor_sym3(p, f.a(p), f.weight).inverse_series(depth)
        b[n] = b[m] * local[p][e]
    if not twist.is_trivial:
        b = [bn * twist(n) for n, bn in enumerate(b)]
    return b


def _lgamma_real(k: int, sigma: float) -> float:
    """log gamma(sigma) for real sigma > k - 1."""
    lg = math.log(2) * 2 - (2 * sigma - (k - 1)) * math.log(2 * math.pi)
    return lg + math.lgamma(sigma) + math.lgamma(sigma - k + 1)


def tail_bound_log(k: int, n_max: int, sigma: float, scale: float) -> float:
    """log of a bound for sum_{n > n_max} |b_n| |G_s(n / scale)| with Re s = sigma."""
    a0 = 1.5 * k + 1.0
    lo = max(sigma, a0 + 0.25, k - 0.5)
    best = math.inf
    logn = math.log(n_max)
    logy = math.log(scale)
    t = lo
    while t < lo + 2000:
        a = t - 1.5 * k
        val = math.log(8) + _lgamma_real(k, t) + t * logy + (1 - a) * logn - math.log(a - 1)
        if val < best:
            best = val
        elif val > best + 50:
            break
        t += 0.25
    return best


def terms_needed(k: int, log_tol: float, sigma: float, scale: float) -> int:
    """Smallest N whose Dirichlet tail bound is below exp(log_tol)."""
    lo, hi = 1, 2
    while tail_bound_log(k, hi, sigma, scale) > log_tol:
        lo, hi = hi, hi * 2
        if hi > 10**8:
            raise InsufficientPrecisionError("Dirichlet tail bound never reaches the target")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if tail_bound_log(k, mid, sigma, scale) > log_tol:
            lo = mid
        else:
            hi = mid
    return hi


def standard_line_abscissa(k: int) -> float:
    """Line shared by every point of the closed critical strip region [k, 2k-2]."""
    return (2 * k - 2) + DELTA


def required_terms(k: int, digits: int, conductor: int = 1, sigma_max: float | None = None) -> int:
    """Number of Dirichlet (and hence q-expansion) coefficients needed for ``digits``."""
    c = standard_line_abscissa(k) if sigma_max is None else max(standard_line_abscissa(k), sigma_max + DELTA)
    w = 3 * k - 2
    log_tol = -math.log(10) * (digits + SAFETY_DIGITS) + _lgamma_real(k, w / 2) - math.log(10)
    return terms_needed(k, log_tol, c - DELTA, math.sqrt(conductor) * MAX_SPLIT)


def _to_gmpy(x: mpf):
    sign, man, exp, _ = x._mpf_
    v = gmpy2.mul_2exp(gmpy2.mpfr(man), exp) if man else gmpy2.mpfr(0)
    return -v if sign else v


def _from_gmpy(x) -> mpf:
    if x == 0:
        return mpf(0)
    man, exp = x.as_mantissa_exp()
    return mpf((int(man), int(exp)))


def _dirichlet_on_nodes(b, c: mpf, h: mpf, count: int, prec: int, offset: mpf = mpf(0)):
    """[D(c + i(offset + m h)) for m < count] with D(z) = sum b_n n^-z, by phase rotation."""
    with gmpy2.context(gmpy2.get_context(), precision=prec + 20):
        acc_re = [gmpy2.mpfr(0)] * count
        acc_im = [gmpy2.mpfr(0)] * count
        gc = _to_gmpy(c)
        gh = _to_gmpy(h)
        goff = _to_gmpy(offset)
        for n in range(1, len(b)):
            bn = b[n]
            if not bn:
                continue
            ln = gmpy2.log(gmpy2.mpfr(n))
            mag = gmpy2.mpfr(bn) * gmpy2.exp(-gc * ln)
            ang = -goff * ln
            cur = gmpy2.mpc(mag * gmpy2.cos(ang), mag * gmpy2.sin(ang))
            rot = gmpy2.mpc(gmpy2.cos(gh * ln), -gmpy2.sin(gh * ln))
            for m in range(count):
                acc_re[m] += cur.real
                acc_im[m] += cur.imag
                cur *= rot
        return [mpc(_from_gmpy(r), _from_gmpy(i)) for r, i in zip(acc_re, acc_im)]


@dataclass
class _Line:
    """Trapezoid nodes z_m = c + i m h (m >= 0) with stored gamma(z_m) D(z_m)."""

    c: mpf
    h: mpf
    dps: int
    nterms: int
    log_tol: float
    dabs: float  # log sum |b_n| n^-c
    values: list = field(default_factory=list)

    @property
    def top(self) -> mpf:
        return (len(self.values) - 1) * self.h


class LFunction:
    """L(Sym^3 f x chi, s) for a level-1 eigenform f and a real primitive character chi.

    The instance is immutable once ``root_number`` has been fixed; node caches are
    guarded by a lock.  Fixing the root number must happen before any
    concurrent call to ``complete`` or ``critical_values``.
    """

    degree = 4

    def __init__(self, form: Eigenform, twist: DirichletCharacter | None = None):
        self.form = form
        self.k = form.weight
        self.twist = twist or trivial_character()
        if not self.twist.is_real:
            raise ValueError("only real characters are supported")
        self.conductor = self.twist.conductor**4
        self.gamma_shifts = (0, self.k - 1)
        self.motivic_weight = 3 * self.k - 3
        self.w = 3 * self.k - 2  # reflection s -> w - s
        self.gamma = GammaFactor(self.k)
        self.root_number: ErrorBall | None = None
        self._b = None
        self._lines: dict = {}
        self._lock = threading.Lock()

    # -- data -----------------------------------------------------------------

    @property
    def coefficients(self):
        if self._b is None:
            self._b = dirichlet_coefficients(self.form, self.twist)
        return self._b

    def reflect(self, s):
        return self.w - s

    def critical_points(self):
        return [self.k + j for j in range(self.k - 1)]

    def _scale_log(self, sigma: float) -> float:
        """log of the typical size of Lambda near Re s = sigma (for relative targets)."""
        vals = []
        for t in (sigma, self.w - sigma):
            if t <= self.k - 1 + 0.25:
                t = self.w / 2
            vals.append(_lgamma_real(self.k, t) + 0.5 * t * math.log(self.conductor))
        return max(vals)

    # -- line construction ------------------------------------------------------

    def _line_for(self, sigma_max: float, digits: int) -> _Line:
        c = float(max(standard_line_abscissa(self.k), math.ceil(sigma_max + DELTA)))
        key = (c, digits)
        with self._lock:
            line = self._lines.get(key)
            if line is None:
                line = self._build_line(c, digits)
                self._lines[key] = line
        return line

    def _log_dabs(self, sigma: float, nterms: int) -> float:
        b = self.coefficients
        terms = [math.log(abs(b[n])) - sigma * math.log(n) for n in range(1, nterms + 1) if b[n]]
        top = max(terms)
        return top + math.log(sum(math.exp(t - top) for t in terms))

    def _build_line(self, c: float, digits: int, h=None) -> _Line:
        k = self.k
        sqrtn = math.sqrt(self.conductor)
        ymax = sqrtn * MAX_SPLIT
        log_tol = -math.log(10) * (digits + SAFETY_DIGITS) + _lgamma_real(k, self.w / 2)
        log_tol += 0.5 * (self.w / 2) * math.log(self.conductor)
        nterms = terms_needed(k, log_tol - math.log(10), c - DELTA, ymax)
        if nterms > self.form.precision:
            raise InsufficientPrecisionError(
                f"{digits} digits need {nterms} Dirichlet coefficients, only {self.form.precision} "
                "eigenform coefficients available",
                needed=nterms,
                available=self.form.precision,
            )
        dabs = self._log_dabs(c, nterms)
        log_fmax = _lgamma_real(k, c) + dabs + c * math.log(ymax) - math.log(DELTA)
        dps = int(math.ceil((log_fmax - log_tol) / math.log(10))) + 15
        if h is None:
            d = 0.9 * DELTA
            strip = max(
                _lgamma_real(k, c + d) + self._log_dabs(c + d, nterms) + (c + d) * math.log(ymax),
                _lgamma_real(k, c - d) + self._log_dabs(c - d, nterms) + (c - d) * math.log(ymax),
            ) - math.log(DELTA - d)
            h0 = 2 * math.pi * d / (strip - log_tol + math.log(20))
            h = h0 / 2
        line = _Line(mpf(c), mpf(h), dps, nterms, log_tol, dabs)
        log.debug("line c=%s h=%.4g dps=%d terms=%d", c, h, dps, nterms)
        return line

    def _extend(self, line: _Line, top: float) -> None:
        """Compute node values up to height ``top``."""
        have = len(line.values)
        want = int(math.ceil(top / float(line.h))) + 1
        if want <= have:
            return
        want = max(want, have + 64)
        # Round up to keep an odd node count (m = 0..2M) for the coarse/fine pair.
        if want % 2 == 0:
            want += 1
        with mpmath.workdps(line.dps):
            prec = mpmath.mp.prec
            dvals = _dirichlet_on_nodes(self.coefficients[: line.nterms + 1], line.c, line.h, want - have, prec,
                                        offset=have * line.h)
            k1 = self.k - 1
            for m, dz in enumerate(dvals, start=have):
                z = mpc(line.c, m * line.h)
                g = mpmath.gamma(z)
                shifted = g
                for t in range(1, k1 + 1):
                    shifted = shifted / (z - t)
                gam = 4 * (2 * mpmath.pi) ** (k1 - 2 * z) * g * shifted
                line.values.append(gam * dz)

    def _truncation_height(self, line: _Line, s_imag: float, logy: float) -> float:
        """Height beyond which the integrand's tail is below the line tolerance."""
        k = self.k
        c = float(line.c)
        y = abs(s_imag) + (2 * c - k) * 2 / math.pi + 2
        with mpmath.workdps(15):
            while True:
                z = mpc(c, y)
                lg = (2 * math.log(2) + (k - 1 - 2 * c) * math.log(2 * math.pi)
                      + float(mpmath.re(mpmath.loggamma(z) + mpmath.loggamma(z - k + 1))))
                est = lg + line.dabs + c * logy - math.log(y - abs(s_imag)) + math.log(2 / math.pi ** 2)
                if est < line.log_tol - math.log(10):
                    return y, est
                y += 2.0

    def _line_integral(self, line: _Line, s, Y) -> ErrorBall:
        """I(s, Y) on ``line`` with a combined error radius."""
        logy = math.log(float(Y))
        top, log_trunc = self._truncation_height(line, float(mpmath.im(s)), logy)
        with self._lock:
            self._extend(line, top)
        count = int(math.ceil(top / float(line.h))) + 1
        if count % 2 == 0:
            count += 1
        vals = line.values[:count]
        with mpmath.workdps(line.dps):
            Y = mpf(Y)
            lny = mpmath.log(Y)
            ypow = Y**line.c
            rot = mpmath.expj(line.h * lny)
            phase = mpc(1)
            fine = mpc(0)
            coarse = mpc(0)
            absum = mpf(0)
            for m, gd in enumerate(vals):
                v = gd * phase * ypow
                z = mpc(line.c, m * line.h)
                term = v / (z - s)
                if m:
                    term += v.conjugate() / (z.conjugate() - s)
                fine += term
                if m % 2 == 0:
                    coarse += term
                absum += abs(term)
                phase *= rot
            scale = line.h / (2 * mpmath.pi)
            fine *= scale
            coarse *= 2 * scale
            quad_err = abs(fine - coarse)
            round_err = absum * scale * count * mpf(2) ** (8 - mpmath.mp.prec)
            trunc_err = mpmath.exp(log_trunc)
            tail_err = mpmath.exp(tail_bound_log(self.k, line.nterms, float(mpmath.re(s)), float(Y)))
            return ErrorBall(fine, quad_err + round_err + trunc_err + tail_err)

    def _refined(self, line: _Line, digits: int) -> _Line:
        new = self._build_line(float(line.c), digits, h=float(line.h) / 2)
        with self._lock:
            self._lines[(float(line.c), digits)] = new
        return new

    def afe_parts(self, s, digits: int, split=1):
        """(A, B) with Lambda(s) = A + eps * B for the split ``split``; needs no root number."""
        s = mpmath.mpmathify(s)
        sigma = float(mpmath.re(s))
        sigma_max = max(sigma, self.w - sigma)
        line = self._line_for(sigma_max, digits)
        target = math.exp(self._scale_log(sigma) - math.log(10) * (digits + SAFETY_DIGITS))
        for _ in range(4):
            with mpmath.workdps(line.dps):
                x = mpf(split)
                sqrtn = mpmath.sqrt(self.conductor)
                a = self._line_integral(line, s, sqrtn * x)
                b = self._line_integral(line, self.w - s, sqrtn / x)
                if split != 1:
                    a = a * ErrorBall(x ** (-s))
                    b = b * ErrorBall(x ** (self.w - s))
            if a.rad < target and b.rad < target:
                return a, b
            log.info("refining line c=%s (radius %s > %s)", line.c, mpmath.nstr(max(a.rad, b.rad), 3), target)
            line = self._refined(line, digits)
        return a, b

    # -- public evaluation ----------------------------------------------------

    def complete(self, s, digits: int = 30, split=1) -> ErrorBall:
        """Lambda(s) = N^(s/2) gamma(s) L(s) as an error ball."""
        if self.root_number is None:
            raise RootNumberUnknownError()
        a, b = self.afe_parts(s, digits, split)
        with mpmath.workdps(digits + 30):
            return a + self.root_number * b

    def value(self, s, digits: int = 30, split=1) -> ErrorBall:
        """L(s) = Lambda(s) / (N^(s/2) gamma(s))."""
        lam = self.complete(s, digits, split)
        with mpmath.workdps(digits + 30):
            g = self.gamma(s, digits + 10)
            g = g * ErrorBall(mpmath.sqrt(self.conductor) ** mpmath.mpmathify(s))
            return lam / g

    def dirichlet_series(self, s, digits: int = 30) -> ErrorBall:
        """Direct partial sum of sum b_n n^-s with a rigorous tail bound (needs Re s > 3k/2 + 1)."""
        s = mpmath.mpmathify(s)
        sigma = float(mpmath.re(s))
        a = sigma - 1.5 * self.k
        if a <= 1:
            raise ValueError(f"direct summation needs Re(s) > {1.5 * self.k + 1}")
        log_tol = -math.log(10) * (digits + SAFETY_DIGITS)
        n = 2
        while math.log(8) + (1 - a) * math.log(n) - math.log(a - 1) > log_tol:
            n *= 2
        if n > self.form.precision:
            raise InsufficientPrecisionError("direct sum needs more coefficients", needed=n,
                                             available=self.form.precision)
        b = self.coefficients
        with mpmath.workdps(digits + 20):
            total = mpmath.fsum(b[m] * mpmath.power(m, -s) for m in range(1, n + 1) if b[m])
            tail = 8 * mpf(n) ** (1 - a) / (a - 1)
            return ErrorBall(total, tail + abs(total) * mpf(10) ** (-(digits + 15)))

    def __repr__(self):
        return f"LFunction(Sym^3 f_{self.k} x {self.twist.label}, conductor={self.conductor})"


ROOT_POINT_OFFSETS = (
    mpc("0.63", "0.41"),
    mpc("1.37", "0.23"),
    mpc("-0.81", "0.57"),
    mpc("2.11", "0.93"),
)


def root_number(L: LFunction, digits: int = 30) -> ErrorBall:
    """Solve for eps and store it on ``L``.

    At a non-central, non-critical s0, Lambda(s0) = A_x + eps B_x must not depend
    on the split x; comparing x = 1 with x = 1.2 gives
    eps = (A_1 - A_x) / (B_x - B_1).  Retries at shifted s0 when the denominator
    ball contains zero.
    """
    last = None
    for offset in ROOT_POINT_OFFSETS:
        s0 = L.w / mpf(2) + offset
        a1, b1 = L.afe_parts(s0, digits, 1)
        ax, bx = L.afe_parts(s0, digits, ROOT_SPLIT)
        with mpmath.workdps(digits + 30):
            den = bx - b1
            if den.contains_zero():
                last = s0
                log.info("root number denominator vanishes at s0=%s, retrying", s0)
                continue
            eps = (a1 - ax) / den
            modulus_err = abs(abs(eps.mid) - 1)
            if modulus_err > eps.rad + mpf(10) ** (-digits):
                raise RootNumberError(f"|eps| = {mpmath.nstr(abs(eps.mid), 20)} is not 1 (radius {eps.rad})")
        L.root_number = eps
        return eps
    raise RootNumberError(f"root number undetermined: denominator contained zero up to s0 = {last}")
