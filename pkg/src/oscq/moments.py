"""Exact Bessel-weight moments, Hankel determinants, and the monic
orthogonal polynomials they determine.

The moments are pure gamma-function ratios, m_j = 2^j G((1+nu+j)/2) /
G((1+nu-j)/2), exact up to rounding.  Degree-n polynomials come from the
n x n Hankel system with adaptive precision escalation: the matrices are
exponentially ill-conditioned, so the solve doubles its working precision
until the re-orthogonality residual certificate passes.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum

from mpmath import mp, mpc, mpf

from .mpfun import gamma_fn, recip_gamma, require_prec, round_to, workprec
from .quadrature import quad_ts

PREC_CAP_DEFAULT = 1 << 20


class IndeterminateHankelError(ArithmeticError):
    """Hankel determinant too small at working precision to certify a sign."""


class SolverError(RuntimeError):
    """Linear solve missed its residual target after precision escalation."""


class Variable(Enum):
    RAW_X = "raw_x"          # P_n(x), real coefficients
    RESCALED_Z = "rescaled_z"  # (i n pi)^-n P_n(i n pi z)


@dataclass(frozen=True)
class MomentSequence:
    nu: mpf
    values: tuple
    prec: int

    def __getitem__(self, j):
        return self.values[j]

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class MonicPolynomial:
    """Monic polynomial; coeffs are c_0..c_{n-1}, leading coefficient 1."""

    degree: int
    coeffs: tuple
    variable: Variable
    prec: int
    residual: mpf = field(default_factory=lambda: mpf(0))

    def eval(self, z, prec: int | None = None):
        """Horner evaluation at z (mpf or mpc)."""
        with workprec(prec or self.prec):
            z = mp.mpmathify(z)
            acc = z * 0 + 1
            for c in reversed(self.coeffs):
                acc = acc * z + c
            return +acc

    def deriv_eval(self, z, prec: int | None = None):
        with workprec(prec or self.prec):
            z = mp.mpmathify(z)
            n = self.degree
            acc = z * 0 + n
            for k in range(n - 1, 0, -1):
                acc = acc * z + k * self.coeffs[k]
            return +acc


def moment(j: int, nu, prec: int):
    """Regularized moment m_j of the oscillatory Bessel weight."""
    if j < 0:
        raise ValueError("moment index must be >= 0")
    require_prec(prec)
    if j == 0:
        return mpf(1)   # gamma ratio of equal arguments, exactly
    with workprec(prec):
        nu = mpf(nu)
        a = (1 + nu + j) / 2
        b = (1 + nu - j) / 2
        rg = recip_gamma(b, prec + 16)
        if rg == 0:
            return mpf(0)
        v = mpf(2) ** j * gamma_fn(a, prec + 16) * rg
    return round_to(v, prec)


def moment_sequence(kmax: int, nu, prec: int) -> MomentSequence:
    """Moments m_0..m_kmax at the given precision."""
    vals = tuple(moment(j, nu, prec) for j in range(kmax + 1))
    with workprec(prec):
        nu = mpf(nu)
    return MomentSequence(nu=nu, values=vals, prec=prec)


def _hankel_matrix(n: int, nu, prec: int):
    ms = moment_sequence(2 * n - 1, nu, prec)
    return mp.matrix([[ms[i + j] for j in range(n)] for i in range(n)]), ms


def _det_at(n: int, nu, prec: int):
    with workprec(prec):
        h, _ = _hankel_matrix(n, nu, prec)
        return mp.det(h)


def hankel_det(n: int, nu, prec: int):
    """Hankel determinant of the moment matrix; nonzero certifies existence.

    Certification: the determinant is recomputed with 64 extra bits and the
    two values must agree to 2^(-prec/2) relative.  Disagreement (or an
    exact zero) means the precision cannot separate the value from rounding
    noise, reported as IndeterminateHankelError rather than a true zero.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    require_prec(prec)
    d1 = _det_at(n, nu, prec)
    d2 = _det_at(n, nu, prec + 64)
    if d2 == 0 or d1 == 0 or abs(d1 - d2) > mpf(2) ** (-prec // 2) * abs(d2):
        raise IndeterminateHankelError(
            f"Hankel det not certifiable at prec={prec} "
            f"(got {mp.nstr(d1, 6)} vs {mp.nstr(d2, 6)})")
    return round_to(d2, prec)


def _prec_cap() -> int:
    cap = os.environ.get("OSCQ_PREC_CAP")
    return int(cap) if cap else PREC_CAP_DEFAULT


def _solve_hankel(n: int, nu, work: int):
    """One Hankel solve at fixed precision; returns (coeffs, residual)."""
    with workprec(work):
        ms = moment_sequence(2 * n, nu, work)
        a = mp.matrix([[ms[i + j] for j in range(n)] for i in range(n)])
        rhs = mp.matrix([-ms[j + n] for j in range(n)])
        # row equilibration keeps the pivoting meaningful across the
        # factorially growing rows
        for i in range(n):
            s = max(max(abs(a[i, j]) for j in range(n)), abs(rhs[i]))
            for j in range(n):
                a[i, j] /= s
            rhs[i] /= s
        sol = mp.lu_solve(a, rhs)
        coeffs = [sol[k] for k in range(n)]
    # residual of the unscaled system, computed with extra headroom
    with workprec(2 * work):
        worst = mpf(0)
        for j in range(n):
            r = mpf(0)
            row_scale = mpf(0)
            for k in range(n):
                term = coeffs[k] * ms[j + k]
                r += term
                row_scale = max(row_scale, abs(ms[j + k]))
            r += ms[j + n]
            row_scale = max(row_scale, abs(ms[j + n]))
            worst = max(worst, abs(r) / row_scale)
    return coeffs, worst


def monic_op(n: int, nu, prec: int) -> MonicPolynomial:
    """Monic orthogonal polynomial P_n (raw frame) from the Hankel system.

    Starts at max(prec, 256, 16 n) bits and doubles until the
    re-orthogonality residual is below 2^(-work/4); the cap is 2^20 bits
    (override with OSCQ_PREC_CAP).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    require_prec(prec)
    work = max(prec, 256, 16 * n)
    cap = _prec_cap()
    while True:
        try:
            hankel_det(n, nu, work)
        except IndeterminateHankelError:
            if work >= cap:
                raise
            work *= 2
            continue
        coeffs, residual = _solve_hankel(n, nu, work)
        if residual <= mpf(2) ** (-(work // 4)):
            real_coeffs = tuple(
                c.real if isinstance(c, mpc) else c for c in coeffs)
            return MonicPolynomial(degree=n, coeffs=real_coeffs,
                                   variable=Variable.RAW_X, prec=work,
                                   residual=residual)
        if work >= cap:
            raise SolverError(
                f"Hankel solve residual {mp.nstr(residual, 6)} above target "
                f"at precision cap {cap}")
        work *= 2


def rescale_to_tilde(p: MonicPolynomial, n: int) -> MonicPolynomial:
    """Rescaled polynomial: coefficient transport c_k -> c_k (i n pi)^(k-n)."""
    if p.variable is not Variable.RAW_X:
        raise ValueError("rescale_to_tilde expects a raw-frame polynomial")
    if p.degree != n:
        raise ValueError("degree mismatch")
    with workprec(p.prec):
        base = mpc(0, 1) * n * mp.pi
        new = tuple(p.coeffs[k] * base ** (k - n) for k in range(n))
    return MonicPolynomial(degree=n, coeffs=new, variable=Variable.RESCALED_Z,
                           prec=p.prec, residual=p.residual)


def _tail_cutoff(n: int, j: int, prec: int):
    """X with x^(n+j) exp(-n pi x) below 2^-(prec+20) for x >= X."""
    with workprec(64):
        goal = -(prec + 20) * mp.ln(2)
        x = mpf(2)
        while (n + j) * mp.log(x) - n * mp.pi * x > goal:
            x *= 2
        return +x


def orthogonality_residuals(pt: MonicPolynomial, n: int, nu, prec: int,
                            js=None, target=None):
    """Quadrature check of the defining complex-weight orthogonality.

    Returns {j: (residual, scale)} where scale is the absolute mass
    integral(|x|^j K_nu(n pi |x|) dx) over the truncated range.  Bessel
    values are shared across the j batch.
    """
    if pt.variable is not Variable.RESCALED_Z:
        raise ValueError("orthogonality check expects the rescaled frame")
    if js is None:
        js = range(n)
    js = list(js)
    x_max = _tail_cutoff(n, max(js), prec)
    kcache: dict = {}

    def kval(ax):
        v = kcache.get(ax)
        if v is None:
            v = mp.besselk(nu, n * mp.pi * ax)
            kcache[ax] = v
        return v

    out = {}
    rel = target if target is not None else mpf(2) ** (-(prec // 4))
    with workprec(prec, guard=64):
        nu = mpf(nu)
        phase_pos = mp.exp(-mpc(0, 1) * nu * mp.pi / 2)
        phase_neg = mp.exp(mpc(0, 1) * nu * mp.pi / 2)
        for j in js:
            def f(x, j=j):
                ax = abs(x)
                w = kval(ax) * (phase_pos if x > 0 else phase_neg)
                return pt.eval(x, prec + 64) * x ** j * w

            def fabs(x, j=j):
                ax = abs(x)
                return ax ** j * kval(ax)

            # the weight mass sets the meaningful absolute scale for the
            # cancellation-dominated residual integral
            scale, _ = quad_ts(fabs, [-x_max, 0, x_max], prec, target=rel)
            val, _ = quad_ts(f, [-x_max, 0, x_max], prec, target=rel * scale)
            out[j] = (val, scale)
    return out


def orthogonality_residual(pt: MonicPolynomial, j: int, n: int, nu,
                           prec: int, target=None):
    """Single-moment orthogonality residual (complex) and its scale."""
    return orthogonality_residuals(pt, n, nu, prec, js=[j],
                                   target=target)[j]
