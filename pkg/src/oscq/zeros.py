"""Simultaneous root finding for the monic orthogonal polynomials and
zero-distribution statistics against the limiting laws.

Aberth-Ehrlich iteration, no deflation: all n roots are refined together,
which is robust for the clustered complex roots these polynomials produce.
Runs are deterministic for a given (polynomial, precision).
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp, mpc, mpf

from .equilibrium import epsilon_n, psi_cdf
from .moments import MonicPolynomial, SolverError, Variable
from .mpfun import workprec

MAX_SWEEPS = 500


@dataclass(frozen=True)
class ZeroSet:
    roots: tuple          # mpc, sorted by (Re, Im)
    residuals: tuple      # final Newton-correction magnitudes |P/P'|
    variable: Variable
    prec: int

    def __len__(self):
        return len(self.roots)


def _initial_guesses(p: MonicPolynomial, prec: int):
    n = p.degree
    with workprec(prec):
        out = []
        for j in range(n):
            th = 2 * mp.pi * (j + mpf(1) / 2) / n
            if p.variable is Variable.RESCALED_Z:
                # ellipse around [-1,1], where the roots accumulate
                out.append(mpc(mpf("1.2") * mp.cos(th), mpf("0.4") * mp.sin(th)))
            else:
                out.append(mpc(mp.cos(th), mp.sin(th)))
        return out


def find_zeros(p: MonicPolynomial, prec: int | None = None) -> ZeroSet:
    """All roots of p with Newton residuals below 2^(-prec/2)."""
    if p.degree < 1:
        raise ValueError("degree must be >= 1")
    prec = prec or p.prec
    n = p.degree
    tol = mpf(2) ** (-(prec // 2))
    with workprec(prec, guard=64):
        z = _initial_guesses(p, prec)
        if n == 1:
            z = [mpc(-p.coeffs[0])]
        worst = mpf(0)
        for _ in range(MAX_SWEEPS):
            worst = mpf(0)
            for k in range(n):
                pv = p.eval(z[k], prec + 64)
                if pv == 0:
                    continue
                dv = p.deriv_eval(z[k], prec + 64)
                if dv == 0:
                    z[k] += tol  # nudge off the critical point
                    continue
                newton = pv / dv
                worst = max(worst, abs(newton))
                s = mp.zero
                for j in range(n):
                    if j != k:
                        s += 1 / (z[k] - z[j])
                denom = 1 - newton * s
                z[k] -= newton if denom == 0 else newton / denom
            if worst < tol:
                break
        else:
            raise SolverError(
                f"Aberth iteration did not converge in {MAX_SWEEPS} sweeps; "
                f"worst Newton correction {mp.nstr(worst, 6)}")
        roots = tuple(mpc(w) for w in
                      sorted(z, key=lambda w: (w.real, w.imag)))
        residuals = []
        for w in roots:
            dv = p.deriv_eval(w, prec + 64)
            residuals.append(abs(p.eval(w, prec + 64) / dv) if dv != 0
                             else mpf(0))
        residuals = tuple(residuals)
    return ZeroSet(roots=roots, residuals=residuals,
                   variable=p.variable, prec=prec)


@dataclass(frozen=True)
class ZeroLineStats:
    max_dev: object        # mpf, or None when no roots are retained
    zeros_considered: int
    epsilon_n: mpf


def zero_line_stats(zs: ZeroSet, n: int, nu, delta) -> ZeroLineStats:
    """Deviation of retained zeros from the vertical line Re = nu*pi/2.

    Retained means outside the disks around 0 and +-1 in the rescaled
    frame (|w| < delta/pi and |w -+ 1| < delta/pi are dropped, matching
    the raw-frame disks of radius n*delta).  Deviations are measured in
    the raw frame, z = i n pi w.
    """
    if zs.variable is not Variable.RESCALED_Z:
        raise ValueError("zero_line_stats expects rescaled-frame roots")
    with workprec(zs.prec):
        nu = mpf(nu)
        delta = mpf(delta)
        rad = delta / mp.pi
        target = nu * mp.pi / 2
        devs = []
        for w in zs.roots:
            if abs(w) < rad or abs(w - 1) < rad or abs(w + 1) < rad:
                continue
            re_z = -n * mp.pi * w.imag
            devs.append(abs(re_z - target))
        eps = epsilon_n(n, nu, zs.prec)
        if not devs:
            return ZeroLineStats(max_dev=None, zeros_considered=0,
                                 epsilon_n=eps)
        return ZeroLineStats(max_dev=+max(devs), zeros_considered=len(devs),
                             epsilon_n=eps)


def ecdf_vs_psi(zs: ZeroSet, prec: int | None = None):
    """Kolmogorov distance between the real-part empirical CDF and the
    equilibrium CDF."""
    if len(zs.roots) == 0:
        raise ValueError("empty zero set")
    prec = prec or zs.prec
    with workprec(prec):
        xs = sorted(w.real for w in zs.roots)
        n = len(xs)
        dist = mpf(0)
        for i, x in enumerate(xs):
            x = min(max(x, mpf(-1)), mpf(1))
            fx = psi_cdf(x, prec)
            dist = max(dist, abs(mpf(i + 1) / n - fx), abs(mpf(i) / n - fx))
        return +dist
