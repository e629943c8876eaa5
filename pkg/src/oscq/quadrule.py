"""Complex Gaussian quadrature for the oscillatory Bessel weight.

Nodes are the zeros of the degree-n orthogonal polynomial (raw frame);
weights solve the Vandermonde moment system, which is the defining
property here because the sign-changing weight admits no positive-measure
Christoffel shortcut.  Exactness over degrees <= 2n-1 against the exact
moment formula is the certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp, mpc, mpf

from .moments import moment_sequence, monic_op, rescale_to_tilde
from .mpfun import require_prec, workprec
from .zeros import find_zeros


@dataclass(frozen=True)
class QuadratureRule:
    nu: mpf
    n: int
    nodes: tuple            # raw-frame zeros (mpc)
    weights: tuple          # mpc
    exactness_report: mpf   # max_j<=2n-1 |sum w x^j - m_j| / max_j |m_j|
    prec: int


def _vandermonde_solve(nodes, ms, n: int, prec: int):
    """Solve sum_k w_k x_k^j = m_j (j < n) at 2x precision with two steps
    of iterative refinement."""
    work = 2 * prec
    with workprec(work):
        a = mp.matrix(n, n)
        for j in range(n):
            for k in range(n):
                a[j, k] = nodes[k] ** j
        b = mp.matrix([ms[j] for j in range(n)])
        w = mp.lu_solve(a, b)
        for _ in range(2):
            with workprec(2 * work):
                r = mp.matrix([b[j] - sum(a[j, k] * w[k] for k in range(n))
                               for j in range(n)])
            w += mp.lu_solve(a, r)
        return [+w[k] for k in range(n)]


def gauss_rule(n: int, nu, prec: int) -> QuadratureRule:
    """Gaussian rule for the regularized oscillatory weight.

    The zeros are computed in the rescaled frame (where the root finder's
    ellipse initializer matches the clustering) and transported back by
    x = i n pi w, which is exact.
    """
    require_prec(prec)
    poly = monic_op(n, nu, prec)
    tilde = rescale_to_tilde(poly, n)
    zs = find_zeros(tilde, prec=max(prec, min(tilde.prec, 2 * prec)))
    with workprec(zs.prec):
        base = mpc(0, 1) * n * mp.pi
        nodes = [base * w for w in zs.roots]
    ms = moment_sequence(2 * n - 1, nu, 2 * zs.prec)
    weights = _vandermonde_solve(nodes, ms, n, zs.prec)
    with workprec(2 * zs.prec):
        nu = mpf(nu)
        mscale = max(abs(ms[j]) for j in range(2 * n))
        defect = mpf(0)
        for j in range(2 * n):
            s = mp.fsum(weights[k] * nodes[k] ** j for k in range(n))
            defect = max(defect, abs(s - ms[j]))
        report = +(defect / mscale)
    return QuadratureRule(nu=nu, n=n, nodes=tuple(nodes),
                          weights=tuple(weights), exactness_report=report,
                          prec=zs.prec)


def apply_rule(rule: QuadratureRule, f):
    """sum_k w_k f(x_k): the rule's approximation to the regularized
    oscillatory integral of f against the Bessel weight."""
    with workprec(rule.prec):
        return +mp.fsum(w * f(x) for w, x in zip(rule.weights, rule.nodes))
