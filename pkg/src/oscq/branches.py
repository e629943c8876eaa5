"""Branch-cut-safe elementary maps shared by the equilibrium and
parametrix layers.

Conventions: (z^2-1)^(1/2) is analytic off [-1,1], behaves like z at
infinity and is positive for real z > 1; (1-z^2)^(1/2) is the principal
branch, positive on (-1,1); the inverse cosine is fixed by
exp(i*arccos z) = z + i (1-z^2)^(1/2).
"""

from __future__ import annotations

from mpmath import mp, mpc


def sqrt_offcut(z):
    """(z^2-1)^(1/2), analytic in C \\ [-1,1], ~ z at infinity."""
    z = mpc(z)
    return z * mp.sqrt(1 - 1 / (z * z))


def sqrt_onecut(z):
    """(1-z^2)^(1/2), principal branch, positive on (-1,1)."""
    z = mpc(z)
    return mp.sqrt(1 - z * z)


def f_exterior(z):
    """Conformal map z + (z^2-1)^(1/2) onto the exterior of the unit disk."""
    return z + sqrt_offcut(z)


def beta_quartic(z):
    """((z-1)/(z+1))^(1/4), analytic off [-1,1], positive for z > 1."""
    z = mpc(z)
    return ((z - 1) / (z + 1)) ** (mp.mpf(1) / 4)


def arccos_branch(z):
    """arccos with exp(i*arccos z) = z + i(1-z^2)^(1/2); real on (-1,1)."""
    z = mpc(z)
    return -mpc(0, 1) * mp.log(z + mpc(0, 1) * sqrt_onecut(z))
