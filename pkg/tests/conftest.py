"""Shared fixtures: session-wide polynomial/zero caches so the expensive
Hankel solves and Aberth runs happen once per (n, nu)."""

from __future__ import annotations

from mpmath import mp, mpf

from oscq.moments import monic_op, rescale_to_tilde
from oscq.mpfun import workprec
from oscq.zeros import find_zeros

_POLY: dict = {}
_ZEROS: dict = {}


def get_poly(n: int, nu, prec: int = 256):
    key = (n, str(nu), prec)
    if key not in _POLY:
        poly = monic_op(n, nu, prec)
        _POLY[key] = (poly, rescale_to_tilde(poly, n))
    return _POLY[key]


def get_tilde(n: int, nu, prec: int = 256):
    return get_poly(n, nu, prec)[1]


def get_zeros(n: int, nu, prec: int = 256, solve_prec: int | None = None):
    key = (n, str(nu), prec, solve_prec)
    if key not in _ZEROS:
        tilde = get_tilde(n, nu, prec)
        _ZEROS[key] = find_zeros(
            tilde, prec=solve_prec or min(tilde.prec, 512))
    return _ZEROS[key]


def agrees(a, b, tol, prec: int = 512) -> bool:
    """|a-b| <= tol evaluated away from the ambient context."""
    with workprec(prec):
        return abs(a - b) <= mpf(tol)


def rel_agrees(a, b, tol, prec: int = 512) -> bool:
    with workprec(prec):
        return abs(a - b) <= mpf(tol) * abs(b)


def report(name: str, ok: bool, detail: str = "") -> bool:
    print(f"{name} {'PASS' if ok else 'FAIL'}"
          f"{': ' + detail if detail else ''}")
    return ok


def nstr(x, d: int = 6) -> str:
    return mp.nstr(x, d)
