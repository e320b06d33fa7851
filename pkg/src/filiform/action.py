"""The two-parameter base-change action on first-class parameters.

A group element g = (A, B) with A(A+B) != 0 sends alpha to alpha' with

    alpha'_t = x^(t-2) phi_t(y; alpha)        3 <= t <= n
    theta'   = x^(n-2) phi_{n+1}(y; alpha)

where x = 1/A, y = B/A, and

    phi_t(y; z)     = (1+y) z_t - sum_{k=3}^{t-1} bracket(t, k) phi_k(y; z)
    phi_{n+1}(y; z) = z_{n+1} + y z_n - sum_{k=3}^{n-1} bracket(n, k) phi_k(y; z)

(see :mod:`filiform._pykernels` for the bracket).  The action written in the
"rho" notation has components rho_i = alpha'_{i+2} for 1 <= i <= n-2 and
rho_{n-1} = theta'; :func:`rho_components` exposes that indexing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .algebra import FirstClassParams
from .errors import InvalidGroupElement
from .scalarfield import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "GroupElement",
    "IDENTITY",
    "eval_phi",
    "eval_phi_theta",
    "phi_all",
    "apply_rho",
    "rho_components",
    "compose_group",
    "invert_group",
    "lowdim_closed_form",
]

_F0, _F1 = Fraction(0), Fraction(1)


@dataclass(frozen=True)
class GroupElement:
    """The pair (A, B); acts as rho(1/A, B/A; .)."""

    A: Scalar
    B: Scalar

    def __init__(self, A, B):
        A, B = as_scalar(A), as_scalar(B)
        if not A or not (A + B):
            raise InvalidGroupElement(f"need A(A+B) != 0, got A={A}, B={B}")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    @classmethod
    def from_xy(cls, x, y) -> "GroupElement":
        """The element acting as rho(x, y; .), i.e. A = 1/x, B = y/x."""
        x, y = as_scalar(x), as_scalar(y)
        if not x:
            raise InvalidGroupElement("x = 1/A must be nonzero")
        return cls(x.inv(), y / x)

    @property
    def x(self) -> Scalar:
        return self.A.inv()

    @property
    def y(self) -> Scalar:
        return self.B / self.A

    def __str__(self):
        return f"(A={self.A}, B={self.B})"


IDENTITY = GroupElement(1, 0)


def compose_group(g1: GroupElement, g2: GroupElement) -> GroupElement:
    """The element acting as "g1 first, then g2"."""
    return GroupElement(g1.A * g2.A, g1.A * g2.B + g2.A * g1.B + g1.B * g2.B)


def invert_group(g: GroupElement) -> GroupElement:
    return GroupElement(g.A.inv(), -g.B / (g.A * (g.A + g.B)))


# -- phi evaluation ---------------------------------------------------------------


def _lowered(y: Scalar, p: FirstClassParams):
    """Subscript-indexed coordinates in the cheapest exact type available.

    Returns (z, y, zero, one, lift) where ``lift`` maps results back to Scalar.
    """
    coords = p.coords
    if not y.im and all(not c.im for c in coords):
        z = [None, None, None] + [c.re for c in coords]
        return z, y.re, _F0, _F1, Scalar
    z = [None, None, None] + list(coords)
    return z, y, ZERO, ONE, as_scalar


def _tables(z, n, y, zero, method):
    if method == "dp":
        return kernels.bracket_table_dp(z, n, y, zero)
    if method == "naive":
        return kernels.bracket_table_naive(z, n, y, zero)
    raise ValueError(f"unknown bracket method {method!r}")


def phi_all(y, p: FirstClassParams, *, method: str = "dp", prefactor: bool = False) -> list[Scalar]:
    """[phi_3, ..., phi_{n+1}] evaluated at y; one bracket table per call."""
    y = as_scalar(y)
    z, yy, zero, one, lift = _lowered(y, p)
    table = _tables(z, p.n, yy, zero, method)
    values = kernels.phi_values(z, p.n, yy, table, zero, one, prefactor)
    return [lift(v) for v in values[3 : p.n + 2]]


def eval_phi(t: int, y, p: FirstClassParams, *, method: str = "dp") -> Scalar:
    """phi_t(y; alpha) for 3 <= t <= n."""
    if not 3 <= t <= p.n:
        raise ValueError(f"phi_t needs 3 <= t <= n={p.n}, got t={t}")
    return phi_all(y, p, method=method)[t - 3]


def eval_phi_theta(y, p: FirstClassParams, *, method: str = "dp", prefactor: bool = False) -> Scalar:
    """phi_{n+1}(y; alpha).

    ``prefactor=True`` evaluates the variant with an extra (1+y) in front of
    the sum; it disagrees with the explicit low-dimensional systems and exists
    only so that tests can show it.
    """
    return phi_all(y, p, method=method, prefactor=prefactor)[-1]


def apply_rho(
    g: GroupElement, p: FirstClassParams, *, method: str = "dp", prefactor: bool = False
) -> FirstClassParams:
    """alpha' = rho(1/A, B/A; alpha)."""
    n = p.n
    phis = phi_all(g.y, p, method=method, prefactor=prefactor)
    x = g.x
    xpow = [ONE]
    for _ in range(n - 2):
        xpow.append(xpow[-1] * x)
    alpha = [xpow[t - 2] * phis[t - 3] for t in range(3, n + 1)]
    return FirstClassParams(n, alpha, xpow[n - 2] * phis[-1])


def rho_components(g: GroupElement, p: FirstClassParams, **kw) -> list[Scalar]:
    """[rho_1, ..., rho_{n-1}]: rho_i = alpha'_{i+2} (i <= n-2), rho_{n-1} = theta'."""
    return list(apply_rho(g, p, **kw).coords)


# -- explicit low-dimensional systems ------------------------------------------------


def lowdim_closed_form(n: int, g: GroupElement, p: FirstClassParams) -> FirstClassParams:
    """The explicit transformation formulas for n = 4, 5, 6, 7, term by term."""
    if n not in (4, 5, 6, 7) or p.n != n:
        raise ValueError(f"closed forms exist for n in 4..7 only (got n={n}, p.n={p.n})")
    A = g.A
    r = g.B / g.A  # B/A
    a = {i: p.a(i) for i in range(3, n + 1)}
    th = p.theta
    one_r = 1 + r

    a3 = A.inv() * one_r * a[3]
    a4 = A.pow_int(-2) * one_r * (a[4] - 2 * r * a[3] ** 2)
    if n == 4:
        theta = A.pow_int(-2) * (th + r * a[4] - 2 * one_r * r * a[3] ** 2)
        return FirstClassParams(4, [a3, a4], theta)

    a5 = A.pow_int(-3) * one_r * (a[5] - 5 * r * (a[4] - r * a[3] ** 2) * a[3])
    if n == 5:
        theta = A.pow_int(-3) * (th + r * a[5] - 5 * one_r * r * (a[4] - r * a[3] ** 2) * a[3])
        return FirstClassParams(5, [a3, a4, a5], theta)

    a6 = (
        A.pow_int(-4)
        * one_r
        * (
            a[6]
            - 6 * r * a[3] * a[5]
            + 21 * r**2 * a[3] ** 2 * a[4]
            - 3 * r * a[4] ** 2
            - 14 * r**3 * a[3] ** 4
        )
    )
    if n == 6:
        theta = A.pow_int(-4) * (
            th
            + r * a[6]
            - one_r
            * (
                6 * r * a[3] * a[5]
                - 21 * r**2 * a[3] ** 2 * a[4]
                + 3 * r * a[4] ** 2
                + 14 * r**3 * a[3] ** 4
            )
        )
        return FirstClassParams(6, [a3, a4, a5, a6], theta)

    a7 = (
        A.pow_int(-5)
        * one_r
        * (
            a[7]
            - 7 * r * a[3] * a[6]
            + 28 * r**2 * a[3] ** 2 * a[5]
            + 28 * r**2 * a[3] * a[4] ** 2
            - 7 * r * a[4] * a[5]
            - 84 * r**3 * a[3] ** 3 * a[4]
            + 42 * r**4 * a[3] ** 5
        )
    )
    theta = A.pow_int(-5) * (
        th
        + r * a[7]
        - one_r
        * (
            7 * r * a[3] * a[6]
            - 28 * r**2 * a[3] ** 2 * a[5]
            - 28 * r**2 * a[3] * a[4] ** 2
            + 7 * r * a[4] * a[5]
            + 84 * r**3 * a[3] ** 3 * a[4]
            - 42 * r**4 * a[3] ** 5
        )
    )
    return FirstClassParams(7, [a3, a4, a5, a6, a7], theta)
