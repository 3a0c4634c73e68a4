"""Constructors for standard group families used across the test corpus."""

from __future__ import annotations

import numpy as np

from .errors import InvalidPresentation
from .groups import FiniteGroup, make_metacyclic


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n (n >= 2)."""
    if n < 2:
        raise InvalidPresentation(f"dihedral needs rotation order >= 2, got {n}")
    return make_metacyclic(n, 2, n - 1, n)


def dicyclic(m: int) -> FiniteGroup:
    """Dicyclic group of order 4m: b^2 = a^m with a of order 2m inverted."""
    if m < 2:
        raise InvalidPresentation(f"dicyclic needs m >= 2, got {m}")
    return make_metacyclic(2 * m, 2, 2 * m - 1, m)


def quaternion(order: int) -> FiniteGroup:
    """Generalized quaternion group of 2-power order >= 8."""
    if order < 8 or order & (order - 1):
        raise InvalidPresentation(f"quaternion order must be a 2-power >= 8, got {order}")
    return dicyclic(order // 4)


def semidihedral(order: int) -> FiniteGroup:
    """Semidihedral group of 2-power order >= 16 (r = order/4 - 1)."""
    if order < 16 or order & (order - 1):
        raise InvalidPresentation(f"semidihedral order must be a 2-power >= 16, got {order}")
    n = order // 2
    return make_metacyclic(n, 2, n // 2 - 1, n)


def modular_2group(order: int) -> FiniteGroup:
    """Modular maximal-cyclic group of 2-power order >= 16 (r = order/4 + 1)."""
    if order < 16 or order & (order - 1):
        raise InvalidPresentation(f"modular order must be a 2-power >= 16, got {order}")
    n = order // 2
    return make_metacyclic(n, 2, n // 2 + 1, n)


def heisenberg(p: int) -> FiniteGroup:
    """Unitriangular 3x3 group over Z/p: order p^3, exponent p for odd p."""
    n = p * p * p
    idx = np.arange(n)
    x, rem = idx // (p * p), idx % (p * p)
    y, z = rem // p, rem % p
    x1, x2 = x[:, None], x[None, :]
    y1, y2 = y[:, None], y[None, :]
    z1, z2 = z[:, None], z[None, :]
    table = (
        ((x1 + x2) % p) * p * p
        + ((y1 + y2) % p) * p
        + ((z1 + z2 + x1 * y2) % p)
    )
    gens = [p * p, p]  # x- and y-generators
    return FiniteGroup(table, gens=gens, validate=False)


def extraspecial_exponent_p2(p: int) -> FiniteGroup:
    """The metacyclic extraspecial group of order p^3 and exponent p^2."""
    if p < 3:
        raise InvalidPresentation("defined for odd primes")
    return make_metacyclic(p * p, p, p + 1, p * p)
