"""Exact cyclotomic arithmetic and center classification.

Everything here is integer/rational-exact; floating point never enters
a decision.  The key object is the fixed field of a residue subgroup S
acting on a cyclotomic field: its degree and, when quadratic, the d of
Q(sqrt(+-d)), read off from Gaussian-period minimal polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Optional

from .errors import NonIntegralCoefficient, NotCoprime
from .groups import FiniteGroup

# -- elementary number theory --------------------------------------------


def prime_factorization(n: int) -> dict[int, int]:
    fac: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            fac[d] = fac.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        fac[n] = fac.get(n, 0) + 1
    return fac


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in prime_factorization(n).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


def moebius(n: int) -> int:
    fac = prime_factorization(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def squarefree_part(n: int) -> int:
    """The squarefree d with n = d * (square)."""
    if n == 0:
        return 0
    out = 1
    for p, e in prime_factorization(abs(n)).items():
        if e % 2:
            out *= p
    return out


def multiplicative_order(r: int, n: int) -> int:
    if n < 1:
        raise NotCoprime(f"modulus must be positive, got {n}")
    if math.gcd(r, n) != 1:
        raise NotCoprime(f"gcd({r}, {n}) != 1")
    if n == 1:
        return 1
    d, cur = 1, r % n
    while cur != 1:
        cur = (cur * r) % n
        d += 1
    return d


def units(n: int) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    return tuple(x for x in range(1, n) if math.gcd(x, n) == 1)


def unit_group_info(n: int) -> tuple[int, bool, Optional[int]]:
    """(phi(n), is_cyclic, least positive generator or None)."""
    if n <= 2:
        return (1, True, 1)
    phi = euler_phi(n)
    gen = None
    for x in units(n):
        if multiplicative_order(x, n) == phi:
            gen = x
            break
    return (phi, gen is not None, gen)


# -- integer polynomials (ascending coefficient tuples) -------------------


def _polymul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(out)


def _polydiv_exact(num: tuple[int, ...], den: tuple[int, ...]) -> tuple[int, ...]:
    """Exact division in Z[x]; the divisor must be monic up to sign."""
    num_l = list(num)
    dn, dd = len(num_l) - 1, len(den) - 1
    lead = den[-1]
    out = [0] * (dn - dd + 1)
    for i in range(dn - dd, -1, -1):
        c = num_l[i + dd]
        if c % lead != 0:
            raise NonIntegralCoefficient("inexact polynomial division")
        q = c // lead
        out[i] = q
        if q:
            for j, dj in enumerate(den):
                num_l[i + j] -= q * dj
    if any(num_l[:dd] or [0]):
        raise NonIntegralCoefficient("nonzero remainder in exact division")
    return tuple(out)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(k: int) -> tuple[int, ...]:
    """Coefficients of Phi_k, ascending; computed by the Moebius product."""
    if k < 1:
        raise NotCoprime(f"conductor must be positive, got {k}")
    num: tuple[int, ...] = (1,)
    dens: list[tuple[int, ...]] = []
    for d in range(1, k + 1):
        if k % d:
            continue
        mu = moebius(k // d)
        if mu == 0:
            continue
        cyc = tuple([-1] + [0] * (d - 1) + [1])  # x^d - 1
        if mu == 1:
            num = _polymul(num, cyc)
        else:
            dens.append(cyc)
    for den in dens:
        num = _polydiv_exact(num, den)
    return num


# -- residue subgroups -----------------------------------------------------


@dataclass(frozen=True)
class ResidueSubgroup:
    """A subgroup of the units modulo k."""

    modulus: int
    members: frozenset[int]

    def __post_init__(self):
        k = self.modulus
        mem = self.members
        if k < 1:
            raise NotCoprime(f"modulus must be positive, got {k}")
        if (1 % k) not in mem:
            raise NotCoprime("residue subgroup must contain 1")
        for x in mem:
            if math.gcd(x, k) != 1:
                raise NotCoprime(f"member {x} is not a unit modulo {k}")
            if not (0 <= x < k):
                raise NotCoprime(f"member {x} is not reduced modulo {k}")
        for x in mem:
            for y in mem:
                if (x * y) % k not in mem:
                    raise NotCoprime("residue set is not closed under product")
        if euler_phi(k) % len(mem) != 0:
            raise NotCoprime("subgroup size does not divide phi(k)")

    @property
    def order(self) -> int:
        return len(self.members)

    def index(self) -> int:
        return euler_phi(self.modulus) // len(self.members)

    @classmethod
    def generated(cls, k: int, gens: Iterable[int]) -> "ResidueSubgroup":
        mem = {1 % k}
        frontier = [1 % k]
        gl = [g % k for g in gens]
        for x in frontier:
            for g in gl:
                y = (x * g) % k
                if y not in mem:
                    mem.add(y)
                    frontier.append(y)
        return cls(k, frozenset(mem))

    @classmethod
    def full(cls, k: int) -> "ResidueSubgroup":
        return cls(k, frozenset(units(k)))


# -- cyclotomic integers ---------------------------------------------------


def _reduce_mod_phi(vec: list[int], phi: tuple[int, ...]) -> tuple[int, ...]:
    deg = len(phi) - 1
    for i in range(len(vec) - 1, deg - 1, -1):
        c = vec[i]
        if c:
            vec[i] = 0
            for j in range(deg):
                vec[i - deg + j] -= c * phi[j]
    out = vec[:deg]
    out += [0] * (deg - len(out))
    return tuple(out)


@lru_cache(maxsize=None)
def _root_power_table(k: int) -> tuple[tuple[int, ...], ...]:
    """zeta_k^e reduced mod Phi_k, for e = 0..k-1."""
    phi = cyclotomic_polynomial(k)
    deg = len(phi) - 1
    out = []
    for e in range(k):
        vec = [0] * (e + 1)
        vec[e] = 1
        out.append(_reduce_mod_phi(vec, phi))
    return tuple(out)


@dataclass(frozen=True)
class CyclotomicInteger:
    """Element of Z[zeta_k], stored reduced modulo Phi_k."""

    k: int
    coeffs: tuple[int, ...]

    @classmethod
    def zero(cls, k: int) -> "CyclotomicInteger":
        deg = euler_phi(k)
        return cls(k, (0,) * deg)

    @classmethod
    def one(cls, k: int) -> "CyclotomicInteger":
        deg = euler_phi(k)
        return cls(k, (1,) + (0,) * (deg - 1))

    @classmethod
    def root_power(cls, k: int, e: int) -> "CyclotomicInteger":
        return cls(k, _root_power_table(k)[e % k])

    def __add__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        return CyclotomicInteger(
            self.k, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        return CyclotomicInteger(
            self.k, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "CyclotomicInteger":
        return CyclotomicInteger(self.k, tuple(-a for a in self.coeffs))

    def __mul__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        conv = list(_polymul(self.coeffs, other.coeffs))
        phi = cyclotomic_polynomial(self.k)
        return CyclotomicInteger(self.k, _reduce_mod_phi(conv, phi))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def rational_value(self) -> int:
        """The value as a rational integer; raises if it is not one."""
        if any(self.coeffs[1:]):
            raise NonIntegralCoefficient(
                f"cyclotomic element {self.coeffs} is not a rational integer"
            )
        return self.coeffs[0]


# -- Gaussian periods and fixed fields ------------------------------------


def _cosets(k: int, S: ResidueSubgroup) -> list[int]:
    """Ascending coset representatives of S in the units mod k."""
    reps = []
    seen: set[int] = set()
    for u in units(k):
        if u not in seen:
            reps.append(u)
            seen.update((u * s) % k for s in S.members)
    return reps


def _orbit_sum_polynomial(
    k: int, S: ResidueSubgroup, theta: list[tuple[int, int]]
) -> tuple[tuple[int, ...], bool]:
    """Product of (x - eta_c) over cosets cS, with eta_c the S-orbit sum
    of theta = sum of coeff * zeta^expo terms, applied at coset c.

    Returns (integer coefficients ascending, periods_distinct).
    """
    etas = []
    for c in _cosets(k, S):
        eta = CyclotomicInteger.zero(k)
        for s in S.members:
            j = (c * s) % k
            for coeff, expo in theta:
                term = CyclotomicInteger.root_power(k, expo * j)
                if coeff != 1:
                    term = CyclotomicInteger(
                        k, tuple(coeff * v for v in term.coeffs)
                    )
                eta = eta + term
        etas.append(eta)
    distinct = len({e.coeffs for e in etas}) == len(etas)
    poly = [CyclotomicInteger.one(k)]
    for eta in etas:
        nxt = [CyclotomicInteger.zero(k) for _ in range(len(poly) + 1)]
        for i, ci in enumerate(poly):
            nxt[i + 1] = nxt[i + 1] + ci
            nxt[i] = nxt[i] - eta * ci
        poly = nxt
    return tuple(c.rational_value() for c in poly), distinct


def period_minimal_polynomial(k: int, S: ResidueSubgroup) -> tuple[int, ...]:
    """Minimal polynomial (ascending, monic) of the Gaussian periods of S.

    The polynomial is the product of (x - eta_c) over the cosets cS,
    where eta_c sums zeta_k^(c*s); its coefficients are verified to be
    rational integers.
    """
    if S.modulus != k:
        raise NotCoprime(f"subgroup modulus {S.modulus} does not match k={k}")
    poly, _ = _orbit_sum_polynomial(k, S, [(1, 1)])
    return poly


def _quadratic_subfield_polynomial(k: int, S: ResidueSubgroup) -> tuple[int, ...]:
    """A degree-2 integer polynomial whose root generates the fixed field.

    Plain periods (theta = zeta) can collide for composite k; retrying
    with theta_m = sum m^(i-1) zeta^i over a power basis must eventually
    separate them, since the orbit maps differ on a basis.
    """
    deg = euler_phi(k)
    for m in range(1, deg * deg + 2):
        theta = [(m**i, i + 1) for i in range(deg)] if m > 1 else [(1, 1)]
        poly, distinct = _orbit_sum_polynomial(k, S, theta)
        if distinct:
            return poly
    raise NonIntegralCoefficient(
        f"no separating orbit generator found for k={k}"
    )


class CenterKind(Enum):
    RATIONAL = "rational"
    IMAGINARY_QUADRATIC = "imaginary_quadratic"
    REAL_QUADRATIC = "real_quadratic"
    OTHER_TOTALLY_REAL = "other_totally_real"
    OTHER_COMPLEX = "other_complex"


@dataclass(frozen=True)
class CenterClass:
    """Classification of a Wedderburn component center."""

    kind: CenterKind
    degree: int
    d: Optional[int] = None

    @property
    def is_cut_admissible(self) -> bool:
        return self.kind in (CenterKind.RATIONAL, CenterKind.IMAGINARY_QUADRATIC)

    def describe(self) -> str:
        if self.kind is CenterKind.RATIONAL:
            return "Q"
        if self.kind is CenterKind.IMAGINARY_QUADRATIC:
            return f"Q(sqrt(-{self.d}))"
        if self.kind is CenterKind.REAL_QUADRATIC:
            return f"Q(sqrt({self.d}))"
        real = "totally real" if self.kind is CenterKind.OTHER_TOTALLY_REAL else "complex"
        return f"degree-{self.degree} {real} field"


def classify_fixed_field(k: int, S: ResidueSubgroup) -> CenterClass:
    """Classify the fixed field of S acting on the k-th cyclotomic field."""
    if k <= 2:
        return CenterClass(CenterKind.RATIONAL, 1)
    degree = S.index()
    if degree == 1:
        return CenterClass(CenterKind.RATIONAL, 1)
    totally_real = (k - 1) in S.members
    if degree == 2:
        poly = _quadratic_subfield_polynomial(k, S)
        b, c = poly[1], poly[0]
        disc = b * b - 4 * c
        d = squarefree_part(abs(disc))
        if disc < 0:
            return CenterClass(CenterKind.IMAGINARY_QUADRATIC, 2, d)
        return CenterClass(CenterKind.REAL_QUADRATIC, 2, d)
    if totally_real:
        return CenterClass(CenterKind.OTHER_TOTALLY_REAL, degree)
    return CenterClass(CenterKind.OTHER_COMPLEX, degree)


# -- component centers and the Wedderburn cut test -------------------------


@dataclass(frozen=True)
class ComponentReport:
    """One simple component: its pair, center and rational dimension."""

    pair: object
    center: CenterClass
    dimension: int


def component_center(pair) -> CenterClass:
    """Center of the simple component attached to a strong Shoda pair."""
    return classify_fixed_field(pair.k, pair.action_image)


def _components(G: FiniteGroup, cap: int) -> tuple[list[ComponentReport], object]:
    from .shoda import find_strong_shoda_pairs

    search = find_strong_shoda_pairs(G, cap=cap)
    reports = [
        ComponentReport(p, component_center(p), p.dimension) for p in search.pairs
    ]
    return reports, search


def is_cut_wedderburn(G: FiniteGroup, *, cap: int = 512):
    """Cut test through component centers: all must be Q or Q(sqrt(-d)).

    Raises NotStronglyMonomialVerified when the discovered idempotents
    do not verifiably decompose the group algebra.
    """
    from .errors import NotStronglyMonomialVerified
    from .cut import CutVerdict

    reports, search = _components(G, cap)
    if not search.complete:
        raise NotStronglyMonomialVerified(
            "idempotents do not sum to 1 with pairwise orthogonality; "
            "the component test is inapplicable to this group"
        )
    offender = None
    for rep in reports:
        if not rep.center.is_cut_admissible:
            offender = rep
            break
    return CutVerdict(
        offender is None, "wedderburn", None, offender, tuple(reports)
    )
