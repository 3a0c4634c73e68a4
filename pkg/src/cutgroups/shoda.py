"""Exact rational group-algebra arithmetic and strong Shoda pairs.

Elements carry integer numerator vectors over a common positive
denominator, kept in lowest terms; convolution switches to unbounded
Python integers whenever an int64 bound check fails, so results are
exact for any input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

from .cyclo import ResidueSubgroup, euler_phi
from .errors import (
    NotNormalInH,
    ParentMismatch,
    RecipeInapplicable,
    SizeLimit,
)
from .groups import (
    DEFAULT_SUBGROUP_CAP,
    FiniteGroup,
    MetacyclicPresentation,
    Subgroup,
    _prime_factors,
    all_subgroups,
    generated_subgroup,
    make_metacyclic,
    normalizer,
)

_INT64_SAFE = 1 << 62


def _gcd_reduce(num: np.ndarray, den: int):
    if num.dtype == object:
        g = 0
        for v in num.tolist():
            g = math.gcd(g, abs(int(v)))
            if g == 1:
                break
    else:
        g = int(np.gcd.reduce(np.abs(num)))
    g = math.gcd(g, den)
    if g > 1:
        num = num // g
        den //= g
    return num, den


class GroupAlgebraElement:
    """An element of the rational group algebra of a finite group."""

    __slots__ = ("parent", "num", "den", "_keycache")

    def __init__(self, parent: FiniteGroup, num, den: int = 1, *, _reduced=False):
        self.parent = parent
        arr = np.asarray(num)
        if arr.dtype != object:
            if not np.issubdtype(arr.dtype, np.integer):
                raise TypeError("numerators must be integers (exact arithmetic)")
            arr = arr.astype(np.int64)
        if den < 0:
            arr, den = -arr, -den
        if den == 0:
            raise ZeroDivisionError("denominator must be nonzero")
        if not _reduced:
            arr, den = _gcd_reduce(arr, den)
        if arr.dtype == object and all(abs(int(v)) < _INT64_SAFE for v in arr.tolist()):
            arr = arr.astype(np.int64)
        self.num = arr
        self.den = den
        self._keycache = None

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, parent: FiniteGroup) -> "GroupAlgebraElement":
        return cls(parent, np.zeros(parent.order, dtype=np.int64), 1, _reduced=True)

    @classmethod
    def one(cls, parent: FiniteGroup) -> "GroupAlgebraElement":
        return cls.delta(parent, 0)

    @classmethod
    def delta(cls, parent: FiniteGroup, g: int) -> "GroupAlgebraElement":
        num = np.zeros(parent.order, dtype=np.int64)
        num[g] = 1
        return cls(parent, num, 1, _reduced=True)

    @classmethod
    def from_coefficients(
        cls, parent: FiniteGroup, coeffs: dict[int, Fraction]
    ) -> "GroupAlgebraElement":
        den = 1
        for c in coeffs.values():
            den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
        num = np.zeros(parent.order, dtype=object)
        for g, c in coeffs.items():
            c = Fraction(c)
            num[g] = int(c.numerator * (den // c.denominator))
        return cls(parent, num, den)

    # -- inspection -----------------------------------------------------

    def coeff(self, g: int) -> Fraction:
        return Fraction(int(self.num[g]), self.den)

    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(v), self.den) for v in self.num.tolist())

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.num))

    def augmentation(self) -> Fraction:
        return Fraction(int(sum(self.num.tolist())), self.den)

    def _key(self):
        if self._keycache is None:
            if self.num.dtype == object:
                self._keycache = (self.den, tuple(int(v) for v in self.num.tolist()))
            else:
                self._keycache = (self.den, self.num.tobytes())
        return self._keycache

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.parent is other.parent and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        terms = [
            f"{Fraction(int(v), self.den)}*{self.parent.label(g)}"
            for g, v in enumerate(self.num.tolist())
            if v
        ]
        return " + ".join(terms) if terms else "0"

    # -- ring operations --------------------------------------------------

    def _check_parent(self, other: "GroupAlgebraElement"):
        if self.parent is not other.parent:
            raise ParentMismatch("elements live over different groups")

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check_parent(other)
        den = self.den * other.den // math.gcd(self.den, other.den)
        a = self.num * (den // self.den)
        b = other.num * (den // other.den)
        return GroupAlgebraElement(self.parent, a + b, den)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check_parent(other)
        den = self.den * other.den // math.gcd(self.den, other.den)
        a = self.num * (den // self.den)
        b = other.num * (den // other.den)
        return GroupAlgebraElement(self.parent, a - b, den)

    def __neg__(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.parent, -self.num, self.den, _reduced=True)

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check_parent(other)
        num = _convolve(self.parent, self.num, other.num)
        return GroupAlgebraElement(self.parent, num, self.den * other.den)

    def is_zero(self) -> bool:
        return not self.num.any()

    def is_idempotent(self) -> bool:
        return (self * self) == self

    def is_central(self) -> bool:
        G = self.parent
        return all(conjugate_by(self, g) == self for g in G._generators())

    def conjugate_by(self, g: int) -> "GroupAlgebraElement":
        G = self.parent
        perm = G.table[G.table[g], G.inverse[g]]
        out = np.zeros_like(self.num)
        out[perm] = self.num
        return GroupAlgebraElement(G, out, self.den, _reduced=True)


def _convolve(G: FiniteGroup, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Exact convolution; int64 fast path guarded by a magnitude bound."""
    support = np.flatnonzero(u)
    if support.size == 0 or not v.any():
        return np.zeros(G.order, dtype=np.int64)
    if u.dtype == object or v.dtype == object:
        exact = True
    else:
        bound = int(np.abs(u).sum()) * int(np.abs(v).max())
        exact = bound >= _INT64_SAFE
    if exact:
        out = np.zeros(G.order, dtype=object)
        out[:] = 0
        vv = v.astype(object)
        for g in support.tolist():
            out[G.table[g]] += int(u[g]) * vv
        return out
    if support.size > 12:
        # out[k] = sum_g u[g] * v[g^-1 k], a gather plus integer matmul
        inv_rows = G._cache.get("inv_rows")
        if inv_rows is None:
            inv_rows = G.table[G.inverse]
            G._cache["inv_rows"] = inv_rows
        return u @ v[inv_rows]
    out = np.zeros(G.order, dtype=np.int64)
    for g in support.tolist():
        out[G.table[g]] += int(u[g]) * v
    return out


def multiply(u: GroupAlgebraElement, v: GroupAlgebraElement) -> GroupAlgebraElement:
    return u * v


def conjugate_by(u: GroupAlgebraElement, g: int) -> GroupAlgebraElement:
    """Transport coefficients along x -> g x g^-1."""
    return u.conjugate_by(g)


def hat(H: Subgroup) -> GroupAlgebraElement:
    """Uniform average over a subgroup; an idempotent."""
    num = np.zeros(H.parent.order, dtype=np.int64)
    num[list(H.members)] = 1
    return GroupAlgebraElement(H.parent, num, H.order)


# -- the epsilon and e idempotents ------------------------------------------


def _check_normal_in(H: Subgroup, K: Subgroup):
    if not (K.members <= H.members):
        raise NotNormalInH("K is not contained in H")
    if not _is_normal_in(H.parent, K, H):
        raise NotNormalInH("K is not normal in H")


def _subgroup_generators(H: Subgroup) -> list[int]:
    if H.known_gens is not None:
        return list(H.known_gens)
    G = H.parent
    gens: list[int] = []
    closure = {0}
    for x in H.elements:
        if x not in closure:
            gens.append(x)
            closure = set(_closure_in(G, gens))
            if len(closure) == H.order:
                break
    return gens


def _closure_in(G: FiniteGroup, gens: Iterable[int]) -> list[int]:
    rows = G._rows()
    seen = {0}
    frontier = [0]
    gl = [g for g in gens if g]
    for x in frontier:
        row = rows[x]
        for g in gl:
            y = row[g]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return frontier


def _normal_closure_over(
    G: FiniteGroup, hgens: list[int], kgens: list[int], h: int
) -> frozenset[int]:
    """Smallest subgroup containing K and h that is normal in H."""
    rows = G._rows()
    inv = G.inverse
    gens = list(kgens) + [h]
    while True:
        mem = set(_closure_in(G, gens))
        new = [
            y
            for x in mem
            for u in hgens
            if (y := rows[rows[u][x]][int(inv[u])]) not in mem
        ]
        if not new:
            return frozenset(mem)
        gens.extend(set(new))


def _minimal_normal_over(H: Subgroup, K: Subgroup) -> list[Subgroup]:
    """Normal subgroups of H minimal among those containing K properly.

    When H/K is cyclic these are the preimages of its prime-order
    subgroups, one per prime dividing [H:K]; the general case takes
    minimal elements among normal closures of single elements.
    """
    G = H.parent
    kgens = _subgroup_generators(K)
    cyc = _cyclic_quotient_generator(H, K)
    if cyc is not None:
        x, k = cyc
        subs = [
            Subgroup(G, frozenset(_closure_in(G, kgens + [G.power(x, k // p)])))
            for p in _prime_factors(k)
        ]
        subs.sort(key=lambda L: (L.order, L.elements))
        return subs
    hgens = _subgroup_generators(H)
    closures = {
        _normal_closure_over(G, hgens, kgens, h) for h in sorted(H.members - K.members)
    }
    minimal: list[frozenset] = []
    for c in sorted(closures, key=lambda s: (len(s), sorted(s))):
        if not any(m < c for m in minimal):
            minimal.append(c)
    return [Subgroup(G, m) for m in minimal]


def epsilon(H: Subgroup, K: Subgroup) -> GroupAlgebraElement:
    """hat(H) when H = K, else the product of (hat(K) - hat(L)) over the
    minimal normal subgroups L of H sitting properly over K."""
    _check_normal_in(H, K)
    if H.members == K.members:
        return hat(H)
    ls = _minimal_normal_over(H, K)
    khat = hat(K)
    out = None
    for L in ls:
        factor = khat - hat(L)
        out = factor if out is None else out * factor
    return out


def e_idempotent(
    G: FiniteGroup, H: Subgroup, K: Subgroup
) -> GroupAlgebraElement:
    """Sum of the distinct conjugates of epsilon(H, K)."""
    eps = epsilon(H, K)
    total, _ = _sum_distinct_conjugates(G, eps, H)
    return total


def _distinct_conjugates(
    G: FiniteGroup, u: GroupAlgebraElement, stabilized_by: Optional[Subgroup] = None
) -> list[GroupAlgebraElement]:
    """Distinct conjugates of u, deduplicated by exact value.

    When a subgroup known to stabilize u is supplied (H always
    stabilizes epsilon(H, K)), only one conjugation per coset runs.
    """
    if stabilized_by is not None and stabilized_by.order > 1:
        h_arr = np.fromiter(stabilized_by.members, dtype=np.int64)
        reps = np.unique(G.table[:, h_arr].min(axis=1)).tolist()
    else:
        reps = G.elements()
    seen = {}
    for g in reps:
        c = u.conjugate_by(g)
        seen.setdefault(c._key(), c)
    return list(seen.values())


def _sum_distinct_conjugates(
    G: FiniteGroup, u: GroupAlgebraElement, stabilized_by: Optional[Subgroup] = None
):
    conjugates = _distinct_conjugates(G, u, stabilized_by)
    total = conjugates[0]
    for c in conjugates[1:]:
        total = total + c
    return total, conjugates


# -- strong Shoda pairs ------------------------------------------------------


@dataclass(frozen=True)
class SSPCheck:
    """Result of the axiom check, with the first failed axiom tagged."""

    ok: bool
    failed_axiom: Optional[str] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class StrongShodaPair:
    """A verified strong Shoda pair with its component data.

    k = [H:K]; matrix_size = [G:N] with N the normalizer of K;
    action_image is the image of N/H in the units modulo k, acting by
    conjugation on a fixed generator of H/K.
    """

    group: FiniteGroup
    H: Subgroup
    K: Subgroup
    epsilon: GroupAlgebraElement
    e: GroupAlgebraElement
    N: Subgroup
    k: int
    matrix_size: int
    action_image: ResidueSubgroup
    generator: int

    @property
    def dimension(self) -> int:
        """Rational dimension of the component."""
        return self.matrix_size**2 * euler_phi(self.k) * (
            self.N.order // self.H.order
        )

    def describe(self) -> str:
        return (
            f"(H={sorted(self.H.members)}, K={sorted(self.K.members)}, "
            f"k={self.k}, n={self.matrix_size})"
        )


def _cyclic_quotient_generator(H: Subgroup, K: Subgroup) -> Optional[tuple[int, int]]:
    """(generator, [H:K]) when H/K is cyclic, else None."""
    G = H.parent
    rows = G._rows()
    index = H.order // K.order
    if index == 1:
        return (0, 1)
    for h in H.elements:
        if h in K.members:
            continue
        m, cur = 1, h
        while cur not in K.members:
            cur = rows[cur][h]
            m += 1
        if m == index:
            return (h, index)
    return None


def _is_normal_in(G: FiniteGroup, H: Subgroup, N: Subgroup, cache=None) -> bool:
    key = (H.members, N.members)
    if cache is not None and key in cache:
        return cache[key]
    h_arr = np.fromiter(H.members, dtype=np.int64)
    n_arr = np.fromiter(N.members, dtype=np.int64)
    conj = G.table[G.table[n_arr][:, h_arr], G.inverse[n_arr][:, None]]
    ok = bool(np.isin(conj, h_arr).all())
    if cache is not None:
        cache[key] = ok
    return ok


def _axioms_i_ii(
    G: FiniteGroup,
    H: Subgroup,
    K: Subgroup,
    N: Optional[Subgroup] = None,
    norm_cache=None,
):
    """Check axioms (i) and (ii); on success return (N, generator, k).

    K <= H <= N_G(K) makes K normal in H automatically, so axiom (i)
    reduces to containments plus H being normal in the normalizer.
    """
    if not (K.members <= H.members):
        return SSPCheck(False, "i", "K is not a subgroup of H"), None
    if N is None:
        N = normalizer(G, K)
    if not (H.members <= N.members):
        return SSPCheck(False, "i", "H is not normal in N_G(K)"), None
    if not _is_normal_in(G, H, N, norm_cache):
        return SSPCheck(False, "i", "H is not normal in N_G(K)"), None
    gen = _cyclic_quotient_generator(H, K)
    if gen is None:
        return SSPCheck(False, "ii", "H/K is not cyclic"), None
    x, k = gen
    # maximal abelian in N/K <=> centralizer of the generator mod K is H
    inv = G.inverse
    n_arr = np.fromiter(N.members, dtype=np.int64)
    # [x, g] = x^-1 g^-1 x g, elementwise over g in N
    comm = G.table[
        G.table[int(inv[x]), inv[n_arr]], G.table[x, n_arr]
    ]
    k_arr = np.fromiter(K.members, dtype=np.int64)
    centralizing = n_arr[np.isin(comm, k_arr)]
    if not np.isin(
        centralizing, np.fromiter(H.members, dtype=np.int64)
    ).all():
        return SSPCheck(
            False, "ii", "H/K is not maximal abelian in N_G(K)/K"
        ), None
    return SSPCheck(True), (N, x, k)


def is_strong_shoda_pair(
    G: FiniteGroup, H: Subgroup, K: Subgroup, *, N: Optional[Subgroup] = None
) -> SSPCheck:
    """Verify the three strong-Shoda-pair axioms literally."""
    check, data = _axioms_i_ii(G, H, K, N)
    if not check:
        return check
    eps = epsilon(H, K)
    conjugates = _distinct_conjugates(G, eps, H)
    for i, a in enumerate(conjugates):
        for b in conjugates[i + 1 :]:
            if not (a * b).is_zero():
                return SSPCheck(
                    False, "iii", "distinct conjugates are not orthogonal"
                )
    return SSPCheck(True)


def _orthogonal_conjugates(conjugates: list[GroupAlgebraElement]) -> bool:
    for i, a in enumerate(conjugates):
        for b in conjugates[i + 1 :]:
            if not (a * b).is_zero():
                return False
    return True


def _assemble_pair(
    G: FiniteGroup,
    H: Subgroup,
    K: Subgroup,
    N: Subgroup,
    x: int,
    k: int,
    eps: GroupAlgebraElement,
    e: GroupAlgebraElement,
) -> StrongShodaPair:
    rows = G._rows()
    inv = G.inverse
    # residue of each H-element relative to the generator's K-cosets
    coset_of = {}
    cur = 0
    for i in range(k):
        for u in K.members:
            coset_of[rows[cur][u]] = i
        cur = rows[cur][x]
    image = set()
    for g in N.members:
        c = rows[rows[g][x]][int(inv[g])]
        image.add(coset_of[c] % k if k > 1 else 0)
    action = ResidueSubgroup(k, frozenset(image if k > 1 else {0}))
    return StrongShodaPair(
        group=G,
        H=H,
        K=K,
        epsilon=eps,
        e=e,
        N=N,
        k=k,
        matrix_size=G.order // N.order,
        action_image=action,
        generator=x,
    )


def build_strong_shoda_pair(
    G: FiniteGroup,
    H: Subgroup,
    K: Subgroup,
    *,
    N: Optional[Subgroup] = None,
    norm_cache=None,
) -> StrongShodaPair:
    """Verify the pair and assemble its component data.

    Raises NotNormalInH carrying the first failed axiom when the pair
    is not a strong Shoda pair.
    """
    check, data = _axioms_i_ii(G, H, K, N, norm_cache)
    if not check:
        raise NotNormalInH(f"axiom ({check.failed_axiom}) fails: {check.detail}")
    N, x, k = data
    eps = epsilon(H, K)
    conjugates = _distinct_conjugates(G, eps, H)
    if not _orthogonal_conjugates(conjugates):
        raise NotNormalInH("axiom (iii) fails: conjugates not orthogonal")
    e = conjugates[0]
    for c in conjugates[1:]:
        e = e + c
    return _assemble_pair(G, H, K, N, x, k, eps, e)


@dataclass(frozen=True)
class SSPSearch:
    """All strong Shoda pairs found, one per distinct idempotent."""

    pairs: tuple[StrongShodaPair, ...]
    sum_is_one: bool
    orthogonal: bool

    @property
    def complete(self) -> bool:
        return self.sum_is_one and self.orthogonal


def find_strong_shoda_pairs(
    G: FiniteGroup, *, cap: int = DEFAULT_SUBGROUP_CAP
) -> SSPSearch:
    """Scan all pairs K <= H of subgroups for strong Shoda pairs.

    Pairs producing an already-seen idempotent e(G,H,K) are dropped.
    The completeness flag records whether the distinct idempotents are
    pairwise orthogonal and sum to 1; only then do they certifiably
    give the full component decomposition.
    """
    if G.order > cap:
        raise SizeLimit(f"|G| = {G.order} exceeds cap {cap}")
    subs = all_subgroups(G, cap=cap)
    normalizers = {S: normalizer(G, S) for S in subs}
    ordered: list[tuple] = []
    for K in subs:
        N = normalizers[K]
        for H in subs:
            if K.members <= H.members and H.members <= N.members:
                ordered.append((-H.order, K.order, H.elements, K.elements, H, K))
    ordered.sort(key=lambda t: t[:4])
    found: list[StrongShodaPair] = []
    seen: set = set()
    norm_cache: dict = {}
    for _, _, _, _, H, K in ordered:
        check, data = _axioms_i_ii(G, H, K, normalizers[K], norm_cache)
        if not check:
            continue
        N, x, k = data
        eps = epsilon(H, K)
        conjugates = _distinct_conjugates(G, eps, H)
        e = conjugates[0]
        for c in conjugates[1:]:
            e = e + c
        # a pair reproducing a known idempotent adds nothing; skip it
        # before the quadratic orthogonality verification
        key = e._key()
        if key in seen:
            continue
        if not _orthogonal_conjugates(conjugates):
            continue
        seen.add(key)
        found.append(_assemble_pair(G, H, K, N, x, k, eps, e))
    total = GroupAlgebraElement.zero(G)
    for p in found:
        total = total + p.e
    sum_is_one = total == GroupAlgebraElement.one(G)
    orthogonal = True
    for i, a in enumerate(found):
        for b in found[i + 1 :]:
            if not (a.e * b.e).is_zero():
                orthogonal = False
                break
        if not orthogonal:
            break
    return SSPSearch(tuple(found), sum_is_one, orthogonal)


# -- the metacyclic recipe ----------------------------------------------------


def _congruence_solutions(a: int, b: int, n: int) -> list[int]:
    """Ascending solutions x of a*x = b (mod n)."""
    g = math.gcd(a, n)
    if b % g != 0:
        return []
    n_red = n // g
    x0 = (b // g) * pow(a // g, -1, n_red) % n_red
    return [x0 + i * n_red for i in range(g)]


def metacyclic_ssp(p: MetacyclicPresentation, G: Optional[FiniteGroup] = None) -> StrongShodaPair:
    """Construct the recipe pair (<a, b^d>, <a^alpha b^d>) for a
    metacyclic presentation, choosing alpha case by case:

      - t = d: alpha = n - ell;
      - t != d, ell = n: alpha = 0;
      - t != d, ell != n, gcd(t/d, n) | ell: solve (t/d) x = -ell (mod n);
      - otherwise alpha = (m - ell)/2 for t/d = 2, or the integral one of
        (m - ell)/3 and (2m - ell)/3 for t/d = 3, with m the greatest
        divisor of n coprime to t/d.

    Every candidate is verified before being returned; when none
    verifies the recipe is reported inapplicable rather than patched.
    """
    p.validate()
    if G is None:
        G = make_metacyclic(p)
    n, t, ell = p.n, p.t, p.ell
    d = p.d
    q = t // d
    if t == d:
        alphas = [n - ell]
    elif ell == n:
        alphas = [0]
    elif (ell % math.gcd(q, n)) == 0:
        alphas = _congruence_solutions(q, -ell % n, n)
    elif q == 2:
        alphas = [(p.m - ell) // 2] if (p.m - ell) % 2 == 0 else []
    elif q == 3:
        alphas = [
            (c - ell) // 3 for c in (p.m, 2 * p.m) if (c - ell) % 3 == 0
        ]
    else:
        alphas = []
    if not alphas:
        raise RecipeInapplicable(
            f"no integral alpha candidate for (n,t,r,ell)={p.astuple()}"
        )
    b_idx = n if t > 1 else 0
    b_to_d = G.power(b_idx, d)
    a_idx = 1 if n > 1 else 0
    H = generated_subgroup(G, [a_idx, b_to_d])
    last_err = None
    for alpha in alphas:
        key = G.table[G.power(a_idx, alpha % n), b_to_d]
        K = generated_subgroup(G, [int(key)])
        try:
            return build_strong_shoda_pair(G, H, K)
        except NotNormalInH as err:
            last_err = err
    raise RecipeInapplicable(
        f"no alpha candidate verifies for (n,t,r,ell)={p.astuple()}: {last_err}"
    )
