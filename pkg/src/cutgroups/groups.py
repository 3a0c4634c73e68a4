"""Finite group engine over explicit Cayley tables, 0-based indices.

Element 0 is always the identity.  Groups are immutable after
construction; derived structure (conjugacy, subgroup lattice, ...) is
computed lazily and cached on the instance, so instances are cheap to
share and all operations are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from .errors import (
    InvalidPresentation,
    NoIdentity,
    NotAssociative,
    NotClosed,
    NotInvertible,
    NotNormal,
    SizeLimit,
)

DEFAULT_SUBGROUP_CAP = 512
DEFAULT_PRODUCT_CAP = 4096
ASSOCIATIVITY_CHECK_CAP = 512


class FiniteGroup:
    """A finite group given by its full multiplication table.

    ``table[g][h]`` is the index of g*h, ``inverse[g]`` the index of
    g^-1.  ``labels`` holds optional display names, ``gens`` an optional
    generating set used to speed up orbit computations.
    """

    __slots__ = ("order", "table", "inverse", "labels", "gens", "_cache")

    def __init__(
        self,
        table: np.ndarray,
        *,
        labels: Optional[Sequence[str]] = None,
        gens: Optional[Sequence[int]] = None,
        validate: bool = True,
    ):
        table = np.ascontiguousarray(table, dtype=np.int32)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise NotClosed(f"table must be square, got shape {table.shape}")
        self.order = int(table.shape[0])
        self.table = table
        if validate:
            _validate_table(table)
        inv = np.argmax(table == 0, axis=1).astype(np.int32)
        if validate:
            n = self.order
            if not (table[np.arange(n), inv] == 0).all() or not (
                table[inv, np.arange(n)] == 0
            ).all():
                raise NotInvertible("some element has no two-sided inverse")
        self.inverse = inv
        self.labels = tuple(labels) if labels is not None else None
        self.gens = tuple(gens) if gens is not None else None
        self._cache: dict = {}

    # -- basic element arithmetic ------------------------------------

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return int(self.table[self.table[g, x], self.inverse[g]])

    def power(self, g: int, k: int) -> int:
        k = k % element_order(self, g) if k < 0 else k
        acc, cur = 0, g
        while k:
            if k & 1:
                acc = int(self.table[acc, cur])
            cur = int(self.table[cur, cur])
            k >>= 1
        return acc

    def label(self, g: int) -> str:
        return self.labels[g] if self.labels else str(g)

    def elements(self) -> range:
        return range(self.order)

    def is_abelian(self) -> bool:
        if "abelian" not in self._cache:
            self._cache["abelian"] = bool((self.table == self.table.T).all())
        return self._cache["abelian"]

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"

    # -- cached internals ---------------------------------------------

    def _rows(self) -> list:
        if "rows" not in self._cache:
            self._cache["rows"] = self.table.tolist()
        return self._cache["rows"]

    def _generators(self) -> tuple:
        if self.gens is not None:
            return self.gens
        if "gens" not in self._cache:
            gens: list[int] = []
            closure = {0}
            for x in range(self.order):
                if x not in closure:
                    gens.append(x)
                    closure = set(_closure(self, gens))
                    if len(closure) == self.order:
                        break
            self._cache["gens"] = tuple(gens)
        return self._cache["gens"]

    def _conj_gen_maps(self) -> list[np.ndarray]:
        """Conjugation maps x -> g x g^-1 for each generator g."""
        if "conj_maps" not in self._cache:
            maps = []
            for g in self._generators():
                maps.append(self.table[self.table[g], self.inverse[g]])
            self._cache["conj_maps"] = maps
        return self._cache["conj_maps"]

    def _element_orders(self) -> np.ndarray:
        if "orders" not in self._cache:
            n = self.order
            idx = np.arange(n)
            cur = idx.copy()
            orders = np.zeros(n, dtype=np.int64)
            orders[0] = 1
            k = 1
            while (orders == 0).any():
                k += 1
                cur = self.table[cur, idx]
                done = (cur == 0) & (orders == 0)
                orders[done] = k
            self._cache["orders"] = orders
        return self._cache["orders"]


def _validate_table(table: np.ndarray) -> None:
    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        bad = int(np.argmax((table < 0) | (table >= n)))
        raise NotClosed(
            f"entry {table.flat[bad]} at position {divmod(bad, n)} "
            f"is outside 0..{n - 1}"
        )
    idx = np.arange(n)
    if not (table[0] == idx).all() or not (table[:, 0] == idx).all():
        raise NoIdentity("element 0 is not a two-sided identity")
    srt = np.sort(table, axis=1)
    if not (srt == idx).all():
        raise NotClosed("some row is not a permutation of 0..order-1")
    srt = np.sort(table, axis=0)
    if not (srt == idx[:, None]).all():
        raise NotClosed("some column is not a permutation of 0..order-1")
    if n <= ASSOCIATIVITY_CHECK_CAP:
        for g in range(n):
            lhs = table[table[g]]
            rhs = table[g][table]
            if not (lhs == rhs).all():
                h, k = np.unravel_index(int(np.argmax(lhs != rhs)), lhs.shape)
                raise NotAssociative(g, int(h), int(k))


def build_from_table(order: int, table) -> FiniteGroup:
    """Validate an explicit multiplication table and wrap it as a group."""
    if order < 1:
        raise NotClosed(f"order must be >= 1, got {order}")
    arr = np.asarray(table, dtype=np.int64)
    if arr.shape != (order, order):
        raise NotClosed(f"expected a {order}x{order} table, got {arr.shape}")
    return FiniteGroup(arr, validate=True)


# -- Cayley-table text format ------------------------------------------


def format_cayley_table(G: FiniteGroup) -> str:
    lines = [str(G.order)]
    lines += [" ".join(map(str, row)) for row in G._rows()]
    return "\n".join(lines) + "\n"


def parse_cayley_table(text: str) -> FiniteGroup:
    """Parse the text format: order on line 1, then the table rows."""
    tokens = text.split()
    if not tokens:
        raise NotClosed("empty Cayley-table input")
    order = int(tokens[0])
    body = tokens[1:]
    if len(body) != order * order:
        raise NotClosed(
            f"expected {order * order} entries after the order line, got {len(body)}"
        )
    table = [
        [int(body[i * order + j]) for j in range(order)] for i in range(order)
    ]
    return build_from_table(order, table)


# -- metacyclic presentations ------------------------------------------


@dataclass(frozen=True)
class MetacyclicPresentation:
    """Parameters (n, t, r, ell) of <a,b | a^n=1, b^t=a^ell, b^-1 a b=a^r>."""

    n: int
    t: int
    r: int
    ell: int

    def validate(self) -> None:
        n, t, r, ell = self.n, self.t, self.r, self.ell
        if n < 1 or t < 1:
            raise InvalidPresentation(f"n and t must be positive, got n={n}, t={t}")
        if not (1 <= r <= n):
            raise InvalidPresentation(f"r={r} outside 1..n={n}")
        if not (1 <= ell <= n):
            raise InvalidPresentation(f"ell={ell} outside 1..n={n}")
        if n % ell != 0:
            raise InvalidPresentation(f"ell={ell} does not divide n={n}")
        if pow(r, t, n) != 1 % n:
            raise InvalidPresentation(f"r^t = {r}^{t} is not 1 mod {n}")
        if (ell * (r - 1)) % n != 0:
            raise InvalidPresentation(f"ell*(r-1) = {ell}*{r - 1} is not 0 mod {n}")

    @property
    def d(self) -> int:
        """Multiplicative order of r modulo n."""
        self.validate()
        if self.n == 1:
            return 1
        d, cur = 1, self.r % self.n
        while cur != 1:
            cur = (cur * self.r) % self.n
            d += 1
        return d

    @property
    def m(self) -> int:
        """Greatest divisor of n coprime to t/d."""
        q = self.t // self.d
        m = self.n
        g = math.gcd(m, q)
        while g > 1:
            while m % g == 0:
                m //= g
            g = math.gcd(m, q)
        return m

    def order(self) -> int:
        return self.n * self.t

    def is_abelian(self) -> bool:
        return self.r % self.n == 1 % self.n

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.t, self.r, self.ell)


def _metacyclic_label(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("a" if i == 1 else f"a^{i}")
    if j:
        parts.append("b" if j == 1 else f"b^{j}")
    return "*".join(parts) if parts else "1"


def make_metacyclic(p, *rest) -> FiniteGroup:
    """Build the group of a metacyclic presentation.

    Element a^i b^j gets index i + n*j, so a is element 1 and b is
    element n (when nontrivial).
    """
    if rest:
        p = MetacyclicPresentation(p, *rest)
    p.validate()
    n, t, r, ell = p.n, p.t, p.r % p.n, p.ell % p.n
    N = n * t
    rpow = np.empty(t, dtype=np.int64)
    rpow[0] = 1
    for j in range(1, t):
        rpow[j] = (rpow[j - 1] * p.r) % n if n > 1 else 0
    idx = np.arange(N, dtype=np.int64)
    iv, jv = idx % n, idx // n
    j1, j2 = jv[:, None], jv[None, :]
    jsum = j1 + j2
    carry = jsum >= t
    inew = (iv[:, None] + iv[None, :] * rpow[j1] + ell * carry) % max(n, 1)
    jnew = jsum - t * carry
    table = inew + n * jnew
    labels = [_metacyclic_label(i, j) for j in range(t) for i in range(n)]
    gens = []
    if n > 1:
        gens.append(1)
    if t > 1:
        gens.append(n)
    return FiniteGroup(table, labels=labels, gens=gens, validate=False)


def make_abelian(invariant_factors: Sequence[int]) -> FiniteGroup:
    """Direct product of cyclic groups of the given orders."""
    factors = list(invariant_factors)
    for d in factors:
        if d < 2:
            raise InvalidPresentation(f"cyclic factor {d} must be >= 2")
    if not factors:
        return FiniteGroup(np.zeros((1, 1)), labels=["1"], gens=[], validate=False)
    N = math.prod(factors)
    coords = np.zeros((N, len(factors)), dtype=np.int64)
    stride = N
    for pos, d in enumerate(factors):
        stride //= d
        coords[:, pos] = (np.arange(N) // stride) % d
    summed = (coords[:, None, :] + coords[None, :, :]) % np.array(factors)
    table = np.zeros((N, N), dtype=np.int64)
    stride = N
    for pos, d in enumerate(factors):
        stride //= d
        table += summed[:, :, pos] * stride
    if len(factors) == 1:
        labels = ["1"] + ["g" if i == 1 else f"g^{i}" for i in range(1, N)]
    else:
        labels = ["(" + ",".join(map(str, row)) + ")" for row in coords.tolist()]
    gens = []
    stride = N
    for d in factors:
        stride //= d
        gens.append(stride)
    return FiniteGroup(table, labels=labels, gens=gens, validate=False)


def direct_product(
    G: FiniteGroup, H: FiniteGroup, *, max_order: int = DEFAULT_PRODUCT_CAP
) -> FiniteGroup:
    """Direct product with index (g, h) -> g*|H| + h."""
    N = G.order * H.order
    if N > max_order:
        raise SizeLimit(f"product order {N} exceeds cap {max_order}")
    table = (
        G.table[:, None, :, None].astype(np.int64) * H.order
        + H.table[None, :, None, :]
    ).reshape(N, N)
    labels = [
        f"({G.label(g)},{H.label(h)})" for g in G.elements() for h in H.elements()
    ]
    gens = [g * H.order for g in G._generators()] + list(H._generators())
    return FiniteGroup(table, labels=labels, gens=gens, validate=False)


# -- subgroups ----------------------------------------------------------


@dataclass(frozen=True)
class Subgroup:
    """A subgroup as a member set of a parent group."""

    parent: FiniteGroup = field(compare=False)
    members: frozenset[int] = field(compare=True)
    known_gens: Optional[tuple[int, ...]] = field(
        compare=False, default=None, repr=False
    )

    def __post_init__(self):
        if 0 not in self.members:
            raise NotClosed("subgroup must contain the identity (element 0)")
        if self.parent.order % len(self.members) != 0:
            raise NotClosed(
                f"subgroup size {len(self.members)} does not divide "
                f"group order {self.parent.order}"
            )

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __contains__(self, g: int) -> bool:
        return g in self.members

    def __le__(self, other: "Subgroup") -> bool:
        return self.members <= other.members

    def __lt__(self, other: "Subgroup") -> bool:
        return self.members < other.members

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def is_normal(self) -> bool:
        G = self.parent
        mem = self.members
        return all(
            int(m[x]) in mem for m in G._conj_gen_maps() for x in mem
        )

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, members={sorted(self.members)})"


def subgroup_from_members(G: FiniteGroup, members: Iterable[int]) -> Subgroup:
    """Validate closure of an explicit member set."""
    mem = frozenset(int(x) for x in members)
    H = Subgroup(G, mem)
    rows = G._rows()
    inv = G.inverse
    for x in mem:
        if int(inv[x]) not in mem:
            raise NotClosed(f"subgroup not closed under inverse at element {x}")
        row = rows[x]
        for y in mem:
            if row[y] not in mem:
                raise NotClosed(
                    f"subgroup not closed under product at ({x}, {y})"
                )
    return H


def _closure(G: FiniteGroup, gens: Iterable[int], stop_above: int = -1) -> list[int]:
    """Elements of <gens>, via BFS on right multiplication.

    If stop_above >= 0 and the closure grows past it, the whole group is
    returned immediately (valid when stop_above is the largest proper
    divisor of |G|).
    """
    rows = G._rows()
    gens = [g for g in gens if g != 0]
    seen = {0}
    frontier = [0]
    for x in frontier:
        row = rows[x]
        for g in gens:
            y = row[g]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
                if stop_above >= 0 and len(seen) > stop_above:
                    return list(range(G.order))
    return frontier


def generated_subgroup(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    gens = tuple(gens)
    return Subgroup(G, frozenset(_closure(G, gens)), known_gens=gens)


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, frozenset({0}))


def full_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, frozenset(range(G.order)))


def _largest_proper_divisor(n: int) -> int:
    if n == 1:
        return 0
    for p in range(2, n + 1):
        if n % p == 0:
            return n // p
    return 0


def all_subgroups(
    G: FiniteGroup, *, cap: int = DEFAULT_SUBGROUP_CAP
) -> list[Subgroup]:
    """Every subgroup of G, found by closing cyclic subgroups under joins.

    Returned sorted by (order, element tuple); each carries its normal
    flag via Subgroup.is_normal().
    """
    if G.order > cap:
        raise SizeLimit(f"|G| = {G.order} exceeds subgroup cap {cap}")
    if "subgroups" in G._cache:
        return G._cache["subgroups"]
    rows = G._rows()
    stop = _largest_proper_divisor(G.order)
    # primary cyclic subgroups (prime-power order) generate everything
    atoms: dict[frozenset, int] = {}
    orders = G._element_orders()
    for g in range(1, G.order):
        m = int(orders[g])
        for p in _prime_factors(m):
            q = p
            while m % (q * p) == 0:
                q *= p
            h = G.power(g, m // q)
            cyc = []
            cur = 0
            for _ in range(q):
                cyc.append(cur)
                cur = rows[cur][h]
            key = frozenset(cyc)
            if key not in atoms:
                atoms[key] = h
    atom_list = sorted(atoms.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
    found: dict[frozenset, tuple[int, ...]] = {frozenset({0}): ()}
    for key, g in atom_list:
        if key not in found:
            found[key] = (g,)
    work = list(found.items())
    while work:
        members, gens = work.pop()
        for key, g in atom_list:
            if key <= members:
                continue
            jg = gens + (g,)
            joined = frozenset(_closure(G, jg, stop_above=stop))
            if joined not in found:
                found[joined] = jg
                work.append((joined, jg))
    subs = [Subgroup(G, mem, known_gens=gens) for mem, gens in found.items()]
    subs.sort(key=lambda H: (H.order, H.elements))
    G._cache["subgroups"] = subs
    return subs


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def normalizer(G: FiniteGroup, K: Subgroup) -> Subgroup:
    k_arr = np.fromiter(K.members, dtype=np.int64)
    conj = G.table[G.table[:, k_arr], G.inverse[:, None]]
    mask = np.isin(conj, k_arr).all(axis=1)
    return Subgroup(G, frozenset(np.flatnonzero(mask).tolist()))


def centralizer(G: FiniteGroup, elems: Iterable[int]) -> Subgroup:
    mask = np.ones(G.order, dtype=bool)
    for x in set(elems):
        mask &= G.table[:, x] == G.table[x, :]
    return Subgroup(G, frozenset(np.flatnonzero(mask).tolist()))


def center(G: FiniteGroup) -> Subgroup:
    if "center" not in G._cache:
        mask = (G.table == G.table.T).all(axis=1)
        G._cache["center"] = Subgroup(G, frozenset(np.flatnonzero(mask).tolist()))
    return G._cache["center"]


# -- conjugacy ----------------------------------------------------------


@dataclass(frozen=True)
class ConjugacyTable:
    """Partition of a group into conjugacy classes.

    class_of[x] is the class index of x; representatives[c] the least
    element of class c; sizes[c] its size.
    """

    class_of: tuple[int, ...]
    representatives: tuple[int, ...]
    sizes: tuple[int, ...]

    @property
    def num_classes(self) -> int:
        return len(self.representatives)

    def class_members(self, c: int) -> tuple[int, ...]:
        return tuple(
            x for x, cx in enumerate(self.class_of) if cx == c
        )


def conjugacy_classes(G: FiniteGroup) -> ConjugacyTable:
    if "conjugacy" in G._cache:
        return G._cache["conjugacy"]
    maps = [m.tolist() for m in G._conj_gen_maps()]
    n = G.order
    class_of = [-1] * n
    reps: list[int] = []
    sizes: list[int] = []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        c = len(reps)
        class_of[x] = c
        orbit = [x]
        for y in orbit:
            for m in maps:
                z = m[y]
                if class_of[z] < 0:
                    class_of[z] = c
                    orbit.append(z)
        reps.append(x)
        sizes.append(len(orbit))
    ct = ConjugacyTable(tuple(class_of), tuple(reps), tuple(sizes))
    G._cache["conjugacy"] = ct
    return ct


# -- commutator structure ----------------------------------------------


def _commutator_closure(G: FiniteGroup, elems: Iterable[int]) -> Subgroup:
    """Subgroup generated by commutators [h, g], h in elems, g in G."""
    rows = G._rows()
    inv = G.inverse
    comms = set()
    for h in set(elems):
        ih = int(inv[h])
        for g in range(G.order):
            comms.add(rows[rows[ih][int(inv[g])]][rows[h][g]])
    comms.discard(0)
    return generated_subgroup(G, comms)


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    if "derived" not in G._cache:
        G._cache["derived"] = _commutator_closure(G, range(G.order))
    return G._cache["derived"]


def lower_central_series(G: FiniteGroup) -> list[Subgroup]:
    series = [full_subgroup(G)]
    while True:
        nxt = _commutator_closure(G, series[-1].members)
        if nxt.members == series[-1].members:
            break
        series.append(nxt)
        if nxt.order == 1:
            break
    return series


def upper_central_series(G: FiniteGroup) -> list[Subgroup]:
    rows = G._rows()
    inv = G.inverse
    series = [trivial_subgroup(G)]
    while True:
        zi = series[-1].members
        nxt = set()
        for g in range(G.order):
            ig = int(inv[g])
            row_g = rows[g]
            ok = True
            for x in range(G.order):
                # [g, x] = g^-1 x^-1 g x
                if rows[rows[ig][int(inv[x])]][row_g[x]] not in zi:
                    ok = False
                    break
            if ok:
                nxt.add(g)
        if nxt == zi:
            break
        series.append(Subgroup(G, frozenset(nxt)))
        if len(nxt) == G.order:
            break
    return series


# -- quotients ----------------------------------------------------------


class Quotient(NamedTuple):
    group: FiniteGroup
    projection: tuple[int, ...]


def quotient(G: FiniteGroup, N: Subgroup) -> Quotient:
    """Coset group G/N together with the projection map."""
    if not N.is_normal():
        raise NotNormal(f"subgroup of order {N.order} is not normal")
    n_arr = np.fromiter(N.members, dtype=np.int64)
    rep_of = G.table[:, n_arr].min(axis=1)
    reps = np.unique(rep_of)
    index_of = {int(r): i for i, r in enumerate(reps)}
    proj = tuple(index_of[int(r)] for r in rep_of)
    q = len(reps)
    table = np.empty((q, q), dtype=np.int64)
    for i, gi in enumerate(reps):
        table[i] = [index_of[int(rep_of[G.table[gi, gj]])] for gj in reps]
    labels = [G.label(int(r)) + "*N" for r in reps]
    gens = sorted({proj[g] for g in G._generators()} - {0})
    return Quotient(
        FiniteGroup(table, labels=labels, gens=gens, validate=False), proj
    )


# -- element orders / exponent ------------------------------------------


def element_order(G: FiniteGroup, g: int) -> int:
    return int(G._element_orders()[g])


def exponent(G: FiniteGroup) -> int:
    """lcm of all element orders."""
    return int(reduce(math.lcm, G._element_orders().tolist(), 1))


# -- isomorphism ---------------------------------------------------------


def fingerprint(G: FiniteGroup) -> tuple:
    """Cheap isomorphism invariants: order profile, class sizes, |Z|, |G'|."""
    if "fingerprint" not in G._cache:
        orders = sorted(G._element_orders().tolist())
        ct = conjugacy_classes(G)
        G._cache["fingerprint"] = (
            G.order,
            tuple(orders),
            tuple(sorted(ct.sizes)),
            center(G).order,
            derived_subgroup(G).order,
        )
    return G._cache["fingerprint"]


def _element_invariants(G: FiniteGroup) -> list[tuple[int, int]]:
    ct = conjugacy_classes(G)
    orders = G._element_orders()
    return [(int(orders[x]), ct.sizes[ct.class_of[x]]) for x in G.elements()]


def is_isomorphic(
    G: FiniteGroup, H: FiniteGroup, *, cap: int = DEFAULT_SUBGROUP_CAP
) -> bool:
    """Decide G ~= H by invariant filtering plus generator-image search."""
    if G.order > cap or H.order > cap:
        raise SizeLimit(f"orders ({G.order}, {H.order}) exceed cap {cap}")
    if G.order != H.order:
        return False
    if G.order == 1:
        return True
    if fingerprint(G) != fingerprint(H):
        return False
    gens = list(G._generators())
    inv_g = _element_invariants(G)
    inv_h = _element_invariants(H)
    candidates = [
        [y for y in H.elements() if inv_h[y] == inv_g[g]] for g in gens
    ]
    rows_g, rows_h = G._rows(), H._rows()
    n = G.order

    def extend(depth: int, phi: list[int], domain: list[int], images: list[int]) -> bool:
        if depth == len(gens):
            return len(domain) == n
        g = gens[depth]
        for y in candidates[depth]:
            phi2 = phi[:]
            phi2[g] = y
            pairs = list(zip(gens[: depth + 1], images + [y]))
            used = {phi2[x] for x in domain}
            if y in used:
                continue
            used.add(y)
            queue = domain + [g]
            ok = True
            for x in queue:
                px = phi2[x]
                for gi, hi in pairs:
                    z = rows_g[x][gi]
                    pz = rows_h[px][hi]
                    if phi2[z] == -1:
                        if pz in used:
                            ok = False
                            break
                        phi2[z] = pz
                        used.add(pz)
                        queue.append(z)
                    elif phi2[z] != pz:
                        ok = False
                        break
                if not ok:
                    break
            if ok and extend(depth + 1, phi2, queue, images + [y]):
                return True
        return False

    phi0 = [-1] * n
    phi0[0] = 0
    return extend(0, phi0, [0], [])
