"""Metacyclic enumeration, the cut catalog, and central heights.

classify_cut_metacyclic sweeps presentations (n, t, r, ell), keeps the
non-abelian ones that pass the conjugacy cut test, groups them into
isomorphism classes and diffs the classes against the built-in catalog
of cut metacyclic groups.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

import numpy as np

from .cut import is_cut_ritter_sehgal
from .cyclo import CenterClass, component_center, euler_phi, unit_group_info
from .errors import CutGroupsError, SizeLimit
from .groups import (
    FiniteGroup,
    MetacyclicPresentation,
    Subgroup,
    center,
    fingerprint,
    generated_subgroup,
    is_isomorphic,
    make_metacyclic,
    trivial_subgroup,
)
from .shoda import build_strong_shoda_pair

ISO_CAP = 512


# -- enumeration -------------------------------------------------------------


def enumerate_metacyclic(
    max_n: int, t_set: Iterable[int]
) -> Iterator[MetacyclicPresentation]:
    """All valid presentations with n <= max_n and t in t_set, in
    lexicographic (n, t, r, ell) order."""
    ts = sorted(set(t_set))
    for n in range(1, max_n + 1):
        divisors = [d for d in range(1, n + 1) if n % d == 0]
        for t in ts:
            for r in range(1, n + 1):
                if math.gcd(r, n) != 1 or pow(r, t, n) != 1 % n:
                    continue
                for ell in divisors:
                    if (ell * (r - 1)) % n == 0:
                        yield MetacyclicPresentation(n, t, r, ell)


# -- the catalog --------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    """One expanded presentation from the cut-metacyclic catalog."""

    presentation: MetacyclicPresentation
    source_line: str


def _lambda(n: int) -> int:
    phi, cyclic, gen = unit_group_info(n)
    if not cyclic:
        raise CutGroupsError(f"units mod {n} are not cyclic")
    return gen


def theorem7_catalog() -> tuple[CatalogEntry, ...]:
    """The catalog of metacyclic cut groups, parameter families expanded.

    lambda_n is instantiated as the least positive generator of the
    units modulo n; generator-choice independence is checked in tests.
    """
    entries: list[CatalogEntry] = []

    def add(n, t, r, ell, line):
        p = MetacyclicPresentation(n, t, r, ell)
        p.validate()
        entries.append(CatalogEntry(p, line))

    for n in (3, 4, 6):
        for t in (2, 4, 6):
            add(n, t, n - 1, n, "inversion n=3,4,6")
    for t in (2, 4, 6):
        add(4, t, 3, 2, "amalgamated n=4")
    add(6, 2, 5, 3, "amalgamated n=6")
    for n in (5, 7, 9, 10, 14, 18):
        add(n, euler_phi(n), _lambda(n), n, "full-twist lambda")
    for n in (7, 9, 14, 18):
        lam2 = _lambda(n) ** 2 % n
        for j in (1, 2):
            add(n, euler_phi(n) // j, lam2, n, "square-twist lambda^2")
    for t in (2, 4):
        for r in (3, 5):
            add(8, t, r, 8, "n=8")
    for t in (2, 4):
        add(12, t, 5, 12, "n=12 r=5")
    for t in (2, 6):
        for ell in (t, 12):
            add(12, t, 7, ell, "n=12 r=7")
    add(15, 4, 2, 15, "n=15")
    for r in (3, 5):
        add(16, 4, r, 16, "n=16")
    for r in (3, 13):
        add(20, 4, r, 20, "n=20")
    add(20, 4, 3, 10, "n=20 amalgamated")
    for r in (2, 10):
        add(21, 6, r, 21, "n=21")
    for ell in (14, 28):
        add(28, 6, 11, ell, "n=28")
    add(30, 4, 17, 30, "n=30")
    for ell in (6, 36):
        add(36, 6, 7, ell, "n=36")
    for r in (11, 19):
        add(42, 6, r, 42, "n=42")
    return tuple(entries)


# -- isomorphism classes and the catalog diff ---------------------------------


@dataclass
class IsoClass:
    representative: MetacyclicPresentation
    group: FiniteGroup = field(repr=False)
    members: list[MetacyclicPresentation] = field(default_factory=list)
    catalog_members: list[CatalogEntry] = field(default_factory=list)

    @property
    def order(self) -> int:
        return self.representative.order()


@dataclass
class Discrepancy:
    """A catalog/computed mismatch with its dual-test witness."""

    presentation: Optional[MetacyclicPresentation]
    entry: Optional[CatalogEntry]
    conjugacy_verdict: Optional[bool]
    wedderburn_verdict: Optional[bool]
    note: str

    @property
    def confirmed(self) -> bool:
        return self.conjugacy_verdict == self.wedderburn_verdict


@dataclass
class ClassifyResult:
    classes: list[IsoClass]
    cut_presentations: list[MetacyclicPresentation]
    missing_entries: list[Discrepancy]
    extra_classes: list[Discrepancy]
    out_of_range_entries: list[CatalogEntry]

    @property
    def matches_catalog(self) -> bool:
        return not self.missing_entries and not self.extra_classes


def _wedderburn_bool(G: FiniteGroup) -> Optional[bool]:
    from .cyclo import is_cut_wedderburn
    from .errors import NotStronglyMonomialVerified

    try:
        return bool(is_cut_wedderburn(G).is_cut)
    except (NotStronglyMonomialVerified, SizeLimit):
        return None


def _cut_filter_worker(args: tuple[int, int, int, int]) -> bool:
    G = make_metacyclic(MetacyclicPresentation(*args))
    return is_cut_ritter_sehgal(G, want_witness=False).is_cut


def classify_cut_metacyclic(
    max_n: int,
    t_set: Iterable[int],
    *,
    jobs: int = 1,
    iso_cap: int = ISO_CAP,
) -> ClassifyResult:
    """Filter the enumeration through the cut test and class the survivors.

    The catalog diff reports a discrepancy only when the conjugacy and
    component-center verdicts agree on it, guarding against transcription
    slips on either side.
    """
    presentations = [
        p for p in enumerate_metacyclic(max_n, t_set) if not p.is_abelian()
    ]
    tuples = [p.astuple() for p in presentations]
    if jobs > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            flags = pool.map(_cut_filter_worker, tuples, chunksize=64)
    else:
        flags = [_cut_filter_worker(t) for t in tuples]
    survivors = [p for p, ok in zip(presentations, flags) if ok]

    classes: list[IsoClass] = []
    for p in survivors:
        G = make_metacyclic(p)
        fp = fingerprint(G)
        home = None
        for cls in classes:
            if cls.group.order == G.order and fingerprint(cls.group) == fp:
                if is_isomorphic(cls.group, G, cap=iso_cap):
                    home = cls
                    break
        if home is None:
            home = IsoClass(p, G)
            classes.append(home)
        home.members.append(p)
    classes.sort(
        key=lambda c: (c.order,) + c.representative.astuple()
    )

    by_tuple: dict[tuple, IsoClass] = {}
    for cls in classes:
        for p in cls.members:
            by_tuple[p.astuple()] = cls

    missing: list[Discrepancy] = []
    out_of_range: list[CatalogEntry] = []
    ts = set(t_set)
    for entry in theorem7_catalog():
        p = entry.presentation
        if p.n > max_n or p.t not in ts:
            out_of_range.append(entry)
            continue
        cls = by_tuple.get(p.astuple())
        if cls is None:
            G = make_metacyclic(p)
            missing.append(
                Discrepancy(
                    p,
                    entry,
                    is_cut_ritter_sehgal(G).is_cut,
                    _wedderburn_bool(G),
                    "catalog entry not found among cut presentations",
                )
            )
        else:
            cls.catalog_members.append(entry)

    extra: list[Discrepancy] = []
    for cls in classes:
        if not cls.catalog_members:
            extra.append(
                Discrepancy(
                    cls.representative,
                    None,
                    True,
                    _wedderburn_bool(cls.group),
                    "cut class with no catalog member",
                )
            )
    return ClassifyResult(classes, survivors, missing, extra, out_of_range)


# -- the tables of non-admissible pairs ---------------------------------------

Word = tuple[int, int]  # a^i b^j


@dataclass(frozen=True)
class Case3Row:
    """One printed row: parameters plus the pair (H, K) as words in a, b."""

    n: int
    t: int
    r: int
    ell: int
    h_words: tuple[Word, ...]
    k_words: tuple[Word, ...]

    @property
    def presentation(self) -> MetacyclicPresentation:
        return MetacyclicPresentation(self.n, self.t, self.r, self.ell)


_A = (1, 0)
_B = (0, 1)
_B2 = (0, 2)

CASE3_ROWS: tuple[Case3Row, ...] = (
    # n = 8
    Case3Row(8, 2, 7, 4, (_A,), ()),
    Case3Row(8, 2, 7, 8, (_A,), ()),
    Case3Row(8, 4, 3, 4, (_A, _B2), ((2, 2),)),
    Case3Row(8, 4, 5, 2, (_A, _B2), ((3, 2),)),
    Case3Row(8, 4, 7, 8, (_A, _B2), (_B2,)),
    Case3Row(8, 6, 3, 8, (_A, _B2), (_B2,)),
    Case3Row(8, 6, 7, 8, (_A, _B2), (_B2,)),
    Case3Row(8, 6, 5, 8, (_A, _B), ((4, 0), (0, 3))),
    Case3Row(8, 6, 5, 4, (_A, _B2), ((4, 2),)),
    # n = 12
    Case3Row(12, 2, 5, 3, (_A, _B), ((4, 0),)),
    Case3Row(12, 2, 11, 6, (_A,), ()),
    Case3Row(12, 2, 11, 12, (_A,), ()),
    Case3Row(12, 4, 5, 3, (_A, _B), ((2, 0),)),
    Case3Row(12, 4, 5, 6, (_A, _B), ((1, 2),)),
    Case3Row(12, 4, 7, 2, (_A, _B), ((3, 0),)),
    Case3Row(12, 4, 7, 12, (_A, _B), ((3, 0),)),
    Case3Row(12, 4, 11, 12, (_A, _B2), (_B2,)),
    Case3Row(12, 4, 11, 6, (_A, _B2), ((9, 2),)),
    Case3Row(12, 6, 5, 12, (_A, _B), ((4, 0), (0, 3))),
    Case3Row(12, 6, 5, 3, (_A, _B), ((2, 0),)),
    Case3Row(12, 6, 7, 2, (_A, _B), ((3, 0),)),
    Case3Row(12, 6, 7, 4, (_A, _B), ((3, 0),)),
    Case3Row(12, 6, 11, 12, (_A, _B2), ((4, 2),)),
    Case3Row(12, 6, 11, 6, (_A, _B2), ((10, 2),)),
    # n = 15
    Case3Row(15, 4, 7, 15, (_A, _B), ((3, 0),)),
    # n = 20
    Case3Row(20, 4, 13, 5, (_A, _B), ((2, 0),)),
    Case3Row(20, 4, 13, 10, (_A, _B), ((1, 2), (4, 0))),
    # n = 30
    Case3Row(30, 4, 7, 5, (_A, _B), ((3, 0),)),
    Case3Row(30, 4, 7, 30, (_A, _B), ((3, 0),)),
    Case3Row(30, 4, 17, 15, (_A, _B), ((2, 0),)),
    # n = 21
    Case3Row(21, 6, 5, 21, (_A,), ()),
    Case3Row(21, 6, 10, 7, (_A, _B), ((15, 0),)),
    # n = 28
    Case3Row(28, 6, 3, 14, (_A,), ()),
    Case3Row(28, 6, 3, 28, (_A,), ()),
    Case3Row(28, 6, 5, 28, (_A, _B), ((4, 0), (0, 3))),
    Case3Row(28, 6, 5, 7, (_A, _B), ((2, 0),)),
    # n = 36
    Case3Row(36, 6, 5, 36, (_A, _B), ((4, 0), (0, 3))),
    Case3Row(36, 6, 5, 9, (_A, _B), ((2, 0),)),
    Case3Row(36, 6, 11, 36, (_A, _B2), ((4, 2),)),
    Case3Row(36, 6, 11, 18, (_A, _B2), ((10, 2),)),
    # n = 42
    Case3Row(42, 6, 5, 42, (_A,), ()),
    Case3Row(42, 6, 5, 21, (_A, _B), ((2, 0),)),
    Case3Row(42, 6, 11, 21, (_A, _B), ((2, 0),)),
    Case3Row(42, 6, 19, 7, (_A, _B), ((2, 0),)),
    Case3Row(42, 6, 19, 21, (_A, _B), ((2, 0),)),
    Case3Row(42, 6, 19, 14, (_A, _B), ((3, 0),)),
)


def _word_element(G: FiniteGroup, p: MetacyclicPresentation, word: Word) -> int:
    i, j = word
    return (i % p.n) + p.n * (j % p.t)


def subgroup_from_words(
    G: FiniteGroup, p: MetacyclicPresentation, words: Iterable[Word]
) -> Subgroup:
    gens = [_word_element(G, p, w) for w in words]
    return generated_subgroup(G, gens) if gens else trivial_subgroup(G)


@dataclass(frozen=True)
class Case3Report:
    row: Case3Row
    is_ssp: bool
    center: Optional[CenterClass]
    passed: bool


def verify_case3_tables(rows: Iterable[Case3Row] = CASE3_ROWS) -> list[Case3Report]:
    """Check each printed row: the pair is a strong Shoda pair and its
    component center is neither Q nor imaginary quadratic."""
    from .errors import NotNormalInH

    reports = []
    for row in rows:
        p = row.presentation
        p.validate()
        G = make_metacyclic(p)
        H = subgroup_from_words(G, p, row.h_words)
        K = subgroup_from_words(G, p, row.k_words)
        try:
            pair = build_strong_shoda_pair(G, H, K)
        except NotNormalInH:
            reports.append(Case3Report(row, False, None, False))
            continue
        cc = component_center(pair)
        reports.append(Case3Report(row, True, cc, not cc.is_cut_admissible))
    return reports


# -- central heights -----------------------------------------------------------


@dataclass(frozen=True)
class HeightVerdict:
    height: int
    reason: str


def _index_two_subgroups(G: FiniteGroup) -> list[frozenset[int]]:
    """Index-2 subgroups, as kernels of sign characters on G modulo
    squares and commutators."""
    rows = G._rows()
    inv = G.inverse
    gens = set()
    for g in range(G.order):
        gens.add(rows[g][g])
    for g in G._generators():
        ig = int(inv[g])
        for x in range(G.order):
            gens.add(rows[rows[ig][int(inv[x])]][rows[g][x]])
    gens.discard(0)
    A = generated_subgroup(G, gens)
    from .groups import quotient

    V, proj = quotient(G, A)
    if V.order == 1:
        return []
    basis: list[int] = []
    closure = {0}
    vrows = V._rows()
    coords: dict[int, int] = {0: 0}
    for v in range(V.order):
        if v not in closure:
            basis.append(v)
            bit = 1 << (len(basis) - 1)
            for u, cu in list(coords.items()):
                w = vrows[u][v]
                coords[w] = cu | bit
            closure = set(coords)
    out = []
    for s in range(1, 1 << len(basis)):
        kern = {v for v, cv in coords.items() if bin(cv & s).count("1") % 2 == 0}
        out.append(frozenset(g for g in range(G.order) if proj[g] in kern))
    return out


def is_qstar(G: FiniteGroup, *, cap: int = ISO_CAP) -> bool:
    """Exhaustively search for an abelian index-2 subgroup H and an
    order-4 element x with x inverting H, x^2 a square in H, and H not
    elementary abelian of exponent 2."""
    if G.order > cap:
        raise SizeLimit(f"|G| = {G.order} exceeds cap {cap}")
    if G.order % 2:
        return False
    orders = G._element_orders()
    rows = G._rows()
    inv = G.inverse
    for mem in _index_two_subgroups(G):
        h_arr = np.fromiter(mem, dtype=np.int64)
        sub = G.table[np.ix_(h_arr, h_arr)]
        if not (sub == sub.T).all():
            continue
        if not (orders[h_arr] > 2).any():
            continue  # elementary abelian 2-group
        squares = {rows[h][h] for h in mem}
        inverted = inv[h_arr]
        for x in range(G.order):
            if x in mem or int(orders[x]) != 4:
                continue
            ix = int(inv[x])
            if rows[x][x] not in squares:
                continue
            conj = G.table[G.table[ix, h_arr], x]
            if (conj == inverted).all():
                return True
    return False


def central_height(G: FiniteGroup, *, cap: int = ISO_CAP) -> HeightVerdict:
    """Trichotomy for metacyclic G: 0 when cut with trivial center, 2 for
    the quaternion-like family, 1 otherwise."""
    cut = is_cut_ritter_sehgal(G, want_witness=False).is_cut
    trivial_center = center(G).order == 1
    qstar = is_qstar(G, cap=cap)
    if cut and trivial_center:
        if qstar:
            raise CutGroupsError("height-0 and height-2 conditions overlap")
        return HeightVerdict(0, "cut_and_trivial_center")
    if qstar:
        return HeightVerdict(2, "qstar")
    return HeightVerdict(1, "otherwise")
