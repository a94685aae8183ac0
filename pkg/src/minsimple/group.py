"""Finite permutation groups and the structural operations used by the verifier.

Order and membership go through a stabilizer chain.  Operations that need the
element set (conjugacy classes, centralizers, normal subgroups, quotients)
enumerate it through an :class:`~minsimple.table.ElementTable`, which is fine
for the orders handled here (a few times 10^4 at most).
"""

from __future__ import annotations

import math
import threading
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .chain import StabChain, inv, mul
from .perm import Permutation, format_cycles
from .table import ElementTable

__all__ = [
    "Group", "SeriesRecord", "NOT_SOLUBLE", "NOT_SUBNORMAL",
    "GroupError", "NotSubgroupError", "NotNormalError", "BudgetExceeded",
    "ELEMENT_BUDGET",
    "group_from_generators", "order", "is_member", "is_subgroup", "is_normal",
    "derived_subgroup", "derived_series", "derived_length",
    "is_soluble", "is_abelian", "is_metabelian", "is_perfect", "is_simple",
    "normal_closure", "normal_closure_chain", "subnormal_defect",
    "centralizer", "center", "normalizer", "conjugacy_classes",
    "normal_subgroups", "minimal_normal_subgroups", "soluble_radical",
    "quotient_group", "element_order_histogram",
]

# explicit element enumeration is refused above this order
ELEMENT_BUDGET = 40_000


class GroupError(ValueError):
    pass


class NotSubgroupError(GroupError):
    pass


class NotNormalError(GroupError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class _Marker:
    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name

    def __repr__(self) -> str:
        return self.name

    def __reduce__(self):
        return self.name


NOT_SOLUBLE = _Marker("NOT_SOLUBLE")
NOT_SUBNORMAL = _Marker("NOT_SUBNORMAL")


class Group:
    """A permutation group given by generators.

    The stabilizer chain, element table and conjugacy classes are computed on
    first use and cached; the group itself never changes.
    """

    def __init__(self, degree: int, gens: Iterable[Permutation] = (), name: str | None = None):
        gens = [g if isinstance(g, Permutation) else Permutation(g) for g in gens]
        for g in gens:
            if g.degree != degree:
                raise GroupError(f"generator of degree {g.degree} in a group of degree {degree}")
        self.degree = degree
        self.gens: tuple[Permutation, ...] = tuple(gens)
        self.name = name
        self._lock = threading.RLock()
        self._chain: StabChain | None = None
        self._table: ElementTable | None = None
        self._classes: list[np.ndarray] | None = None
        self._cache: dict = {}

    @classmethod
    def _from_tuples(cls, degree: int, gens: Iterable[tuple], name: str | None = None) -> "Group":
        g = cls.__new__(cls)
        Group.__init__(g, degree, (Permutation(t, check=False) for t in gens), name)
        return g

    @property
    def chain(self) -> StabChain:
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = StabChain(self.degree, [g.images for g in self.gens])
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __contains__(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise GroupError(f"permutation of degree {p.degree} tested against a group of degree {self.degree}")
        return self.chain.contains(p.images)

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.gens)

    def table(self) -> ElementTable:
        if self._table is None:
            with self._lock:
                if self._table is None:
                    if self.order() > ELEMENT_BUDGET:
                        raise BudgetExceeded(f"order {self.order()} exceeds element budget {ELEMENT_BUDGET}")
                    self._table = ElementTable(self.chain)
        return self._table

    def elements(self) -> list[Permutation]:
        return [Permutation(r, check=False) for r in self.table().elems.tolist()]

    def mask_in(self, parent: "Group") -> np.ndarray:
        """Boolean mask of this group's elements inside ``parent``'s element table."""
        tab = parent.table()
        if self.order() > ELEMENT_BUDGET:
            raise BudgetExceeded(f"order {self.order()} exceeds element budget")
        rows = self.chain.elements_array()
        try:
            idx = tab.index_of(rows)
        except KeyError:
            raise NotSubgroupError("not a subgroup of the given parent") from None
        return tab.mask_of(idx)

    def _cached(self, key, fn):
        if key not in self._cache:
            with self._lock:
                if key not in self._cache:
                    self._cache[key] = fn()
        return self._cache[key]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Group):
            return NotImplemented
        if self.degree != other.degree or self.order() != other.order():
            return False
        return all(g in other for g in self.gens)

    def __hash__(self) -> int:
        return hash((self.degree, self.order()))

    def __repr__(self) -> str:
        label = self.name or f"<{', '.join(format_cycles(g) for g in self.gens[:4])}{', ...' if len(self.gens) > 4 else ''}>"
        return f"Group({label}, degree={self.degree})"


@dataclass(frozen=True)
class SeriesRecord:
    terms: tuple[Group, ...]
    kind: str  # "derived" or "normal-closure-chain"

    def orders(self) -> list[int]:
        return [t.order() for t in self.terms]


def group_from_generators(degree: int, gens: Sequence[Permutation], name: str | None = None) -> Group:
    return Group(degree, gens, name=name)


def order(g: Group) -> int:
    return g.order()


def is_member(g: Group, p: Permutation) -> bool:
    return p in g


def is_subgroup(h: Group, g: Group) -> bool:
    return h.degree == g.degree and all(x in g for x in h.gens)


def _require_subgroup(g: Group, h: Group) -> None:
    if h.degree != g.degree:
        raise GroupError(f"degree mismatch: {h.degree} vs {g.degree}")
    if not is_subgroup(h, g):
        raise NotSubgroupError("h is not contained in g")


def _subgroup_from_elements(parent: Group, mask: np.ndarray, name: str | None = None) -> Group:
    """A generating set for the subgroup whose element mask inside ``parent`` is given."""
    tab = parent.table()
    members = np.flatnonzero(mask)
    gens: list[int] = []
    current = tab.closure([])
    orders = tab.element_orders()
    # large element orders first: fewer generators needed
    for e in members[np.argsort(-orders[members], kind="stable")]:
        if not current[e]:
            gens.append(int(e))
            current = tab.closure(gens)
            if current.sum() == len(members):
                break
    return Group._from_tuples(parent.degree, (tuple(tab.elems[e].tolist()) for e in gens), name)


def normal_closure(g: Group, h: Group) -> Group:
    """Smallest normal subgroup of ``g`` containing ``h``."""
    _require_subgroup(g, h)
    return _normal_closure_of(g, [x.images for x in h.gens])


def _normal_closure_of(g: Group, elems: Iterable[tuple]) -> Group:
    # keep only elements that enlarge the group: at most log2(order) generators
    chain = StabChain(g.degree, [])
    gens = [e for e in elems if chain.extend(e)]
    queue = list(gens)
    conj = [(x.images, inv(x.images)) for x in g.gens]
    while queue:
        n = queue.pop()
        for x, xinv in conj:
            c = mul(mul(xinv, n), x)
            if chain.extend(c):
                gens.append(c)
                queue.append(c)
    out = Group._from_tuples(g.degree, gens)
    out._chain = chain
    return out


def is_normal(g: Group, h: Group) -> bool:
    _require_subgroup(g, h)
    for n in h.gens:
        for x in g.gens:
            if n.conjugate(x) not in h:
                return False
    return True


def derived_subgroup(g: Group) -> Group:
    def build():
        gens = [x.images for x in g.gens]
        comms = []
        for i, a in enumerate(gens):
            for b in gens[i + 1:]:
                c = mul(mul(inv(a), inv(b)), mul(a, b))
                comms.append(c)
        return _normal_closure_of(g, comms)

    return g._cached("derived", build)


def derived_series(g: Group) -> SeriesRecord:
    def build():
        terms = [g]
        while True:
            nxt = derived_subgroup(terms[-1])
            if nxt.order() == terms[-1].order():
                if len(terms) == 1 or terms[-1].order() != 1:
                    pass
                break
            terms.append(nxt)
        # keep one repeated term for a perfect residual, as in S5 -> A5 -> A5
        last = terms[-1]
        if last.order() != 1:
            terms.append(derived_subgroup(last))
        return SeriesRecord(tuple(terms), "derived")

    return g._cached("derived_series", build)


def derived_length(g: Group):
    """Least ``d`` with trivial ``d``-th derived term, or ``NOT_SOLUBLE``."""
    terms = derived_series(g).terms
    if terms[-1].order() != 1:
        return NOT_SOLUBLE
    return len(terms) - 1


def is_soluble(g: Group) -> bool:
    return derived_length(g) is not NOT_SOLUBLE


def is_abelian(g: Group) -> bool:
    gens = g.gens
    return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])


def is_metabelian(g: Group) -> bool:
    dl = derived_length(g)
    return dl is not NOT_SOLUBLE and dl <= 2


def is_perfect(g: Group) -> bool:
    return derived_subgroup(g).order() == g.order()


def normal_closure_chain(g: Group, h: Group) -> SeriesRecord:
    """Descending chain ``K_0 = g``, ``K_{i+1}`` = normal closure of ``h`` in ``K_i``, until stable."""
    _require_subgroup(g, h)
    terms = [g]
    while terms[-1].order() != h.order():
        nxt = normal_closure(terms[-1], h)
        if nxt.order() == terms[-1].order():
            break
        terms.append(nxt)
    return SeriesRecord(tuple(terms), "normal-closure-chain")


def subnormal_defect(g: Group, h: Group):
    """Length of the normal-closure chain from ``g`` down to ``h``, or ``NOT_SUBNORMAL``."""
    terms = normal_closure_chain(g, h).terms
    if terms[-1].order() != h.order():
        return NOT_SUBNORMAL
    return len(terms) - 1


def centralizer(g: Group, h: Group) -> Group:
    _require_subgroup(g, h)
    tab = g.table()
    mask = np.ones(tab.order, dtype=bool)
    for x in h.gens:
        xi = int(tab.index_of(np.array(x.images)[None, :])[0])
        mask &= tab.times(xi) == tab.times_left(xi)
    return _subgroup_from_elements(g, mask)


def center(g: Group) -> Group:
    return g._cached("center", lambda: centralizer(g, g))


def normalizer(g: Group, h: Group) -> Group:
    _require_subgroup(g, h)
    tab = g.table()
    hmask = h.mask_in(g)
    mask = np.ones(tab.order, dtype=bool)
    for x in h.gens:
        xi = int(tab.index_of(np.array(x.images)[None, :])[0])
        mask &= hmask[tab.conjugates_of(xi)]
    return _subgroup_from_elements(g, mask)


def _gen_indices(g: Group) -> list[int]:
    tab = g.table()
    if not g.gens:
        return []
    return [int(i) for i in tab.index_of(np.array([x.images for x in g.gens]))]


def _class_arrays(g: Group) -> list[np.ndarray]:
    if g._classes is None:
        with g._lock:
            if g._classes is None:
                g._classes = g.table().conjugacy_classes(_gen_indices(g))
    return g._classes


def conjugacy_classes(g: Group) -> list[list[Permutation]]:
    tab = g.table()
    return [
        [Permutation(r, check=False) for r in tab.elems[cl].tolist()] for cl in _class_arrays(g)
    ]


def element_order_histogram(g: Group) -> dict[int, int]:
    orders = g.table().element_orders()
    return dict(sorted(Counter(orders.tolist()).items()))


def normal_subgroups(g: Group) -> list[Group]:
    """All normal subgroups, as joins of normal closures of conjugacy classes, sorted by order."""

    def build():
        tab = g.table()
        keyed: dict[bytes, Group] = {}

        def add(n: Group) -> bool:
            key = np.packbits(n.mask_in(g)).tobytes()
            if key in keyed:
                return False
            keyed[key] = n
            return True

        trivial = Group(g.degree, [], name=None)
        add(trivial)
        class_closures = []
        for cl in _class_arrays(g):
            rep = tuple(tab.elems[cl[0]].tolist())
            if rep == g.identity.images:
                continue
            n = _normal_closure_of(g, [rep])
            if add(n):
                class_closures.append(n)
        layer = list(keyed.values())
        while layer:
            new = []
            for a in layer:
                for c in class_closures:
                    joined = _normal_closure_of(g, [x.images for x in a.gens + c.gens])
                    if add(joined):
                        new.append(joined)
            layer = new
        return sorted(keyed.values(), key=lambda n: n.order())

    return g._cached("normal_subgroups", build)


def is_simple(g: Group) -> bool:
    return g.order() > 1 and len(normal_subgroups(g)) == 2


def minimal_normal_subgroups(g: Group) -> list[Group]:
    normals = [n for n in normal_subgroups(g) if n.order() > 1]
    return [n for n in normals if not any(m.order() < n.order() and is_subgroup(m, n) for m in normals)]


def soluble_radical(g: Group) -> Group:
    def build():
        soluble = [n for n in normal_subgroups(g) if is_soluble(n)]
        radical = max(soluble, key=lambda n: n.order())
        for n in soluble:
            if not is_subgroup(n, radical):
                raise AssertionError("soluble normal subgroups do not have a unique maximum")
        return radical

    return g._cached("soluble_radical", build)


def quotient_group(g: Group, n: Group) -> Group:
    """``g/n`` acting on the right cosets of ``n``."""
    _require_subgroup(g, n)
    if not is_normal(g, n):
        raise NotNormalError("n is not normal in g")
    tab = g.table()
    nidx = np.flatnonzero(n.mask_in(g))
    coset = np.full(tab.order, -1, dtype=np.int64)
    reps = []
    for e in range(tab.order):
        if coset[e] < 0:
            coset[tab.times(e)[nidx]] = len(reps)
            reps.append(e)
    gens = []
    for x in _gen_indices(g):
        right = tab.times(x)
        gens.append(tuple(int(coset[right[r]]) for r in reps))
    name = f"{g.name}/{n.name}" if g.name and n.name else None
    return Group._from_tuples(len(reps), gens, name)
