"""Subgroup lattices by cyclic extension.

Every subgroup ``K > 1`` equals ``<L, c>`` for a maximal subgroup ``L`` of ``K``
and an element ``c`` of prime-power order outside ``L``.  Starting from the
trivial group, each class representative ``H`` is therefore extended by one
representative of every ``N(H)``-orbit of cyclic subgroups of prime-power
order not contained in ``H``.  New subgroups are registered together with
their whole conjugacy class, so deduplication is a dictionary lookup on the
element mask.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .group import (
    NOT_SOLUBLE, BudgetExceeded, Group, _gen_indices, derived_length, subnormal_defect,
)
from .iso import is_isomorphic

log = logging.getLogger(__name__)

__all__ = [
    "LatticeBudget", "LatticeBudgetExceeded", "NotSolubleError", "SubgroupClass", "SubgroupLattice",
    "Verdict", "subgroup_lattice", "all_subgroups", "contains_isomorphic_copy",
    "all_proper_metabelian", "is_minimal_simple", "max_proper_derived_length",
]


class LatticeBudgetExceeded(BudgetExceeded):
    pass


class NotSolubleError(ValueError):
    pass


@dataclass(frozen=True)
class LatticeBudget:
    max_group_order: int = 6000
    max_subgroups: int = 10**6
    time_limit: Optional[float] = None

    @classmethod
    def extended(cls) -> "LatticeBudget":
        return cls(max_group_order=10_000)


@dataclass
class SubgroupClass:
    representative: Group
    class_size: int
    order: int
    derived_length: object
    defect_in_parent: object
    normalizer_order: int = 0
    # element masks of every conjugate, rows of a bool array over the parent's elements
    conjugates: np.ndarray = field(default=None, repr=False)

    @property
    def soluble(self) -> bool:
        return self.derived_length is not NOT_SOLUBLE

    @property
    def metabelian(self) -> bool:
        return self.soluble and self.derived_length <= 2

    @property
    def subnormal(self) -> bool:
        return isinstance(self.defect_in_parent, int)


@dataclass
class Verdict:
    passed: bool
    witness: Optional[Group] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed


class SubgroupLattice:
    """All subgroup classes of a group together with their members."""

    def __init__(self, group: Group, classes: list[SubgroupClass]):
        self.group = group
        self.classes = classes

    @property
    def total(self) -> int:
        return sum(c.class_size for c in self.classes)

    def proper(self) -> list[SubgroupClass]:
        n = self.group.order()
        return [c for c in self.classes if c.order < n]

    def subgroups_containing(self, mask: np.ndarray):
        """Yield ``(class, conjugate mask)`` for every subgroup containing the element set ``mask``."""
        for cl in self.classes:
            if cl.order % int(mask.sum()):
                continue
            inside = cl.conjugates[:, mask].all(axis=1)
            for row in np.flatnonzero(inside):
                yield cl, cl.conjugates[row]


class _Enumerator:
    def __init__(self, g: Group, budget: LatticeBudget):
        self.g = g
        self.budget = budget
        self.tab = tab = g.table()
        self.T = tab.mult_table()
        self.N = tab.order
        self.gens = _gen_indices(g)
        self.gconj = [tab.conj_map(x) for x in self.gens]
        self.started = time.monotonic()
        self.total = 0
        self._conj_cache: dict[int, np.ndarray] = {}
        orders = tab.element_orders()
        self.cyclic_reps = self._cyclic_reps(orders)

    def _cyclic_reps(self, orders: np.ndarray) -> np.ndarray:
        N, T = self.N, self.T
        ar = np.arange(N)
        canon = ar.copy()
        pw = ar.copy()
        for k in range(2, int(orders.max()) + 1):
            pw = T[pw, ar].astype(np.int64)
            usable = (k < orders) & (np.gcd(k, orders) == 1)
            canon[usable] = np.minimum(canon[usable], pw[usable])
        self._canon = canon
        prime_power = np.array([_is_prime_power(int(o)) for o in orders])
        reps = np.unique(canon[prime_power])
        return reps

    def conj_by(self, x: int) -> np.ndarray:
        m = self._conj_cache.get(x)
        if m is None:
            m = self._conj_cache[x] = self.tab.conj_map(x)
        return m

    def check_budget(self) -> None:
        b = self.budget
        if self.total > b.max_subgroups:
            raise LatticeBudgetExceeded(f"more than {b.max_subgroups} subgroups")
        if b.time_limit is not None and time.monotonic() - self.started > b.time_limit:
            raise LatticeBudgetExceeded(f"time limit {b.time_limit}s exceeded")

    def run(self) -> list[dict]:
        N = self.N
        self.known: dict[bytes, int] = {}
        self.found: list[dict] = []
        trivial = np.zeros(N, dtype=bool)
        trivial[self.tab.identity] = True
        self.register(trivial, [])
        i = 0
        while i < len(self.found):
            H = self.found[i]
            i += 1
            if H["order"] == N:
                continue
            for c in self.extension_candidates(H):
                mask = self.tab.closure(H["gens"] + [c], start=H["mask"])
                self.register(mask, H["gens"] + [c])
            self.check_budget()
        return self.found

    def extension_candidates(self, H: dict) -> list[int]:
        cands = self.cyclic_reps[~H["mask"][self.cyclic_reps]]
        if not cands.size:
            return []
        # orbits of N(H) on the candidate cyclic subgroups
        pos = {int(c): k for k, c in enumerate(cands)}
        parent = list(range(len(cands)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for n in H["gens"] + H["normalizer_gens"]:
            images = self._canon[self.conj_by(n)[cands]]
            for k, img in enumerate(images.tolist()):
                j = pos[img]
                ra, rb = find(k), find(j)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        return [int(cands[k]) for k in range(len(cands)) if find(k) == k]

    def register(self, mask: np.ndarray, gens: list[int]) -> None:
        key = np.packbits(mask).tobytes()
        if key in self.known:
            return
        T = self.T
        idx = len(self.found)
        elems = [np.flatnonzero(mask)]
        masks = [mask]
        keys = {key: 0}
        trans = [self.tab.identity]
        norm_mask = mask.copy()
        norm_gens: list[int] = []
        inv = self.tab.inverse
        k = 0
        while k < len(elems):
            for x, cm in zip(self.gens, self.gconj):
                img = cm[elems[k]]
                m = np.zeros(self.N, dtype=bool)
                m[img] = True
                kk = np.packbits(m).tobytes()
                j = keys.get(kk)
                if j is None:
                    keys[kk] = len(elems)
                    elems.append(np.sort(img))
                    masks.append(m)
                    trans.append(int(T[trans[k], x]))
                else:
                    # Schreier generator t_k x t_j^-1 stabilizes the subgroup
                    s = int(T[T[trans[k], x], inv[trans[j]]])
                    if not norm_mask[s]:
                        norm_gens.append(s)
                        norm_mask = self.tab.closure(norm_gens, start=norm_mask)
            k += 1
        for kk in keys:
            self.known[kk] = idx
        self.total += len(elems)
        self.found.append({
            "mask": mask,
            "gens": list(gens),
            "order": int(mask.sum()),
            "class_size": len(elems),
            "normalizer_order": int(norm_mask.sum()),
            "normalizer_gens": norm_gens,
            "conjugates": np.array(masks),
        })
        if self.total > self.budget.max_subgroups:
            raise LatticeBudgetExceeded(f"more than {self.budget.max_subgroups} subgroups")


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while n % p:
        p += 1
    while n % p == 0:
        n //= p
    return n == 1


def subgroup_lattice(g: Group, budget: LatticeBudget | None = None) -> SubgroupLattice:
    """Enumerate all conjugacy classes of subgroups of ``g`` (cached per group)."""
    budget = budget or LatticeBudget()
    if g.order() > budget.max_group_order:
        raise LatticeBudgetExceeded(f"order {g.order()} exceeds lattice budget {budget.max_group_order}")
    cached = g._cache.get("lattice")
    if cached is not None:
        return cached

    def build():
        t0 = time.monotonic()
        found = _Enumerator(g, budget).run()
        tab = g.table()
        classes = []
        for rec in sorted(found, key=lambda r: r["order"]):
            rep = Group._from_tuples(g.degree, (tuple(tab.elems[x].tolist()) for x in rec["gens"]))
            if rec["order"] == g.order():
                rep = g
            dl = derived_length(rep)
            defect = subnormal_defect(g, rep)
            cl = SubgroupClass(
                representative=rep,
                class_size=rec["class_size"],
                order=rec["order"],
                derived_length=dl,
                defect_in_parent=defect,
                normalizer_order=rec["normalizer_order"],
                conjugates=rec["conjugates"],
            )
            if g.order() % cl.order:
                raise AssertionError(f"subgroup order {cl.order} does not divide {g.order()}")
            if cl.class_size * cl.normalizer_order != g.order():
                raise AssertionError("class size times normalizer order differs from group order")
            classes.append(cl)
        log.info("lattice of %r: %d classes in %.2fs", g, len(classes), time.monotonic() - t0)
        return SubgroupLattice(g, classes)

    return g._cached("lattice", build)


def all_subgroups(g: Group, budget: LatticeBudget | None = None) -> list[SubgroupClass]:
    return subgroup_lattice(g, budget).classes


def contains_isomorphic_copy(g: Group, target: Group, budget: LatticeBudget | None = None) -> Verdict:
    """Search the lattice of ``g`` for a subgroup isomorphic to ``target``."""
    if target.order() > g.order() or g.order() % target.order():
        return Verdict(False, detail="order does not divide")
    g_orders = set(g.table().element_orders().tolist())
    t_orders = set(target.table().element_orders().tolist())
    if not t_orders <= g_orders:
        return Verdict(False, detail=f"element orders {sorted(t_orders - g_orders)} missing")
    for cl in all_subgroups(g, budget):
        if cl.order == target.order() and is_isomorphic(cl.representative, target):
            return Verdict(True, cl.representative, detail=f"class of size {cl.class_size}")
    return Verdict(False, detail="no isomorphic subgroup")


def all_proper_metabelian(g: Group, budget: LatticeBudget | None = None) -> Verdict:
    """PASS, or FAIL with a non-metabelian proper subgroup of least order."""
    bad = [cl for cl in subgroup_lattice(g, budget).proper() if not cl.metabelian]
    if not bad:
        return Verdict(True)
    w = min(bad, key=lambda cl: cl.order)
    return Verdict(False, w.representative, detail=f"order {w.order}, derived length {w.derived_length}")


def is_minimal_simple(g: Group, budget: LatticeBudget | None = None) -> Verdict:
    lat = subgroup_lattice(g, budget)
    normal = [cl for cl in lat.classes if cl.class_size == 1]
    if g.order() == 1 or len(normal) != 2:
        return Verdict(False, detail="not simple")
    if lat.classes[-1].soluble:
        return Verdict(False, detail="abelian")
    bad = [cl for cl in lat.proper() if not cl.soluble]
    if bad:
        w = min(bad, key=lambda cl: cl.order)
        return Verdict(False, w.representative, detail=f"non-soluble proper subgroup of order {w.order}")
    return Verdict(True)


def max_proper_derived_length(g: Group, budget: LatticeBudget | None = None) -> int:
    proper = subgroup_lattice(g, budget).proper()
    for cl in proper:
        if not cl.soluble:
            raise NotSolubleError(f"proper subgroup of order {cl.order} is not soluble")
    return max((cl.derived_length for cl in proper), default=0)
