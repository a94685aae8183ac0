"""Isomorphism testing for small permutation groups.

Two groups are first compared on cheap invariants.  When those agree, a
backtracking search tries images for a short generating set of the first group
and checks each candidate map on the whole Cayley graph.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator

import numpy as np

from .group import (
    NOT_SOLUBLE, BudgetExceeded, Group, _class_arrays, derived_length,
)
from .table import ElementTable

__all__ = ["ISO_BUDGET", "fingerprint", "is_isomorphic", "find_isomorphism", "automorphism_count"]

ISO_BUDGET = 10_000


def fingerprint(g: Group) -> tuple:
    """Order, element-order histogram, derived length and class-size/order profile."""

    def build():
        tab = g.table()
        orders = tab.element_orders()
        hist = tuple(sorted(Counter(orders.tolist()).items()))
        dl = derived_length(g)
        classes = tuple(sorted(Counter((len(cl), int(orders[cl[0]])) for cl in _class_arrays(g)).items()))
        return (g.order(), hist, -1 if dl is NOT_SOLUBLE else dl, classes)

    return g._cached("fingerprint", build)


class _Cayley:
    """Breadth-first spanning tree of a group's Cayley graph on a generating set."""

    def __init__(self, g: Group):
        tab = g.table()
        self.tab = tab
        self.gens = _short_generators(tab)
        self.cols = [tab.times(x) for x in self.gens]
        seen = np.zeros(tab.order, dtype=bool)
        seen[tab.identity] = True
        frontier = np.array([tab.identity])
        # each layer: list of (gen index, parents, children)
        self.layers: list[list[tuple[int, np.ndarray, np.ndarray]]] = []
        while frontier.size:
            layer = []
            nxt = []
            for gi, col in enumerate(self.cols):
                kids = col[frontier]
                fresh = ~seen[kids]
                # the same child can be reached twice within one generator step
                kids_f, first = np.unique(kids[fresh], return_index=True)
                parents = frontier[fresh][first]
                seen[kids_f] = True
                if kids_f.size:
                    layer.append((gi, parents, kids_f))
                    nxt.append(kids_f)
            if layer:
                self.layers.append(layer)
            frontier = np.concatenate(nxt) if nxt else np.array([], dtype=np.int64)


def _short_generators(tab: ElementTable) -> list[int]:
    orders = tab.element_orders()
    gens: list[int] = []
    current = tab.closure([])
    for e in np.argsort(-orders, kind="stable"):
        if not current[e]:
            gens.append(int(e))
            current = tab.closure(gens)
            if current.all():
                break
    return gens


def _try_map(src: _Cayley, dst: ElementTable, images: list[int]) -> np.ndarray | None:
    """Extend ``generator -> image`` to a map on all of ``src``; return it if it is an isomorphism."""
    dcols = [dst.times(b) for b in images]
    phi = np.full(src.tab.order, -1, dtype=np.int64)
    phi[src.tab.identity] = dst.identity
    for layer in src.layers:
        for gi, parents, kids in layer:
            phi[kids] = dcols[gi][phi[parents]]
    for col, dcol in zip(src.cols, dcols):
        if not np.array_equal(phi[col], dcol[phi]):
            return None
    if np.unique(phi).size != src.tab.order:
        return None
    return phi


def _candidate_maps(src: _Cayley, dst: ElementTable, first_reps: np.ndarray | None) -> Iterator[list[int]]:
    sorders = src.tab.element_orders()
    dorders = dst.element_orders()
    gens = src.gens
    k = len(gens)
    by_order = {o: np.flatnonzero(dorders == o) for o in set(sorders[gens].tolist())}
    # orders of products of consecutive generators, used for pruning
    pair_orders = [int(sorders[src.tab.times(gens[i])[gens[i - 1]]]) for i in range(1, k)]

    def rec(chosen: list[int]) -> Iterator[list[int]]:
        i = len(chosen)
        if i == k:
            yield list(chosen)
            return
        cands = by_order[int(sorders[gens[i]])]
        if i == 0 and first_reps is not None:
            cands = np.intersect1d(cands, first_reps)
        if i > 0:
            # order of chosen[i-1] * candidate must match
            prod = dst.times_left(chosen[i - 1])[cands]
            cands = cands[dorders[prod] == pair_orders[i - 1]]
        for c in cands.tolist():
            chosen.append(c)
            yield from rec(chosen)
            chosen.pop()

    yield from rec([])


def _check_budget(*groups: Group, budget: int) -> None:
    for g in groups:
        if g.order() > budget:
            raise BudgetExceeded(f"order {g.order()} exceeds isomorphism budget {budget}")


def find_isomorphism(a: Group, b: Group, budget: int = ISO_BUDGET):
    """Return ``(gens_a, images_in_b)`` as permutation lists, or ``None``."""
    _check_budget(a, b, budget=budget)
    if fingerprint(a) != fingerprint(b):
        return None
    src = _Cayley(a)
    dst = b.table()
    # composing with inner automorphisms of b lets the first image be a class representative
    reps = np.array([int(cl[0]) for cl in _class_arrays(b)])
    for images in _candidate_maps(src, dst, reps):
        if _try_map(src, dst, images) is not None:
            from .perm import Permutation

            return (
                [Permutation(src.tab.elems[x].tolist(), check=False) for x in src.gens],
                [Permutation(dst.elems[y].tolist(), check=False) for y in images],
            )
    return None


def is_isomorphic(a: Group, b: Group, budget: int = ISO_BUDGET) -> bool:
    return find_isomorphism(a, b, budget) is not None


def automorphism_count(g: Group, budget: int = ISO_BUDGET) -> int:
    """``|Aut(g)|`` by counting all generator images that extend to automorphisms."""
    _check_budget(g, budget=budget)
    src = _Cayley(g)
    tab = g.table()
    return sum(1 for images in _candidate_maps(src, tab, None) if _try_map(src, tab, images) is not None)
