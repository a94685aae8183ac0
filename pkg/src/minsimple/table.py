"""Indexed element tables for explicitly enumerable permutation groups.

Every element is identified by the images of a base, so a ``(order, degree)``
array can be searched with one ``searchsorted`` call.  Subsets of the group are
boolean masks over the element indices.
"""

from __future__ import annotations

import threading

import numpy as np

from .chain import StabChain

__all__ = ["ElementTable"]


class ElementTable:
    """All elements of a group, sorted by their base-image code."""

    def __init__(self, chain: StabChain):
        self.degree = chain.degree
        self.base = np.array(chain.base or [0], dtype=np.int64)
        self._radix = self.degree ** np.arange(len(self.base), dtype=np.int64)
        if len(self.base) * np.log2(max(self.degree, 2)) >= 62:
            raise OverflowError("base too long to encode elements in 64 bits")
        elems = chain.elements_array()
        codes = self._codes(elems)
        order = np.argsort(codes, kind="stable")
        self.elems = np.ascontiguousarray(elems[order])
        self.codes = codes[order]
        self.order = len(self.elems)
        self.identity = int(self.index_of(np.arange(self.degree)[None, :])[0])
        inv_rows = np.empty_like(self.elems)
        np.put_along_axis(
            inv_rows, self.elems.astype(np.int64), np.arange(self.degree, dtype=self.elems.dtype)[None, :].repeat(self.order, 0), axis=1
        )
        self.inverse = self.index_of(inv_rows)
        self._inv_rows = inv_rows
        self._table: np.ndarray | None = None
        self._orders: np.ndarray | None = None
        self._lock = threading.Lock()

    def _codes(self, rows: np.ndarray) -> np.ndarray:
        return rows[:, self.base].astype(np.int64) @ self._radix

    def index_of(self, rows: np.ndarray) -> np.ndarray:
        """Indices of the given element rows; raises ``KeyError`` for non-members."""
        rows = np.atleast_2d(rows)
        codes = self._codes(rows)
        idx = np.searchsorted(self.codes, codes)
        idx = np.minimum(idx, self.order - 1)
        ok = self.codes[idx] == codes
        if ok.all():
            ok = (self.elems[idx] == rows).all(axis=1)
        if not ok.all():
            raise KeyError("permutation is not an element of this group")
        return idx

    def contains_rows(self, rows: np.ndarray) -> np.ndarray:
        rows = np.atleast_2d(rows)
        codes = self._codes(rows)
        idx = np.minimum(np.searchsorted(self.codes, codes), self.order - 1)
        return (self.codes[idx] == codes) & (self.elems[idx] == rows).all(axis=1)

    def times(self, g: int) -> np.ndarray:
        """Array whose entry ``e`` is the index of ``e * g``."""
        if self._table is not None:
            return self._table[:, g]
        return self.index_of(self.elems[g][self.elems])

    def times_left(self, g: int) -> np.ndarray:
        """Array whose entry ``e`` is the index of ``g * e``."""
        if self._table is not None:
            return self._table[g]
        return self.index_of(self.elems[:, self.elems[g]])

    def conj_map(self, g: int) -> np.ndarray:
        """Array whose entry ``e`` is the index of ``g^-1 * e * g``."""
        ginv = self._inv_rows[g]
        rows = self.elems[g][self.elems[:, ginv]]
        return self.index_of(rows)

    def conjugates_of(self, e: int) -> np.ndarray:
        """Array whose entry ``x`` is the index of ``x^-1 * e * x``."""
        rows = np.take_along_axis(self.elems, self.elems[e][self._inv_rows], axis=1)
        return self.index_of(rows)

    def mult_table(self) -> np.ndarray:
        """Full multiplication table; entry ``[a, b]`` is the index of ``a * b``."""
        with self._lock:
            if self._table is None:
                dtype = np.int16 if self.order < 2**15 else np.int32
                table = np.empty((self.order, self.order), dtype=dtype)
                base_imgs = self.elems[:, self.base]
                for a in range(self.order):
                    # (a*b)[base] = b[a[base]]
                    codes = self.elems[:, base_imgs[a]].astype(np.int64) @ self._radix
                    table[a] = np.searchsorted(self.codes, codes)
                self._table = table
            return self._table

    def element_orders(self) -> np.ndarray:
        with self._lock:
            if self._orders is None:
                orders = np.zeros(self.order, dtype=np.int64)
                ident = np.arange(self.degree)
                cur = self.elems.astype(np.int64)
                k = 1
                while True:
                    done = (orders == 0) & (cur == ident).all(axis=1)
                    orders[done] = k
                    if (orders > 0).all():
                        break
                    cur = np.take_along_axis(self.elems, cur, axis=1).astype(np.int64)
                    k += 1
                self._orders = orders
            return self._orders

    def mask_of(self, indices) -> np.ndarray:
        mask = np.zeros(self.order, dtype=bool)
        mask[np.asarray(indices, dtype=np.int64)] = True
        return mask

    def closure(self, gens, start: np.ndarray | None = None) -> np.ndarray:
        """Mask of the subgroup generated by ``gens`` together with the subgroup mask ``start``."""
        gens = [int(g) for g in gens]
        mask = np.zeros(self.order, dtype=bool) if start is None else start.copy()
        mask[self.identity] = True
        if not gens:
            return mask
        table = self._table
        frontier = np.flatnonzero(mask)
        while frontier.size:
            if table is not None:
                cand = table[np.ix_(frontier, gens)].ravel()
            else:
                cand = np.concatenate([self.times(g)[frontier] for g in gens])
            cand = cand[~mask[cand]]
            if not cand.size:
                break
            cand = np.unique(cand)
            mask[cand] = True
            frontier = cand
        return mask

    def conjugacy_classes(self, gens) -> list[np.ndarray]:
        """Orbits of conjugation by ``gens``, each sorted, ordered by smallest member."""
        from scipy.sparse import coo_matrix
        from scipy.sparse.csgraph import connected_components

        rows, cols = [], []
        ar = np.arange(self.order)
        for g in gens:
            rows.append(ar)
            cols.append(self.conj_map(int(g)))
        if not rows:
            return [np.array([i]) for i in range(self.order)]
        r = np.concatenate(rows)
        c = np.concatenate(cols)
        graph = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(self.order, self.order))
        _, labels = connected_components(graph, directed=True, connection="weak")
        order = np.argsort(labels, kind="stable")
        splits = np.flatnonzero(np.diff(labels[order])) + 1
        classes = np.split(order, splits)
        classes.sort(key=lambda cl: int(cl[0]))
        return classes
