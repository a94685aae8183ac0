"""Deterministic Schreier-Sims on raw image tuples.

Elements are plain tuples here; the ``Permutation`` wrapper is kept out of
the inner loops.  Product convention matches ``perm``: ``mul(p, q)`` applies
``p`` first.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

Perm = tuple

__all__ = ["StabChain", "mul", "inv", "identity"]


def mul(p: Perm, q: Perm) -> Perm:
    return tuple(map(q.__getitem__, p))


def inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def identity(degree: int) -> Perm:
    return tuple(range(degree))


class _Level:
    __slots__ = ("base", "gens", "trans", "_inv", "checked")

    def __init__(self, base: int, ident: Perm):
        self.base = base
        self.gens: list[Perm] = []
        self.trans: dict[int, Perm] = {base: ident}
        self._inv: dict[int, Perm] = {base: ident}
        # (orbit point, generator index) pairs whose Schreier generator sifted
        self.checked: set[tuple[int, int]] = set()

    def add_gen(self, g: Perm) -> None:
        self.gens.append(g)
        trans = self.trans
        queue = []
        for pt in list(trans):
            img = g[pt]
            if img not in trans:
                trans[img] = mul(trans[pt], g)
                queue.append(img)
        for pt in queue:
            u = trans[pt]
            for s in self.gens:
                img = s[pt]
                if img not in trans:
                    trans[img] = mul(u, s)
                    queue.append(img)

    def uinv(self, pt: int) -> Perm:
        u = self._inv.get(pt)
        if u is None:
            u = self._inv[pt] = inv(self.trans[pt])
        return u


class StabChain:
    """Base and strong generating set with explicit transversals."""

    def __init__(self, degree: int, gens: Iterable[Perm], base_hint: Sequence[int] = ()):
        self.degree = degree
        self.ident = identity(degree)
        self.levels: list[_Level] = []
        gens = [tuple(g) for g in gens if tuple(g) != self.ident]
        for b in base_hint:
            self.levels.append(_Level(b, self.ident))
        for g in gens:
            if all(g[lv.base] == lv.base for lv in self.levels):
                self.levels.append(_Level(_first_moved(g), self.ident))
        for g in gens:
            for lv in self.levels:
                lv.add_gen(g)
                if g[lv.base] != lv.base:
                    break
        self._complete()

    @property
    def base(self) -> list[int]:
        return [lv.base for lv in self.levels]

    @property
    def strong_gens(self) -> list[Perm]:
        seen: dict[Perm, None] = {}
        for lv in self.levels:
            for g in lv.gens:
                seen.setdefault(g, None)
        return list(seen)

    def order(self) -> int:
        n = 1
        for lv in self.levels:
            n *= len(lv.trans)
        return n

    def orbit_sizes(self) -> list[int]:
        return [len(lv.trans) for lv in self.levels]

    def sift(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        """Strip ``g`` through the levels from ``start``; return residue and level reached."""
        levels = self.levels
        for i in range(start, len(levels)):
            lv = levels[i]
            beta = g[lv.base]
            if beta not in lv.trans:
                return g, i
            if beta != lv.base:
                g = mul(g, lv.uinv(beta))
        return g, len(levels)

    def contains(self, g: Perm) -> bool:
        h, j = self.sift(tuple(g))
        return j == len(self.levels) and h == self.ident

    def extend(self, g: Perm) -> bool:
        """Add ``g`` to the group; return False if it was already a member."""
        g = tuple(g)
        if self.contains(g):
            return False
        if all(g[lv.base] == lv.base for lv in self.levels):
            self.levels.append(_Level(_first_moved(g), self.ident))
        for lv in self.levels:
            lv.add_gen(g)
            if g[lv.base] != lv.base:
                break
        self._complete()
        return True

    def _complete(self) -> None:
        ident = self.ident
        levels = self.levels
        i = len(levels) - 1
        while i >= 0:
            lv = levels[i]
            found = None
            for beta in list(lv.trans):
                u = lv.trans[beta]
                for si, s in enumerate(lv.gens):
                    if (beta, si) in lv.checked:
                        continue
                    img = s[beta]
                    y = mul(mul(u, s), lv.uinv(img))
                    if y != ident:
                        h, j = self.sift(y, i + 1)
                        if j < len(levels) or h != ident:
                            found = (h, j)
                            break
                    lv.checked.add((beta, si))
                if found:
                    break
            if found is None:
                i -= 1
                continue
            h, j = found
            if j == len(levels):
                levels.append(_Level(_first_moved(h), ident))
            for l in range(i + 1, j + 1):
                levels[l].add_gen(h)
            i = j

    def elements_array(self) -> np.ndarray:
        """All group elements as rows of an ``(order, degree)`` integer array."""
        dtype = np.int16 if self.degree < 2**15 else np.int32
        elems = np.arange(self.degree, dtype=dtype)[None, :]
        for lv in reversed(self.levels):
            u = np.array(list(lv.trans.values()), dtype=dtype)
            # entry [j, i, x] is u_j[e_i[x]], the product e_i * u_j
            elems = u[:, elems].reshape(-1, self.degree)
        return elems


def _first_moved(g: Perm) -> int:
    for i, j in enumerate(g):
        if i != j:
            return i
    raise ValueError("identity has no moved point")
