"""Permutations on the points 0..n-1.

Products are read left to right: ``(p * q)(i) == q(p(i))``, so ``p`` is
applied first.  This is the convention of GAP and sympy.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

__all__ = ["Permutation", "parse_cycles", "format_cycles"]


class Permutation:
    """An immutable bijection of ``range(degree)``."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], *, check: bool = True):
        images = tuple(images)
        if check and sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images!r}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for pt in cyc:
                if not 0 <= pt < degree:
                    raise ValueError(f"point {pt} out of range for degree {degree}")
                if pt in seen:
                    raise ValueError(f"point {pt} repeated in cycle notation")
                seen.add(pt)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                images[a] = b
        return cls(images, check=False)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(other.images) != len(self.images):
            raise ValueError("degree mismatch")
        return Permutation(map(other.images.__getitem__, self.images), check=False)

    def __invert__(self) -> "Permutation":
        return self.inverse()

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv, check=False)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def conjugate(self, by: "Permutation") -> "Permutation":
        """Return ``by^-1 * self * by``."""
        return by.inverse() * self * by

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)}, degree={self.degree})"

    def __str__(self) -> str:
        return format_cycles(self)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``(0 1 2)(3 4)``; ``()`` is the identity."""
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty permutation text")
    if _CYCLE_RE.sub("", stripped).strip():
        raise ValueError(f"could not parse permutation {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        tokens = body.replace(",", " ").split()
        if not tokens:
            continue
        try:
            cycles.append([int(t) for t in tokens])
        except ValueError:
            raise ValueError(f"bad point in {text!r}") from None
    return Permutation.from_cycles(degree, cycles)


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)
