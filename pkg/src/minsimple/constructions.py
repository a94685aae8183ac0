"""Concrete groups as permutation groups.

Linear groups act on projective points of row vectors, ``v -> v A``, so that
products of matrices map to products of permutations in the same order.
"""

from __future__ import annotations

import itertools
import math
from typing import Sequence

from .chain import StabChain
from .fields import Field, Mat, PrimePower, field, is_prime
from .group import Group, GroupError
from .perm import Permutation

__all__ = [
    "psl2", "psl3_3", "sz", "sz_frobenius_subgroup", "sz_torus", "sz_generator_matrices",
    "remark_subgroup_H", "sl2_3", "gl2_3",
    "sym", "alt", "dihedral", "quaternion8", "cyclic", "direct_product", "direct_factor_embeddings",
    "projective_points", "matrix_group", "psl2_order", "sz_order",
]

MAX_DEGREE = 2048


def _pp(q) -> PrimePower:
    return q if isinstance(q, PrimePower) else PrimePower.of(q)


def _normalize(F: Field, v: Sequence[int]) -> tuple[int, ...]:
    """Scale so that the last non-zero coordinate is 1."""
    for x in reversed(v):
        if x:
            s = F.inv(x)
            return tuple(F.mul(s, y) for y in v)
    raise ValueError("zero vector")


def projective_points(F: Field, n: int) -> list[tuple[int, ...]]:
    """Points of PG(n-1, q) as normalized row vectors.

    For n = 2 the order is [1:0] first, then [x:1] by field label.
    """
    pts = []
    for last in range(n):
        for head in itertools.product(range(F.q), repeat=last):
            pts.append(head + (1,) + (0,) * (n - 1 - last))
    return pts


def _matrix_perm(A: Mat, points: list[tuple[int, ...]], index: dict) -> Permutation:
    F = A.F
    return Permutation([index[_normalize(F, A.apply_row(v))] for v in points], check=False)


def matrix_group(mats: Sequence[Mat], points: list[tuple[int, ...]], name: str | None = None) -> Group:
    """Permutation group induced by ``mats`` on the given projective points."""
    index = {p: i for i, p in enumerate(points)}
    return Group(len(points), [_matrix_perm(A, points, index) for A in mats], name=name)


def psl2_order(q: int) -> int:
    return q * (q * q - 1) // math.gcd(2, q - 1)


def sz_order(q: int) -> int:
    return q * q * (q * q + 1) * (q - 1)


def psl2(q) -> Group:
    """PSL(2,q) on the q+1 points of the projective line."""
    pp = _pp(q)
    if pp.q < 4:
        raise GroupError(f"psl2 needs q >= 4, got {pp.q}")
    F = field(pp)
    w = F.primitive
    mats = [
        Mat.of(F, [[1, 1], [0, 1]]),
        Mat.of(F, [[w, 0], [0, F.inv(w)]]),
        Mat.of(F, [[0, 1], [F.neg(1), 0]]),
    ]
    g = matrix_group(mats, projective_points(F, 2), name=f"PSL(2,{pp.q})")
    if g.order() != psl2_order(pp.q):
        raise AssertionError(f"PSL(2,{pp.q}) generated order {g.order()}")
    return g


def _transvections(F: Field, n: int) -> list[Mat]:
    out = []
    for i in range(n):
        for j in range(n):
            if i != j:
                rows = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
                rows[i][j] = 1
                out.append(Mat.of(F, rows))
    return out


def psl3_3() -> Group:
    """PSL(3,3) = SL(3,3) on the 13 points of the projective plane over GF(3)."""
    F = field(3)
    g = matrix_group(_transvections(F, 3), projective_points(F, 3), name="PSL(3,3)")
    if g.order() != 5616:
        raise AssertionError(f"PSL(3,3) generated order {g.order()}")
    return g


def remark_subgroup_H() -> tuple[Group, Group]:
    """Block upper-triangular H <= PSL(3,3) and its unipotent normal subgroup K.

    H consists of the matrices (a b c; d e f; 0 0 g) with (ae - bd) g = 1,
    K of those with identity diagonal blocks.
    """
    F = field(3)
    pts = projective_points(F, 3)

    def embed(a, b, d, e):
        det = F.sub(F.mul(a, e), F.mul(b, d))
        return Mat.of(F, [[a, b, 0], [d, e, 0], [0, 0, F.inv(det)]])

    unip = [Mat.of(F, [[1, 0, 1], [0, 1, 0], [0, 0, 1]]), Mat.of(F, [[1, 0, 0], [0, 1, 1], [0, 0, 1]])]
    # GL(2,3) = <[[1,1],[0,1]], [[0,1],[1,0]] (det -1), [[1,0],[1,1]]>
    levi = [embed(1, 1, 0, 1), embed(0, 1, 1, 0), embed(1, 0, 1, 1), embed(2, 0, 0, 1)]
    H = matrix_group(levi + unip, pts, name="H")
    K = matrix_group(unip, pts, name="K")
    if H.order() != 432 or K.order() != 9:
        raise AssertionError(f"remark subgroup orders {H.order()}, {K.order()}")
    return H, K


def sl2_3() -> Group:
    """SL(2,3) acting on the 8 non-zero vectors of GF(3)^2."""
    return _linear_on_vectors([[[1, 1], [0, 1]], [[1, 0], [1, 1]]], "SL(2,3)", 24)


def gl2_3() -> Group:
    """GL(2,3) acting on the 8 non-zero vectors of GF(3)^2."""
    return _linear_on_vectors([[[1, 1], [0, 1]], [[1, 0], [1, 1]], [[2, 0], [0, 1]]], "GL(2,3)", 48)


def _linear_on_vectors(rows, name: str, expected: int) -> Group:
    F = field(3)
    vecs = [v for v in itertools.product(range(3), repeat=2) if any(v)]
    index = {v: i for i, v in enumerate(vecs)}
    gens = []
    for r in rows:
        A = Mat.of(F, r)
        gens.append(Permutation([index[A.apply_row(v)] for v in vecs]))
    g = Group(len(vecs), gens, name=name)
    assert g.order() == expected
    return g


def _check_odd_prime_power_of_two(pp: PrimePower) -> int:
    if pp.p != 2 or pp.f < 3 or pp.f % 2 == 0 or not is_prime(pp.f):
        raise GroupError(f"Sz(q) needs q = 2^p with p an odd prime, got q = {pp.q}")
    if pp.q not in (8, 32):
        raise GroupError(f"Sz(q) is only constructed for q in (8, 32), got q = {pp.q}")
    return (pp.f - 1) // 2


def sz_generator_matrices(q) -> dict[str, list[Mat]]:
    """Standard Suzuki generators over GF(q), grouped as unipotent, torus and swap.

    With q = 2^(2m+1) and t: x -> x^(2^(m+1)) (so t(t(x)) = x^2), the
    unipotent matrices are lower triangular with rows
    (1,0,0,0), (a,1,0,0), (b, t(a), 1, 0), (a^(2+t) + ab + t(b), a^(1+t) + b, a, 1).
    """
    pp = _pp(q)
    m = _check_odd_prime_power_of_two(pp)
    F = field(pp)
    r = 2 ** (m + 1)

    def twist(x):
        return F.pow(x, r)

    def unipotent(a, b):
        return Mat.of(F, [
            [1, 0, 0, 0],
            [a, 1, 0, 0],
            [b, twist(a), 1, 0],
            [F.add(F.add(F.mul(F.pow(a, 2), twist(a)), F.mul(a, b)), twist(b)),
             F.add(F.mul(a, twist(a)), b), a, 1],
        ])

    def torus(lam):
        s = 2**m
        return Mat.of(F, [
            [F.pow(lam, 1 + s), 0, 0, 0],
            [0, F.pow(lam, s), 0, 0],
            [0, 0, F.pow(lam, -s), 0],
            [0, 0, 0, F.pow(lam, -1 - s)],
        ])

    w = F.primitive
    basis = [F.pow(w, k) for k in range(pp.f)]
    return {
        "unipotent": [unipotent(a, 0) for a in basis] + [unipotent(0, b) for b in basis],
        "torus": [torus(w)],
        "swap": [Mat.of(F, [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])],
    }


def _ovoid(q) -> tuple[dict, list]:
    """Orbit of (0,0,0,1) under the Suzuki generators, with ovoid-indexed permutations."""
    mats = sz_generator_matrices(q)
    F = mats["swap"][0].F
    all_mats = mats["unipotent"] + mats["torus"] + mats["swap"]
    start = (0, 0, 0, 1)
    points = [start]
    index = {start: 0}
    for v in points:
        for A in all_mats:
            u = _normalize(F, A.apply_row(v))
            if u not in index:
                index[u] = len(points)
                points.append(u)
    qq = F.q
    if len(points) != qq * qq + 1:
        raise AssertionError(f"Suzuki ovoid has {len(points)} points, expected {qq * qq + 1}")
    return mats, points


def sz(q) -> Group:
    """Sz(q) on the q^2 + 1 points of the Suzuki ovoid."""
    pp = _pp(q)
    mats, points = _ovoid(pp)
    g = matrix_group(mats["unipotent"] + mats["torus"] + mats["swap"], points, name=f"Sz({pp.q})")
    if g.order() != sz_order(pp.q):
        raise AssertionError(f"Sz({pp.q}) generated order {g.order()}")
    return g


def sz_frobenius_subgroup(q) -> Group:
    """Unipotent radical extended by the diagonal torus, order q^2 (q-1), inside ``sz(q)``."""
    pp = _pp(q)
    mats, points = _ovoid(pp)
    g = matrix_group(mats["unipotent"] + mats["torus"], points, name=f"F({pp.q})")
    if g.order() != pp.q**2 * (pp.q - 1):
        raise AssertionError(f"Frobenius subgroup order {g.order()}")
    return g


def sz_torus(q) -> Group:
    """Cyclic diagonal torus of order q - 1 inside ``sz(q)``."""
    pp = _pp(q)
    mats, points = _ovoid(pp)
    return matrix_group(mats["torus"], points, name=f"C{pp.q - 1}")


def sym(n: int) -> Group:
    if n < 1 or n > MAX_DEGREE:
        raise GroupError(f"degree {n} out of range")
    gens = []
    if n > 1:
        gens.append(Permutation.from_cycles(n, [[0, 1]]))
    if n > 2:
        gens.append(Permutation.from_cycles(n, [list(range(n))]))
    return Group(n, gens, name=f"S{n}")


def alt(n: int) -> Group:
    if n < 1 or n > MAX_DEGREE:
        raise GroupError(f"degree {n} out of range")
    if n < 3:
        gens = []
    elif n == 3:
        gens = [Permutation.from_cycles(n, [[0, 1, 2]])]
    else:
        # (0 1 2) with an odd-length long cycle: the n-cycle for odd n, else (1 ... n-1)
        long_cycle = list(range(n)) if n % 2 else list(range(1, n))
        gens = [Permutation.from_cycles(n, [[0, 1, 2]]), Permutation.from_cycles(n, [long_cycle])]
    return Group(n, gens, name=f"A{n}")


def cyclic(n: int) -> Group:
    if n < 1 or n > MAX_DEGREE:
        raise GroupError(f"degree {n} out of range")
    gens = [Permutation.from_cycles(n, [list(range(n))])] if n > 1 else []
    return Group(n, gens, name=f"C{n}")


def dihedral(n: int) -> Group:
    """Dihedral group of order 2n on the vertices of an n-gon (n >= 3)."""
    if n < 3 or n > MAX_DEGREE:
        raise GroupError(f"dihedral needs 3 <= n, got {n}")
    rot = Permutation.from_cycles(n, [list(range(n))])
    refl = Permutation([(-i) % n for i in range(n)])
    return Group(n, [rot, refl], name=f"D{2 * n}")


def quaternion8() -> Group:
    """Q8 in its regular representation on 8 points."""
    # points 0..7 label 1, i, j, k, -1, -i, -j, -k; right multiplication by i and j
    right_i = [1, 4, 7, 2, 5, 0, 3, 6]
    right_j = [2, 3, 4, 5, 6, 7, 0, 1]
    return Group(8, [Permutation(right_i), Permutation(right_j)], name="Q8")


def direct_product(a: Group, b: Group) -> Group:
    """``a x b`` on the disjoint union of the two point sets, ``a`` first."""
    n, m = a.degree, b.degree
    gens = [Permutation(x.images + tuple(range(n, n + m))) for x in a.gens]
    gens += [Permutation(tuple(range(n)) + tuple(n + i for i in y.images)) for y in b.gens]
    name = f"{a.name}x{b.name}" if a.name and b.name else None
    return Group(n + m, gens, name=name)


def direct_factor_embeddings(a: Group, b: Group) -> tuple[Group, Group]:
    """The two factors of ``direct_product(a, b)`` as its subgroups."""
    n, m = a.degree, b.degree
    left = Group(n + m, [Permutation(x.images + tuple(range(n, n + m))) for x in a.gens], name=a.name)
    right = Group(n + m, [Permutation(tuple(range(n)) + tuple(n + i for i in y.images)) for y in b.gens], name=b.name)
    return left, right
