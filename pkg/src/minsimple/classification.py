"""Arithmetic criteria for the minimal simple groups and finite dichotomy checks.

The family criteria here are pure arithmetic.  Everything that decides a
property by search (lattices, isomorphism, automorphism counts) lives in the
other modules, so the two routes can be compared against each other.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .constructions import psl2, psl3_3, sz
from .fields import PrimePower, is_prime
from .group import (
    NOT_SOLUBLE, NOT_SUBNORMAL, Group, _Marker, _require_subgroup, center, centralizer,
    derived_length, derived_series, is_normal, is_soluble, is_subgroup, minimal_normal_subgroups,
    quotient_group, soluble_radical,
)
from .iso import ISO_BUDGET, automorphism_count, is_isomorphic
from .lattice import LatticeBudget, SubgroupClass, Verdict, is_minimal_simple, subgroup_lattice

__all__ = [
    "Family", "FamilyId", "OutFactors", "FamilyMatchError", "UNBOUNDED",
    "thompson_member", "metabelian_member", "s4_criterion", "out_order",
    "family_order", "family_group", "family_of_psl2", "thompson_family", "out_order_bruteforce",
    "Lemma31Result", "lemma31_r", "is_almost_minimal_simple",
    "ClassRecord", "Conclusion", "DichotomyReport", "check_dichotomy", "final_remark_divisor",
]

UNBOUNDED = _Marker("UNBOUNDED")


class FamilyMatchError(ValueError):
    pass


class Family(enum.Enum):
    PSL2_2P = "PSL2_2P"  # PSL(2, 2^p), p prime
    PSL2_3P = "PSL2_3P"  # PSL(2, 3^p), p odd prime
    PSL2_P = "PSL2_P"  # PSL(2, p), p > 3 prime with p^2 + 1 = 0 mod 5
    PSL3_3 = "PSL3_3"
    SZ_2P = "SZ_2P"  # Sz(2^p), p odd prime


@dataclass(frozen=True)
class FamilyId:
    family: Family
    param: int = 0

    def __str__(self) -> str:
        if self.family is Family.PSL3_3:
            return "PSL(3,3)"
        return {
            Family.PSL2_2P: f"PSL(2,2^{self.param})",
            Family.PSL2_3P: f"PSL(2,3^{self.param})",
            Family.PSL2_P: f"PSL(2,{self.param})",
            Family.SZ_2P: f"Sz(2^{self.param})",
        }[self.family]

    @property
    def q(self) -> int:
        """Field size of the defining field."""
        return {
            Family.PSL2_2P: lambda p: 2**p,
            Family.PSL2_3P: lambda p: 3**p,
            Family.PSL2_P: lambda p: p,
            Family.PSL3_3: lambda p: 3,
            Family.SZ_2P: lambda p: 2**p,
        }[self.family](self.param)


@dataclass(frozen=True)
class OutFactors:
    d: int  # diagonal automorphisms
    f: int  # field automorphisms
    g: int  # graph automorphisms modulo field automorphisms

    @property
    def total(self) -> int:
        return self.d * self.f * self.g


def thompson_member(f: FamilyId) -> bool:
    p = f.param
    if f.family is Family.PSL2_2P:
        return is_prime(p)
    if f.family is Family.PSL2_3P:
        return is_prime(p) and p % 2 == 1
    if f.family is Family.PSL2_P:
        return is_prime(p) and p > 3 and (p * p + 1) % 5 == 0
    if f.family is Family.PSL3_3:
        return True
    if f.family is Family.SZ_2P:
        return is_prime(p) and p % 2 == 1
    raise AssertionError(f.family)


def _require_member(f: FamilyId) -> None:
    if not thompson_member(f):
        raise ValueError(f"{f} is not a minimal simple group")


def metabelian_member(f: FamilyId) -> bool:
    """Whether every proper subgroup of the family member is metabelian."""
    _require_member(f)
    if f.family in (Family.PSL2_2P, Family.PSL2_3P):
        return True
    if f.family is Family.PSL2_P:
        return (f.param**2 - 1) % 16 != 0
    return False


def s4_criterion(q: int) -> bool:
    """PSL(2,q) contains S4 exactly when q^2 = 1 mod 16."""
    return (q * q) % 16 == 1


_OUT = {
    Family.PSL2_2P: lambda p: OutFactors(1, p, 1),
    Family.PSL2_3P: lambda p: OutFactors(2, p, 1),
    Family.PSL2_P: lambda p: OutFactors(2, 1, 1),
    Family.PSL3_3: lambda p: OutFactors(1, 1, 2),
    Family.SZ_2P: lambda p: OutFactors(1, p, 1),
}


def out_order(f: FamilyId) -> OutFactors:
    _require_member(f)
    return _OUT[f.family](f.param)


def family_order(f: FamilyId) -> int:
    q = f.q
    if f.family in (Family.PSL2_2P,):
        return q * (q * q - 1)
    if f.family in (Family.PSL2_3P, Family.PSL2_P):
        return q * (q * q - 1) // 2
    if f.family is Family.PSL3_3:
        return 5616
    return q * q * (q * q + 1) * (q - 1)


def family_group(f: FamilyId) -> Group:
    _require_member(f)
    if f.family is Family.PSL3_3:
        return psl3_3()
    if f.family is Family.SZ_2P:
        return sz(f.q)
    return psl2(f.q)


def family_of_psl2(q: int) -> Optional[FamilyId]:
    """The family label suggested by the shape of ``q`` (not by isomorphism type)."""
    pp = PrimePower.of(q)
    if pp.p == 2:
        return FamilyId(Family.PSL2_2P, pp.f)
    if pp.p == 3:
        return FamilyId(Family.PSL2_3P, pp.f)
    if pp.f == 1:
        return FamilyId(Family.PSL2_P, pp.p)
    return None


def _members_up_to(bound: int) -> Iterator[FamilyId]:
    yield FamilyId(Family.PSL3_3)
    for fam in (Family.PSL2_2P, Family.PSL2_3P, Family.SZ_2P, Family.PSL2_P):
        p = 2
        while True:
            f = FamilyId(fam, p)
            if family_order(f) > bound:
                break
            if thompson_member(f):
                yield f
            p += 1


def thompson_family(g: Group, budget: int = ISO_BUDGET) -> Optional[FamilyId]:
    """The minimal simple family member isomorphic to ``g``, or ``None``.

    Candidates are selected by order and confirmed by an isomorphism test.
    """
    n = g.order()
    for f in _members_up_to(n):
        if family_order(f) == n and is_isomorphic(g, family_group(f), budget):
            return f
    return None


def out_order_bruteforce(g: Group) -> int:
    """``|Aut(g)| / |Inn(g)|`` by exhaustive automorphism search."""
    inner = g.order() // center(g).order()
    aut = automorphism_count(g)
    if aut % inner:
        raise AssertionError("inner automorphism group order does not divide |Aut|")
    return aut // inner


@dataclass(frozen=True)
class Lemma31Result:
    all_subnormal_above: bool
    r: Optional[int]


def lemma31_r(g: Group, h: Group, budget: LatticeBudget | None = None) -> Lemma31Result:
    """Check that every subgroup between ``h`` and ``g`` is subnormal; if so find the least
    ``r`` with ``g^(r) <= h``."""
    _require_subgroup(g, h)
    lat = subgroup_lattice(g, budget)
    hmask = h.mask_in(g)
    for cl, _ in lat.subgroups_containing(hmask):
        if not cl.subnormal:
            return Lemma31Result(False, None)
    r = next((i for i, t in enumerate(derived_series(g).terms) if is_subgroup(t, h)), None)
    if r is not None and (r == 0) != (h.order() == g.order()):
        raise AssertionError("r = 0 must hold exactly when h = g")
    return Lemma31Result(True, r)


def is_almost_minimal_simple(g: Group, budget: LatticeBudget | None = None) -> Verdict:
    """Trivial soluble radical, unique minimal normal M, M minimal simple, C_g(M) = 1."""
    if g.order() == 1:
        return Verdict(False, detail="trivial group")
    if soluble_radical(g).order() != 1:
        return Verdict(False, detail="non-trivial soluble radical")
    mins = minimal_normal_subgroups(g)
    if len(mins) != 1:
        return Verdict(False, detail=f"{len(mins)} minimal normal subgroups")
    m = mins[0]
    if not is_minimal_simple(m, budget):
        return Verdict(False, m, detail="minimal normal subgroup is not minimal simple")
    if centralizer(g, m).order() != 1:
        return Verdict(False, m, detail="minimal normal subgroup has non-trivial centralizer")
    return Verdict(True, m, detail=f"M of order {m.order()}")


@dataclass(frozen=True)
class ClassRecord:
    order: int
    class_size: int
    defect: object  # int or NOT_SUBNORMAL
    derived_length: object  # int or NOT_SOLUBLE
    representative: Group = field(repr=False, compare=False)

    def satisfies(self, n, d: int) -> bool:
        subnormal = self.defect is not NOT_SUBNORMAL and (n is UNBOUNDED or self.defect <= n)
        soluble = self.derived_length is not NOT_SOLUBLE and self.derived_length <= d
        return subnormal or soluble


@dataclass(frozen=True)
class Conclusion:
    kind: str  # SOLUBLE, EXTENSION or NEITHER
    derived_length: Optional[int] = None
    radical: Optional[Group] = None
    quotient: Optional[Group] = None
    minimal_simple: Optional[Group] = None
    detail: str = ""


@dataclass(frozen=True)
class DichotomyReport:
    n: object
    d: int
    records: tuple[ClassRecord, ...]
    conclusion: Conclusion

    def hypothesis_holds(self, n=None, d: Optional[int] = None) -> bool:
        """Every subgroup class is subnormal (defect <= n) or soluble of length <= d."""
        n = self.n if n is None else n
        d = self.d if d is None else d
        return all(r.satisfies(n, d) for r in self.records)

    def violations(self, n=None, d: Optional[int] = None) -> list[ClassRecord]:
        n = self.n if n is None else n
        d = self.d if d is None else d
        return [r for r in self.records if not r.satisfies(n, d)]

    def observed(self) -> dict:
        """Largest defect among subnormal classes and largest length among soluble non-subnormal ones."""
        defects = [r.defect for r in self.records if r.defect is not NOT_SUBNORMAL]
        lengths = [
            r.derived_length for r in self.records
            if r.defect is NOT_SUBNORMAL and r.derived_length is not NOT_SOLUBLE
        ]
        return {"max_defect": max(defects, default=0), "max_nonsubnormal_length": max(lengths, default=None)}


def check_dichotomy(g: Group, n=UNBOUNDED, d: int = 1, budget: LatticeBudget | None = None) -> DichotomyReport:
    lat = subgroup_lattice(g, budget)
    records = tuple(
        ClassRecord(cl.order, cl.class_size, cl.defect_in_parent, cl.derived_length, cl.representative)
        for cl in lat.classes
    )
    dl = derived_length(g)
    if dl is not NOT_SOLUBLE:
        conclusion = Conclusion("SOLUBLE", derived_length=dl)
    else:
        # a normal soluble S with g/S almost minimal simple must be the radical
        radical = soluble_radical(g)
        rl = derived_length(radical)
        quotient = quotient_group(g, radical)
        verdict = is_almost_minimal_simple(quotient, budget)
        if verdict and rl <= d:
            conclusion = Conclusion("EXTENSION", rl, radical, quotient, verdict.witness, verdict.detail)
        else:
            detail = verdict.detail if not verdict else f"radical has derived length {rl} > {d}"
            conclusion = Conclusion("NEITHER", rl, radical, quotient, None, detail)
    return DichotomyReport(n, d, records, conclusion)


def final_remark_divisor(g: Group, s: Group, m: Group) -> Verdict:
    """Check that ``|g : m|`` divides ``|Out(m/s)|`` as given by the family table."""
    if not is_normal(m, s) or not is_normal(g, m):
        raise ValueError("need s normal in m and m normal in g")
    top = quotient_group(m, s)
    fam = thompson_family(top)
    if fam is None:
        raise FamilyMatchError("m/s is not isomorphic to a minimal simple group")
    index = g.order() // m.order()
    total = out_order(fam).total
    return Verdict(total % index == 0, detail=f"|G:M| = {index}, |Out({fam})| = {total}")
