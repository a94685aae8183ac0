"""Claim suites: each claim pairs an expected value with a computation."""

from __future__ import annotations

import functools
import time
from dataclasses import dataclass
from typing import Any, Callable, Iterator, Optional

from . import constructions as C
from .classification import (
    UNBOUNDED, Family, FamilyId, check_dichotomy, final_remark_divisor, lemma31_r,
    metabelian_member, out_order, out_order_bruteforce, s4_criterion, thompson_family, thompson_member,
)
from .group import (
    BudgetExceeded, Group, center, derived_length, is_abelian, is_normal, normalizer, quotient_group,
)
from .iso import is_isomorphic
from .lattice import (
    LatticeBudget, all_proper_metabelian, contains_isomorphic_copy, is_minimal_simple,
    max_proper_derived_length, subgroup_lattice,
)
from .report import FAIL, PASS, SKIPPED, Report, witness_cycles

__all__ = ["Options", "CLAIM_SETS", "claims", "run_claims"]

DEFAULT_BUDGET_ORDER = 1200
EXTENDED_BUDGET_ORDER = 10_000


@dataclass(frozen=True)
class Options:
    extended: bool = False
    budget_order: Optional[int] = None
    time_limit: Optional[float] = None

    @property
    def max_order(self) -> int:
        if self.budget_order is not None:
            return self.budget_order
        return EXTENDED_BUDGET_ORDER if self.extended else DEFAULT_BUDGET_ORDER

    def lattice_budget(self) -> LatticeBudget:
        return LatticeBudget(max_group_order=self.max_order, time_limit=self.time_limit)


@dataclass(frozen=True)
class Claim:
    claim: str
    inputs: dict
    expected: Any
    compute: Callable[[Options], tuple[Any, Optional[Group]]]
    lattice_order: int = 0  # order of the group whose lattice is needed, 0 if none


@functools.lru_cache(maxsize=None)
def _group(name: str, *args) -> Group:
    return getattr(C, name)(*args)


def _psl2(q: int) -> Group:
    return _group("psl2", q)


PSL2_QS = (4, 5, 7, 8, 9, 11, 13)


def _order_claims() -> Iterator[Claim]:
    for q in (4, 5, 7, 8, 9, 11, 13, 27):
        yield Claim(f"orders/psl2/{q}", {"q": q}, C.psl2_order(q), lambda o, q=q: (_psl2(q).order(), None))
    yield Claim("orders/psl3_3", {}, 5616, lambda o: (_group("psl3_3").order(), None))
    yield Claim("orders/sz/8", {"q": 8}, C.sz_order(8), lambda o: (_group("sz", 8).order(), None))


def _thompson_claims() -> Iterator[Claim]:
    for q in PSL2_QS:
        g_order = C.psl2_order(q)

        def expected_member(q=q):
            return thompson_family(_psl2(q)) is not None

        def compute(o, q=q):
            v = is_minimal_simple(_psl2(q), o.lattice_budget())
            return v.passed, v.witness

        yield Claim(f"thompson/psl2/{q}", {"q": q}, expected_member, compute, g_order)
    for fam, p, expected in [
        (Family.PSL2_P, 7, True), (Family.PSL2_P, 11, False), (Family.PSL2_P, 13, True),
        (Family.PSL2_3P, 2, False), (Family.PSL2_3P, 3, True), (Family.PSL2_2P, 2, True),
        (Family.SZ_2P, 3, True), (Family.SZ_2P, 2, False),
    ]:
        f = FamilyId(fam, p)
        yield Claim(f"thompson/criterion/{fam.value}/{p}", {"family": fam.value, "param": p}, expected,
                    lambda o, f=f: (thompson_member(f), None))


def _prop22_claims() -> Iterator[Claim]:
    for q in (4, 5, 8, 13, 7):
        expected = "PASS" if q != 7 else "FAIL"

        def compute(o, q=q):
            v = all_proper_metabelian(_psl2(q), o.lattice_budget())
            return ("PASS" if v.passed else "FAIL"), v.witness

        yield Claim(f"prop2.2/psl2/{q}", {"q": q}, expected, compute, C.psl2_order(q))

    def s4_witness(o):
        v = all_proper_metabelian(_psl2(7), o.lattice_budget())
        w = v.witness
        return (w is not None and is_isomorphic(w, _group("sym", 4)) and derived_length(w) == 3), w

    yield Claim("prop2.2/psl2/7/witness-is-S4", {"q": 7}, True, s4_witness, 168)

    for q in PSL2_QS:
        def compute(o, q=q):
            v = contains_isomorphic_copy(_psl2(q), _group("sym", 4), o.lattice_budget())
            return v.passed, v.witness

        yield Claim(f"prop2.2/s4/{q}", {"q": q}, s4_criterion(q), compute, C.psl2_order(q))

    for q in (4, 8, 13, 7, 5):
        f = thompson_family(_psl2(q)) if q != 7 else FamilyId(Family.PSL2_P, 7)

        def compute(o, q=q):
            return all_proper_metabelian(_psl2(q), o.lattice_budget()).passed, None

        yield Claim(f"prop2.2/criterion/psl2/{q}", {"q": q, "family": str(f)}, metabelian_member(f), compute,
                    C.psl2_order(q))

    def frob(o):
        F = _group("sz_frobenius_subgroup", 8)
        return {"order": F.order(), "derived_length": derived_length(F)}, None

    yield Claim("prop2.2/sz/8/frobenius", {"q": 8}, {"order": 448, "derived_length": 3}, frob)

    def torus_normalizer(o):
        n = normalizer(_group("sz", 8), _group("sz_torus", 8))
        return {"order": n.order(), "dihedral": is_isomorphic(n, _group("dihedral", 7))}, n

    yield Claim("prop2.2/sz/8/torus-normalizer", {"q": 8}, {"order": 14, "dihedral": True}, torus_normalizer)

    def psl2_27(o):
        return ("PASS" if all_proper_metabelian(_psl2(27), o.lattice_budget()).passed else "FAIL"), None

    yield Claim("prop2.2/psl2/27", {"q": 27}, "PASS", psl2_27, C.psl2_order(27))


def _table1_claims() -> Iterator[Claim]:
    rows = {
        Family.PSL2_2P: lambda p: p,
        Family.PSL2_3P: lambda p: 2 * p,
        Family.PSL2_P: lambda p: 2,
        Family.PSL3_3: lambda p: 2,
        Family.SZ_2P: lambda p: p,
    }
    for fam, total in rows.items():
        params = [0] if fam is Family.PSL3_3 else [p for p in (2, 3, 5, 7) if thompson_member(FamilyId(fam, p))]
        expected = {p: total(p) for p in params}

        def compute(o, fam=fam, params=params):
            return {p: out_order(FamilyId(fam, p)).total for p in params}, None

        yield Claim(f"table1/{fam.value}", {"family": fam.value, "params": params}, expected, compute)
    yield Claim("table1/bruteforce/A5", {"group": "alt(5)"}, out_order(FamilyId(Family.PSL2_2P, 2)).total,
                lambda o: (out_order_bruteforce(_group("alt", 5)), None))


def _remark_claims() -> Iterator[Claim]:
    def hk(o):
        H, K = C.remark_subgroup_H()
        big = _group("psl3_3")
        return {
            "H_order": H.order(),
            "K_order": K.order(),
            "inside_psl3_3": all(x in big for x in H.gens),
            "K_normal": is_normal(H, K),
            "K_elementary_abelian": is_abelian(K) and all(x.order() in (1, 3) for x in K.elements()),
            "quotient_is_GL23": is_isomorphic(quotient_group(H, K), _group("gl2_3")),
            "H_derived_length": derived_length(H),
        }, None

    yield Claim("remark/psl3_3/H", {}, {
        "H_order": 432, "K_order": 9, "inside_psl3_3": True, "K_normal": True,
        "K_elementary_abelian": True, "quotient_is_GL23": True, "H_derived_length": 5,
    }, hk)
    yield Claim("remark/sl2_3/derived-length", {}, 3, lambda o: (derived_length(_group("sl2_3")), None))
    yield Claim("remark/gl2_3/derived-length", {}, 4, lambda o: (derived_length(_group("gl2_3")), None))

    def unique_s4(o):
        lat = subgroup_lattice(_psl2(7), o.lattice_budget())
        bad = [cl for cl in lat.proper() if not cl.metabelian]
        ok = bool(bad) and all(is_isomorphic(cl.representative, _group("sym", 4)) for cl in bad)
        return ok, None

    yield Claim("remark/psl2/7/only-S4-non-metabelian", {"q": 7}, True, unique_s4, 168)
    for q, expected in ((7, 3), (8, 2)):
        yield Claim(f"remark/psl2/{q}/max-derived-length", {"q": q}, expected,
                    lambda o, q=q: (max_proper_derived_length(_psl2(q), o.lattice_budget()), None), C.psl2_order(q))
    yield Claim("remark/psl3_3/max-derived-length", {}, 5,
                lambda o: (max_proper_derived_length(_group("psl3_3"), o.lattice_budget()), None), 5616)


def _lemma31_claims() -> Iterator[Claim]:
    from .group import center

    def q8(o):
        g = _group("quaternion8")
        r = lemma31_r(g, center(g), o.lattice_budget())
        return [r.all_subnormal_above, r.r], None

    yield Claim("lemma3.1/Q8/center", {}, [True, 1], q8, 8)

    def s4(o):
        from .perm import Permutation
        g = _group("sym", 4)
        h = Group(4, [Permutation.from_cycles(4, [[0, 1]])])
        r = lemma31_r(g, h, o.lattice_budget())
        return [r.all_subnormal_above, r.r], None

    yield Claim("lemma3.1/S4/transposition", {}, [False, None], s4, 24)


def _dichotomy_claims() -> Iterator[Claim]:
    def s5(o):
        rep = check_dichotomy(_group("sym", 5), UNBOUNDED, 3, o.lattice_budget())
        c = rep.conclusion
        return {
            "hypothesis": rep.hypothesis_holds(),
            "conclusion": c.kind,
            "S_order": c.radical.order() if c.radical else None,
            "M_order": c.minimal_simple.order() if c.minimal_simple else None,
        }, None

    yield Claim("dichotomy/S5/d3", {"n": "inf", "d": 3},
                {"hypothesis": True, "conclusion": "EXTENSION", "S_order": 1, "M_order": 60}, s5, 120)

    def c2s5(o):
        g = _group("direct_product", _group("cyclic", 2), _group("sym", 5))
        rep = check_dichotomy(g, UNBOUNDED, 3, o.lattice_budget())
        c = rep.conclusion
        left, _ = C.direct_factor_embeddings(_group("cyclic", 2), _group("sym", 5))
        return {
            "hypothesis": rep.hypothesis_holds(),
            "conclusion": c.kind,
            "S_is_C2_factor": c.radical is not None and c.radical == left,
        }, None

    yield Claim("dichotomy/C2xS5/d3", {"n": "inf", "d": 3},
                {"hypothesis": True, "conclusion": "EXTENSION", "S_is_C2_factor": True}, c2s5, 240)

    def s4(o):
        rep = check_dichotomy(_group("sym", 4), UNBOUNDED, 3, o.lattice_budget())
        return [rep.hypothesis_holds(), rep.conclusion.kind, rep.conclusion.derived_length], None

    yield Claim("dichotomy/S4/d3", {"n": "inf", "d": 3}, [True, "SOLUBLE", 3], s4, 24)

    def monotone(o):
        for name, args in (("sym", (4,)), ("sym", (5,)), ("alt", (5,))):
            rep = check_dichotomy(_group(name, *args), UNBOUNDED, 1, o.lattice_budget())
            grid = {(n, d): rep.hypothesis_holds(n, d) for n in range(1, 6) for d in range(1, 6)}
            for (n, d), holds in grid.items():
                if holds and not all(grid[(n2, d2)] for n2 in range(n, 6) for d2 in range(d, 6)):
                    return False, None
        return True, None

    yield Claim("dichotomy/monotonicity", {"n": "1..5", "d": "1..5"}, True, monotone, 120)

    def divisor(o):
        return final_remark_divisor(_group("sym", 5), Group(5), _group("alt", 5)).passed, None

    yield Claim("final-remark/S5", {}, True, divisor)


CLAIM_SETS: dict[str, Callable[[], Iterator[Claim]]] = {
    "orders": _order_claims,
    "thompson": _thompson_claims,
    "prop22": _prop22_claims,
    "table1": _table1_claims,
    "remark": _remark_claims,
    "lemma31": _lemma31_claims,
    "dichotomy": _dichotomy_claims,
}


def claims(name: str) -> list[Claim]:
    if name == "all":
        return [c for fn in CLAIM_SETS.values() for c in fn()]
    return list(CLAIM_SETS[name]())


def run_claim(claim: Claim, options: Options) -> Report:
    start = time.monotonic()
    expected = claim.expected() if callable(claim.expected) else claim.expected
    if claim.lattice_order > options.max_order:
        return Report(claim.claim, claim.inputs, expected, None, SKIPPED, note="budget")
    try:
        computed, witness = claim.compute(options)
    except BudgetExceeded as exc:
        millis = int((time.monotonic() - start) * 1000)
        return Report(claim.claim, claim.inputs, expected, None, SKIPPED, millis=millis, note=f"budget: {exc}")
    millis = int((time.monotonic() - start) * 1000)
    verdict = PASS if computed == expected else FAIL
    wit = witness_cycles(witness)
    if verdict == FAIL and wit is None:
        wit = []
    return Report(claim.claim, claim.inputs, expected, computed, verdict, wit, millis)


def run_claims(name: str, options: Options) -> Iterator[Report]:
    for claim in claims(name):
        yield run_claim(claim, options)
