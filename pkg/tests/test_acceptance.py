"""Acceptance criteria, one test and one summary line each.

Expected values are either closed-form arithmetic or frozen results of the
independent pure-Python oracles in ``oracles.py``.
"""

import math
import time

import pytest

import oracles
from conftest import CRITERIA_LINES, elements_of, oracle_elements
from minsimple import (
    NOT_SUBNORMAL, UNBOUNDED, Family, FamilyId, Group, LatticeBudget, all_proper_metabelian, alt, center,
    check_dichotomy, contains_isomorphic_copy, cyclic, derived_length, derived_series, dihedral,
    direct_factor_embeddings, direct_product, gl2_3, is_abelian, is_isomorphic, is_metabelian,
    is_minimal_simple, is_normal, is_subgroup, lemma31_r, max_proper_derived_length, normal_closure_chain,
    normal_subgroups, normalizer, out_order, out_order_bruteforce, psl2, psl3_3, quaternion8, quotient_group,
    remark_subgroup_H, s4_criterion, sl2_3, subgroup_lattice, subnormal_defect, sym, sz,
    sz_frobenius_subgroup, sz_torus, thompson_family,
)
from minsimple.group import _subgroup_from_elements

PSL2_QS = (4, 5, 7, 8, 9, 11, 13)


def record(number, title, checks, elapsed, limit):
    failed = [k for k, v in checks.items() if not v]
    in_time = limit is None or elapsed <= limit
    ok = not failed and in_time
    budget = f"{elapsed:.1f}s" + (f" of {limit}s" if limit else "")
    line = f"criterion {number:>2}  {'PASS' if ok else 'FAIL'}  {title}  [{len(checks)} checks, {budget}]"
    if failed:
        line += f"  failing: {', '.join(failed)}"
    if not in_time:
        line += "  over time limit"
    CRITERIA_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_01_orders():
    t = time.monotonic()
    checks = {}
    for q in (4, 5, 7, 8, 9, 11, 13, 27):
        checks[f"psl2({q})"] = psl2(q).order() == q * (q * q - 1) // math.gcd(2, q - 1)
    checks["psl3_3"] = psl3_3().order() == 5616
    checks["sz(8)"] = sz(8).order() == 29120
    record(1, "group orders", checks, time.monotonic() - t, 5)


def test_criterion_02_thompson_vs_brute_force():
    t = time.monotonic()
    expected = {4: True, 5: True, 7: True, 8: True, 13: True, 9: False, 11: False}
    checks = {}
    for q, want in expected.items():
        g = psl2(q)
        checks[f"is_minimal_simple psl2({q})"] = bool(is_minimal_simple(g)) is want
        checks[f"family match psl2({q})"] = (thompson_family(g) is not None) is want
    record(2, "minimal simple by lattice search agrees with family criteria", checks, time.monotonic() - t, 600)


def test_criterion_03_metabelian_subgroups():
    t = time.monotonic()
    checks = {f"psl2({q}) PASS": bool(all_proper_metabelian(psl2(q))) for q in (4, 5, 8, 13)}
    g = psl2(7)
    v = all_proper_metabelian(g)
    checks["psl2(7) FAIL"] = not v
    checks["witness is S4"] = v.witness is not None and is_isomorphic(v.witness, sym(4))
    checks["witness derived length 3"] = v.witness is not None and derived_length(v.witness) == 3
    bad = [cl for cl in subgroup_lattice(g).proper() if not cl.metabelian]
    checks["only S4 is non-metabelian"] = bool(bad) and all(is_isomorphic(cl.representative, sym(4)) for cl in bad)
    record(3, "proper subgroups metabelian exactly where predicted", checks, time.monotonic() - t, None)


def test_criterion_04_s4_criterion():
    t = time.monotonic()
    checks = {
        f"q={q}": s4_criterion(q) == bool(contains_isomorphic_copy(psl2(q), sym(4))) for q in PSL2_QS
    }
    record(4, "S4 embedding iff q^2 = 1 mod 16", checks, time.monotonic() - t, None)


def test_criterion_05_remark_constructions():
    t = time.monotonic()
    H, K = remark_subgroup_H()
    checks = {
        "|H| = 432": H.order() == 432,
        "|K| = 9": K.order() == 9,
        "K elementary abelian": is_abelian(K) and all(x.order() in (1, 3) for x in K.elements()),
        "K normal in H": is_normal(H, K),
        "H/K = GL(2,3)": is_isomorphic(quotient_group(H, K), gl2_3()),
        "dl(H) = 5": derived_length(H) == 5,
        "dl(SL(2,3)) = 3": derived_length(sl2_3()) == 3,
        "dl(GL(2,3)) = 4": derived_length(gl2_3()) == 4,
    }
    record(5, "explicit derived-length constructions", checks, time.monotonic() - t, 30)


def test_criterion_06_suzuki():
    t = time.monotonic()
    f = sz_frobenius_subgroup(8)
    n = normalizer(sz(8), sz_torus(8))
    checks = {
        "|F| = 448": f.order() == 448,
        "F not metabelian": not is_metabelian(f),
        "|N(C7)| = 14": sz_torus(8).order() == 7 and n.order() == 14,
        "N(C7) dihedral": is_isomorphic(n, dihedral(7)),
    }
    record(6, "Sz(8) Frobenius subgroup and torus normalizer", checks, time.monotonic() - t, 120)


def test_criterion_07_out_table():
    t = time.monotonic()
    checks = {}
    for p in (2, 3, 5, 7):
        checks[f"PSL2_2P({p})"] = out_order(FamilyId(Family.PSL2_2P, p)).total == p
        if p != 2:
            checks[f"PSL2_3P({p})"] = out_order(FamilyId(Family.PSL2_3P, p)).total == 2 * p
            checks[f"SZ_2P({p})"] = out_order(FamilyId(Family.SZ_2P, p)).total == p
    checks["PSL2_P(7)"] = out_order(FamilyId(Family.PSL2_P, 7)).total == 2
    checks["PSL3_3"] = out_order(FamilyId(Family.PSL3_3)).total == 2
    checks["brute-force Out(A5)"] = out_order_bruteforce(alt(5)) == out_order(FamilyId(Family.PSL2_2P, 2)).total == 2
    record(7, "outer automorphism orders", checks, time.monotonic() - t, None)


def test_criterion_08_lemma31():
    t = time.monotonic()
    groups = {
        "Q8": quaternion8(), "D8": dihedral(4), "C2xC4": direct_product(cyclic(2), cyclic(4)),
        "S4": sym(4), "A4": alt(4),
    }
    checks = {}
    for name, g in groups.items():
        terms = derived_series(g).terms
        ok, applicable = True, 0
        for cl in subgroup_lattice(g).classes:
            for row in cl.conjugates:
                h = _subgroup_from_elements(g, row)
                res = lemma31_r(g, h)
                if not res.all_subnormal_above:
                    continue
                applicable += 1
                r = res.r
                ok &= r is not None and is_subgroup(terms[r], h)
                ok &= r == 0 or not is_subgroup(terms[r - 1], h)
                ok &= (r == 0) == (h.order() == g.order())
        checks[f"{name} ({applicable} pairs)"] = ok and applicable > 0
    checks["Q8 centre gives r = 1"] = lemma31_r(quaternion8(), center(quaternion8())).r == 1
    record(8, "least r with G^(r) <= H", checks, time.monotonic() - t, 60)


def test_criterion_09_dichotomy():
    t = time.monotonic()
    rep = check_dichotomy(sym(5), UNBOUNDED, 3)
    c = rep.conclusion
    checks = {
        "S5 hypothesis holds": rep.hypothesis_holds(),
        "S5 EXTENSION, S = 1": c.kind == "EXTENSION" and c.radical.order() == 1,
        "S5 M = A5": c.minimal_simple is not None and is_isomorphic(c.minimal_simple, alt(5)),
    }
    g = direct_product(cyclic(2), sym(5))
    rep2 = check_dichotomy(g, UNBOUNDED, 3)
    c2, _ = direct_factor_embeddings(cyclic(2), sym(5))
    checks["C2xS5 EXTENSION, S = C2"] = rep2.conclusion.kind == "EXTENSION" and rep2.conclusion.radical == c2
    for name, h in (("S4", sym(4)), ("S5", sym(5)), ("A5", alt(5))):
        r = check_dichotomy(h, UNBOUNDED, 1)
        grid = [(n, d) for n in range(1, 6) for d in range(1, 6)]
        checks[f"{name} monotone"] = all(
            r.hypothesis_holds(n2, d2)
            for n, d in grid if r.hypothesis_holds(n, d)
            for n2, d2 in grid if n2 >= n and d2 >= d
        )
    record(9, "subnormal-or-soluble dichotomy on finite instances", checks, time.monotonic() - t, 300)


@pytest.mark.extended
def test_criterion_10_extended():
    t = time.monotonic()
    budget = LatticeBudget.extended()
    checks = {
        "psl3_3 max proper derived length 5": max_proper_derived_length(psl3_3(), budget) == 5,
        "psl2(27) all proper metabelian": bool(all_proper_metabelian(psl2(27), budget)),
    }
    record(10, "extended lattice runs", checks, time.monotonic() - t, 3600)


def test_criterion_11_kernel_properties():
    t = time.monotonic()
    built = {
        **{f"psl2({q})": psl2(q) for q in (4, 5, 7, 8, 9, 11, 13, 25, 27)},
        "psl3_3": psl3_3(), "H": remark_subgroup_H()[0], "sl2_3": sl2_3(), "gl2_3": gl2_3(),
        "sz_frobenius(8)": sz_frobenius_subgroup(8), "sym(6)": sym(6), "alt(7)": alt(7),
        "dihedral(9)": dihedral(9), "Q8": quaternion8(), "C12": cyclic(12),
        "C2xS5": direct_product(cyclic(2), sym(5)),
    }
    checks = {}
    for name, g in built.items():
        checks[f"closure order {name}"] = g.order() <= 10**4 and g.order() == len(oracle_elements(g))

    lattice_groups = {k: built[k] for k in ("psl2(4)", "psl2(7)", "psl2(8)", "sl2_3", "gl2_3", "C2xS5")}
    lattice_groups["S4"] = sym(4)
    for name, g in lattice_groups.items():
        lat = subgroup_lattice(g)
        checks[f"Lagrange {name}"] = all(
            g.order() % cl.order == 0 and cl.class_size * cl.normalizer_order == g.order() for cl in lat.classes
        )
        chains_ok = True
        for cl in lat.classes:
            orders = [k.order() for k in normal_closure_chain(g, cl.representative).terms]
            chains_ok &= all(a >= b for a, b in zip(orders, orders[1:]))
            d = subnormal_defect(g, cl.representative)
            chains_ok &= (d is NOT_SUBNORMAL) or (d == 1) == (is_normal(g, cl.representative) and cl.order < g.order())
        checks[f"defect chains {name}"] = chains_ok

    for name in ("gl2_3", "H", "sz_frobenius(8)", "C2xS5", "sym(6)"):
        g = built[name]
        checks[f"derived terms normal {name}"] = all(is_normal(g, term) for term in derived_series(g).terms)
        checks[f"quotient orders {name}"] = all(
            quotient_group(g, n).order() * n.order() == g.order() for n in normal_subgroups(g)
        )
    small = built["gl2_3"]
    checks["derived length vs oracle"] = derived_length(small) == oracles.derived_length(elements_of(small), small.degree)
    record(11, "kernel property suite", checks, time.monotonic() - t, 300)
