import pytest

import oracles
from conftest import elements_of
from minsimple import (
    Group, LatticeBudget, LatticeBudgetExceeded, NotSolubleError, all_proper_metabelian, all_subgroups, alt,
    contains_isomorphic_copy, cyclic, derived_length, dihedral, direct_product, gl2_3, is_isomorphic,
    is_minimal_simple, max_proper_derived_length, psl2, psl3_3, quaternion8, sl2_3, subgroup_lattice, sym,
)

ORACLE_GROUPS = {
    "trivial": lambda: Group(2),
    "C6": lambda: cyclic(6),
    "S3": lambda: sym(3),
    "D8": lambda: dihedral(4),
    "Q8": quaternion8,
    "C2xC4": lambda: direct_product(cyclic(2), cyclic(4)),
    "D10": lambda: dihedral(5),
    "A4": lambda: alt(4),
    "S4": lambda: sym(4),
    "SL23": sl2_3,
    "GL23": gl2_3,
    "A5": lambda: alt(5),
    "S5": lambda: sym(5),
    "PSL27": lambda: psl2(7),
    "C2xS4": lambda: direct_product(cyclic(2), sym(4)),
}


@pytest.mark.parametrize("name", ORACLE_GROUPS)
def test_lattice_matches_brute_force(name):
    g = ORACLE_GROUPS[name]()
    els = elements_of(g)
    subs = oracles.all_subgroups(els, g.degree)
    classes = oracles.conjugacy_classes_of_subgroups(subs, els)
    lat = subgroup_lattice(g)
    assert lat.total == len(subs)
    assert len(lat.classes) == len(classes)
    assert sorted((cl.order, cl.class_size) for cl in lat.classes) == sorted(
        (len(next(iter(c))), len(c)) for c in classes
    )
    got = {frozenset(map(tuple, g.table().elems[row].tolist())) for cl in lat.classes for row in cl.conjugates}
    assert got == subs
    for cl in lat.classes:
        assert g.order() % cl.order == 0
        assert cl.class_size * cl.normalizer_order == g.order()
        assert cl.representative.order() == cl.order
        assert cl.derived_length == derived_length(cl.representative)


def test_known_counts():
    assert (len(all_subgroups(sym(4))), subgroup_lattice(sym(4)).total) == (11, 30)
    assert (len(all_subgroups(alt(5))), subgroup_lattice(alt(5)).total) == (9, 59)
    assert len(all_subgroups(Group(3))) == 1


@pytest.mark.parametrize("q,classes,total", [(8, 12, 386), (11, 16, 620), (13, 16, 942)])
def test_frozen_counts(q, classes, total):
    # frozen; the enumerator asserts Lagrange and class_size * normalizer order on each class
    lat = subgroup_lattice(psl2(q))
    assert (len(lat.classes), lat.total) == (classes, total)


class TestBudget:
    def test_order(self):
        with pytest.raises(LatticeBudgetExceeded):
            subgroup_lattice(psl2(13), LatticeBudget(max_group_order=1000))

    def test_subgroup_count(self):
        with pytest.raises(LatticeBudgetExceeded):
            subgroup_lattice(sym(5), LatticeBudget(max_subgroups=50))

    def test_time(self):
        with pytest.raises(LatticeBudgetExceeded):
            subgroup_lattice(psl2(11), LatticeBudget(time_limit=0.0))

    def test_defaults(self):
        b = LatticeBudget()
        assert (b.max_group_order, b.max_subgroups, b.time_limit) == (6000, 10**6, None)


class TestPredicates:
    def test_contains_copy(self):
        v = contains_isomorphic_copy(psl2(7), sym(4))
        assert v and is_isomorphic(v.witness, sym(4))
        assert not contains_isomorphic_copy(psl2(8), sym(4))
        v = contains_isomorphic_copy(psl2(9), alt(5))
        assert v and v.witness.order() == 60

    def test_metabelian(self):
        assert all_proper_metabelian(psl2(8))
        assert all_proper_metabelian(psl2(13))
        v = all_proper_metabelian(psl2(7))
        assert not v
        assert is_isomorphic(v.witness, sym(4)) and derived_length(v.witness) == 3

    def test_minimal_simple(self):
        assert is_minimal_simple(psl2(7))
        assert is_minimal_simple(alt(5))
        v = is_minimal_simple(psl2(9))
        assert not v and v.witness.order() == 60
        assert not is_minimal_simple(sym(5))
        assert not is_minimal_simple(cyclic(5))

    def test_max_derived_length(self):
        assert max_proper_derived_length(psl2(7)) == 3
        assert max_proper_derived_length(psl2(8)) == 2
        with pytest.raises(NotSolubleError):
            max_proper_derived_length(psl2(9))

    @pytest.mark.parametrize("q", [4, 5, 7, 8, 13])
    def test_metabelian_iff_length_two(self, q):
        g = psl2(q)
        assert bool(all_proper_metabelian(g)) == (max_proper_derived_length(g) <= 2)


@pytest.mark.extended
def test_psl3_3_max_derived_length():
    assert max_proper_derived_length(psl3_3(), LatticeBudget.extended()) == 5
