import pytest

from conftest import elements_of, oracle_elements
import oracles
from minsimple import (
    NOT_SOLUBLE, NOT_SUBNORMAL, Group, GroupError, NotNormalError, NotSubgroupError, Permutation,
    alt, center, centralizer, conjugacy_classes, cyclic, derived_length, derived_series, derived_subgroup,
    dihedral, direct_factor_embeddings, direct_product, gl2_3, is_abelian, is_isomorphic, is_member,
    is_metabelian, is_normal, is_perfect, is_simple, is_soluble, normal_closure, normal_closure_chain,
    normal_subgroups, normalizer, psl2, quaternion8, quotient_group, sl2_3, soluble_radical,
    subnormal_defect, sym,
)
from minsimple.lattice import subgroup_lattice

P = Permutation.from_cycles


def gen(degree, *cycles):
    return Group(degree, [P(degree, c) for c in cycles])


SMALL = {
    "S3": lambda: sym(3), "S4": lambda: sym(4), "A4": lambda: alt(4), "A5": lambda: alt(5),
    "D8": lambda: dihedral(4), "D10": lambda: dihedral(5), "Q8": quaternion8, "C6": lambda: cyclic(6),
    "SL23": sl2_3, "GL23": gl2_3, "C2xC4": lambda: direct_product(cyclic(2), cyclic(4)),
    "PSL27": lambda: psl2(7),
}


@pytest.mark.parametrize("name", SMALL)
def test_elements_match_closure_oracle(name):
    g = SMALL[name]()
    assert elements_of(g) == oracle_elements(g)
    assert g.order() == len(oracle_elements(g))


def test_trivial_group():
    g = Group(3)
    assert g.order() == 1
    assert derived_length(g) == 0
    assert is_abelian(g) and is_metabelian(g) and is_soluble(g) and is_perfect(g)
    assert [t.order() for t in derived_series(g).terms] == [1]


class TestMembership:
    def test_examples(self):
        assert is_member(alt(5), P(5, [[0, 1, 2]]))
        assert not is_member(alt(5), P(5, [[0, 1]]))
        assert is_member(sym(4), P(4, [[0, 1], [2, 3]]))

    def test_degree_mismatch(self):
        with pytest.raises(GroupError):
            is_member(sym(4), P(5, [[0, 1]]))


class TestDerived:
    def test_derived_subgroup(self):
        d = derived_subgroup(sym(4))
        assert d.order() == 12 and d == alt(4)
        assert derived_subgroup(cyclic(6)).order() == 1
        assert derived_subgroup(alt(5)) == alt(5)

    @pytest.mark.parametrize("name", ["S3", "S4", "A4", "D8", "Q8", "SL23", "GL23", "C2xC4"])
    def test_derived_subgroup_matches_oracle(self, name):
        g = SMALL[name]()
        assert elements_of(derived_subgroup(g)) == oracles.commutator_subgroup(elements_of(g), g.degree)
        assert derived_length(g) == oracles.derived_length(elements_of(g), g.degree)

    def test_series(self):
        assert [t.order() for t in derived_series(sym(4)).terms] == [24, 12, 4, 1]
        assert [t.order() for t in derived_series(sym(5)).terms] == [120, 60, 60]

    def test_lengths(self):
        assert derived_length(sl2_3()) == 3
        assert derived_length(gl2_3()) == 4
        assert derived_length(alt(5)) is NOT_SOLUBLE
        assert is_metabelian(sym(3)) and not is_metabelian(sym(4)) and is_soluble(sym(4))

    @pytest.mark.parametrize("name", SMALL)
    def test_series_terms_normal_and_decreasing(self, name):
        g = SMALL[name]()
        terms = derived_series(g).terms
        for a, b in zip(terms, terms[1:-1]):
            assert b.order() < a.order()
        for t in terms:
            assert is_normal(g, t)
        assert is_soluble(g) == (terms[-1].order() == 1)


class TestNormalClosureAndDefect:
    def test_normal_closure(self):
        assert normal_closure(sym(4), gen(4, [[0, 1]])) == sym(4)
        assert normal_closure(sym(4), gen(4, [[0, 1], [2, 3]])).order() == 4
        v = normal_closure(sym(4), gen(4, [[0, 1], [2, 3]]))
        assert normal_closure(sym(4), v) == v

    def test_not_subgroup(self):
        with pytest.raises(NotSubgroupError):
            normal_closure(alt(4), gen(4, [[0, 1]]))

    def test_defect_examples(self):
        assert subnormal_defect(sym(4), gen(4, [[0, 1]])) is NOT_SUBNORMAL
        assert subnormal_defect(sym(4), sym(4)) == 0
        assert subnormal_defect(sym(4), gen(4, [[0, 1], [2, 3]])) == 2

    def test_dihedral_all_subnormal(self):
        g = dihedral(4)
        for cl in subgroup_lattice(g).classes:
            assert subnormal_defect(g, cl.representative) <= 2

    @pytest.mark.parametrize("name", ["S4", "A4", "D8", "Q8", "SL23", "C2xC4", "A5"])
    def test_defect_properties(self, name):
        g = SMALL[name]()
        for cl in subgroup_lattice(g).classes:
            h = cl.representative
            d = subnormal_defect(g, h)
            assert (d == 1) == (is_normal(g, h) and h.order() < g.order())
            assert (d == 0) == (h.order() == g.order())
            chain = [k.order() for k in normal_closure_chain(g, h).terms]
            assert all(a >= b for a, b in zip(chain, chain[1:]))
            assert all(k % h.order() == 0 for k in chain)


class TestCentralizers:
    def test_examples(self):
        assert center(quaternion8()).order() == 2
        assert centralizer(sym(3), sym(3)).order() == 1

    @pytest.mark.parametrize("name", ["S4", "D8", "Q8", "SL23", "GL23", "C2xC4"])
    def test_center_oracle(self, name):
        g = SMALL[name]()
        assert elements_of(center(g)) == oracles.center(elements_of(g))

    def test_normalizer_in_s4(self):
        assert normalizer(sym(4), gen(4, [[0, 1, 2]])).order() == 6
        assert normalizer(sym(4), gen(4, [[0, 1], [2, 3]])).order() == 8


class TestNormalSubgroups:
    def test_examples(self):
        assert [n.order() for n in normal_subgroups(sym(4))] == [1, 4, 12, 24]
        assert [n.order() for n in normal_subgroups(alt(5))] == [1, 60]
        assert [n.order() for n in normal_subgroups(cyclic(6))] == [1, 2, 3, 6]
        assert is_simple(alt(5)) and not is_simple(sym(4))

    @pytest.mark.parametrize("name", ["S4", "A4", "D8", "Q8", "SL23", "GL23"])
    def test_against_oracle(self, name):
        g = SMALL[name]()
        els = elements_of(g)
        expected = sorted(len(s) for s in oracles.all_subgroups(els, g.degree) if oracles.is_normal(s, els))
        assert [n.order() for n in normal_subgroups(g)] == expected

    def test_soluble_radical(self):
        assert soluble_radical(sym(4)) == sym(4)
        assert soluble_radical(alt(5)).order() == 1
        c2, s5 = direct_factor_embeddings(cyclic(2), sym(5))
        assert soluble_radical(direct_product(cyclic(2), sym(5))) == c2


class TestConjugacyClasses:
    @pytest.mark.parametrize("name", ["S4", "A5", "Q8", "GL23"])
    def test_partition_and_sizes(self, name):
        g = SMALL[name]()
        els = elements_of(g)
        classes = conjugacy_classes(g)
        assert sum(len(c) for c in classes) == g.order()
        for c in classes:
            x = c[0].images
            orbit = {oracles.compose(oracles.compose(oracles.inverse(y), x), y) for y in els}
            assert orbit == {p.images for p in c}

    def test_s5_class_count(self):
        assert len(conjugacy_classes(sym(5))) == 7


class TestQuotient:
    def test_examples(self):
        v = normal_closure(sym(4), gen(4, [[0, 1], [2, 3]]))
        q = quotient_group(sym(4), v)
        assert q.order() == 6 and is_isomorphic(q, sym(3))
        assert quotient_group(sym(4), sym(4)).order() == 1
        assert is_isomorphic(quotient_group(sym(4), Group(4)), sym(4))

    def test_requires_normal(self):
        with pytest.raises(NotNormalError):
            quotient_group(sym(4), gen(4, [[0, 1]]))

    @pytest.mark.parametrize("name", ["S4", "D8", "SL23", "GL23", "A4"])
    def test_orders_and_abelianization(self, name):
        g = SMALL[name]()
        for n in normal_subgroups(g):
            assert quotient_group(g, n).order() * n.order() == g.order()
        assert is_abelian(quotient_group(g, derived_subgroup(g)))


class TestIsomorphism:
    def test_examples(self):
        assert is_isomorphic(psl2(4), alt(5))
        assert is_isomorphic(psl2(4), psl2(5))
        assert not is_isomorphic(sym(4), dihedral(12))

    def test_reflexive_symmetric(self):
        corpus = [SMALL[k]() for k in ("S4", "SL23", "Q8", "D8", "A4", "C2xC4")]
        for a in corpus:
            assert is_isomorphic(a, a)
            for b in corpus:
                assert is_isomorphic(a, b) == is_isomorphic(b, a)

    def test_quaternion_not_dihedral(self):
        assert not is_isomorphic(quaternion8(), dihedral(4))
        assert is_isomorphic(gen(4, [[0, 1, 2, 3]]), cyclic(4))
