"""Independent reference computations in plain Python.

Nothing here touches the stabilizer chain, the element table or the lattice
enumerator; elements are tuples and products are list comprehensions.
"""

from __future__ import annotations

from itertools import combinations


def compose(p, q):
    # p first, then q
    return tuple(q[i] for i in p)


def inverse(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def closure(gens, degree):
    """All elements of the group generated by ``gens`` (breadth-first)."""
    e = tuple(range(degree))
    seen = {e}
    frontier = [e]
    gens = [tuple(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def element_order(p):
    e = tuple(range(len(p)))
    k, x = 1, p
    while x != e:
        x = compose(x, p)
        k += 1
    return k


def all_subgroups(elements, degree):
    """Every subgroup, as frozensets: joins of cyclic subgroups until nothing new appears."""
    cyclic = {closure([x], degree) for x in elements}
    subs = set(cyclic) | {frozenset([tuple(range(degree))])}
    frontier = set(subs)
    while frontier:
        new = set()
        for s in frontier:
            for c in cyclic:
                if c <= s:
                    continue
                j = closure(list(_generators(s)) + list(_generators(c)), degree)
                if j not in subs:
                    new.add(j)
        subs |= new
        frontier = new
    return subs


def _generators(s):
    # a small generating set by greedy closure
    degree = len(next(iter(s)))
    gens, span = [], frozenset([tuple(range(degree))])
    for x in sorted(s):
        if x not in span:
            gens.append(x)
            span = closure(gens, degree)
            if len(span) == len(s):
                break
    return gens


def conjugacy_classes_of_subgroups(subs, elements):
    seen, classes = set(), []
    for s in sorted(subs, key=lambda s: (len(s), sorted(s))):
        if s in seen:
            continue
        orbit = {frozenset(compose(compose(inverse(x), h), x) for h in s) for x in elements}
        seen |= orbit
        classes.append(orbit)
    return classes


def commutator_subgroup(elements, degree):
    comms = {compose(compose(inverse(a), inverse(b)), compose(a, b)) for a, b in combinations(elements, 2)}
    return closure(comms or [tuple(range(degree))], degree)


def derived_length(elements, degree, cap=20):
    """Length of the derived series, or None if it stalls above the trivial group."""
    cur = frozenset(elements)
    for k in range(cap):
        if len(cur) == 1:
            return k
        nxt = commutator_subgroup(cur, degree)
        if nxt == cur:
            return None
        cur = nxt
    return None


def is_normal(sub, elements):
    return all(compose(compose(inverse(x), h), x) in sub for x in elements for h in sub)


def center(elements):
    return frozenset(z for z in elements if all(compose(z, x) == compose(x, z) for x in elements))
