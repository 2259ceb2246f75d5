"""Numerical semigroup layer: gaps, pseudo-Frobenius set, type, canonical
ideal, duality, trace, residue, and the prescribed type/residue family."""

import pytest

from gstab.errors import FormatError, ParameterError
from gstab.numsgp import (
    canonical_ideal,
    cm_type,
    family,
    ideal_dual,
    ideal_quotient,
    ideal_sum,
    pseudo_frobenius,
    residue,
    semigroup,
    semigroup_as_ideal,
    trace_ideal,
)

ASSORTED = [(2, 3), (3, 4, 5), (3, 7, 8), (5, 16, 17, 18, 19),
            (4, 6, 9), (3, 5), (5, 7, 9, 11, 13), (1,), (6, 10, 15)]


# -- independent oracle -------------------------------------------------------

def brute_pseudo_frobenius(h):
    """Definition checked against every nonzero member on a safe window and
    over every integer candidate down to -max(gens), not just the gaps."""
    bound = h.conductor + 2 * max(h.generators) + 1
    members = [m for m in h.members_upto(bound) if m != 0]
    out = []
    for x in range(-max(h.generators), h.conductor):
        if h.contains(x):
            continue
        # beyond the window x + m is at least the conductor
        if all(h.contains(x + m) for m in members):
            out.append(x)
    return tuple(out)


# -- construction ---------------------------------------------------------------

def test_semigroup_2_3():
    h = semigroup([2, 3])
    assert h.gaps == (1,)
    assert h.frobenius == 1
    assert h.conductor == 2


def test_semigroup_3_4_5():
    h = semigroup([3, 4, 5])
    assert h.gaps == (1, 2)
    assert h.frobenius == 2
    assert h.conductor == 3


def test_semigroup_3_7_8():
    h = semigroup([3, 7, 8])
    assert h.gaps == (1, 2, 4, 5)
    assert h.frobenius == 5
    assert h.conductor == 6
    assert h.members_upto(10) == [0, 3, 6, 7, 8, 9]


def test_semigroup_whole_naturals():
    h = semigroup([1])
    assert h.gaps == ()
    assert h.frobenius == -1
    assert h.conductor == 0


def test_semigroup_rejects_bad_input():
    with pytest.raises(FormatError):
        semigroup([2, 4])
    with pytest.raises(FormatError):
        semigroup([0, 3])
    with pytest.raises(FormatError):
        semigroup([])


# -- pseudo-Frobenius and type ----------------------------------------------------

def test_pf_2_3():
    assert pseudo_frobenius(semigroup([2, 3])) == (1,)


def test_pf_3_4_5():
    assert pseudo_frobenius(semigroup([3, 4, 5])) == (1, 2)


def test_pf_3_7_8():
    assert pseudo_frobenius(semigroup([3, 7, 8])) == (4, 5)


def test_pf_generator_route_matches_full_definition():
    for gens in ASSORTED:
        h = semigroup(gens)
        assert pseudo_frobenius(h) == brute_pseudo_frobenius(h)


def test_cm_type():
    assert cm_type(semigroup([2, 3])) == 1
    assert cm_type(semigroup([3, 4, 5])) == 2
    assert cm_type(family(5, 3)) == 5


# -- canonical ideal ---------------------------------------------------------------

def test_canonical_symmetric_semigroup_is_itself():
    h = semigroup([2, 3])
    k = canonical_ideal(h)
    for z in range(-3, 12):
        assert k.contains(z) == h.contains(z)


def test_canonical_3_4_5():
    h = semigroup([3, 4, 5])
    k = canonical_ideal(h)
    assert k.min == 0
    assert [z for z in range(8) if k.contains(z)] == [0, 1, 3, 4, 5, 6, 7]


def test_canonical_3_7_8():
    # frobenius 5; K = {z : 5 - z not in H} = {0,1,3,4} then everything >= 6
    h = semigroup([3, 7, 8])
    k = canonical_ideal(h)
    assert [z for z in range(10) if k.contains(z)] == [0, 1, 3, 4, 6, 7, 8, 9]


def test_canonical_contains_semigroup_and_is_closed():
    for gens in ASSORTED:
        h = semigroup(gens)
        k = canonical_ideal(h)
        assert k.min == 0
        bound = h.conductor + 5
        for z in h.members_upto(bound):
            assert k.contains(z)
        for z in range(0, bound):
            if k.contains(z):
                for g in h.generators:
                    assert k.contains(z + g)


# -- duality -------------------------------------------------------------------------

def test_dual_of_semigroup_is_itself():
    for gens in [(2, 3), (3, 4, 5), (3, 7, 8)]:
        h = semigroup(gens)
        d = ideal_dual(h, semigroup_as_ideal(h))
        for z in range(-3, h.conductor + 6):
            assert d.contains(z) == h.contains(z)


def test_dual_of_canonical_3_4_5():
    h = semigroup([3, 4, 5])
    d = ideal_dual(h, canonical_ideal(h))
    assert d.min == 3
    assert all(d.contains(z) for z in range(3, 12))
    assert not d.contains(2)


def test_canonical_duality_reflexivity():
    # duality into the canonical ideal recovers any ideal: K - (K - E) = E
    for gens in ASSORTED:
        h = semigroup(gens)
        k = canonical_ideal(h)
        for e in [semigroup_as_ideal(h), k, ideal_dual(h, k), trace_ideal(h)]:
            back = ideal_quotient(k, ideal_quotient(k, e))
            for z in range(e.min - 2, e.min + h.conductor + 5):
                assert back.contains(z) == e.contains(z), gens


def test_h_double_dual_contains_canonical():
    # duality into the semigroup itself only gives an inclusion in general
    for gens in ASSORTED:
        h = semigroup(gens)
        k = canonical_ideal(h)
        dd = ideal_dual(h, ideal_dual(h, k))
        for z in range(0, h.conductor + 5):
            if k.contains(z):
                assert dd.contains(z), gens


# -- trace and residue -----------------------------------------------------------------

def test_trace_3_4_5():
    h = semigroup([3, 4, 5])
    tr = trace_ideal(h)
    assert tr.min == 3
    assert all(tr.contains(z) for z in range(3, 12))


def test_residue_values():
    assert residue(semigroup([2, 3])) == 0
    assert residue(semigroup([3, 4, 5])) == 1
    assert residue(semigroup([3, 7, 8])) == 2


def test_trace_inside_semigroup():
    for gens in ASSORTED:
        h = semigroup(gens)
        tr = trace_ideal(h)
        for z in range(0, h.conductor + max(h.generators) + 2):
            if tr.contains(z):
                assert h.contains(z)


def test_residue_zero_iff_type_one_iff_symmetric():
    for gens in ASSORTED:
        h = semigroup(gens)
        k = canonical_ideal(h)
        symmetric = all(k.contains(z) == h.contains(z)
                        for z in range(0, h.conductor + 3))
        assert (residue(h) == 0) == (cm_type(h) == 1) == symmetric, gens


def test_residue_one_means_only_zero_missing():
    for gens in ASSORTED:
        h = semigroup(gens)
        if residue(h) != 1:
            continue
        tr = trace_ideal(h)
        missing = [z for z in h.members_upto(h.conductor + tr.min + 1)
                   if not tr.contains(z)]
        assert missing == [0], gens


def test_ideal_sum_shifts():
    h = semigroup([3, 4, 5])
    hh = ideal_sum(semigroup_as_ideal(h), semigroup_as_ideal(h))
    for z in range(0, 12):
        assert hh.contains(z) == h.contains(z)


# -- the prescribed type/residue family ---------------------------------------------------

def test_family_2_1_is_3_4_5():
    assert family(2, 1).generators == (3, 4, 5)


def test_family_2_2_is_3_7_8():
    assert family(2, 2).generators == (3, 7, 8)


def test_family_4_3():
    h = family(4, 3)
    assert h.generators == (5, 16, 17, 18, 19)
    assert h.conductor == 15


def test_family_membership_shape():
    for a in range(2, 7):
        for b in range(1, 7):
            h = family(a, b)
            step = a + 1
            expected = {i * step for i in range(b)}
            assert set(h.members_below_conductor) == expected
            assert h.conductor == b * step


def test_family_parameter_bounds():
    with pytest.raises(ParameterError):
        family(1, 1)
    with pytest.raises(ParameterError):
        family(3, 0)
