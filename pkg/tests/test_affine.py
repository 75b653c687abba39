"""Tests for affine roots, reflections, positivity and prenilpotency."""

import random
from fractions import Fraction as Q

import pytest

from rgdcheck import (
    AffineRoot,
    HalfIntegerLevel,
    NotPrenilpotent,
    affine_reflect,
    affine_root,
    build_root_system,
    chamber_oracle,
    is_positive,
    is_prenilpotent,
    open_interval,
    prenilpotent_oracle,
    reflect_point,
    simple_affine_roots,
)
from rgdcheck.affine import half_space_contains, translation_parts
from rgdcheck.roots import vec


def test_levels_live_on_the_half_integer_lattice():
    a = vec(1, -1)
    assert affine_root(a, Q(1, 2)).level == Q(1, 2)
    assert affine_root(a, -3).level == Q(-3)
    with pytest.raises(HalfIntegerLevel):
        affine_root(a, Q(1, 3))


def test_negation_flips_gradient_and_level():
    alpha = affine_root(vec(1, 0), 2)
    assert -alpha == affine_root(vec(-1, 0), -2)
    assert -(-alpha) == alpha


def test_half_space_membership():
    alpha = affine_root(vec(1, 0), 1)  # points v with v_1 >= -1
    assert half_space_contains(alpha, vec(0, 5))
    assert half_space_contains(alpha, vec(-1, 0))
    assert not half_space_contains(alpha, vec(-1, 0), strict=True)
    assert not half_space_contains(alpha, vec(Q(-3, 2), 0))


def test_point_reflection_fixes_the_wall():
    alpha = affine_root(vec(1, 0), -1)  # wall v_1 = 1
    assert reflect_point(alpha, vec(1, 7)) == vec(1, 7)
    assert reflect_point(alpha, vec(0, 0)) == vec(2, 0)
    assert reflect_point(alpha, vec(3, -2)) == vec(-1, -2)


def test_affine_reflection_hand_example():
    # reflecting alpha_(a, 0) in the wall of alpha_(a, 1) gives alpha_(-a, -2)
    a2 = build_root_system("A", 2)
    a = a2.simple[0]
    alpha = affine_root(a, 1)
    beta = affine_root(a, 0)
    assert affine_reflect(a2, alpha, beta) == affine_root(vec(-1, 1, 0), -2)
    # the linear reflection of a distinct simple root keeps its level
    b = a2.simple[1]
    assert affine_reflect(a2, affine_root(a, 0), affine_root(b, 5)) == affine_root(
        vec(1, 0, -1), 5
    )


def test_affine_reflection_matches_point_geometry():
    rng = random.Random(3)
    for kind, rank in (("A", 2), ("BC", 2)):
        system = build_root_system(kind, rank)
        dim = len(system.roots[0])
        affs = [
            affine_root(a, l) for a in system.roots for l in (-2, -1, 0, 1, 2)
        ]
        for _ in range(150):
            alpha = rng.choice(affs)
            beta = rng.choice(affs)
            v = tuple(Q(rng.randint(-8, 8), rng.randint(1, 3)) for _ in range(dim))
            rbeta = affine_reflect(system, alpha, beta)
            rv = reflect_point(alpha, v)
            assert half_space_contains(beta, v) == half_space_contains(rbeta, rv)


def test_positivity_frozen_examples():
    bc1 = build_root_system("BC", 1)
    e = vec(1)
    assert is_positive(bc1, affine_root(e, 0))
    assert is_positive(bc1, affine_root(e, 3))
    assert not is_positive(bc1, affine_root(e, -1))
    assert is_positive(bc1, affine_root(vec(-1), 1))
    assert not is_positive(bc1, affine_root(vec(-1), 0))
    with pytest.raises(HalfIntegerLevel):
        is_positive(bc1, affine_root(e, Q(1, 2)))


def test_positivity_agrees_with_chamber_oracle():
    for kind, rank in (("A", 1), ("A", 2), ("BC", 1), ("BC", 2)):
        system = build_root_system(kind, rank)
        for a in system.roots:
            for l in range(-3, 4):
                alpha = affine_root(a, l)
                assert is_positive(system, alpha) == chamber_oracle(system, alpha)


def test_exactly_one_of_alpha_and_minus_alpha_is_positive():
    bc2 = build_root_system("BC", 2)
    for a in bc2.roots:
        for l in range(-3, 4):
            alpha = affine_root(a, l)
            assert is_positive(bc2, alpha) != is_positive(bc2, -alpha)


def test_prenilpotency_signs():
    e = vec(1)
    assert is_prenilpotent(affine_root(e, 0), affine_root(e, 1))
    assert is_prenilpotent(affine_root(e, 0), affine_root(vec(2), -1))
    assert not is_prenilpotent(affine_root(e, 0), affine_root(vec(-1), 0))
    assert not is_prenilpotent(affine_root(e, 2), affine_root(vec(-2), 5))
    a2 = build_root_system("A", 2)
    a, b = a2.simple
    assert is_prenilpotent(affine_root(a, 0), affine_root(b, 0))


def test_prenilpotency_matches_geometric_oracle():
    for kind, rank in (("A", 1), ("A", 2), ("BC", 1), ("BC", 2)):
        system = build_root_system(kind, rank)
        affs = [affine_root(a, l) for a in system.roots for l in (-2, 0, 1)]
        for alpha in affs:
            for beta in affs:
                assert is_prenilpotent(alpha, beta) == prenilpotent_oracle(
                    alpha, beta
                ), (alpha, beta)


def test_open_interval_same_gradient():
    # two parallel walls of a multipliable root meet only in the doubled root
    bc1 = build_root_system("BC", 1)
    e = vec(1)
    got = open_interval(bc1, affine_root(e, 0), affine_root(e, 1))
    assert got == [affine_root(vec(2), 1)]
    # non multipliable gradients give an empty interval
    a2 = build_root_system("A", 2)
    a = a2.simple[0]
    assert open_interval(a2, affine_root(a, 0), affine_root(a, 2)) == []


def test_open_interval_distinct_gradients():
    a2 = build_root_system("A", 2)
    a, b = a2.simple
    got = open_interval(a2, affine_root(a, 1), affine_root(b, -1))
    assert got == [affine_root(vec(1, 0, -1), 0)]
    bc2 = build_root_system("BC", 2)
    s1, s2 = bc2.simple  # e1 - e2 and e2
    got2 = open_interval(bc2, affine_root(s1, 0), affine_root(s2, 0))
    # p*s1 + q*s2 stays a root for (1,1), (1,2), (2,2) = e1-e2+..., all level 0
    assert affine_root(vec(1, 0), 0) in got2
    assert affine_root(vec(1, 1), 0) in got2
    assert affine_root(vec(2, 0), 0) in got2
    assert len(got2) == 3


def test_open_interval_levels_follow_the_endpoints():
    bc2 = build_root_system("BC", 2)
    s1, s2 = bc2.simple
    got = open_interval(bc2, affine_root(s1, 2), affine_root(s2, -1))
    # p + q-weighted levels: (1,1) -> 1, (1,2) -> 0, (2,2) -> 2
    assert affine_root(vec(1, 0), 1) in got
    assert affine_root(vec(1, 1), 0) in got
    assert affine_root(vec(2, 0), 2) in got


def test_open_interval_scan_bound_is_stable():
    # rescanning with a larger coefficient bound finds no extra members
    from rgdcheck.roots import add, is_zero, scale

    bc2 = build_root_system("BC", 2)
    affs = [affine_root(a, l) for a in bc2.roots for l in (-1, 0, 1)]
    for alpha in affs:
        for beta in affs:
            if not is_prenilpotent(alpha, beta):
                continue
            base = set(open_interval(bc2, alpha, beta))
            wide = set()
            for p in range(1, 11):
                for q in range(1, 11):
                    c = add(scale(p, alpha.root), scale(q, beta.root))
                    if is_zero(c) or not bc2.contains(c):
                        continue
                    wide.add(AffineRoot(c, p * alpha.level + q * beta.level))
            assert base == wide, (alpha, beta)


def test_open_interval_rejects_non_prenilpotent_pairs():
    bc1 = build_root_system("BC", 1)
    with pytest.raises(NotPrenilpotent):
        open_interval(bc1, affine_root(vec(1), 0), affine_root(vec(-1), 1))


def test_interval_members_contain_the_intersection():
    rng = random.Random(17)
    bc2 = build_root_system("BC", 2)
    affs = [affine_root(a, l) for a in bc2.roots for l in (-1, 0, 1)]
    checked = 0
    for alpha in affs:
        for beta in affs:
            if alpha == beta or not is_prenilpotent(alpha, beta):
                continue
            members = open_interval(bc2, alpha, beta)
            if not members:
                continue
            checked += 1
            for _ in range(12):
                v = (Q(rng.randint(-24, 24), 4), Q(rng.randint(-24, 24), 4))
                if half_space_contains(alpha, v) and half_space_contains(beta, v):
                    assert all(half_space_contains(g, v) for g in members)
    assert checked > 50


def test_simple_affine_roots_shape():
    a2 = build_root_system("A", 2)
    simples = simple_affine_roots(a2)
    assert simples == [
        affine_root(vec(1, -1, 0), 0),
        affine_root(vec(0, 1, -1), 0),
        affine_root(vec(-1, 0, 1), 1),
    ]
    for alpha in simples:
        assert is_positive(a2, alpha)
    bc1 = build_root_system("BC", 1)
    assert simple_affine_roots(bc1) == [
        affine_root(vec(1), 0),
        affine_root(vec(-2), 1),
    ]


def test_translation_parts():
    bc1 = build_root_system("BC", 1)
    alpha = affine_root(vec(2), -3)
    linear, level = translation_parts(bc1, alpha)
    assert linear == affine_root(vec(2), 0)
    assert level == Q(-3)


def test_str_format():
    alpha = affine_root(vec(1, -1), Q(1, 2))
    s = str(alpha)
    assert "1/2" in s and "-1" in s
