from fractions import Fraction

import pytest

from filiform.action import (
    IDENTITY,
    GroupElement,
    apply_rho,
    compose_group,
    eval_phi,
    eval_phi_theta,
    invert_group,
    lowdim_closed_form,
    phi_all,
    rho_components,
)
from filiform.errors import InvalidGroupElement
from filiform.oracle import random_group_element, random_params, theorem2_direct
from filiform.scalarfield import as_scalar, random_scalar

from conftest import GAUSSIAN, first


def test_group_element_validation():
    with pytest.raises(InvalidGroupElement):
        GroupElement(0, 1)
    with pytest.raises(InvalidGroupElement):
        GroupElement(2, -2)
    g = GroupElement.from_xy(Fraction(1, 2), 3)
    assert (g.A, g.B) == (2, 6) and (g.x, g.y) == (Fraction(1, 2), 3)


def test_group_examples():
    assert compose_group(GroupElement(2, 1), GroupElement(3, -1)) == GroupElement(6, 0)
    assert invert_group(GroupElement(1, 1)) == GroupElement(1, Fraction(-1, 2))
    assert invert_group(IDENTITY) == IDENTITY
    g = GroupElement(5, -2)
    assert compose_group(g, IDENTITY) == g
    assert compose_group(g, invert_group(g)) == IDENTITY


def test_group_is_product_in_a_plus_b(rng):
    # (A, B) -> (A, A+B) turns composition into componentwise multiplication
    for _ in range(50):
        g1, g2 = random_group_element(rng), random_group_element(rng)
        c = compose_group(g1, g2)
        assert c.A == g1.A * g2.A
        assert c.A + c.B == (g1.A + g1.B) * (g2.A + g2.B)
        assert c == compose_group(g2, g1)


def test_action_examples(example):
    assert apply_rho(IDENTITY, example) == example
    assert apply_rho(GroupElement(1, 1), example) == first(4, 2, 0, 1)
    assert apply_rho(GroupElement(2, 2), example) == first(4, 1, 0, Fraction(1, 4))
    assert lowdim_closed_form(4, GroupElement(1, 1), example) == first(4, 2, 0, 1)


def test_rho_indexing(example):
    g = GroupElement(1, 1)
    rho = rho_components(g, example)
    q = apply_rho(g, example)
    assert rho[:-1] == [q.a(i + 2) for i in range(1, 3)]
    assert rho[-1] == q.theta


def test_phi_closed_forms(rng):
    for _ in range(20):
        p5 = random_params(rng, 5)
        y = random_scalar(rng)
        z = p5.z
        assert eval_phi(3, y, p5) == (1 + y) * z(3)
        assert eval_phi(4, y, p5) == (1 + y) * (z(4) - 2 * y * z(3) ** 2)
        assert eval_phi_theta(y, p5) == z(6) + y * z(5) - 5 * y * (1 + y) * z(3) * (z(4) - y * z(3) ** 2)
        p4 = random_params(rng, 4)
        z = p4.z
        assert eval_phi_theta(y, p4) == z(5) + y * z(4) - 2 * y * (1 + y) * z(3) ** 2
    p = first(4, 1, 2, 0)
    assert eval_phi(4, 1, p) == 0


@pytest.mark.parametrize("n", range(4, 11))
def test_phi_at_zero(rng, n):
    p = random_params(rng, n)
    assert phi_all(0, p) == list(p.coords)


def test_eval_phi_range(example):
    with pytest.raises(ValueError):
        eval_phi(5, 1, example)
    with pytest.raises(ValueError):
        apply_rho(IDENTITY, example, method="fast")


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_three_evaluators_agree(rng, n):
    for config in (None, GAUSSIAN):
        kw = {} if config is None else {"config": config}
        for _ in range(25):
            g, p = random_group_element(rng, **kw), random_params(rng, n, **kw)
            expected = lowdim_closed_form(n, g, p)
            assert apply_rho(g, p) == expected
            assert apply_rho(g, p, method="naive") == expected
            assert theorem2_direct(g, p) == expected


@pytest.mark.parametrize("n", range(8, 11))
def test_raw_sums_beyond_explicit_range(rng, n):
    for _ in range(5):
        g, p = random_group_element(rng), random_params(rng, n)
        assert theorem2_direct(g, p) == apply_rho(g, p)


@pytest.mark.parametrize("n", range(4, 11))
def test_group_properties(rng, n):
    for config in (None, GAUSSIAN):
        kw = {} if config is None else {"config": config}
        for _ in range(10):
            p = random_params(rng, n, **kw)
            g1, g2 = random_group_element(rng, **kw), random_group_element(rng, **kw)
            assert apply_rho(IDENTITY, p) == p
            assert apply_rho(g2, apply_rho(g1, p)) == apply_rho(compose_group(g1, g2), p)
            assert apply_rho(invert_group(g1), apply_rho(g1, p)) == p


def test_prefactor_variant_differs(example):
    g = GroupElement(1, 1)
    wrong = apply_rho(g, example, prefactor=True)
    assert wrong.alpha == apply_rho(g, example).alpha
    assert wrong.theta != lowdim_closed_form(4, g, example).theta


def test_lowdim_rejects_other_n():
    with pytest.raises(ValueError):
        lowdim_closed_form(8, IDENTITY, first(8, *[0] * 7))
    with pytest.raises(ValueError):
        lowdim_closed_form(5, IDENTITY, first(4, 1, 2, 3))


def test_gaussian_inputs_stay_exact():
    p = first(4, "1+1i", "2", "-1/3i")
    g = GroupElement(as_scalar("1-1i"), 2)
    q = apply_rho(g, p)
    assert q == lowdim_closed_form(4, g, p)
    assert apply_rho(invert_group(g), q) == p
