import random

import pytest

from filiform.action import IDENTITY, GroupElement, apply_rho
from filiform.algebra import build_tensor_first, build_tensor_second, is_filiform, leibniz_defect
from filiform.algebra import SecondClassParams
from filiform.errors import OracleError, ShapeError
from filiform.oracle import (
    adapted_basis,
    adapted_change_tensor,
    orbit_samples,
    random_group_element,
    random_params,
    random_stratum_member,
    theorem2_direct,
)
from filiform.scalarfield import SamplerConfig, make_rng, random_scalar
from filiform.strata import Stratum, Verdict, classify_stratum, decide_isomorphic

from conftest import GAUSSIAN, first


def test_identity_change(example):
    t = build_tensor_first(example)
    new, q = adapted_change_tensor(t, IDENTITY)
    assert new == t and q == example


def test_example_change(example):
    _, q = adapted_change_tensor(build_tensor_first(example), GroupElement(1, 1))
    assert q == first(4, 2, 0, 1)
    _, q = adapted_change_tensor(build_tensor_first(example), GroupElement(1, 1), [5, 7, 1])
    assert q == first(4, 2, 0, 1)


def test_adapted_basis_shape(example):
    g = GroupElement(3, -1)
    basis = adapted_basis(build_tensor_first(example), g, [1, 2, 3])
    assert basis[0][:2] == [3, -1] and basis[1][:2] == [0, 2]
    # e'_{i+1} for i >= 1 has no e_0, e_1 component
    assert all(v[0] == 0 and v[1] == 0 for v in basis[2:])


@pytest.mark.parametrize("n", range(4, 9))
def test_oracle_matches_action(rng, n):
    for config in (None, GAUSSIAN):
        kw = {} if config is None else {"config": config}
        for _ in range(3):
            p, g = random_params(rng, n, **kw), random_group_element(rng, **kw)
            c = [random_scalar(rng, **kw) for _ in range(n - 1)]
            new, q = adapted_change_tensor(build_tensor_first(p), g, c)
            assert q == apply_rho(g, p)
            assert leibniz_defect(new) == [] and is_filiform(new)


def test_oracle_input_checks(example):
    with pytest.raises(ValueError):
        adapted_change_tensor(build_tensor_first(example), IDENTITY, [1])
    with pytest.raises(ShapeError):
        adapted_change_tensor(build_tensor_second(SecondClassParams(4, [1, 1], 2)), IDENTITY)


def test_oracle_reports_impossible_completion(example):
    # a table that is first-class in shape but with [e_1, e_0] removed cannot be completed
    t = build_tensor_first(example)
    with pytest.raises((OracleError, ShapeError)):
        adapted_change_tensor(t.with_entry(1, 0, 2, 0), GroupElement(1, 1))


def test_direct_sums_identity(rng):
    p = random_params(rng, 9)
    assert theorem2_direct(IDENTITY, p) == p


def test_orbit_samples(example):
    assert orbit_samples(example, 0, make_rng(1)) == []
    a = orbit_samples(example, 5, make_rng(9))
    assert a == orbit_samples(example, 5, make_rng(9))
    for g, q in a:
        assert q == apply_rho(g, example)
        assert decide_isomorphic(example, q).verdict is Verdict.YES


def test_group_sampler_validity():
    rng = random.Random(3)
    for _ in range(300):
        g = random_group_element(rng)
        assert g.A and g.A + g.B


@pytest.mark.parametrize("stratum", list(Stratum))
def test_stratum_sampler(rng, stratum):
    for n in (6, 8):
        assert classify_stratum(random_stratum_member(rng, n, stratum)) is stratum


def test_stratum_sampler_skips_unsplit_points():
    # small bounds make alpha_4 = -2 alpha_3^2 (unsplit U'_1 at n=5) frequent
    rng = make_rng(0)
    cfg = SamplerConfig(max_abs_numerator=2, max_denominator=1)
    for _ in range(300):
        assert classify_stratum(random_stratum_member(rng, 5, Stratum.U, cfg)) is Stratum.U
