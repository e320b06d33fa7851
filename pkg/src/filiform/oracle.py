"""Independent cross-checks for the parameter action.

* :func:`adapted_change_tensor` performs an actual change of basis on the
  structure tensor and reads the new parameters off the transformed table.
  It never calls the phi/bracket machinery.
* :func:`theorem2_direct` evaluates the raw nested sums in A and B, feeding
  the already computed alpha'_k back in, with its own chain enumeration.
* :func:`orbit_samples` draws random points of an orbit.
"""

from __future__ import annotations

import random
from typing import Sequence

from . import linalg
from .action import GroupElement, apply_rho
from .algebra import FirstClassParams, StructureTensor, params_from_tensor
from .errors import InvalidGroupElement, OracleError, ShapeError, Unsupported
from .scalarfield import ONE, ZERO, SamplerConfig, Scalar, as_scalar, binom, random_scalar
from .strata import Stratum, classify_stratum

__all__ = [
    "adapted_change_tensor",
    "adapted_basis",
    "theorem2_direct",
    "random_group_element",
    "random_params",
    "random_stratum_member",
    "orbit_samples",
]


def _unit(d, i):
    v = [ZERO] * d
    v[i] = ONE
    return v


def adapted_basis(t: StructureTensor, g: GroupElement, higher: Sequence | None = None) -> list[list[Scalar]]:
    """New basis vectors (old coordinates) for the change driven by g.

    e0' = A e0 + B e1 + sum_{k>=2} c_k e_k,
    e1' = (A+B) e1 + sum_{k>=2} d_k e_k  with d chosen so that [e1', e0'] = [e0', e0'],
    e'_{i+1} = [e'_i, e0'].
    Free unknowns of the d-system are set to zero.
    """
    d = t.dim
    n = d - 1
    c = [ZERO] * (n - 1) if higher is None else [as_scalar(v) for v in higher]
    if len(c) != n - 1:
        raise ValueError(f"expected {n - 1} higher coefficients c_2..c_n, got {len(c)}")
    e0 = [g.A, g.B] + c

    def right(v):
        return t.product(v, e0)

    # R(sum d_k e_k) = R(e0') - (A+B) R(e1)
    cols = [right(_unit(d, k)) for k in range(2, d)]
    matrix = [[col[r] for col in cols] for r in range(d)]
    lead = right([ZERO, g.A + g.B] + [ZERO] * (n - 1))
    rhs = [a - b for a, b in zip(right(e0), lead)]
    sol = linalg.solve(matrix, rhs, ZERO)
    if sol is None:
        raise OracleError("no completion e1' with [e1', e0'] = [e0', e0']")
    e1 = [ZERO, g.A + g.B] + sol
    basis = [e0, e1]
    for _ in range(1, n):
        basis.append(right(basis[-1]))
    if right(e1) != right(e0):
        raise OracleError("completion failed: [e1', e0'] != [e0', e0']")
    return basis


def adapted_change_tensor(
    t: StructureTensor, g: GroupElement, higher: Sequence | None = None
) -> tuple[StructureTensor, FirstClassParams]:
    """Re-express ``t`` in the adapted basis of g; return the table and its parameters.

    Raises OracleError if the transition matrix is singular or the new table
    is not of first-class shape; on valid input either would mean the
    two-parameter description of the action is wrong.
    """
    params_from_tensor(t)  # shape precondition
    d = t.dim
    basis = adapted_basis(t, g, higher)
    transition = [[basis[col][row] for col in range(d)] for row in range(d)]
    inv = linalg.inverse(transition, ZERO, ONE)
    if inv is None:
        raise OracleError("transition matrix is singular")
    new = StructureTensor(d)
    for i in range(d):
        for j in range(d):
            coords = linalg.matvec(inv, t.product(basis[i], basis[j]), ZERO)
            new.entries[i][j] = coords
    try:
        params = params_from_tensor(new)
    except ShapeError as exc:
        raise OracleError(f"transformed table is not first-class: {exc}") from exc
    return new, params


# -- raw nested sums in (A, B) -------------------------------------------------------------


def _raw_chain_sum(alpha, t: int, k: int, j: int) -> Scalar:
    """Nested sums with indices i_{j-1} >= ... >= i_1 >= k + j, outermost first."""
    if j == 1:
        return alpha(t + 2 - k)
    lo = k + j
    total = ZERO

    def descend(level, upper, prev_index, acc):
        # level counts down from j-1; prev_index is i_{level+1} (or t at the top)
        nonlocal total
        if level == 0:
            total = total + acc * alpha(prev_index + 3 - lo)
            return
        for i in range(lo, upper + 1):
            descend(level - 1, i, i, acc * alpha(prev_index + 3 - i))

    descend(j - 1, t, t, ONE)
    return total


def _raw_bracket(A, B, alpha, t: int, k: int) -> Scalar:
    total = ZERO
    for j in range(1, k):
        s = _raw_chain_sum(alpha, t, k, j)
        if s:
            total = total + binom(k - 1, k - 1 - j) * A.pow_int(k - 1 - j) * B.pow_int(j) * s
    return total


def theorem2_direct(g: GroupElement, p: FirstClassParams) -> FirstClassParams:
    """alpha' from the raw isomorphism conditions, computed for increasing t."""
    A, B, n = g.A, g.B, p.n
    alpha = p.a
    new: dict[int, Scalar] = {3: (A + B) / (A * A) * p.a(3)}
    for t in range(4, n + 1):
        s = ZERO
        for k in range(3, t):
            s = s + _raw_bracket(A, B, alpha, t, k) * new[k]
        new[t] = ((A + B) * p.a(t) - s) / A.pow_int(t - 1)
    s = ZERO
    for k in range(3, n):
        s = s + _raw_bracket(A, B, alpha, n, k) * new[k]
    theta = (A * p.theta + B * p.a(n) - s) / A.pow_int(n - 1)
    return FirstClassParams(n, [new[t] for t in range(3, n + 1)], theta)


# -- sampling ----------------------------------------------------------------------------


def random_group_element(rng: random.Random, config: SamplerConfig = SamplerConfig()) -> GroupElement:
    """Uniform-ish small (A, B) with A(A+B) != 0, by rejection."""
    nonzero = SamplerConfig(config.max_abs_numerator, config.max_denominator, config.gaussian, True)
    while True:
        A = random_scalar(rng, nonzero)
        B = random_scalar(rng, config)
        try:
            return GroupElement(A, B)
        except InvalidGroupElement:
            continue


def orbit_samples(
    p: FirstClassParams, count: int, rng: random.Random, config: SamplerConfig = SamplerConfig()
) -> list[tuple[GroupElement, FirstClassParams]]:
    out = []
    for _ in range(count):
        g = random_group_element(rng, config)
        out.append((g, apply_rho(g, p)))
    return out


def random_params(rng: random.Random, n: int, config: SamplerConfig = SamplerConfig()) -> FirstClassParams:
    return FirstClassParams.from_coords(n, [random_scalar(rng, config) for _ in range(n - 1)])


def random_stratum_member(
    rng: random.Random, n: int, stratum, config: SamplerConfig = SamplerConfig()
) -> FirstClassParams:
    """Random parameters inside ``stratum`` (rejection on the defining conditions)."""
    s = Stratum(stratum)
    min_n = {Stratum.U1PP: 6, Stratum.F1PP: 6, Stratum.U2PP: 5, Stratum.F2PP: 5}.get(s, 4)
    if n < min_n:
        raise ValueError(f"{s.label} is not available for n={n}")
    nz = SamplerConfig(config.max_abs_numerator, config.max_denominator, config.gaussian, True)

    def rand(k):
        return [random_scalar(rng, config) for _ in range(k)]

    while True:
        if s is Stratum.U:
            head = [random_scalar(rng, nz), random_scalar(rng, config)]
        elif s in (Stratum.U1PP, Stratum.F1PP):
            a3 = random_scalar(rng, nz)
            head = [a3, -2 * a3 * a3]
            if s is Stratum.F1PP:
                # make one of the two factors of the U''_1 condition vanish
                a5 = random_scalar(rng, config)
                if rng.random() < 0.5:
                    head += [5 * a3**3]
                else:
                    head += [a5, 16 * a3**4 - 6 * a3 * a5]
        elif s in (Stratum.U2PP, Stratum.F2PP):
            head = [ZERO, random_scalar(rng, nz)]
            head.append(random_scalar(rng, nz) if s is Stratum.U2PP else ZERO)
        else:
            head = [ZERO, ZERO]
        p = FirstClassParams.from_coords(n, head + rand(n - 1 - len(head)))
        try:
            if classify_stratum(p) is s:
                return p
        except Unsupported:
            # unsplit U'_1 / U'_2 at small n; draw again
            continue
