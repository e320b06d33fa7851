"""Stratification of first-class parameters, invariants and isomorphism decision.

Strata (conditions on alpha)::

    U      alpha_3 (alpha_4 + 2 alpha_3^2) != 0
    U'_1   alpha_3 != 0, alpha_4 + 2 alpha_3^2 = 0
             U''_1: (alpha_5 - 5 alpha_3^3)(alpha_6 + 6 alpha_3 alpha_5 - 16 alpha_3^4) != 0
             F''_1: the rest of U'_1
    U'_2   alpha_3 = 0, alpha_4 != 0
             U''_2: alpha_5 != 0;  F''_2: alpha_5 = 0
    F'     alpha_3 = alpha_4 = 0

On U, U''_1 and U''_2 a rational group element moves every algebra to a
normal form; the free coordinates of that normal form are complete
isomorphism invariants.  The remaining strata (F', F''_1, F''_2) and the
sub-splitting of U'_1 for n < 6 / U'_2 for n < 5 are reported as
:class:`~filiform.errors.Unsupported`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .action import GroupElement, apply_rho, compose_group, invert_group
from .algebra import FirstClassParams
from .errors import Unsupported
from .scalarfield import Scalar, as_scalar, format_scalar

__all__ = [
    "Stratum",
    "SUPPORTED",
    "InvariantVector",
    "Verdict",
    "Decision",
    "classify_stratum",
    "canonical_element",
    "invariant_vector",
    "lowdim_invariant_lists",
    "canonicalize",
    "decide_isomorphic",
    "realize_from_invariants",
]


class Stratum(str, enum.Enum):
    U = "U"
    U1PP = "U1pp"
    F1PP = "F1pp"
    U2PP = "U2pp"
    F2PP = "F2pp"
    FPRIME = "Fprime"

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    Stratum.U: "U",
    Stratum.U1PP: "U''_1",
    Stratum.F1PP: "F''_1",
    Stratum.U2PP: "U''_2",
    Stratum.F2PP: "F''_2",
    Stratum.FPRIME: "F'",
}

SUPPORTED = frozenset({Stratum.U, Stratum.U1PP, Stratum.U2PP})

# index of the first invariant component rho_i on each stratum
_FIRST_INDEX = {Stratum.U: 3, Stratum.U1PP: 4, Stratum.U2PP: 4}
_MIN_N = {Stratum.U: 4, Stratum.U1PP: 6, Stratum.U2PP: 5}

_RESIDUAL_REASON = (
    "no isomorphism criterion on the closed stratum {label}; "
    "only U, U''_1 and U''_2 are covered"
)


def classify_stratum(p: FirstClassParams) -> Stratum:
    a3, a4 = p.a(3), p.a(4)
    if a3 and a4 + 2 * a3 * a3:
        return Stratum.U
    if a3:
        if p.n < 6:
            raise Unsupported(
                f"U'_1 is split into U''_1/F''_1 only for n >= 6 (n={p.n})", stratum="U1p"
            )
        a5, a6 = p.a(5), p.a(6)
        if (a5 - 5 * a3**3) * (a6 + 6 * a3 * a5 - 16 * a3**4):
            return Stratum.U1PP
        return Stratum.F1PP
    if a4:
        if p.n < 5:
            raise Unsupported(
                f"U'_2 is split into U''_2/F''_2 only for n >= 5 (n={p.n})", stratum="U2p"
            )
        return Stratum.U2PP if p.a(5) else Stratum.F2PP
    return Stratum.FPRIME


def _require_supported(s: Stratum) -> None:
    if s not in SUPPORTED:
        raise Unsupported(_RESIDUAL_REASON.format(label=s.label), stratum=s.value)


def canonical_element(p: FirstClassParams, s: Stratum | None = None) -> GroupElement:
    """The group element taking p to its normal form on stratum s."""
    actual = classify_stratum(p)
    if s is None:
        s = actual
    s = Stratum(s)
    _require_supported(s)
    if actual is not s:
        raise ValueError(f"parameters lie in {actual.label}, not in {s.label}")
    a3, a4 = p.a(3), p.a(4)
    if s is Stratum.U:
        c = a4 + 2 * a3**2
        return GroupElement(c / (2 * a3), a4 * c / (4 * a3**3))
    if s is Stratum.U1PP:
        a5, a6 = p.a(5), p.a(6)
        num = 5 * a3**3 - a5
        x = num / (a6 + 6 * a3 * a5 - 16 * a3**4)
        y = (a6 + 7 * a3 * a5 - 21 * a3**4) / (a3 * num)
        return GroupElement.from_xy(x, y)
    a5 = p.a(5)
    return GroupElement.from_xy(a4 / a5, (a5**2 - a4**3) / a4**3)


@dataclass(frozen=True)
class InvariantVector:
    """Invariants rho_i, i = first_index .. n-1, of an algebra on a stratum."""

    stratum: Stratum
    n: int
    components: tuple[Scalar, ...]

    @property
    def first_index(self) -> int:
        return _FIRST_INDEX[self.stratum]

    @property
    def indices(self) -> list[int]:
        return list(range(self.first_index, self.n))

    def key(self) -> tuple:
        """Byte-stable catalog key."""
        return (self.n, self.stratum.value, tuple(format_scalar(c) for c in self.components))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "stratum": self.stratum.value,
            "indices": self.indices,
            "components": [format_scalar(c) for c in self.components],
        }


def invariant_vector(p: FirstClassParams) -> InvariantVector:
    s = classify_stratum(p)
    _require_supported(s)
    image = apply_rho(canonical_element(p, s), p).coords  # rho_1 .. rho_{n-1}
    first = _FIRST_INDEX[s]
    return InvariantVector(s, p.n, tuple(image[first - 1 :]))


def canonicalize(p: FirstClassParams) -> FirstClassParams:
    return apply_rho(canonical_element(p), p)


# -- explicit invariant lists for small n --------------------------------------------


def _list_U(n, a, th):
    X = 2 * a[3] / (a[4] + 2 * a[3] ** 2)
    if n == 4:
        return [X**2 * (th - a[4])]
    P5 = (a[5] + 5 * a[3] * a[4] + 5 * a[3] ** 3) / a[3]
    r3 = X**2 * P5 - 5
    if n == 5:
        return [r3, X**3 * (th - a[5]) + X**2 * P5 - 5]
    P6 = (a[6] + 6 * a[3] * a[5] + 21 * a[3] ** 2 * a[4] + 3 * a[4] ** 2 + 14 * a[3] ** 4) / a[3]
    Q6 = (6 * a[3] * a[5] + 42 * a[3] ** 2 * a[4] + 3 * a[4] ** 2 + 42 * a[3] ** 4) / a[3] ** 2
    r4 = X**3 * P6 - X**2 * Q6 + 28
    if n == 6:
        return [r3, r4, X**4 * (th - a[6]) + X**3 * P6 - X**2 * Q6 + 28]
    P7 = (
        a[7]
        + 7 * a[3] * a[6]
        + 28 * a[3] * a[4] ** 2
        + 28 * a[3] ** 2 * a[5]
        + 7 * a[4] * a[5]
        + 84 * a[3] ** 3 * a[4]
        + 42 * a[3] ** 5
    ) / a[3]
    Q7 = (
        7 * a[3] * a[6]
        + 56 * a[3] * a[4] ** 2
        + 56 * a[3] ** 2 * a[5]
        + 7 * a[4] * a[5]
        + 252 * a[3] ** 3 * a[4]
        + 168 * a[3] ** 5
    ) / a[3] ** 2
    R7 = 28 * (a[4] ** 2 + a[3] * a[5] + 9 * a[3] ** 2 * a[4] + 9 * a[3] ** 4) / a[3] ** 2
    tail = X**4 * P7 - X**3 * Q7 + X**2 * R7 - 126
    return [r3, r4, tail, X**5 * (th - a[7]) + tail]


def _list_U1(n, a, th, verbatim):
    D = a[6] + 6 * a[3] * a[5] - 16 * a[3] ** 4
    N = 5 * a[3] ** 3 - a[5]
    X = N / D
    W = N**3 / (a[3] * D**2)
    r4 = 7 * W - 14
    if n == 6:
        return [r4, X**4 * (th - a[6]) + r4]
    # the literal n = 7 list has -14 a3^2 a5 here; +14 is what the normal form gives
    sign = -1 if verbatim else 1
    V = (a[7] + 7 * a[3] * a[6] + sign * 14 * a[3] ** 2 * a[5] - 14 * a[3] ** 5) / a[3]
    r5 = X**4 * V - 35 * W + 42
    return [r4, r5, X**5 * (th - a[7]) + r5]


def _list_U2(n, a, th, verbatim):
    if n == 5:
        if verbatim:
            return [a[4] * (a[4] ** 2 * th - a[4] ** 3 * a[3] - 3 * a[5] ** 3) / a[5] ** 3]
        # same pattern as n = 6, 7: (a4/a5)^(n-2) (theta - alpha_n) + previous term
        return [(a[4] / a[5]) ** 3 * (th - a[5]) + 1]
    r4 = a[4] * (a[6] + 3 * a[4] ** 2) / a[5] ** 2 - 3
    if n == 6:
        return [r4, (a[4] / a[5]) ** 4 * (th - a[6]) + r4]
    r5 = a[4] ** 2 * (a[7] + 7 * a[4] * a[5]) / a[5] ** 3 - 7
    return [r4, r5, (a[4] / a[5]) ** 5 * (th - a[7]) + r5]


_LIST_RANGE = {Stratum.U: (4, 5, 6, 7), Stratum.U1PP: (6, 7), Stratum.U2PP: (5, 6, 7)}


def lowdim_invariant_lists(n: int, p: FirstClassParams, *, verbatim: bool = False) -> InvariantVector:
    """Invariants from the explicit closed-form lists (n <= 7).

    Two of the literal lists contain errors: the U''_1 list at n = 7 and the
    U''_2 list at n = 5.  They are corrected unless ``verbatim=True``; the
    verbatim forms are not invariant and are kept only for negative controls.
    """
    if p.n != n:
        raise ValueError(f"n={n} does not match parameters with n={p.n}")
    s = classify_stratum(p)
    if n not in _LIST_RANGE.get(s, ()):
        raise ValueError(f"no explicit invariant list for {s.label} at n={n}")
    a = {i: p.a(i) for i in range(3, n + 1)}
    th = p.theta
    if s is Stratum.U:
        comps = _list_U(n, a, th)
    elif s is Stratum.U1PP:
        comps = _list_U1(n, a, th, verbatim)
    else:
        comps = _list_U2(n, a, th, verbatim)
    return InvariantVector(s, n, tuple(comps))


# -- decision -------------------------------------------------------------------------


class Verdict(str, enum.Enum):
    YES = "yes"
    NO = "no"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class Decision:
    verdict: Verdict
    strata: tuple[str | None, str | None]
    witness: GroupElement | None = None
    index: int | None = None
    values: tuple[Scalar, Scalar] | None = None
    reason: str = ""

    def __bool__(self):
        return self.verdict is Verdict.YES


def _stratum_or_reason(p):
    try:
        s = classify_stratum(p)
    except Unsupported as exc:
        return None, exc.stratum, exc.reason
    if s not in SUPPORTED:
        return s, s.value, _RESIDUAL_REASON.format(label=s.label)
    return s, s.value, None


def decide_isomorphic(p1: FirstClassParams, p2: FirstClassParams) -> Decision:
    """Yes / No / Unsupported for two first-class algebras of the same dimension.

    A Yes carries a witness g with apply_rho(g, p1) == p2; a No on a common
    stratum carries the first rho index where the invariants differ.
    """
    if p1.n != p2.n:
        raise ValueError(f"dimension mismatch: n={p1.n} vs n={p2.n}")
    s1, tag1, why1 = _stratum_or_reason(p1)
    s2, tag2, why2 = _stratum_or_reason(p2)
    tags = (tag1, tag2)
    if why1 or why2:
        return Decision(Verdict.UNSUPPORTED, tags, reason=why1 or why2)
    if s1 is not s2:
        return Decision(Verdict.NO, tags, reason="different strata; strata are unions of orbits")
    v1, v2 = invariant_vector(p1), invariant_vector(p2)
    for i, c1, c2 in zip(v1.indices, v1.components, v2.components):
        if c1 != c2:
            return Decision(Verdict.NO, tags, index=i, values=(c1, c2), reason="invariants differ")
    witness = compose_group(canonical_element(p1, s1), invert_group(canonical_element(p2, s2)))
    return Decision(Verdict.YES, tags, witness=witness, reason="equal invariants")


# -- realization ------------------------------------------------------------------------


def realize_from_invariants(n: int, targets: Sequence, stratum) -> FirstClassParams:
    """An algebra on ``stratum`` whose invariant vector is ``targets``.

    The result is the normal form itself (its canonical element is the
    identity), so it is unique per isomorphism class.
    """
    s = Stratum(stratum)
    _require_supported(s)
    if n < _MIN_N[s]:
        raise ValueError(f"{s.label} invariants need n >= {_MIN_N[s]}, got n={n}")
    t = [as_scalar(v) for v in targets]
    want = n - _FIRST_INDEX[s]
    if len(t) != want:
        raise ValueError(f"{s.label} at n={n} has {want} invariants, got {len(t)}")
    if s is Stratum.U:
        head = [1, 0]
    elif s is Stratum.U1PP:
        if t[0] == -14:
            raise ValueError("the first U''_1 invariant can never equal -14")
        # alpha_6 = 21 - 7 alpha_5 makes the canonical element the identity
        head = [1, -2, (21 - t[0]) / 7]
    else:
        head = [0, 1, 1]
    coords = head + t
    return FirstClassParams.from_coords(n, coords)
