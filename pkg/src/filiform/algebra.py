"""Parameter vectors and structure tensors of filiform Leibniz algebras.

An (n+1)-dimensional algebra with basis e_0..e_n is stored as a dense cube of
structure constants ``gamma[i][j][k]`` with ``[e_i, e_j] = sum_k gamma[i][j][k] e_k``.

First class L(alpha), alpha = (alpha_3, ..., alpha_n, theta)::

    [e_0, e_0] = e_2
    [e_i, e_0] = e_{i+1}                                   1 <= i <= n-1
    [e_0, e_1] = alpha_3 e_3 + ... + alpha_{n-1} e_{n-1} + theta e_n
    [e_j, e_1] = alpha_3 e_{j+2} + ... + alpha_{n+1-j} e_n   1 <= j <= n-2

Second class (beta_3, ..., beta_n, gamma)::

    [e_0, e_0] = e_2
    [e_i, e_0] = e_{i+1}                                   2 <= i <= n-1
    [e_0, e_1] = beta_3 e_3 + ... + beta_n e_n
    [e_1, e_1] = gamma e_n
    [e_j, e_1] = beta_3 e_{j+2} + ... + beta_{n+1-j} e_n     2 <= j <= n-2
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import linalg
from .errors import ParseError, ShapeError
from .scalarfield import ONE, ZERO, Scalar, as_scalar, format_scalar

__all__ = [
    "FirstClassParams",
    "SecondClassParams",
    "StructureTensor",
    "build_tensor_first",
    "build_tensor_second",
    "leibniz_defect",
    "lower_central_dims",
    "is_filiform",
    "params_from_tensor",
    "params_to_record",
    "record_to_params",
]


def _scalars(values) -> tuple[Scalar, ...]:
    return tuple(as_scalar(v) for v in values)


@dataclass(frozen=True)
class FirstClassParams:
    """alpha = (alpha_3, ..., alpha_n) and theta of L(alpha); dim L = n + 1."""

    n: int
    alpha: tuple[Scalar, ...]
    theta: Scalar

    def __init__(self, n: int, alpha: Sequence, theta):
        if not isinstance(n, int) or n < 4:
            raise ValueError(f"n must be an integer >= 4, got {n!r}")
        alpha = _scalars(alpha)
        if len(alpha) != n - 2:
            raise ValueError(f"alpha must have n-2 = {n - 2} entries, got {len(alpha)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "theta", as_scalar(theta))

    def a(self, i: int) -> Scalar:
        """alpha_i for 3 <= i <= n."""
        if not 3 <= i <= self.n:
            raise IndexError(f"alpha_{i} is not defined for n={self.n}")
        return self.alpha[i - 3]

    def z(self, i: int) -> Scalar:
        """Unified coordinates: z_i = alpha_i for i <= n, z_{n+1} = theta."""
        if i == self.n + 1:
            return self.theta
        return self.a(i)

    @property
    def coords(self) -> tuple[Scalar, ...]:
        """(alpha_3, ..., alpha_n, theta)."""
        return self.alpha + (self.theta,)

    @classmethod
    def from_coords(cls, n: int, coords: Sequence) -> "FirstClassParams":
        coords = list(coords)
        if len(coords) != n - 1:
            raise ValueError(f"expected {n - 1} coordinates, got {len(coords)}")
        return cls(n, coords[:-1], coords[-1])

    def __str__(self):
        body = ", ".join(format_scalar(a) for a in self.alpha)
        return f"L(n={self.n}; alpha=({body}); theta={format_scalar(self.theta)})"


@dataclass(frozen=True)
class SecondClassParams:
    """beta = (beta_3, ..., beta_n) and gamma of a second-class algebra."""

    n: int
    beta: tuple[Scalar, ...]
    gamma: Scalar

    def __init__(self, n: int, beta: Sequence, gamma):
        if not isinstance(n, int) or n < 4:
            raise ValueError(f"n must be an integer >= 4, got {n!r}")
        beta = _scalars(beta)
        if len(beta) != n - 2:
            raise ValueError(f"beta must have n-2 = {n - 2} entries, got {len(beta)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gamma", as_scalar(gamma))

    def b(self, i: int) -> Scalar:
        return self.beta[i - 3]


class StructureTensor:
    """Dense structure constants of a ``dim``-dimensional algebra."""

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries=None):
        self.dim = dim
        if entries is None:
            entries = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        else:
            entries = [[[as_scalar(v) for v in row] for row in plane] for plane in entries]
            if len(entries) != dim or any(
                len(plane) != dim or any(len(row) != dim for row in plane) for plane in entries
            ):
                raise ValueError(f"entries must be a {dim}x{dim}x{dim} array")
        self.entries = entries

    @classmethod
    def zeros(cls, dim: int) -> "StructureTensor":
        return cls(dim)

    def __getitem__(self, ijk) -> Scalar:
        i, j, k = ijk
        return self.entries[i][j][k]

    def __setitem__(self, ijk, value) -> None:
        i, j, k = ijk
        self.entries[i][j][k] = as_scalar(value)

    def copy(self) -> "StructureTensor":
        out = StructureTensor(self.dim)
        out.entries = [[list(row) for row in plane] for plane in self.entries]
        return out

    def with_entry(self, i: int, j: int, k: int, value) -> "StructureTensor":
        out = self.copy()
        out[i, j, k] = value
        return out

    def nonzero(self) -> Iterator[tuple[int, int, int, Scalar]]:
        """Nonzero entries in lexicographic (i, j, k) order."""
        for i, plane in enumerate(self.entries):
            for j, row in enumerate(plane):
                for k, v in enumerate(row):
                    if v:
                        yield i, j, k, v

    def product(self, u: Sequence, v: Sequence) -> list:
        """Coordinates of [u, v] for coordinate vectors u, v."""
        d = self.dim
        out = [ZERO] * d
        for i in range(d):
            ui = u[i]
            if not ui:
                continue
            plane = self.entries[i]
            for j in range(d):
                vj = v[j]
                if not vj:
                    continue
                c = ui * vj
                row = plane[j]
                for k in range(d):
                    if row[k]:
                        out[k] = out[k] + c * row[k]
        return out

    def __eq__(self, other):
        if not isinstance(other, StructureTensor):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __repr__(self):
        return f"StructureTensor(dim={self.dim}, nonzero={sum(1 for _ in self.nonzero())})"


def build_tensor_first(p: FirstClassParams) -> StructureTensor:
    n = p.n
    t = StructureTensor(n + 1)
    e = t.entries
    e[0][0][2] = ONE
    for i in range(1, n):
        e[i][0][i + 1] = ONE
    for s in range(3, n):
        e[0][1][s] = p.a(s)
    e[0][1][n] = p.theta
    for j in range(1, n - 1):
        for s in range(3, n + 2 - j):
            e[j][1][j + s - 1] = p.a(s)
    return t


def build_tensor_second(p: SecondClassParams) -> StructureTensor:
    n = p.n
    t = StructureTensor(n + 1)
    e = t.entries
    e[0][0][2] = ONE
    for i in range(2, n):
        e[i][0][i + 1] = ONE
    for s in range(3, n + 1):
        e[0][1][s] = p.b(s)
    e[1][1][n] = p.gamma
    for j in range(2, n - 1):
        for s in range(3, n + 2 - j):
            e[j][1][j + s - 1] = p.b(s)
    return t


def _nonzero_pairs(t: StructureTensor) -> dict[tuple[int, int], list[tuple[int, Scalar]]]:
    table: dict[tuple[int, int], list[tuple[int, Scalar]]] = {}
    for i, j, k, v in t.nonzero():
        table.setdefault((i, j), []).append((k, v))
    return table


def leibniz_defect(t: StructureTensor) -> list[tuple[int, int, int, int, Scalar]]:
    """All (i, j, k, m, value) where the Leibniz identity fails.

    ``value`` is the e_m coordinate of [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j].
    Every quadruple is examined; the result is sorted.
    """
    d = t.dim
    pairs = _nonzero_pairs(t)
    acc: dict[tuple[int, int, int, int], Scalar] = {}

    def add(key, value):
        acc[key] = acc.get(key, ZERO) + value

    for (j, k), jk in pairs.items():
        for l, g_jkl in jk:
            for i in range(d):
                for m, g_ilm in pairs.get((i, l), ()):
                    add((i, j, k, m), g_jkl * g_ilm)
    for (i, j), ij in pairs.items():
        for l, g_ijl in ij:
            for k in range(d):
                for m, g_lkm in pairs.get((l, k), ()):
                    add((i, j, k, m), -(g_ijl * g_lkm))
                    # the third term is the second with j and k exchanged
                    add((i, k, j, m), g_ijl * g_lkm)
    return sorted((key + (v,) for key, v in acc.items() if v), key=lambda r: r[:4])


def _span_basis(vectors):
    reduced, _ = linalg.rref(vectors)
    return reduced


def lower_central_dims(t: StructureTensor) -> list[int]:
    """dim L^1, dim L^2, ... with L^{k+1} = [L^k, L].

    Ends with 0 when the series reaches zero; otherwise stops at the first
    repeated dimension without appending it again.
    """
    d = t.dim
    basis = [[ONE if i == j else ZERO for j in range(d)] for i in range(d)]
    units = [row[:] for row in basis]
    dims = [d]
    while True:
        products = [t.product(x, e) for x in basis for e in units]
        basis = _span_basis(products)
        k = len(basis)
        if k == 0:
            dims.append(0)
            return dims
        if k == dims[-1]:
            return dims
        dims.append(k)


def is_filiform(t: StructureTensor) -> bool:
    """dim L^i = dim L - i for 2 <= i <= dim L, with L^1 = L."""
    d = t.dim
    return lower_central_dims(t) == [d] + list(range(d - 2, -1, -1))


def params_from_tensor(t: StructureTensor) -> FirstClassParams:
    """Inverse of :func:`build_tensor_first`; raises ShapeError on any mismatch."""
    n = t.dim - 1
    if n < 4:
        raise ShapeError(f"first-class tensors have dimension >= 5, got {t.dim}")
    alpha = [t[0, 1, s] for s in range(3, n)] + [t[1, 1, n]]
    p = FirstClassParams(n, alpha, t[0, 1, n])
    expected = build_tensor_first(p)
    for i in range(t.dim):
        for j in range(t.dim):
            for k in range(t.dim):
                if t.entries[i][j][k] != expected.entries[i][j][k]:
                    raise ShapeError(
                        f"not a first-class table: gamma[{i}][{j}][{k}] = "
                        f"{format_scalar(t.entries[i][j][k])}, expected "
                        f"{format_scalar(expected.entries[i][j][k])}"
                    )
    return p


# -- JSON records -------------------------------------------------------------


def params_to_record(p) -> dict:
    if isinstance(p, FirstClassParams):
        return {
            "n": p.n,
            "class": "first",
            "alpha": [format_scalar(a) for a in p.alpha],
            "theta": format_scalar(p.theta),
        }
    if isinstance(p, SecondClassParams):
        return {
            "n": p.n,
            "class": "second",
            "beta": [format_scalar(b) for b in p.beta],
            "gamma": format_scalar(p.gamma),
        }
    raise TypeError(f"not a parameter object: {p!r}")


def record_to_params(rec) -> FirstClassParams | SecondClassParams:
    """Parse an algebra record; every problem is reported as ParseError."""
    if not isinstance(rec, dict):
        raise ParseError("algebra record must be a JSON object")
    n = rec.get("n")
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParseError(f"'n' must be an integer, got {n!r}")
    kind = rec.get("class", "first")
    keys = {"first": ("alpha", "theta"), "second": ("beta", "gamma")}.get(kind)
    if keys is None:
        raise ParseError(f"'class' must be 'first' or 'second', got {kind!r}")
    vec_key, last_key = keys
    vec, last = rec.get(vec_key), rec.get(last_key)
    if not isinstance(vec, list) or not all(isinstance(v, str) for v in vec):
        raise ParseError(f"'{vec_key}' must be a list of scalar strings")
    if not isinstance(last, str):
        raise ParseError(f"'{last_key}' must be a scalar string")
    values = [as_scalar(v) for v in vec]
    try:
        if kind == "first":
            return FirstClassParams(n, values, as_scalar(last))
        return SecondClassParams(n, values, as_scalar(last))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
