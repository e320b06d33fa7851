"""Cross-check battery run by ``filiform verify-paper``.

Each check draws its own random inputs from a seeded generator and compares
independent computations exactly.  A check "passes" when every trial agrees.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from .action import (
    IDENTITY,
    apply_rho,
    compose_group,
    invert_group,
    lowdim_closed_form,
)
from .algebra import (
    SecondClassParams,
    build_tensor_first,
    build_tensor_second,
    is_filiform,
    leibniz_defect,
)
from .oracle import (
    adapted_change_tensor,
    random_group_element,
    random_params,
    random_stratum_member,
    theorem2_direct,
)
from .scalarfield import make_rng, random_scalar
from .strata import (
    Stratum,
    Verdict,
    canonicalize,
    classify_stratum,
    decide_isomorphic,
    invariant_vector,
    lowdim_invariant_lists,
    realize_from_invariants,
)


@dataclass
class CheckResult:
    name: str
    trials: int = 0
    failures: int = 0
    seconds: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failures == 0 and self.trials > 0

    def record(self, passed: bool, note: str = "") -> None:
        self.trials += 1
        if not passed:
            self.failures += 1
            if note and len(self.notes) < 5:
                self.notes.append(note)

    def to_json(self) -> dict:
        return {
            "check": self.name,
            "ok": self.ok,
            "trials": self.trials,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
            "notes": self.notes,
        }


def _lowdim_systems(res, rng, trials, nmax):
    for n in range(4, 8):
        for _ in range(trials):
            g, p = random_group_element(rng), random_params(rng, n)
            a = apply_rho(g, p)
            res.record(a == lowdim_closed_form(n, g, p) == theorem2_direct(g, p), f"n={n} {g} {p}")


def _group_axioms(res, rng, trials, nmax):
    for n in range(4, nmax + 1):
        for _ in range(trials):
            p = random_params(rng, n)
            g1, g2 = random_group_element(rng), random_group_element(rng)
            res.record(apply_rho(IDENTITY, p) == p, f"identity n={n}")
            res.record(
                apply_rho(g2, apply_rho(g1, p)) == apply_rho(compose_group(g1, g2), p),
                f"composition n={n}",
            )
            res.record(apply_rho(invert_group(g1), apply_rho(g1, p)) == p, f"inverse n={n}")


def _bracket_methods(res, rng, trials, nmax):
    for n in range(4, nmax + 1):
        for _ in range(trials):
            g, p = random_group_element(rng), random_params(rng, n)
            res.record(apply_rho(g, p, method="dp") == apply_rho(g, p, method="naive"), f"n={n}")


def _orbit_checks(stratum: Stratum, n_from: int):
    def check(res, rng, trials, nmax):
        for n in range(n_from, nmax + 1):
            for _ in range(trials):
                p = random_stratum_member(rng, n, stratum)
                g = random_group_element(rng)
                q = apply_rho(g, p)
                res.record(classify_stratum(q) is stratum, f"stratum moved n={n}")
                res.record(invariant_vector(q) == invariant_vector(p), f"invariant moved n={n}")
                d = decide_isomorphic(p, q)
                res.record(d.verdict is Verdict.YES and apply_rho(d.witness, p) == q, f"witness n={n}")
                if stratum is Stratum.U1PP:
                    res.record(invariant_vector(p).components[0] != -14, f"-14 reached n={n}")

    return check


def _explicit_lists(res, rng, trials, nmax):
    cases = [(Stratum.U, n) for n in (4, 5, 6, 7)]
    cases += [(Stratum.U1PP, 6), (Stratum.U1PP, 7), (Stratum.U2PP, 5), (Stratum.U2PP, 6), (Stratum.U2PP, 7)]
    for s, n in cases:
        for _ in range(trials):
            p = random_stratum_member(rng, n, s)
            res.record(lowdim_invariant_lists(n, p) == invariant_vector(p), f"{s.value} n={n}")


def _realization(res, rng, trials, nmax):
    for s, n_from in ((Stratum.U, 4), (Stratum.U1PP, 6), (Stratum.U2PP, 5)):
        for n in range(n_from, nmax + 1):
            for _ in range(trials):
                k = n - (3 if s is Stratum.U else 4)
                targets = [random_scalar(rng) for _ in range(k)]
                if s is Stratum.U1PP and targets[0] == -14:
                    continue
                p = realize_from_invariants(n, targets, s)
                res.record(list(invariant_vector(p).components) == targets, f"{s.value} n={n}")


def _canonical_forms(res, rng, trials, nmax):
    for n in range(4, nmax + 1):
        for _ in range(trials):
            p = random_stratum_member(rng, n, Stratum.U)
            c = canonicalize(p)
            g = random_group_element(rng)
            res.record(
                c.a(3) == 1 and c.a(4) == 0 and canonicalize(c) == c and canonicalize(apply_rho(g, p)) == c,
                f"n={n}",
            )


def _tensor_oracle(res, rng, trials, nmax):
    for n in range(4, min(nmax, 8) + 1):
        for _ in range(max(1, trials // 4)):
            p, g = random_params(rng, n), random_group_element(rng)
            higher = [random_scalar(rng) for _ in range(n - 1)]
            new, q = adapted_change_tensor(build_tensor_first(p), g, higher)
            res.record(q == apply_rho(g, p) and not leibniz_defect(new), f"n={n} {g}")


def _well_formedness(res, rng, trials, nmax):
    for n in range(4, nmax + 1):
        for _ in range(max(1, trials // 4)):
            t1 = build_tensor_first(random_params(rng, n))
            second = SecondClassParams(n, [random_scalar(rng) for _ in range(n - 2)], random_scalar(rng))
            t2 = build_tensor_second(second)
            res.record(not leibniz_defect(t1) and is_filiform(t1), f"first n={n}")
            res.record(not leibniz_defect(t2) and is_filiform(t2), f"second n={n}")


def _negative_controls(res, rng, trials, nmax):
    # each control must be *refuted*: a single disagreement suffices
    def refuted(make):
        return any(make() for _ in range(trials))

    def prefactor():
        g, p = random_group_element(rng), random_params(rng, 4)
        return apply_rho(g, p, prefactor=True) != lowdim_closed_form(4, g, p)

    def verbatim(s, n):
        def run():
            p = random_stratum_member(rng, n, s)
            return lowdim_invariant_lists(n, p, verbatim=True) != invariant_vector(p)

        return run

    res.record(refuted(prefactor), "prefactor variant of phi_{n+1} was not refuted")
    res.record(refuted(verbatim(Stratum.U1PP, 7)), "verbatim U''_1 n=7 list was not refuted")
    res.record(refuted(verbatim(Stratum.U2PP, 5)), "verbatim U''_2 n=5 list was not refuted")


CHECKS: dict[str, Callable] = {
    "lowdim_systems": _lowdim_systems,
    "group_axioms": _group_axioms,
    "bracket_dp_vs_naive": _bracket_methods,
    "invariance_U": _orbit_checks(Stratum.U, 4),
    "invariance_U1pp": _orbit_checks(Stratum.U1PP, 6),
    "invariance_U2pp": _orbit_checks(Stratum.U2PP, 5),
    "explicit_invariant_lists": _explicit_lists,
    "realization": _realization,
    "canonical_forms": _canonical_forms,
    "tensor_oracle": _tensor_oracle,
    "well_formedness": _well_formedness,
    "negative_controls": _negative_controls,
}


def run_battery(seed: int = 0, trials: int = 20, nmax: int = 10, only=None) -> list[CheckResult]:
    """Run every check (or the named subset); deterministic for a given seed."""
    if nmax < 7:
        raise ValueError("nmax must be at least 7 (the explicit systems go up to n=7)")
    results = []
    for i, (name, fn) in enumerate(CHECKS.items()):
        if only and name not in only:
            continue
        rng = make_rng(f"{seed}:{i}:{name}")
        res = CheckResult(name)
        start = time.perf_counter()
        fn(res, rng, trials, nmax)
        res.seconds = time.perf_counter() - start
        results.append(res)
    return results
