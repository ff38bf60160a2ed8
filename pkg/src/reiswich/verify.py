"""Named verification suites shared by the CLI and the acceptance tests.

A suite expands into independent tasks (one per parameter block) so it can
be fanned out over a process pool; records are sorted afterwards, so the
report does not depend on completion order.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .arith import binomial, falling_factorial, rational_to_str
from .core import (
    as_param,
    key_identity_value,
    pm_original,
    reiswich_closed,
    reiswich_sequence,
    verify_orthogonality,
)
from .errors import TheoremViolation
from .identities import degree5_identity_check, lemma_ci_check, lemma_ci_lhs, scaled_coefficient_check
from .jacobi import proportionality_constant
from .report import CheckRecord, VerificationReport

SUITES = ("orthogonality", "recursion", "ci", "deg5", "coeffs", "key", "jacobi", "pm")
DEFAULT_TAUS = (Fraction(-1, 2),)


def _orthogonality(tau: Fraction, max_n: int) -> list[CheckRecord]:
    return verify_orthogonality(tau, max_n).records


def _recursion(tau: Fraction, max_n: int) -> list[CheckRecord]:
    t = rational_to_str(tau)
    seq = reiswich_sequence(tau, max_n)
    out = []
    for n, rec in enumerate(seq):
        closed = reiswich_closed(tau, n)
        out.append(CheckRecord(
            f"recursion/tau={t}/n={n}", rec == closed,
            {"difference": (rec - closed).to_plain()},
            sort_key=("recursion", tau, n),
        ))
    return out


def _ci_block(n: int) -> list[CheckRecord]:
    out = []
    for u in range(n + 1):
        for v in range(n + 1 - u):
            res = lemma_ci_check(n, u, v)
            out.append(CheckRecord(f"ci/n={n}/u={u}/v={v}", res.passed, res.witness(),
                                   sort_key=("ci", n, u, v)))
    return out


def _ci_eval(n: int, seed: int, samples: int = 3) -> list[CheckRecord]:
    """Evaluate the expanded left side at random rationals against a scalar sum."""
    rng = random.Random(seed * 1009 + n)
    out = []
    for u in range(n + 1):
        for v in range(n + 1 - u):
            lhs = lemma_ci_lhs(n, u, v)
            for k in range(samples):
                x = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
                y = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
                scalar = sum(
                    (-1) ** r * binomial(n, r)
                    * falling_factorial(x - r, u) * falling_factorial(y - r, v)
                    for r in range(n + 1)
                )
                sym = lhs.evaluate({"x": x, "y": y})
                out.append(CheckRecord(
                    f"ci-eval/n={n}/u={u}/v={v}/k={k}", sym == scalar,
                    {"x": rational_to_str(x), "y": rational_to_str(y), "value": rational_to_str(sym)},
                    sort_key=("ci-eval", n, u, v, k),
                ))
    return out


def _deg5() -> list[CheckRecord]:
    res = degree5_identity_check()
    return [CheckRecord("deg5", res.passed, res.witness(), sort_key=("deg5",))]


def _coeffs(tau: Fraction, max_n: int) -> list[CheckRecord]:
    t = rational_to_str(tau)
    out = []
    for n in range(1, max_n + 1):
        for r in range(1, n + 1):
            res = scaled_coefficient_check(tau, n, r)
            out.append(CheckRecord(f"coeffs/tau={t}/n={n}/r={r}", res.passed, res.witness(),
                                   sort_key=("coeffs", tau, n, r)))
    return out


def _key(tau: Fraction, max_n: int) -> list[CheckRecord]:
    t = rational_to_str(tau)
    out = []
    for n in range(max_n + 1):
        for s in range(n):
            value = key_identity_value(tau, n, s)
            out.append(CheckRecord(f"key/tau={t}/n={n}/s={s}", value == 0,
                                   {"value": rational_to_str(value)}, sort_key=("key", tau, n, s)))
        # outside the hypothesis the sum is <R_n, x^n> / ((tau+2)(tau+1)) > 0
        value = key_identity_value(tau, n, n)
        out.append(CheckRecord(f"key/tau={t}/n={n}/s={n}", value != 0,
                               {"value": rational_to_str(value), "expect": "nonzero"},
                               sort_key=("key", tau, n, n)))
    return out


def _jacobi(tau: Fraction, max_n: int) -> list[CheckRecord]:
    t = rational_to_str(tau)
    out = []
    for n in range(max_n + 1):
        try:
            c = proportionality_constant(tau, n)
            ok, witness = c > 0, {"c_n": rational_to_str(c)}
        except TheoremViolation as exc:
            ok, witness = False, {"error": str(exc)}
        out.append(CheckRecord(f"jacobi/tau={t}/n={n}", ok, witness, sort_key=("jacobi", tau, n)))
    return out


def _pm(max_n: int) -> list[CheckRecord]:
    out = []
    for m in range(2, 2 * max_n + 4):
        tau = Fraction(-1, 2) if m % 2 == 0 else Fraction(1, 2)
        n = m // 2 - 1
        p, r = pm_original(m), reiswich_closed(tau, n)
        out.append(CheckRecord(f"pm/m={m}", p == r,
                               {"P_m": p.to_plain(), "tau": rational_to_str(tau), "n": n},
                               sort_key=("pm", m)))
    return out


Task = tuple[Callable[..., list[CheckRecord]], tuple]


def suite_tasks(suite: str, max_n: int, taus: Sequence[Fraction] = DEFAULT_TAUS,
                seed: int | None = None) -> list[Task]:
    taus = [as_param(t).tau for t in taus]
    if suite == "all":
        return [t for name in SUITES for t in suite_tasks(name, max_n, taus, seed)]
    if suite == "orthogonality":
        return [(_orthogonality, (t, max_n)) for t in taus]
    if suite == "recursion":
        return [(_recursion, (t, max_n)) for t in taus]
    if suite == "ci":
        tasks: list[Task] = [(_ci_block, (n,)) for n in range(max_n + 1)]
        if seed is not None:
            tasks += [(_ci_eval, (n, seed)) for n in range(max_n + 1)]
        return tasks
    if suite == "deg5":
        return [(_deg5, ())]
    if suite == "coeffs":
        return [(_coeffs, (t, max_n)) for t in taus]
    if suite == "key":
        return [(_key, (t, max_n)) for t in taus]
    if suite == "jacobi":
        return [(_jacobi, (t, max_n)) for t in taus]
    if suite == "pm":
        return [(_pm, (max_n,))]
    raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")


def _run(task: Task) -> list[CheckRecord]:
    fn, args = task
    return fn(*args)


def run_suite(suite: str, max_n: int, taus: Iterable[Fraction] = DEFAULT_TAUS,
              seed: int | None = None, jobs: int = 1) -> VerificationReport:
    tasks = suite_tasks(suite, max_n, list(taus), seed)
    report = VerificationReport(suite)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for records in pool.map(_run, tasks):
                report.extend(records)
    else:
        for task in tasks:
            report.extend(_run(task))
    report.sort()
    return report
