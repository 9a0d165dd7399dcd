""" suites.py -- Randomised verification suites, one per theorem, and the report they
    produce.

    Language: Python 3.9

    Every case draws its inputs from its own generator, seeded from
    SeedSequence(seed, spawn_key=(suite position, case index)), so a report depends only
    on (suite, seed, cases) and never on how many workers ran it.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Tuple
import hashlib
import json
import logging
import math

import numpy as np

from pythagoras import config
from pythagoras.func import curved, euclid, oracle, projections, simplex
from pythagoras.func.curved import Geometry
from pythagoras.func.exterior import ComplexFrame, RealFrame
from pythagoras.utils.exceptions import UsageError
from pythagoras.utils.numeric import relative_residual

CaseOutcome = Tuple[dict, float, float]


@dataclass(frozen=True)
class CaseResult(object):
    """Outcome of a single randomised case.

    Attributes:
    ----------
    digest: str
        First 16 hex digits of the SHA-256 of the case input's canonical JSON.
    lhs: float
        Left-hand side of the checked identity.
    rhs: float
        Right-hand side of the checked identity.
    residual: float
        |lhs - rhs| / max(|lhs|, 1).
    """

    digest: str
    lhs: float
    rhs: float
    residual: float

    def to_dict(self) -> dict:
        return {"digest": self.digest, "lhs": self.lhs, "rhs": self.rhs, "residual": self.residual}

    @classmethod
    def from_dict(cls, data: dict) -> "CaseResult":
        return cls(
            digest=str(data["digest"]),
            lhs=float(data["lhs"]),
            rhs=float(data["rhs"]),
            residual=float(data["residual"]),
        )


@dataclass(frozen=True)
class VerifyReport(object):
    """Result of running a suite.

    Attributes:
    ----------
    suite: str
        Suite name, or "all".
    seed: int
        Master seed.
    tolerance: float
        Largest residual counted as a pass.
    cases: int
        Number of cases run.
    failures: int
        Number of cases whose residual exceeds the tolerance.
    max_residual: float
        Largest residual seen.
    per_case: List[CaseResult]
        Case outcomes in run order.
    """

    suite: str
    seed: int
    tolerance: float
    cases: int
    failures: int
    max_residual: float
    per_case: List[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "cases": self.cases,
            "failures": self.failures,
            "max_residual": self.max_residual,
            "per_case": [case.to_dict() for case in self.per_case],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VerifyReport":
        return cls(
            suite=str(data["suite"]),
            seed=int(data["seed"]),
            tolerance=float(data["tolerance"]),
            cases=int(data["cases"]),
            failures=int(data["failures"]),
            max_residual=float(data["max_residual"]),
            per_case=[CaseResult.from_dict(case) for case in data["per_case"]],
        )


def case_digest(inputs: dict) -> str:
    """First 16 hex digits of the SHA-256 of the canonical JSON of a case input."""
    canonical = json.dumps(inputs, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]


def _geometry(rng: np.random.Generator, i: int) -> Tuple[Geometry, dict]:
    kind = ("spherical", "euclidean", "hyperbolic")[i % 3]
    R = float(rng.uniform(0.5, 10.0))
    g = Geometry.from_kind(curved.GeometryKind(kind), R)
    return g, {"geometry": kind, "R": R if g.K else None}


def _euclid_case(rng: np.random.Generator, i: int) -> CaseOutcome:
    kappa, b, c = (float(x) for x in rng.uniform((0.1, 0.1, 0.1), (4.0, 10.0, 10.0)))
    check = euclid.similar_figure_areas(kappa, b, c)
    return {"kappa": kappa, "b": b, "c": c}, check.lhs, check.rhs


def _curved_case(g: Geometry, rng: np.random.Generator, reach: float) -> CaseOutcome:
    R = g.R
    b, c = (float(x) for x in rng.uniform(0.05 * R, reach * R, size=2))
    closed = curved.right_hypotenuse(g, b, c)
    embedded = oracle.embedded_hypotenuse(g, b, c)
    return {"R": R, "b": b, "c": c}, closed, embedded


def _spherical_case(rng: np.random.Generator, i: int) -> CaseOutcome:
    return _curved_case(Geometry.spherical(float(rng.uniform(0.5, 10.0))), rng, 3.0)


def _hyperbolic_case(rng: np.random.Generator, i: int) -> CaseOutcome:
    return _curved_case(Geometry.hyperbolic(float(rng.uniform(0.5, 10.0))), rng, 5.0)


def _legs(g: Geometry, rng: np.random.Generator, reach: float) -> Tuple[float, float]:
    scale = g.R if g.K else 1.0
    b, c = (float(x) for x in rng.uniform(0.05 * scale, reach * scale, size=2))
    return b, c


def _unified_case(rng: np.random.Generator, i: int) -> CaseOutcome:
    g, inputs = _geometry(rng, i)
    b, c = _legs(g, rng, 3.0)
    a = curved.right_hypotenuse(g, b, c)
    lhs = curved.disk_area(g, a)
    rhs = curved.unified_hypotenuse_area(g, curved.disk_area(g, b), curved.disk_area(g, c))
    return dict(inputs, b=b, c=c), lhs, rhs


def _proper_case(rng: np.random.Generator, i: int) -> CaseOutcome:
    g, inputs = _geometry(rng, i)
    b, c = _legs(g, rng, 1.5)
    a = curved.proper_hypotenuse(g, b, c)
    lhs = curved.disk_area(g, a)
    rhs = curved.disk_area(g, b) + curved.disk_area(g, c)
    return dict(inputs, b=b, c=c), lhs, rhs


def _random_legs(rng: np.random.Generator, n: int) -> List[float]:
    return [float(x) for x in rng.uniform(0.1, 10.0, size=n)]


def _simplex_case(rng: np.random.Generator, i: int) -> CaseOutcome:
    n = int(rng.integers(2, 9))
    s = simplex.RightSimplex(tuple(_random_legs(rng, n)))
    lhs = simplex.hypotenusal_volume_gram(s)
    rhs = simplex.hypotenusal_volume_pythagoras(s)
    return {"legs": list(s.legs)}, lhs, rhs


def _degua_case(rng: np.random.Generator, i: int) -> CaseOutcome:
    legs = (1.0, 1.0, 1.0) if i == 0 else tuple(_random_legs(rng, 3))
    s = simplex.RightSimplex(legs)
    lhs = simplex.hypotenusal_volume_gram(s) ** 2
    rhs = math.fsum(simplex.leg_face_volume(s, k) ** 2 for k in (1, 2, 3))
    return {"legs": list(s.legs)}, lhs, rhs


def _closure_case(rng: np.random.Generator, i: int) -> CaseOutcome:
    n = int(rng.integers(2, 9))
    s = simplex.RightSimplex(tuple(_random_legs(rng, n)))
    u = rng.standard_normal(n)
    u /= np.linalg.norm(u)
    volumes = simplex.face_volumes(s)
    normals = simplex.outward_normals(s)
    lhs = float(volumes[0] * np.dot(normals[0], u))
    rhs = -math.fsum(float(V * np.dot(nk, u)) for V, nk in zip(volumes[1:], normals[1:]))
    return {"legs": list(s.legs), "direction": u.tolist()}, lhs, rhs


def _projection_case(rng: np.random.Generator, i: int) -> CaseOutcome:
    n = int(rng.integers(2, 9))
    m = int(rng.integers(1, min(n, 4) + 1))
    vectors = rng.standard_normal((m, n))
    report = projections.real_projection_volumes(RealFrame(vectors))
    return {"vectors": vectors.tolist()}, report.identity_lhs, report.identity_rhs


def _corollary_case(rng: np.random.Generator, i: int) -> CaseOutcome:
    n = int(rng.integers(2, 7))
    p = int(rng.integers(1, n + 1))
    m = int(rng.integers(p, n + 1))
    vectors = rng.standard_normal((p, n))
    check = projections.corollary_residual(RealFrame(vectors), m)
    return {"vectors": vectors.tolist(), "m": m}, check.lhs, check.rhs


def _complex_vectors(rng: np.random.Generator, m: int, n: int) -> np.ndarray:
    return rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))


def _complex_line_case(rng: np.random.Generator, i: int) -> CaseOutcome:
    n = int(rng.integers(1, 9))
    v = _complex_vectors(rng, 1, n)[0]
    report = projections.complex_line_areas(v)
    inputs = {"v": [[z.real, z.imag] for z in v.tolist()]}
    return inputs, report.identity_lhs, report.identity_rhs


def _complex_subspace_case(rng: np.random.Generator, i: int) -> CaseOutcome:
    n = int(rng.integers(1, 7))
    m = int(rng.integers(1, min(n, 3) + 1))
    vectors = _complex_vectors(rng, m, n)
    report = projections.complex_subspace_volumes(ComplexFrame(vectors))
    inputs = {"vectors": [[[z.real, z.imag] for z in row] for row in vectors.tolist()]}
    return inputs, report.identity_lhs, report.identity_rhs


SUITES: Dict[str, Callable[[np.random.Generator, int], CaseOutcome]] = {
    "euclid": _euclid_case,
    "spherical": _spherical_case,
    "hyperbolic": _hyperbolic_case,
    "unified": _unified_case,
    "proper": _proper_case,
    "simplex": _simplex_case,
    "degua": _degua_case,
    "projection": _projection_case,
    "corollary": _corollary_case,
    "complex-line": _complex_line_case,
    "complex-subspace": _complex_subspace_case,
    "closure": _closure_case,
}
SUITE_NAMES = list(SUITES) + ["all"]


def run_case(suite: str, seed: int, i: int) -> CaseResult:
    """Run case i of a suite with its own spawned generator."""
    position = list(SUITES).index(suite)
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(position, i)))
    inputs, lhs, rhs = SUITES[suite](rng, i)
    digest = case_digest(dict(inputs, suite=suite, case=i))
    return CaseResult(digest=digest, lhs=float(lhs), rhs=float(rhs), residual=relative_residual(lhs, rhs))


def run_suite(
    suite: str,
    seed: int = config.DEFAULT_SEED,
    tolerance: float = config.DEFAULT_TOLERANCE,
    cases: int = config.DEFAULT_CASES,
    workers: int = config.MAX_WORKERS,
) -> VerifyReport:
    """Run a named suite (or "all") and collect the report.

    Parameters
    ----------
    suite: str
        One of SUITE_NAMES.
    seed: int
        Non-negative master seed.
        (Optional) Defaults to: config.DEFAULT_SEED
    tolerance: float
        Largest residual counted as a pass.
        (Optional) Defaults to: config.DEFAULT_TOLERANCE
    cases: int
        Cases per suite; "all" runs this many for every suite.
        (Optional) Defaults to: config.DEFAULT_CASES
    workers: int
        Worker threads. Has no effect on the report.
        (Optional) Defaults to: config.MAX_WORKERS

    Returns
    ----------
    VerifyReport
        Report with cases in (suite, index) order.
    """
    if suite not in SUITE_NAMES:
        raise UsageError(f"Unknown suite '{suite}'. Choose from: {', '.join(SUITE_NAMES)}.")
    seed, cases, tolerance = int(seed), int(cases), float(tolerance)
    if seed < 0:
        raise UsageError(f"Seed must be non-negative, got {seed}.")
    if cases < 0:
        raise UsageError(f"Case count must be non-negative, got {cases}.")
    if not tolerance >= 0:
        raise UsageError(f"Tolerance must be non-negative, got {tolerance}.")

    names = list(SUITES) if suite == "all" else [suite]
    jobs = [(name, i) for name in names for i in range(cases)]
    with ThreadPoolExecutor(max_workers=max(1, int(workers))) as pool:
        results = list(pool.map(lambda job: run_case(job[0], seed, job[1]), jobs))

    failures = sum(1 for r in results if not r.residual <= tolerance)
    max_residual = max((r.residual for r in results), default=0.0)
    logging.info(
        f"Suite '{suite}' finished {len(results)} cases with {failures} failures, "
        f"max residual {max_residual:.3e}."
    )
    return VerifyReport(
        suite=suite,
        seed=seed,
        tolerance=tolerance,
        cases=len(results),
        failures=failures,
        max_residual=max_residual,
        per_case=results,
    )
