"""End-to-end seed sweep: Newton polish, certify, classify, deduplicate."""
from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .certifier import NewtonConfig, polish_and_certify
from .classification import MorseSignature, RotationNumber, morse_signature, rotation_number
from .dynamics import reflection_residual
from .errors import BilliardError, InvalidInputError, StatisticsError
from .functional import evaluate
from .geometry import BoundarySpec
from .identity import canonicalize, coalesce_groups

log = logging.getLogger(__name__)

MIN_SEED_GAP = 1e-4
MAX_SEED_RETRIES = 100
RESIDUAL_TOL = 1e-6


@dataclass(frozen=True)
class RunConfig:
    spec: BoundarySpec
    n_bounces: int
    n_seeds: int
    rng_seed: int = 0
    newton: NewtonConfig = NewtonConfig()
    batch_size: int = 1000
    workers: int = 1

    def __post_init__(self):
        if self.n_seeds < 1:
            raise InvalidInputError("n_seeds must be >= 1")
        if self.n_bounces < 2:
            raise InvalidInputError("n_bounces must be >= 2")
        if self.batch_size < 1 or self.workers < 1:
            raise InvalidInputError("batch_size and workers must be >= 1")


@dataclass(frozen=True)
class OrbitRecord:
    theta: np.ndarray
    alpha: float
    beta: float
    perimeter: float
    signature: MorseSignature
    rotation: RotationNumber
    first_seed_index: int
    residual: float = 0.0

    @property
    def n(self) -> int:
        return self.theta.size


@dataclass
class RunReport:
    config: RunConfig
    records: list[OrbitRecord]
    discovery_curve: list[tuple[int, int]]
    power_law_exponent: float | None
    failures: Counter = field(default_factory=Counter)
    n_certified: int = 0

    @property
    def counts(self) -> Counter:
        return Counter((r.signature, r.rotation) for r in self.records)

    @property
    def signature_counts(self) -> Counter:
        return Counter(r.signature for r in self.records)

    @property
    def perimeter_ranges(self) -> dict[MorseSignature, tuple[float, float]]:
        out: dict[MorseSignature, tuple[float, float]] = {}
        for r in self.records:
            lo, hi = out.get(r.signature, (np.inf, -np.inf))
            out[r.signature] = (min(lo, r.perimeter), max(hi, r.perimeter))
        return out


def min_circular_gap(theta) -> float:
    t = np.sort(np.asarray(theta, dtype=float))
    gaps = np.diff(t, append=t[0] + 1.0)
    return float(gaps.min())


def generate_seeds(n_seeds: int, n_bounces: int, rng_seed: int = 0) -> list[np.ndarray | None]:
    """Uniform seeds from PCG64, redrawn while two vertices sit within
    ``MIN_SEED_GAP``. ``None`` marks a seed whose retries ran out."""
    rng = np.random.Generator(np.random.PCG64(rng_seed))
    seeds: list[np.ndarray | None] = []
    for _ in range(n_seeds):
        for _ in range(MAX_SEED_RETRIES):
            theta = rng.random(n_bounces)
            if min_circular_gap(theta) >= MIN_SEED_GAP:
                seeds.append(theta)
                break
        else:
            seeds.append(None)
    return seeds


def process_seed(spec: BoundarySpec, newton: NewtonConfig, index: int, seed) -> OrbitRecord | str:
    """Full per-seed pipeline; returns a record or a failure cause."""
    if seed is None:
        return "seed_retry"
    res = polish_and_certify(spec, seed, newton)
    if res.failure is not None:
        return res.failure
    canon = canonicalize(res.theta).theta
    try:
        ev = evaluate(spec, canon)
        sig = morse_signature(ev.hessian)
        rot = rotation_number(canon)
        refl = reflection_residual(spec, canon)
    except BilliardError:
        return "classification"
    if not refl.max_residual < RESIDUAL_TOL:
        return "reflection"
    cert = res.certificate
    return OrbitRecord(canon, cert.alpha, cert.beta, ev.value, sig, rot, index, refl.max_residual)


def _process_chunk(spec, newton, chunk):
    return [process_seed(spec, newton, i, s) for i, s in chunk]


def _sweep(config: RunConfig, seeds) -> list:
    indexed = list(enumerate(seeds))
    if config.workers == 1:
        return _process_chunk(config.spec, config.newton, indexed)
    size = max(1, len(indexed) // (config.workers * 8))
    chunks = [indexed[i:i + size] for i in range(0, len(indexed), size)]
    with ProcessPoolExecutor(config.workers) as pool:
        parts = pool.map(_process_chunk, [config.spec] * len(chunks), [config.newton] * len(chunks), chunks)
        return [r for part in parts for r in part]


def discovery_curve(first_indices, n_seeds: int, batch_size: int) -> list[tuple[int, int]]:
    """Cumulative number of distinct orbits first seen within each batch prefix."""
    first = np.sort(np.asarray(first_indices, dtype=int))
    ends = list(range(batch_size, n_seeds, batch_size)) + [n_seeds]
    return [(end, int(np.searchsorted(first, end))) for end in ends]


def fit_power_law(curve) -> float:
    """Least-squares slope of log(count) against log(seeds)."""
    pts = [(x, y) for x, y in curve if x > 0 and y > 0]
    if len(pts) < 3:
        raise StatisticsError("power-law fit needs at least 3 positive points")
    x, y = np.log(np.array(pts, dtype=float)).T
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def run(config: RunConfig) -> RunReport:
    seeds = generate_seeds(config.n_seeds, config.n_bounces, config.rng_seed)
    results = _sweep(config, seeds)
    failures: Counter = Counter()
    candidates: list[OrbitRecord] = []
    for r in results:
        if isinstance(r, str):
            failures[r] += 1
        else:
            candidates.append(r)
    records = []
    for kept, members in coalesce_groups(candidates):
        first = min(m.first_seed_index for m in members)
        records.append(replace(kept, first_seed_index=first))
    curve = discovery_curve([r.first_seed_index for r in records], config.n_seeds, config.batch_size)
    try:
        exponent = fit_power_law(curve)
    except StatisticsError:
        exponent = None
    log.info("%d seeds -> %d certified -> %d unique orbits", config.n_seeds, len(candidates), len(records))
    return RunReport(config, records, curve, exponent, failures, len(candidates))

