"""Linial-Meshulam random complexes and Monte Carlo estimates.

Each trial draws one uniform per d-face from a Philox stream keyed by
``(seed, trial)``; face ``i`` (in lexicographic order) is kept iff its
uniform is below ``p``.  Trials are therefore order-independent, and runs
with different ``p`` but the same seed are coupled monotonically.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import ROUND_DOWN, Decimal
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from .artinian import ArtinianSpec, guaranteed_failure, hilbert_function, lefschetz_matrix
from .complex import SimplicialComplex
from .homology import top_betti
from .linalg import QQ, Field, rank

MODES = ("homology", "wlp_criterion", "wlp_direct")
DEFAULT_BUDGET = 50_000
WORKERS_ENV = "COINVARIANT_WORKERS"


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class LMConfig:
    n: int
    d: int
    p: float
    trials: int
    seed: int
    field: Field = QQ

    def __post_init__(self):
        if not 0 <= self.p <= 1:
            raise ValueError("p must lie in [0, 1]")
        if self.d < 1:
            raise ValueError("d must be >= 1")
        if self.n < self.d + 2:
            raise ValueError("n must be >= d + 2")
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class MonteCarloReport:
    trials: int
    hits: int
    estimate: Fraction
    mean_fd: Fraction
    mode: str
    skipped: int = 0

    def to_csv(self, cfg: LMConfig | None = None) -> str:
        head = "mode,trials,hits,skipped,estimate,mean_fd"
        row = f"{self.mode},{self.trials},{self.hits},{self.skipped},{self.estimate},{self.mean_fd}"
        if cfg is not None:
            head = "n,d,p,seed,field," + head
            row = f"{cfg.n},{cfg.d},{cfg.p},{cfg.seed},{cfg.field}," + row
        return head + "\n" + row + "\n"


def face_uniforms(cfg: LMConfig, trial: int) -> np.ndarray:
    """The per-face uniforms of one trial."""
    key = np.array([cfg.seed, trial], dtype=np.uint64)
    gen = np.random.Generator(np.random.Philox(key=key))
    return gen.random(comb(cfg.n, cfg.d + 1))


def sample_complex(cfg: LMConfig, trial: int) -> SimplicialComplex:
    """Full (d-1)-skeleton of the (n-1)-simplex plus a random set of d-faces."""
    u = face_uniforms(cfg, trial)
    chosen = [F for F, x in zip(combinations(range(cfg.n), cfg.d + 1), u) if x < cfg.p]
    covered = set()
    for F in chosen:
        for j in range(len(F)):
            covered.add(F[:j] + F[j + 1:])
    ridges = [r for r in combinations(range(cfg.n), cfg.d) if r not in covered]
    return SimplicialComplex(cfg.n, tuple(sorted(chosen + ridges)))


def wlp_fails_direct(
    cx: SimplicialComplex, d: int | None = None, field: Field = QQ, budget: int = DEFAULT_BUDGET
) -> bool:
    """Direct WLP check with all caps d+2 (d defaults to dim cx).

    Raises BudgetExceeded when a multiplication matrix has more than
    ``budget`` nonzero entries.
    """
    if d is None:
        d = cx.dim
    spec = ArtinianSpec.uniform(cx, d + 2, field)
    dims = hilbert_function(spec)
    top = max(t for t, x in enumerate(dims) if x)
    # the degree named by the sufficient criterion first; it is the usual culprit
    t0 = comb(d + 2, 2) - 1
    order = sorted(range(top), key=lambda t: (t != t0, t))
    for t in order:
        M = lefschetz_matrix(spec, t, 1)
        if M.nnz > budget:
            raise BudgetExceeded(f"matrix {M.rows}x{M.cols} with {M.nnz} nonzeros exceeds budget {budget}")
        if rank(M, field) < min(dims[t], dims[t + 1]):
            return True
    return False


def trial_outcome(cfg: LMConfig, trial: int, mode: str, budget: int = DEFAULT_BUDGET) -> tuple[int, bool | None]:
    """(f_d, hit) for one trial; hit is None when the instance was skipped."""
    cx = sample_complex(cfg, trial)
    fd = len(cx.faces(cfg.d)) if cx.dim == cfg.d else 0
    if mode == "wlp_direct":
        # no shortcut at f_d = 0: the bare (d-1)-skeleton can itself fail
        try:
            return fd, wlp_fails_direct(cx, cfg.d, cfg.field, budget)
        except BudgetExceeded:
            return fd, None
    if fd == 0:
        return 0, False
    if mode == "homology":
        return fd, top_betti(cx, cfg.field) > 0
    if mode == "wlp_criterion":
        return fd, guaranteed_failure(cx, cfg.field)[0]
    raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


def _worker(args):
    return trial_outcome(*args)


def _workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def monte_carlo(
    cfg: LMConfig, mode: str = "homology", budget: int = DEFAULT_BUDGET, workers: int | None = None
) -> MonteCarloReport:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    workers = _workers() if workers is None else workers
    jobs = [(cfg, i, mode, budget) for i in range(cfg.trials)]
    if workers > 1 and cfg.trials > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            outcomes = list(ex.map(_worker, jobs, chunksize=max(1, cfg.trials // (4 * workers))))
    else:
        outcomes = [_worker(j) for j in jobs]
    hits = sum(1 for _, h in outcomes if h)
    skipped = sum(1 for _, h in outcomes if h is None)
    done = cfg.trials - skipped
    est = Fraction(hits, done) if done else Fraction(0)
    mean_fd = Fraction(sum(fd for fd, _ in outcomes), cfg.trials) if cfg.trials else Fraction(0)
    return MonteCarloReport(cfg.trials, hits, est, mean_fd, mode, skipped)


def g_d(x: float, d: int) -> float:
    return (d + 1) * (x + 1) * math.exp(-x) + x * (1 - math.exp(-x)) ** (d + 1)


def threshold_cd(d: int, tol: float = 1e-9) -> float:
    """Positive root of g_d(x) = d + 1 (c_1 = 1 by convention)."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    if d < 1:
        raise ValueError("d must be >= 1")
    if d == 1:
        return 1.0
    target = d + 1
    lo = hi = 1e-6
    while g_d(hi, d) - target < 0:
        lo, hi = hi, hi * 2
    # g_d - target is negative at lo and nonnegative at hi
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if g_d(mid, d) - target < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def _truncate(x: float, digits: int) -> str:
    q = Decimal(repr(x)).quantize(Decimal(1).scaleb(-digits), rounding=ROUND_DOWN)
    return format(q.normalize(), "f")


def cd_table(dmax: int, tol: float = 1e-9, digits: int = 3) -> str:
    """Two-row CSV of c_d for d = 2..dmax, truncated to ``digits`` decimals."""
    ds = list(range(2, dmax + 1))
    vals = [_truncate(threshold_cd(d, tol), digits) for d in ds]
    return "d," + ",".join(map(str, ds)) + "\nc_d," + ",".join(vals) + "\n"
