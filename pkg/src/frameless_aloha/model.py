"""Contention-model parameters, slot-degree distribution and binomial kernel.

Everything downstream (state recursion, simulator, oracle, optimizer) works
off the same small set of ingredients defined here: the parameter tuple
(n, m, k, beta) with the per-slot transmit probability p = beta / n, the
binomial slot-degree distribution, and a total binomial-coefficient function
that is exact for small arguments and log-domain stable for large ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln, xlog1py, xlogy

__all__ = [
    "SystemParams",
    "DegreeDistribution",
    "degree_distribution",
    "binom",
    "log_binom",
    "binom_pmf_table",
]

# math.comb is exact and still cheap up to here; beyond, we go through lgamma.
_EXACT_COMB_LIMIT = 64


@dataclass(frozen=True)
class SystemParams:
    """Contention parameters: n users, m slots, k-user detection, access scale beta.

    Each user transmits in each slot independently with probability
    p = beta / n. Slots holding at most k colliding transmissions are
    decodable, larger collisions are not.
    """

    n: int
    m: int
    k: int
    beta: float

    def __post_init__(self):
        if not (isinstance(self.n, (int, np.integer)) and self.n >= 1):
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if not (isinstance(self.m, (int, np.integer)) and self.m >= 0):
            raise ValueError(f"m must be a non-negative integer, got {self.m!r}")
        if not (isinstance(self.k, (int, np.integer)) and self.k >= 1):
            raise ValueError(f"k must be a positive integer, got {self.k!r}")
        if not (self.beta > 0):
            raise ValueError(f"beta must be positive, got {self.beta!r}")
        if self.beta > self.n:
            raise ValueError(
                f"beta={self.beta} exceeds n={self.n}: slot access probability beta/n must be <= 1"
            )

    @property
    def p(self) -> float:
        """Per-slot transmit probability beta / n."""
        return self.beta / self.n


@dataclass(frozen=True)
class DegreeDistribution:
    """Slot-degree probabilities omega[i] = Pr{deg(slot) = i}, i = 0..n."""

    omega: np.ndarray = field(repr=False)

    def __post_init__(self):
        om = np.asarray(self.omega, dtype=float)
        object.__setattr__(self, "omega", om)
        if om.ndim != 1 or om.size < 1:
            raise ValueError("omega must be a 1-D probability vector")
        if np.any(om < -1e-15) or np.any(om > 1 + 1e-15):
            raise ValueError("omega entries must lie in [0, 1]")
        if abs(om.sum() - 1.0) > 1e-12:
            raise ValueError(f"omega must sum to 1 (got {om.sum()!r})")

    @property
    def n(self) -> int:
        return self.omega.size - 1

    def __getitem__(self, i):
        return self.omega[i]


def degree_distribution(params: SystemParams) -> DegreeDistribution:
    """Binomial(n, p) slot-degree law: omega[i] = C(n,i) p^i (1-p)^(n-i)."""
    n, p = params.n, params.p
    i = np.arange(n + 1).astype(float)
    logpmf = (
        gammaln(n + 1.0)
        - gammaln(i + 1.0)
        - gammaln(n - i + 1.0)
        + xlogy(i, p)
        + xlog1py(n - i, -p)
    )
    omega = np.exp(logpmf)
    # renormalize away the accumulated rounding of the lgamma path
    omega /= omega.sum()
    return DegreeDistribution(omega)


def log_binom(a: int, b: int) -> float:
    """log C(a, b); -inf outside the support (b < 0, b > a or a < 0)."""
    if b < 0 or a < 0 or b > a:
        return -math.inf
    return gammaln(a + 1.0) - gammaln(b + 1.0) - gammaln(a - b + 1.0)


def binom(a: int, b: int) -> float:
    """Binomial coefficient C(a, b) as a float, 0 outside the support.

    Out-of-range arguments return 0 rather than raising so that the sums of
    the state recursion vanish silently at their boundaries. Exact integer
    arithmetic is used for a <= 64, a log-domain evaluation above that.
    """
    if b < 0 or a < 0 or b > a:
        return 0.0
    if a <= _EXACT_COMB_LIMIT:
        return float(math.comb(a, b))
    return math.exp(log_binom(a, b))


def binom_pmf_table(rows: int, prob: float, max_col: int | None = None) -> np.ndarray:
    """Table W[r, a] = C(r, a) prob^a (1-prob)^(r-a) for r = 0..rows, a = 0..max_col.

    Handles the degenerate rates prob = 0 and prob = 1 exactly (point masses
    at a = 0 and a = r). Entries outside a <= r are 0.
    """
    if max_col is None:
        max_col = rows
    if prob <= 0.0:
        W = np.zeros((rows + 1, max_col + 1))
        W[:, 0] = 1.0
        return W
    if prob >= 1.0:
        W = np.zeros((rows + 1, max_col + 1))
        rr = np.arange(min(rows, max_col) + 1)
        W[rr, rr] = 1.0
        return W
    r = np.arange(rows + 1)[:, None].astype(float)
    a = np.arange(max_col + 1)[None, :].astype(float)
    lw = (
        gammaln(r + 1.0)
        - gammaln(a + 1.0)
        - gammaln(r - a + 1.0)
        + a * math.log(prob)
        + (r - a) * math.log1p(-prob)
    )
    W = np.exp(lw)
    W[a > r] = 0.0
    return W
