"""Unitarily invariant random pure states and distribution statistics.

Randomness comes from numpy's seedable PCG64 generator.  Batches are
produced in fixed chunks of :data:`CHUNK`, with chunk ``k`` drawing from the
independent substream ``default_rng([seed, k])``, so a batch is a pure
function of ``(seed, count)`` no matter how the chunks are scheduled.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptySample
from .states import ProjectiveState, normalize_and_gauge

#: Number of states drawn from one substream.
CHUNK = 4096


@dataclass(frozen=True)
class SampleBatch:
    """Schmidt angles and Bloch radii of a reproducible Haar sample."""

    seed: int
    count: int
    sigmas: np.ndarray
    bloch_radii: np.ndarray

    def __post_init__(self):
        self.sigmas.flags.writeable = False
        self.bloch_radii.flags.writeable = False


def haar_state(rng: np.random.Generator) -> ProjectiveState:
    """One Haar-random two-qubit pure state.

    Eight independent standard normals form the complex amplitude 4-vector,
    which is then normalized and gauged; the induced distribution is
    invariant under fixed unitaries.
    """
    g = rng.standard_normal(8)
    return normalize_and_gauge(g[0::2] + 1j * g[1::2])


def _chunk_amplitudes(seed: int, k: int, m: int) -> np.ndarray:
    rng = np.random.default_rng([seed, k])
    g = rng.standard_normal((m, 8))
    z = g[:, 0::2] + 1j * g[:, 1::2]
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def batch_sigmas(seed: int, count: int) -> np.ndarray:
    """Schmidt angles of ``count`` Haar states, vectorized over chunks.

    Equivalent to mapping :func:`haar_state` over the substreams and taking
    the Schmidt angle of each state (the per-state path is exercised against
    this one in the test suite).
    """
    out = np.empty(count)
    done = 0
    k = 0
    while done < count:
        m = min(CHUNK, count - done)
        z = _chunk_amplitudes(seed, k, m)
        sv = np.linalg.svd(z.reshape(m, 2, 2), compute_uv=False)
        out[done : done + m] = np.arctan2(sv[:, 1], sv[:, 0])
        done += m
        k += 1
    return out


def sample_batch(seed: int, count: int) -> SampleBatch:
    """Deterministic batch of Schmidt angles and Bloch radii.

    The Bloch radius of the reduced one-qubit state is ``cos(2 sigma)``.
    """
    if count < 1:
        raise EmptySample("count must be at least 1")
    sigmas = batch_sigmas(seed, count)
    return SampleBatch(int(seed), int(count), sigmas, np.cos(2.0 * sigmas))


def ks_statistic(samples, cdf) -> float:
    """Kolmogorov-Smirnov sup-distance between a sample and a reference CDF.

    Parameters
    ----------
    samples : array_like
        Nonempty sample values.
    cdf : callable
        Vectorized reference distribution function.
    """
    x = np.sort(np.asarray(samples, dtype=float))
    n = x.size
    if n == 0:
        raise EmptySample("KS statistic of an empty sample")
    f = np.asarray(cdf(x), dtype=float)
    hi = np.arange(1, n + 1) / n - f
    lo = f - np.arange(0, n) / n
    return float(max(hi.max(), lo.max()))


def random_su2(rng: np.random.Generator) -> np.ndarray:
    """Haar-random SU(2) element from a normalized Gaussian quaternion."""
    q = rng.standard_normal(4)
    a, b, c, d = q / np.linalg.norm(q)
    return np.array([[a + 1j * b, c + 1j * d], [-c + 1j * d, a - 1j * b]])
