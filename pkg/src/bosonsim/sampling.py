"""Exact sampling from computed output distributions, with a self-test.

The distribution is already known in full (that exhaustive computation is
the expensive part), so sampling is plain inverse-CDF over the canonical
outcome order with one seeded generator per run -- same seed, same counts,
bit for bit.  ``chi_square_gof`` is the statistical check that a run is
consistent with the distribution it was supposedly drawn from.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import chi2

from .bosonic import OutputDistribution
from .errors import ValidationError

#: a distribution must be normalized this well before sampling from it
NORMALIZATION_TOL = 1e-9

#: minimum expected count per retained chi-square bin
MIN_EXPECTED = 5.0


@dataclass(frozen=True)
class SampleRun:
    """Observed outcome frequencies; counts[i] belongs to basis index i."""

    seed: int
    count: int
    counts: np.ndarray


@dataclass(frozen=True)
class ChiSquareResult:
    statistic: float
    p_value: float
    degrees_of_freedom: int
    bins: int


def sample(dist: OutputDistribution, count: int, seed: int) -> SampleRun:
    """Draw ``count`` i.i.d. outcomes by inverse-CDF over canonical order."""
    if count < 0:
        raise ValueError("sample count must be nonnegative")
    total = dist.normalization()
    if abs(total - 1.0) > NORMALIZATION_TOL:
        raise ValidationError(
            f"distribution is not normalized: sum = {total!r} (tol {NORMALIZATION_TOL})"
        )
    cdf = np.cumsum(dist.clamped_probabilities())
    rng = np.random.default_rng(seed)
    draws = rng.random(count)
    indices = np.searchsorted(cdf, draws, side="right")
    indices = np.minimum(indices, len(dist) - 1)
    counts = np.bincount(indices, minlength=len(dist))
    return SampleRun(seed=seed, count=count, counts=counts)


def chi_square_gof(run: SampleRun, dist: OutputDistribution) -> ChiSquareResult:
    """Pearson goodness-of-fit of a sample run against a distribution.

    Bins with expected count below MIN_EXPECTED are pooled into one; if the
    pooled bin is itself still too small it is merged into the smallest
    retained bin.  Degrees of freedom = bins - 1.
    """
    if len(run.counts) != len(dist):
        raise ValueError(
            f"run has {len(run.counts)} bins but distribution has {len(dist)}"
        )
    expected = dist.clamped_probabilities() * run.count
    observed = np.asarray(run.counts, dtype=float)

    keep = expected >= MIN_EXPECTED
    exp_bins = list(expected[keep])
    obs_bins = list(observed[keep])
    small_exp = float(expected[~keep].sum())
    small_obs = float(observed[~keep].sum())
    if (~keep).any():
        if small_exp >= MIN_EXPECTED or not exp_bins:
            exp_bins.append(small_exp)
            obs_bins.append(small_obs)
        else:
            i = int(np.argmin(exp_bins))
            exp_bins[i] += small_exp
            obs_bins[i] += small_obs

    bins = len(exp_bins)
    if bins < 2:
        raise ValueError(f"need at least 2 bins after pooling, got {bins}")
    exp_arr = np.asarray(exp_bins)
    obs_arr = np.asarray(obs_bins)
    statistic = float(((obs_arr - exp_arr) ** 2 / exp_arr).sum())
    dof = bins - 1
    p_value = float(chi2.sf(statistic, dof))
    return ChiSquareResult(
        statistic=statistic, p_value=p_value, degrees_of_freedom=dof, bins=bins
    )
