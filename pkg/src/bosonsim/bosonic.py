"""Many-boson evolution through a linear network.

The amplitude to go from Fock state |r_in> to |r_out> under a d-mode
unitary U is

    per(U[out, in]) / sqrt(Gamma_out * Gamma_in)

where U[out, in] repeats row k of U r_out[k] times and column j r_in[j]
times, and Gamma is the product of occupation factorials.  Collecting the
amplitudes over the whole n-particle basis yields the symmetric-power
matrix of U -- a unitary of dimension C(d+n-1, n) whose construction costs
one permanent per entry.

``mean_photon_numbers`` is the contrasting observable: per-mode expected
occupations after the network, computable in O(d^2) with no permanent at
all.  Equality of that fast route with the first moment of the
permanent-based distribution is the central cross-check in the test suite.

Functions here assume the matrix is unitary (see
``transforms.validate_unitary``); only shape compatibility is checked.
Amplitudes are reported in the gauge where the vacuum is left invariant,
so an overall phase e^{i*phi} on U shows up as e^{i*n*phi} on amplitudes
and cancels from every probability.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .fock import (
    DEFAULT_BASIS_CAP,
    FockBasis,
    enumerate_basis,
    normalization_gamma,
    validate_occupation,
)
from .formatting import format_float
from .permanents import expand_submatrix, permanent_ryser


@dataclass(frozen=True)
class TransitionAmplitude:
    value: complex
    input_state: tuple[int, ...]
    output_state: tuple[int, ...]

    @property
    def probability(self) -> float:
        return abs(self.value) ** 2


@dataclass(frozen=True)
class OutputDistribution:
    """Amplitudes and probabilities over a canonically ordered basis.

    ``probabilities`` holds the raw |amplitude|^2 values; clamping of
    floating-point dust happens only at presentation time
    (``clamped_probabilities``) so normalization checks see the real sum.
    """

    input_state: tuple[int, ...]
    states: tuple[tuple[int, ...], ...]
    amplitudes: np.ndarray
    probabilities: np.ndarray

    def __len__(self) -> int:
        return len(self.states)

    def normalization(self) -> float:
        return float(self.probabilities.sum())

    def clamped_probabilities(self) -> np.ndarray:
        return np.clip(self.probabilities, 0.0, None)


def _check_mode_count(unitary, state: tuple[int, ...]) -> np.ndarray:
    u = np.asarray(unitary, dtype=np.complex128)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {u.shape}")
    if len(state) != u.shape[0]:
        raise ValueError(f"state has {len(state)} modes but the network has {u.shape[0]}")
    return u


def transition_amplitude(unitary, input_state, output_state) -> TransitionAmplitude:
    """Single transition amplitude <out|U|in> between Fock states."""
    inp = validate_occupation(input_state)
    out = validate_occupation(output_state)
    u = _check_mode_count(unitary, inp)
    if len(out) != len(inp):
        raise ValueError(f"input has {len(inp)} modes but output has {len(out)}")
    if sum(inp) != sum(out):
        raise ValueError(
            f"particle number mismatch: input carries {sum(inp)}, output {sum(out)}"
        )
    per = permanent_ryser(expand_submatrix(u, out, inp))
    norm = math.sqrt(normalization_gamma(out) * normalization_gamma(inp))
    return TransitionAmplitude(value=per / norm, input_state=inp, output_state=out)


def _fill_amplitudes(
    u_cols: np.ndarray,
    basis: FockBasis,
    sqrt_gamma_in: float,
    amplitudes: np.ndarray,
    lo: int,
    hi: int,
) -> None:
    d = basis.d
    modes = np.arange(d)
    for i in range(lo, hi):
        out = basis.states[i]
        rows = np.repeat(modes, out)
        per = permanent_ryser(u_cols[rows, :])
        amplitudes[i] = per / (sqrt_gamma_in * math.sqrt(normalization_gamma(out)))


def output_distribution(
    unitary,
    input_state,
    cap: int = DEFAULT_BASIS_CAP,
    workers: int = 1,
) -> OutputDistribution:
    """Probabilities |amplitude|^2 for every n-particle output state.

    One permanent per outcome; outcomes are independent, so with
    ``workers > 1`` they are computed in parallel into preallocated
    canonical-order slots (the result does not depend on the schedule).
    """
    inp = validate_occupation(input_state)
    u = _check_mode_count(unitary, inp)
    d = u.shape[0]
    basis = enumerate_basis(d, sum(inp), cap)
    u_cols = u[:, np.repeat(np.arange(d), inp)]
    sqrt_gamma_in = math.sqrt(normalization_gamma(inp))
    amplitudes = np.zeros(len(basis), dtype=np.complex128)
    if workers > 1 and len(basis) > 1:
        chunk = (len(basis) + workers - 1) // workers
        spans = [(lo, min(lo + chunk, len(basis))) for lo in range(0, len(basis), chunk)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(
                pool.map(
                    lambda span: _fill_amplitudes(
                        u_cols, basis, sqrt_gamma_in, amplitudes, *span
                    ),
                    spans,
                )
            )
    else:
        _fill_amplitudes(u_cols, basis, sqrt_gamma_in, amplitudes, 0, len(basis))
    return OutputDistribution(
        input_state=inp,
        states=basis.states,
        amplitudes=amplitudes,
        probabilities=np.abs(amplitudes) ** 2,
    )


def symmetric_power_matrix(
    unitary,
    n: int,
    cap: int = DEFAULT_BASIS_CAP,
    workers: int = 1,
) -> np.ndarray:
    """The C(d+n-1,n)-dimensional matrix of n-particle amplitudes.

    Entry (i, j) is the amplitude from basis state j to basis state i in
    canonical order; for n = 1 this is U itself.  Built from a unitary it
    is again unitary, and it composes: the matrix of U @ V equals the
    matrix of U times the matrix of V.
    """
    if n < 0:
        raise ValueError("particle number must be nonnegative")
    u = np.asarray(unitary, dtype=np.complex128)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {u.shape}")
    d = u.shape[0]
    basis = enumerate_basis(d, n, cap)
    dim = len(basis)
    modes = np.arange(d)
    row_indices = [np.repeat(modes, s) for s in basis.states]
    sqrt_gammas = [math.sqrt(normalization_gamma(s)) for s in basis.states]
    out = np.zeros((dim, dim), dtype=np.complex128)

    def fill_columns(lo: int, hi: int) -> None:
        for j in range(lo, hi):
            u_cols = u[:, row_indices[j]]
            for i in range(dim):
                per = permanent_ryser(u_cols[row_indices[i], :])
                out[i, j] = per / (sqrt_gammas[i] * sqrt_gammas[j])

    if workers > 1 and dim > 1:
        chunk = (dim + workers - 1) // workers
        spans = [(lo, min(lo + chunk, dim)) for lo in range(0, dim, chunk)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(lambda span: fill_columns(*span), spans))
    else:
        fill_columns(0, dim)
    return out


def mean_photon_numbers(unitary, input_state) -> np.ndarray:
    """Expected photon count per output mode, <N'_k> = sum_j |U_kj|^2 r_j.

    O(d^2) -- no permanent involved; the total equals the particle number.
    """
    inp = validate_occupation(input_state)
    u = _check_mode_count(unitary, inp)
    return (np.abs(u) ** 2) @ np.asarray(inp, dtype=float)


def distribution_to_jsonable(dist: OutputDistribution) -> dict:
    """Distribution payload: input state, then one record per outcome."""
    probs = dist.clamped_probabilities()
    return {
        "input": [int(r) for r in dist.input_state],
        "outcomes": [
            {
                "state": [int(r) for r in state],
                "probability": float(probs[i]),
                "amplitude": [float(dist.amplitudes[i].real), float(dist.amplitudes[i].imag)],
            }
            for i, state in enumerate(dist.states)
        ],
    }


def distribution_to_csv(dist: OutputDistribution, float_format=format_float) -> str:
    """CSV rendering, one `state;probability` row per outcome."""
    probs = dist.clamped_probabilities()
    lines = ["state;probability"]
    for i, state in enumerate(dist.states):
        lines.append(",".join(str(r) for r in state) + ";" + float_format(float(probs[i])))
    return "\n".join(lines) + "\n"
