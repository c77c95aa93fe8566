"""Number-conserving fermionic linear networks: the efficiently simulable twin.

Fermions in d modes occupy each mode at most once, so an n-particle state
is a 0/1 vector with n ones.  Under the same d x d unitary that drives the
bosonic case, the transition amplitude is the *determinant* of the n x n
submatrix of U picked out by the occupied output rows and occupied input
columns (both ascending) -- polynomial cost where the boson needs a
permanent.  No Gamma factor appears since every occupation is 0 or 1.

Ascending mode order fixes the Jordan-Wigner signs consistently; swapping
two rows of the submatrix flips the amplitude sign but never a probability.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Sequence

import numpy as np

from .bosonic import OutputDistribution, _check_mode_count
from .fock import DEFAULT_BASIS_CAP
from .permanents import determinant


def validate_fermion_state(state: Sequence[int]) -> tuple[int, ...]:
    occ = tuple(int(x) for x in state)
    if not occ:
        raise ValueError("fermion state must have at least one mode")
    if any(x not in (0, 1) for x in occ):
        raise ValueError(f"fermion occupations must be 0 or 1, got {occ}")
    return occ


def fermion_basis_size(d: int, n: int) -> int:
    """Number of n-fermion states in d modes: C(d, n)."""
    if d < 1:
        raise ValueError("need at least one mode")
    if n < 0 or n > d:
        raise ValueError(f"cannot place {n} fermions in {d} modes")
    return math.comb(d, n)


def enumerate_fermion_basis(
    d: int, n: int, cap: int = DEFAULT_BASIS_CAP
) -> tuple[tuple[int, ...], ...]:
    """All 0/1 occupation vectors with n ones, in canonical order.

    Canonical order matches the bosonic one (lexicographically decreasing
    occupation vectors), which is ascending lexicographic order on the
    occupied-mode combinations.
    """
    size = fermion_basis_size(d, n)
    if size > cap:
        raise ValueError(f"basis size C({d},{n}) = {size} exceeds cap {cap}")
    states = []
    for occupied in combinations(range(d), n):
        state = [0] * d
        for k in occupied:
            state[k] = 1
        states.append(tuple(state))
    return tuple(states)


def occupied_modes(state: Sequence[int]) -> np.ndarray:
    """Ascending 0-based indices of the occupied modes."""
    return np.flatnonzero(np.asarray(state, dtype=int))


def fermion_amplitude(unitary, input_state, output_state) -> complex:
    """Amplitude <out|U|in>: determinant of the occupied-mode submatrix."""
    inp = validate_fermion_state(input_state)
    out = validate_fermion_state(output_state)
    u = _check_mode_count(unitary, inp)
    if len(out) != len(inp):
        raise ValueError(f"input has {len(inp)} modes but output has {len(out)}")
    if sum(inp) != sum(out):
        raise ValueError(
            f"particle number mismatch: input carries {sum(inp)}, output {sum(out)}"
        )
    sub = u[np.ix_(occupied_modes(out), occupied_modes(inp))]
    return determinant(sub)


def fermion_distribution(
    unitary,
    input_state,
    cap: int = DEFAULT_BASIS_CAP,
    workers: int = 1,
) -> OutputDistribution:
    """Probabilities |det|^2 over all C(d, n) fermionic outcomes."""
    inp = validate_fermion_state(input_state)
    u = _check_mode_count(unitary, inp)
    d = u.shape[0]
    states = enumerate_fermion_basis(d, sum(inp), cap)
    u_cols = u[:, occupied_modes(inp)]
    amplitudes = np.zeros(len(states), dtype=np.complex128)

    def fill(lo: int, hi: int) -> None:
        for i in range(lo, hi):
            amplitudes[i] = determinant(u_cols[occupied_modes(states[i]), :])

    if workers > 1 and len(states) > 1:
        chunk = (len(states) + workers - 1) // workers
        spans = [(lo, min(lo + chunk, len(states))) for lo in range(0, len(states), chunk)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(lambda span: fill(*span), spans))
    else:
        fill(0, len(states))
    return OutputDistribution(
        input_state=inp,
        states=states,
        amplitudes=amplitudes,
        probabilities=np.abs(amplitudes) ** 2,
    )


def fermion_mode_probability(unitary, input_state, mode: int) -> float:
    """Probability of finding a fermion in ``mode`` (0-based) after U.

    p = sum_j |U[mode, j]|^2 x_j -- the poly-time single-mode marginal,
    the same algebraic form as the bosonic mean photon number restricted
    to 0/1 occupations.
    """
    inp = validate_fermion_state(input_state)
    u = _check_mode_count(unitary, inp)
    if not 0 <= mode < u.shape[0]:
        raise ValueError(f"mode index {mode} out of range 0..{u.shape[0] - 1}")
    return float((np.abs(u[mode, :]) ** 2) @ np.asarray(inp, dtype=float))


def fermion_mode_probabilities(unitary, input_state) -> np.ndarray:
    """All d single-mode marginals at once; sums to the particle number."""
    inp = validate_fermion_state(input_state)
    u = _check_mode_count(unitary, inp)
    return (np.abs(u) ** 2) @ np.asarray(inp, dtype=float)
