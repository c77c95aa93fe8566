"""Fock states of n indistinguishable bosons in d modes.

A state is labeled either by an occupation vector (r_1, ..., r_d) of
nonnegative counts summing to n, or equivalently by the nondecreasing
sequence (j_1 <= ... <= j_n) of the modes each particle sits in (modes are
numbered 1..d in sequences).  Occupation vectors are the primary
representation here; sequences are a view.

The canonical basis order is lexicographically decreasing occupation
vectors -- (n, 0, ..., 0) first, (0, ..., 0, n) last -- which is the same
as ascending lexicographic order on mode sequences.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterator, Sequence

#: default limit on the number of basis states materialized at once
DEFAULT_BASIS_CAP = 10**6


def basis_size(d: int, n: int) -> int:
    """Number of n-particle states in d modes: C(d+n-1, n)."""
    if d < 1:
        raise ValueError("need at least one mode")
    if n < 0:
        raise ValueError("particle number must be nonnegative")
    return math.comb(d + n - 1, n)


def _occupations(d: int, n: int) -> Iterator[tuple[int, ...]]:
    # lexicographically decreasing, (n,0,...,0) first; iterative successor
    occ = [0] * d
    occ[0] = n
    while True:
        yield tuple(occ)
        k = -1
        for i in range(d - 2, -1, -1):
            if occ[i] > 0:
                k = i
                break
        if k < 0:
            return
        rest = occ[d - 1]
        occ[k] -= 1
        occ[k + 1] = rest + 1
        for i in range(k + 2, d):
            occ[i] = 0


@dataclass(frozen=True)
class FockBasis:
    """The complete, canonically ordered n-particle basis for d modes."""

    d: int
    n: int
    states: tuple[tuple[int, ...], ...]
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.states)

    def state_at(self, i: int) -> tuple[int, ...]:
        return self.states[i]

    def index_of(self, occupation: Sequence[int]) -> int:
        """Position of an occupation vector in the canonical order."""
        key = tuple(int(r) for r in occupation)
        if len(key) != self.d or any(r < 0 for r in key) or sum(key) != self.n:
            raise ValueError(
                f"state {key} does not belong to the (d={self.d}, n={self.n}) basis"
            )
        if not self._index:
            self._index.update({s: i for i, s in enumerate(self.states)})
        return self._index[key]


def enumerate_basis(d: int, n: int, cap: int = DEFAULT_BASIS_CAP) -> FockBasis:
    """Enumerate all occupation vectors with sum n over d modes.

    The result is duplicate-free and canonically ordered; its size
    C(d+n-1, n) is checked against ``cap`` before anything is built.
    """
    size = basis_size(d, n)
    if size > cap:
        raise ValueError(f"basis size C({d + n - 1},{n}) = {size} exceeds cap {cap}")
    return FockBasis(d=d, n=n, states=tuple(_occupations(d, n)))


def validate_occupation(occupation: Sequence[int]) -> tuple[int, ...]:
    occ = tuple(int(r) for r in occupation)
    if not occ:
        raise ValueError("occupation vector must have at least one mode")
    if any(r < 0 for r in occ):
        raise ValueError(f"occupation numbers must be nonnegative, got {occ}")
    return occ


def sequence_to_occupation(sequence: Sequence[int], d: int) -> tuple[int, ...]:
    """Count how often each mode appears in a nondecreasing mode sequence.

    Sequence entries are 1-based mode labels in 1..d.
    """
    if d < 1:
        raise ValueError("need at least one mode")
    seq = tuple(int(j) for j in sequence)
    occ = [0] * d
    prev = 1
    for j in seq:
        if j < 1 or j > d:
            raise ValueError(f"mode index {j} out of range 1..{d}")
        if j < prev:
            raise ValueError(f"mode sequence must be nondecreasing, got {seq}")
        occ[j - 1] += 1
        prev = j
    return tuple(occ)


def occupation_to_sequence(occupation: Sequence[int]) -> tuple[int, ...]:
    """Inverse of sequence_to_occupation; output is nondecreasing, 1-based."""
    occ = validate_occupation(occupation)
    seq: list[int] = []
    for mode, r in enumerate(occ, start=1):
        seq.extend([mode] * r)
    return tuple(seq)


def normalization_gamma(occupation: Sequence[int]) -> int:
    """Product of factorials of the occupation numbers, Gamma = prod r_k!.

    Exact (arbitrary-precision) integer; Gamma = 1 exactly when no mode
    holds more than one particle.
    """
    occ = validate_occupation(occupation)
    gamma = 1
    for r in occ:
        gamma *= math.factorial(r)
    return gamma


_STATE_RE = re.compile(r"^\s*(?:\||∣)?\s*([0-9,\s]+?)\s*(?:⟩|>)?\s*$")


def format_state(occupation: Sequence[int]) -> str:
    """Render an occupation vector as a ket string, e.g. |2,0,1⟩."""
    occ = validate_occupation(occupation)
    return "|" + ",".join(str(r) for r in occ) + "⟩"


def parse_state(text: str) -> tuple[int, ...]:
    """Parse ``|2,0,1>``, ``|2,0,1⟩`` or plain ``2,0,1`` into occupations."""
    m = _STATE_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse state {text!r}")
    try:
        occ = tuple(int(part.strip()) for part in m.group(1).split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse state {text!r}") from exc
    return validate_occupation(occ)
