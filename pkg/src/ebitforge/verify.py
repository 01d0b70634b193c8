"""Dense state-vector ground truth for EA-CWS codes.

Basis index ``b`` has qubit 1 as its most significant bit, matching the bit
masks of :class:`~ebitforge.pauli.PauliOperator`, so applying ``i^m Z^z X^x``
is ``|b> -> i^m (-1)^{|z & (b ^ x)|} |b ^ x>``.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .graphs import StabilizerSet
from .induction import enumerate_errors
from .pauli import PauliOperator, render_pauli, weight

__all__ = [
    "StateVector",
    "VerificationReport",
    "KLResult",
    "apply_pauli",
    "stabilizer_state",
    "basis_states",
    "kl_check",
    "distance",
    "build_encoder",
    "verify_code",
    "NonOrthogonalBasis",
]

MAX_QUBITS = 24


class NonOrthogonalBasis(ValueError):
    pass


_PHASES = np.array([1, 1j, -1, -1j])


class _Indexer:
    """Cached index arrays for one register size."""

    def __init__(self, num_qubits: int):
        if num_qubits > MAX_QUBITS:
            raise ValueError(f"{num_qubits} qubits exceeds the dense limit of {MAX_QUBITS}")
        self.size = num_qubits
        self.idx = np.arange(1 << num_qubits, dtype=np.int64)
        self._parity_cache: dict[int, np.ndarray] = {}

    def parity(self, mask: int) -> np.ndarray:
        got = self._parity_cache.get(mask)
        if got is None:
            got = np.bitwise_count(self.idx & mask) & 1
            if len(self._parity_cache) < 4096:
                self._parity_cache[mask] = got
        return got


_INDEXERS: dict[int, _Indexer] = {}


def _indexer(k: int) -> _Indexer:
    if k not in _INDEXERS:
        _INDEXERS[k] = _Indexer(k)
    return _INDEXERS[k]


def apply_pauli(p: PauliOperator, amps: np.ndarray) -> np.ndarray:
    """``p |psi>`` by index permutation and sign, no matrix products."""
    ix = _indexer(p.num_qubits)
    if amps.shape[0] != ix.idx.shape[0]:
        raise ValueError("state dimension does not match the operator")
    # (P psi)[b ^ x] = i^m (-1)^{z.(b^x)} psi[b]  =>  (P psi)[a] = i^m (-1)^{z.a} psi[a ^ x]
    src = amps[ix.idx ^ p.x_bits] if p.x_bits else amps
    signs = 1 - 2 * ix.parity(p.z_bits).astype(np.int8) if p.z_bits else 1
    return _PHASES[p.phase_exp] * signs * src


@dataclass(frozen=True, eq=False)
class StateVector:
    amplitudes: np.ndarray
    num_qubits: int

    def __post_init__(self):
        a = np.asarray(self.amplitudes, dtype=complex)
        if a.shape != (1 << self.num_qubits,):
            raise ValueError("amplitude count must be 2**num_qubits")
        if abs(np.linalg.norm(a) - 1) > 1e-12:
            raise ValueError("state is not normalised")
        object.__setattr__(self, "amplitudes", a)

    def apply(self, p: PauliOperator) -> StateVector:
        return StateVector(apply_pauli(p, self.amplitudes), self.num_qubits)

    def inner(self, other: StateVector) -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))


def stabilizer_state(s: StabilizerSet) -> StateVector:
    """Joint +1 eigenvector of ``s``, by projecting computational basis seeds."""
    k = s.n + s.c
    dim = 1 << k
    for seed in range(dim):
        psi = np.zeros(dim, dtype=complex)
        psi[seed] = 1.0
        for g in s.generators:
            if not g.is_hermitian:
                raise ValueError(f"generator {g} is not Hermitian")
            psi = 0.5 * (psi + apply_pauli(g, psi))
            nrm = np.linalg.norm(psi)
            if nrm < 1e-9:
                break
            psi /= nrm
        else:
            return StateVector(psi, k)
    raise ValueError("no stabilizer state found; generators are not a valid stabilizer")


def basis_states(s: StabilizerSet, word_ops: Sequence[PauliOperator],
                 tol: float = 1e-9) -> list[StateVector]:
    base = stabilizer_state(s)
    states = [base.apply(w) for w in word_ops]
    if states:
        m = np.array([st.amplitudes for st in states])
        gram = m.conj() @ m.T
        off = np.abs(gram - np.eye(len(states)))
        if off.max() > tol:
            i, j = np.unravel_index(np.argmax(off), off.shape)
            raise NonOrthogonalBasis(f"basis states {i} and {j} overlap by {gram[i, j]:.3g}")
    return states


@dataclass
class KLResult:
    passed: bool
    checked: int
    witness: PauliOperator | None = None
    matrix: np.ndarray | None = None

    def __bool__(self) -> bool:
        return self.passed


def _kl_matrix(basis: np.ndarray, e: PauliOperator) -> np.ndarray:
    images = np.array([apply_pauli(e, v) for v in basis])
    return basis.conj() @ images.T


def _kl_ok(m: np.ndarray, tol: float) -> bool:
    lam = np.trace(m) / m.shape[0]
    return float(np.abs(m - lam * np.eye(m.shape[0])).max()) <= tol


def kl_check(basis: Sequence[StateVector], errors: Iterable[PauliOperator],
             tol: float = 1e-9, threads: int = 1) -> KLResult:
    """Every ``<w_i|E|w_j>`` must equal ``lambda_E delta_ij`` within ``tol``.

    Returns the first failing error (in iteration order) and its matrix.
    """
    errors = list(errors)
    if not basis:
        return KLResult(True, len(errors))
    mat = np.array([b.amplitudes for b in basis])

    def check(e: PauliOperator):
        m = _kl_matrix(mat, e)
        return None if _kl_ok(m, tol) else m

    if threads > 1 and len(errors) > 64:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(check, errors))
    else:
        results = []
        for e in errors:
            r = check(e)
            results.append(r)
            if r is not None:
                break
    for i, r in enumerate(results):
        if r is not None:
            return KLResult(False, i + 1, errors[i], r)
    return KLResult(True, len(errors))


@dataclass
class DistanceResult:
    """``distance`` is ``None`` when no error up to ``wmax`` fails (reported as "> wmax")."""

    distance: int | None
    wmax: int
    witness: PauliOperator | None = None
    checked: int = 0

    def __str__(self) -> str:
        return f"> {self.wmax}" if self.distance is None else str(self.distance)


def distance(s: StabilizerSet, word_ops: Sequence[PauliOperator], wmax: int,
             tol: float = 1e-9, threads: int = 1) -> DistanceResult:
    """Smallest Alice-only error weight whose KL matrix is not scalar."""
    if not 1 <= wmax <= s.n:
        raise ValueError(f"wmax={wmax} outside 1..{s.n}")
    basis = basis_states(s, word_ops, tol)
    checked = 0
    by_weight: dict[int, list[PauliOperator]] = {}
    for e in enumerate_errors(s.n, wmax, s.c):
        by_weight.setdefault(weight(e), []).append(e)
    for w in range(1, wmax + 1):
        res = kl_check(basis, by_weight.get(w, []), tol, threads)
        checked += res.checked
        if not res.passed:
            return DistanceResult(w, wmax, res.witness, checked)
    return DistanceResult(None, wmax, None, checked)


def build_encoder(s: StabilizerSet, word_ops: Sequence[PauliOperator],
                  tol: float = 1e-9) -> np.ndarray:
    """Isometry whose ``l``-th column is ``w_l |S>``."""
    states = basis_states(s, word_ops, tol)
    return np.array([st.amplitudes for st in states]).T


@dataclass
class VerificationReport:
    params: dict
    orthonormal: bool
    detected_errors: int
    distance: int | None
    wmax: int
    claimed_distance: int | None = None
    first_failure: PauliOperator | None = None
    failure_matrix: np.ndarray | None = None
    stages: dict = field(default_factory=dict)
    runtime: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        if not self.orthonormal:
            return False
        if any(str(v).startswith("fail") for v in self.stages.values()):
            return False
        if self.claimed_distance is None:
            return True
        if self.distance is None:
            return self.wmax >= self.claimed_distance - 1
        return self.distance >= self.claimed_distance

    def to_json(self) -> dict:
        out = {
            "params": self.params,
            "passed": self.passed,
            "stages": self.stages,
            "orthonormal": self.orthonormal,
            "detected_errors": self.detected_errors,
            "distance": self.distance if self.distance is not None else f"> {self.wmax}",
            "wmax": self.wmax,
            "claimed_distance": self.claimed_distance,
            "runtime": self.runtime,
        }
        if self.first_failure is not None:
            out["witness"] = render_pauli(self.first_failure)
        if self.failure_matrix is not None:
            m = self.failure_matrix
            out["witness_matrix"] = {"real": np.round(m.real, 12).tolist(),
                                     "imag": np.round(m.imag, 12).tolist()}
        return out


def verify_code(s: StabilizerSet, word_ops: Sequence[PauliOperator], wmax: int,
                claimed_distance: int | None = None, tol: float = 1e-9,
                threads: int = 1, params: dict | None = None) -> VerificationReport:
    """Orthonormality, then the distance sweep up to ``wmax``."""
    t0 = time.perf_counter()
    params = dict(params or {})
    try:
        basis = basis_states(s, word_ops, tol)
    except NonOrthogonalBasis as exc:
        return VerificationReport(params, False, 0, None, wmax, claimed_distance,
                                  stages={"orthonormal": f"fail: {exc}"},
                                  runtime={"seconds": time.perf_counter() - t0})
    t1 = time.perf_counter()
    checked = 0
    found = None
    witness = None
    matrix = None
    for w in range(1, wmax + 1):
        errs = [e for e in enumerate_errors(s.n, w, s.c) if weight(e) == w]
        res = kl_check(basis, errs, tol, threads)
        checked += res.checked - (0 if res.passed else 1)
        if not res.passed:
            found, witness, matrix = w, res.witness, res.matrix
            break
    t2 = time.perf_counter()
    stages = {"orthonormal": "pass"}
    if claimed_distance is not None:
        ok = (found is None and wmax >= claimed_distance - 1) or (found is not None and found >= claimed_distance)
        stages["claimed_distance"] = "pass" if ok else "fail"
    return VerificationReport(params, True, checked, found, wmax, claimed_distance,
                              witness, matrix, stages,
                              {"basis_seconds": t1 - t0, "sweep_seconds": t2 - t1})
