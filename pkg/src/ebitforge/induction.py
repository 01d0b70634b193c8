"""Effective Z-only errors induced by Pauli errors on Alice's qubits."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product as cartesian
from math import comb
from typing import Iterable, Iterator, Sequence

from .graphs import StabilizerSet
from .pauli import PauliOperator, from_bits, multiply, render_pauli

__all__ = [
    "InducedError",
    "BobSupportError",
    "cl_map",
    "cl_map_by_multiplication",
    "enumerate_errors",
    "count_errors",
    "induce_set",
    "format_vector",
    "parse_vector",
    "induced_report",
]


class BobSupportError(ValueError):
    """A physical error touched Bob's qubits, which never cross the channel."""


def format_vector(bits: int, n: int, c: int) -> str:
    """``bits`` as ``aaaaa|bb`` (Alice block first, leftmost = qubit 1)."""
    s = format(bits, f"0{n + c}b") if n + c else ""
    return f"{s[:n]}|{s[n:]}"


def parse_vector(text: str) -> tuple[int, int, int]:
    """Inverse of :func:`format_vector`; returns ``(bits, n, c)``."""
    if text.count("|") != 1:
        raise ValueError(f"expected one '|' in {text!r}")
    a, b = text.split("|")
    if set(a + b) - {"0", "1"}:
        raise ValueError(f"non-binary character in {text!r}")
    return (int(a + b, 2) if a + b else 0), len(a), len(b)


@dataclass(frozen=True)
class InducedError:
    alice_bits: int
    bob_bits: int
    origin: PauliOperator

    @property
    def n(self) -> int:
        return self.origin.alice_len

    @property
    def c(self) -> int:
        return self.origin.bob_len

    @property
    def bits(self) -> int:
        """Alice and Bob parts packed into one ``n + c`` bit vector."""
        return (self.alice_bits << self.c) | self.bob_bits

    def __str__(self) -> str:
        return format_vector(self.bits, self.n, self.c)


def _check_alice_only(e: PauliOperator, s: StabilizerSet) -> None:
    if e.partition != (s.n, s.c):
        raise ValueError(f"error on {e.partition} qubits, stabilizer on {(s.n, s.c)}")
    bob = e.bob_mask
    if (e.z_bits | e.x_bits) & bob:
        raise BobSupportError(f"error {render_pauli(e)} acts on Bob's qubits")


def cl_map(e: PauliOperator, s: StabilizerSet) -> InducedError:
    """Closed form: Alice bits ``v xor sum_l u_l r_l``, Bob bit ``j`` set
    iff ``e`` has X support on the ebit-carrying qubit ``n-c+j``.

    Reading the ``r_l`` off ``s`` (rather than a graph) keeps this valid for
    any generator set in standard form.
    """
    _check_alice_only(e, s)
    n, c = s.n, s.c
    u = e.x_bits >> c
    alice = e.z_bits >> c
    for l in range(n):
        if (u >> (n - 1 - l)) & 1:
            alice ^= s.generators[l].z_bits >> c
    return InducedError(alice, u & ((1 << c) - 1), e)


def cl_map_by_multiplication(e: PauliOperator, s: StabilizerSet) -> InducedError:
    """Cancel every X in ``e`` with the matching generator and read off the Z string."""
    _check_alice_only(e, s)
    n, c = s.n, s.c
    acc = e
    for l in range(n):
        if (e.x_bits >> (n + c - 1 - l)) & 1:
            acc = multiply(acc, s.generators[l])
    if acc.x_bits:
        raise ValueError(f"generators of {s} are not in standard form")
    return InducedError(acc.z_bits >> c, acc.z_bits & ((1 << c) - 1), e)


def count_errors(n: int, t: int) -> int:
    return sum(comb(n, w) * 3 ** w for w in range(1, t + 1))


def enumerate_errors(n: int, t: int, c: int = 0) -> Iterator[PauliOperator]:
    """Every Alice-only Pauli of weight ``1..t``.

    Order: weight, then support positions lexicographically, then letters
    with ``X < Y < Z`` from the leftmost site.
    """
    if not 1 <= t <= n:
        raise ValueError(f"weight bound t={t} outside 1..{n}")
    total = n + c
    for w in range(1, t + 1):
        for support in combinations(range(n), w):
            for letters in cartesian("XYZ", repeat=w):
                z = x = 0
                for q, ch in zip(support, letters):
                    bit = 1 << (total - 1 - q)
                    if ch in "ZY":
                        z |= bit
                    if ch in "XY":
                        x |= bit
                yield from_bits(z, x, n, c)


def induce_set(errors: Iterable[PauliOperator], s: StabilizerSet) -> list[InducedError]:
    return [cl_map(e, s) for e in errors]


def induced_report(induced: Sequence[InducedError]) -> str:
    return "\n".join(f"{render_pauli(e.origin, signed=False)} -> {e}" for e in induced)
