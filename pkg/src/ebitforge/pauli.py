"""Phase-tracked Pauli operators on Alice|Bob qubits in binary symplectic form.

An operator is stored as ``i**phase * Z^z X^x`` where ``z`` and ``x`` are
bit masks packed into Python ints. Qubit 1 (the leftmost letter of the text
form) is the most significant bit; the Alice block precedes the Bob block, so
the mask of ``ZIIZX|Z`` reads ``0b100101`` for its Z part.

Because ``ZX = iY``, a site carrying ``Y`` contributes ``z=1, x=1`` and a
phase exponent of 3.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np

__all__ = [
    "PauliOperator",
    "PauliParseError",
    "PartitionMismatch",
    "parse_pauli",
    "render_pauli",
    "multiply",
    "product",
    "commutes",
    "weight",
    "equal_up_to_phase",
    "from_bits",
    "identity",
    "single",
    "symplectic_inner",
    "popcount",
    "to_matrix",
]

Region = Literal["alice", "bob", "all"]

_PREFIXES = {"": 0, "+": 0, "i": 1, "+i": 1, "-": 2, "-i": 3}
_PREFIX_OF = {0: "", 1: "i", 2: "-", 3: "-i"}


class PauliParseError(ValueError):
    pass


class PartitionMismatch(ValueError):
    pass


def popcount(v: int) -> int:
    return v.bit_count()


@dataclass(frozen=True)
class PauliOperator:
    """``i**phase_exp * Z^z_bits X^x_bits`` on ``alice_len + bob_len`` qubits."""

    phase_exp: int
    z_bits: int
    x_bits: int
    alice_len: int
    bob_len: int = 0

    def __post_init__(self):
        size = self.alice_len + self.bob_len
        if self.alice_len < 0 or self.bob_len < 0:
            raise ValueError("partition sizes must be non-negative")
        if self.z_bits >> size or self.x_bits >> size or self.z_bits < 0 or self.x_bits < 0:
            raise ValueError(f"bit masks do not fit in {size} qubits")
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    @property
    def num_qubits(self) -> int:
        return self.alice_len + self.bob_len

    @property
    def partition(self) -> tuple[int, int]:
        return (self.alice_len, self.bob_len)

    @property
    def bob_mask(self) -> int:
        return (1 << self.bob_len) - 1

    @property
    def alice_mask(self) -> int:
        return ((1 << self.alice_len) - 1) << self.bob_len

    @property
    def num_y(self) -> int:
        return popcount(self.z_bits & self.x_bits)

    @property
    def sign_exp(self) -> int:
        """Exponent ``s`` with ``self = i**s * (product of I/X/Y/Z letters)``."""
        return (self.phase_exp + self.num_y) % 4

    @property
    def is_hermitian(self) -> bool:
        return self.sign_exp % 2 == 0

    @property
    def is_identity(self) -> bool:
        return self.z_bits == 0 and self.x_bits == 0

    @property
    def is_z_only(self) -> bool:
        return self.x_bits == 0

    def letters(self) -> str:
        """Unsigned letter string without the separator."""
        out = []
        for q in range(self.num_qubits):
            shift = self.num_qubits - 1 - q
            z, x = (self.z_bits >> shift) & 1, (self.x_bits >> shift) & 1
            out.append("IXZY"[z * 2 + x])
        return "".join(out)

    def unsigned(self) -> PauliOperator:
        """The same letters with sign ``+`` (Hermitian canonical form)."""
        return PauliOperator(3 * self.num_y, self.z_bits, self.x_bits, self.alice_len, self.bob_len)

    def with_sign(self, sign_exp: int) -> PauliOperator:
        return PauliOperator(sign_exp + 3 * self.num_y, self.z_bits, self.x_bits,
                             self.alice_len, self.bob_len)

    def alice_part(self) -> PauliOperator:
        """Letters on Alice's block only (sign +, Bob set to identity)."""
        m = self.alice_mask
        return PauliOperator(0, self.z_bits & m, self.x_bits & m,
                             self.alice_len, self.bob_len).unsigned()

    def __mul__(self, other: PauliOperator) -> PauliOperator:
        return multiply(self, other)

    def __str__(self) -> str:
        return render_pauli(self)

    def __repr__(self) -> str:
        return f"PauliOperator({render_pauli(self)!r})"


def identity(alice_len: int, bob_len: int = 0) -> PauliOperator:
    return PauliOperator(0, 0, 0, alice_len, bob_len)


def from_bits(z_bits: int, x_bits: int, alice_len: int, bob_len: int = 0,
              sign_exp: int = 0) -> PauliOperator:
    """Build an operator from masks, with ``sign_exp`` relative to the letter form."""
    return PauliOperator(sign_exp + 3 * popcount(z_bits & x_bits), z_bits, x_bits,
                         alice_len, bob_len)


def single(letter: str, qubit: int, alice_len: int, bob_len: int = 0) -> PauliOperator:
    """``letter`` on 0-based ``qubit`` (Alice qubits first, then Bob)."""
    size = alice_len + bob_len
    if not 0 <= qubit < size:
        raise IndexError(f"qubit {qubit} out of range for {size} qubits")
    bit = 1 << (size - 1 - qubit)
    z = bit if letter in "ZY" else 0
    x = bit if letter in "XY" else 0
    if letter not in "IXYZ" or len(letter) != 1:
        raise PauliParseError(f"unknown Pauli letter {letter!r}")
    return from_bits(z, x, alice_len, bob_len)


def parse_pauli(text: str) -> PauliOperator:
    """Parse text such as ``"XZIIZ|I"``, ``"-iY|"`` or ``"IXI|II"``.

    >>> parse_pauli("Y|")
    PauliOperator('Y|')
    """
    s = text.strip()
    if s.count("|") != 1:
        raise PauliParseError(f"expected exactly one '|' separator in {text!r}")
    k = 0
    while k < len(s) and s[k] in "+-i":
        k += 1
    prefix, body = s[:k], s[k:]
    if prefix not in _PREFIXES:
        raise PauliParseError(f"malformed sign prefix {prefix!r} in {text!r}")
    alice, bob = body.split("|")
    letters = alice + bob
    bad = set(letters) - set("IXYZ")
    if bad:
        raise PauliParseError(f"malformed character(s) {sorted(bad)} in {text!r}")
    z = x = 0
    for ch in letters:
        z = (z << 1) | (ch in "ZY")
        x = (x << 1) | (ch in "XY")
    return from_bits(z, x, len(alice), len(bob), _PREFIXES[prefix])


def render_pauli(p: PauliOperator, signed: bool = True) -> str:
    """Text form; the sign prefix is one of ``'', 'i', '-', '-i'``."""
    letters = p.letters()
    body = letters[: p.alice_len] + "|" + letters[p.alice_len:]
    return (_PREFIX_OF[p.sign_exp] if signed else "") + body


def _check_partition(a: PauliOperator, b: PauliOperator) -> None:
    if a.partition != b.partition:
        raise PartitionMismatch(f"partition {a.partition} does not match {b.partition}")


def multiply(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    """Operator product ``a @ b``.

    Moving ``X^{x_a}`` past ``Z^{z_b}`` costs ``(-1)**|x_a & z_b|``, so the
    phase exponent is ``m_a + m_b + 2|x_a & z_b| (mod 4)``.
    """
    _check_partition(a, b)
    phase = a.phase_exp + b.phase_exp + 2 * popcount(a.x_bits & b.z_bits)
    return PauliOperator(phase, a.z_bits ^ b.z_bits, a.x_bits ^ b.x_bits,
                         a.alice_len, a.bob_len)


def product(ops: Iterable[PauliOperator], start: PauliOperator | None = None) -> PauliOperator:
    """Ordered product ``start @ ops[0] @ ops[1] ...``."""
    acc = start
    for op in ops:
        acc = op if acc is None else multiply(acc, op)
    if acc is None:
        raise ValueError("empty product needs a start operator")
    return acc


def symplectic_inner(a: PauliOperator, b: PauliOperator) -> int:
    return popcount((a.x_bits & b.z_bits) ^ (a.z_bits & b.x_bits)) & 1


def commutes(a: PauliOperator, b: PauliOperator) -> bool:
    _check_partition(a, b)
    return symplectic_inner(a, b) == 0


def weight(p: PauliOperator, region: Region = "all") -> int:
    support = p.z_bits | p.x_bits
    if region == "alice":
        support &= p.alice_mask
    elif region == "bob":
        support &= p.bob_mask
    elif region != "all":
        raise ValueError(f"unknown region {region!r}")
    return popcount(support)


def equal_up_to_phase(a: PauliOperator, b: PauliOperator) -> bool:
    return a.partition == b.partition and a.z_bits == b.z_bits and a.x_bits == b.x_bits


_I2 = np.eye(2, dtype=complex)
_X2 = np.array([[0, 1], [1, 0]], dtype=complex)
_Z2 = np.array([[1, 0], [0, -1]], dtype=complex)


def to_matrix(p: PauliOperator) -> np.ndarray:
    """Dense ``2**k x 2**k`` matrix; meant for small ``k`` only."""
    mat = np.ones((1, 1), dtype=complex)
    size = p.num_qubits
    for q in range(size):
        shift = size - 1 - q
        site = _I2
        if (p.z_bits >> shift) & 1:
            site = site @ _Z2
        if (p.x_bits >> shift) & 1:
            site = site @ _X2
        mat = np.kron(mat, site)
    return (1j ** p.phase_exp) * mat
