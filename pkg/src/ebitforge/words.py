"""Word operators: from classical codewords to Alice-only Paulis, and back
through the encoding Clifford to their form on the unencoded state."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import StabilizerSet, symplectic_rank
from .pauli import (
    PauliOperator,
    from_bits,
    identity,
    multiply,
    symplectic_inner,
)

__all__ = [
    "CliffordMap",
    "codeword_to_z_operator",
    "strip_bob",
    "word_operators",
    "synthesize_clifford",
    "pull_back",
    "push_forward",
    "equiv_mod_stabilizer",
    "in_row_space",
    "complete_destabilizers",
    "initial_destabilizers",
]


def codeword_to_z_operator(cw: int, n: int, c: int) -> PauliOperator:
    if not 0 <= cw < 1 << (n + c):
        raise ValueError(f"codeword {cw:#b} does not fit in {n}+{c} qubits")
    return from_bits(cw, 0, n, c)


def strip_bob(wz: PauliOperator, s: StabilizerSet) -> PauliOperator:
    """Cancel each ``Z`` on Bob's qubit ``j`` with the generator carrying ``Z_j`` there.

    Generators are applied in ascending Bob order, on the right.
    """
    if wz.partition != (s.n, s.c):
        raise ValueError("operator and stabilizer sizes differ")
    if wz.x_bits & wz.bob_mask:
        raise ValueError("word operator has X support on Bob's qubits")
    if not wz.is_z_only:
        raise ValueError("strip_bob expects a Z-only operator")
    out = wz
    for j in range(s.c):
        if (wz.z_bits >> (s.c - 1 - j)) & 1:
            out = multiply(out, s.bob_z_generator(j))
    return out


def word_operators(codewords: Sequence[int], s: StabilizerSet) -> list[PauliOperator]:
    """Alice-only word operator for each codeword."""
    return [strip_bob(codeword_to_z_operator(cw, s.n, s.c), s) for cw in codewords]


def _vec(p: PauliOperator) -> int:
    return (p.z_bits << p.num_qubits) | p.x_bits


def _from_vec(v: int, n: int, c: int) -> PauliOperator:
    size = n + c
    return from_bits(v >> size, v & ((1 << size) - 1), n, c)


def _solve_basis(basis: Sequence[int], width: int):
    """Return a function mapping a vector to its coefficient mask over ``basis``.

    Raises ``ValueError`` when the basis is rank deficient.
    """
    # rows: (vector, coefficient mask)
    rows = [(v, 1 << k) for k, v in enumerate(basis)]
    pivots: list[tuple[int, int, int]] = []
    for bit in reversed(range(width)):
        idx = next((i for i, (v, _) in enumerate(rows) if (v >> bit) & 1), None)
        if idx is None:
            continue
        pv, pc = rows.pop(idx)
        rows = [(v ^ pv, c ^ pc) if (v >> bit) & 1 else (v, c) for v, c in rows]
        pivots.append((bit, pv, pc))
    if len(pivots) != len(basis):
        raise ValueError("basis is rank deficient")

    def solve(v: int) -> int | None:
        coeff = 0
        for bit, pv, pc in pivots:
            if (v >> bit) & 1:
                v ^= pv
                coeff ^= pc
        return coeff if v == 0 else None

    return solve


def in_row_space(p: PauliOperator, gens: Sequence[PauliOperator]) -> bool:
    if not gens:
        return p.is_identity
    v = _vec(p)
    return symplectic_rank(list(gens) + [p]) == symplectic_rank(gens) if v else True


def equiv_mod_stabilizer(a: PauliOperator, b: PauliOperator, s: StabilizerSet) -> bool:
    """True when ``a`` and ``b`` differ by a stabilizer element, up to phase."""
    if a.partition != b.partition:
        raise ValueError("operator sizes differ")
    return in_row_space(multiply(a, b), s.generators)


def complete_destabilizers(gens: Sequence[PauliOperator]) -> list[PauliOperator]:
    """Destabilizers ``d_k`` with ``<d_k, g_l> = delta_kl`` and mutually commuting.

    Each ``d_k`` is a particular solution of the linear system, then the set
    is made isotropic by symplectic Gram-Schmidt against the generators.
    """
    if not gens:
        return []
    n, c = gens[0].partition
    size = n + c
    # <d, g> = popcount(d.x & g.z ^ d.z & g.x); with d = (z|x) packed as z<<size|x,
    # that is the dot product with g' = (g.x << size) | g.z.
    duals = [(g.x_bits << size) | g.z_bits for g in gens]
    # Solve duals * d = e_k for each k: reduce the system once.
    rows = [(v, 1 << k) for k, v in enumerate(duals)]
    pivots = []
    for bit in reversed(range(2 * size)):
        idx = next((i for i, (v, _) in enumerate(rows) if (v >> bit) & 1), None)
        if idx is None:
            continue
        pv, pc = rows.pop(idx)
        rows = [(v ^ pv, cc ^ pc) if (v >> bit) & 1 else (v, cc) for v, cc in rows]
        pivots.append((bit, pv, pc))
    if len(pivots) != len(gens):
        raise ValueError("generators are not independent")
    # back substitution: make each pivot row the only one with its pivot bit
    for a in range(len(pivots)):
        bit, pv, pc = pivots[a]
        for b in range(len(pivots)):
            if b != a and (pivots[b][1] >> bit) & 1:
                pivots[b] = (pivots[b][0], pivots[b][1] ^ pv, pivots[b][2] ^ pc)
    # Row r is the combination pc of duals with pivot column ``bit`` and zeros
    # at every other pivot column, so d = sum_r [k in pc_r] e_bit solves
    # <d, g_l> = delta_kl.
    dest = []
    for k in range(len(gens)):
        v = 0
        for bit, _, pc in pivots:
            if (pc >> k) & 1:
                v |= 1 << bit
        dest.append(_from_vec(v, n, c))
    return _gram_schmidt(list(gens), dest)


def _gram_schmidt(gens: list[PauliOperator], dest: list[PauliOperator]) -> list[PauliOperator]:
    out: list[PauliOperator] = []
    for l, d in enumerate(dest):
        for k in range(l):
            if symplectic_inner(out[k], d):
                d = multiply(d, gens[k])
        out.append(d.unsigned())
    return out


def initial_destabilizers(s: StabilizerSet) -> list[PauliOperator]:
    """Fixed partners for the unencoded stabilizer: ``X_i|I`` for ``Z_i|I``;
    for an ebit pair ``(Z_i|Z_j, X_i|X_j)`` the partners ``(X_i|I, Z_i|I)``."""
    n, c = s.n, s.c
    size = n + c
    bit = lambda q: 1 << (size - 1 - q)  # noqa: E731
    out = [from_bits(0, bit(i), n, c) for i in range(n)]
    out += [from_bits(bit(n - c + j), 0, n, c) for j in range(c)]
    return out


@dataclass(frozen=True)
class CliffordMap:
    """Conjugation ``P -> U P U^dagger`` fixed by images of a basis.

    ``source_basis[k]`` maps to ``image_basis[k]``; both are Hermitian with
    sign ``+``, independent, and have the same commutation matrix.
    """

    source_basis: tuple[PauliOperator, ...]
    image_basis: tuple[PauliOperator, ...]
    n: int
    c: int

    def __post_init__(self):
        src, img = self.source_basis, self.image_basis
        if len(src) != len(img) or len(src) != 2 * (self.n + self.c):
            raise ValueError("bases must each hold 2(n+c) operators")
        for a in range(len(src)):
            for b in range(a + 1, len(src)):
                if symplectic_inner(src[a], src[b]) != symplectic_inner(img[a], img[b]):
                    raise ValueError(f"commutation of basis pair ({a}, {b}) is not preserved")
        width = 2 * (self.n + self.c)
        object.__setattr__(self, "_src_solve", _solve_basis([_vec(p) for p in src], width))
        object.__setattr__(self, "_img_solve", _solve_basis([_vec(p) for p in img], width))

    def _transfer(self, w: PauliOperator, solve, frm, to) -> PauliOperator:
        if w.partition != (self.n, self.c):
            raise ValueError("operator size does not match the map")
        coeff = solve(_vec(w))
        ident = identity(self.n, self.c)
        a, b = ident, ident
        k = 0
        while coeff:
            if coeff & 1:
                a = multiply(a, frm[k])
                b = multiply(b, to[k])
            coeff >>= 1
            k += 1
        # w = i^m * a, so the image is i^m * b
        m = (w.phase_exp - a.phase_exp) % 4
        return PauliOperator(b.phase_exp + m, b.z_bits, b.x_bits, self.n, self.c)

    def forward(self, w: PauliOperator) -> PauliOperator:
        return self._transfer(w, self._src_solve, self.source_basis, self.image_basis)

    def backward(self, w: PauliOperator) -> PauliOperator:
        return self._transfer(w, self._img_solve, self.image_basis, self.source_basis)


def synthesize_clifford(initial: StabilizerSet, target: StabilizerSet) -> CliffordMap:
    """Map the unencoded stabilizer onto ``target`` generator by generator.

    The source partners are fixed (see :func:`initial_destabilizers`). Target
    partners come from :func:`complete_destabilizers` and are then recombined
    so that their commutation pattern matches the source partners exactly.
    """
    if (initial.n, initial.c) != (target.n, target.c):
        raise ValueError("initial and target sizes differ")
    from .graphs import anticommutation_signature

    if anticommutation_signature(initial) != anticommutation_signature(target):
        raise ValueError("initial and target stabilizers have different ebit structure")
    n, c = initial.n, initial.c
    sg, tg = list(initial.generators), list(target.generators)
    s_dest = initial_destabilizers(initial)
    s_std = complete_destabilizers(sg)
    t_std = complete_destabilizers(tg)
    t_dest = []
    for d in s_dest:
        # coefficients of d over (sg, s_std): <d, g_l> picks s_std[l], <d, s_std[l]> picks sg[l]
        acc = identity(n, c)
        for l in range(len(sg)):
            if symplectic_inner(d, s_std[l]):
                acc = multiply(acc, tg[l])
            if symplectic_inner(d, sg[l]):
                acc = multiply(acc, t_std[l])
        t_dest.append(acc.unsigned())
    src = tuple(p.unsigned() for p in sg + s_dest)
    img = tuple(p.unsigned() for p in tg + t_dest)
    return CliffordMap(src, img, n, c)


def pull_back(w: PauliOperator, cmap: CliffordMap) -> PauliOperator:
    """``U^dagger w U``: the operator acting before encoding."""
    return cmap.backward(w)


def push_forward(w: PauliOperator, cmap: CliffordMap) -> PauliOperator:
    """``U w U^dagger``."""
    return cmap.forward(w)

