"""Classical codes for induced error sets: detection checks and max-clique search.

Vectors are ``n + c`` bit ints laid out like :func:`induction.format_vector`.
"""
from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .graphs import StabilizerSet
from .induction import InducedError, cl_map, format_vector
from .pauli import PauliOperator, commutes, identity, multiply, popcount

__all__ = [
    "ClassicalCode",
    "CompatibilityGraph",
    "Violation",
    "DiffSet",
    "detects",
    "correction_diff_set",
    "detection_diff_set",
    "build_compatibility",
    "max_clique",
    "CliqueResult",
    "candidate_order",
    "degenerate_filter",
]


@dataclass(frozen=True)
class ClassicalCode:
    codewords: tuple[int, ...]
    n: int
    c: int

    def __post_init__(self):
        cw = tuple(self.codewords)
        object.__setattr__(self, "codewords", cw)
        if len(set(cw)) != len(cw):
            raise ValueError("codewords must be distinct")
        if any(not 0 <= w < 1 << (self.n + self.c) for w in cw):
            raise ValueError(f"codeword does not fit in {self.n + self.c} bits")
        if 0 not in cw:
            raise ValueError("code must contain the all-zero word; use ClassicalCode.canonical")

    @classmethod
    def from_strings(cls, words: Iterable[str]) -> ClassicalCode:
        from .induction import parse_vector

        parsed = [parse_vector(w) for w in words]
        n, c = parsed[0][1], parsed[0][2]
        if any((pn, pc) != (n, c) for _, pn, pc in parsed):
            raise ValueError("codewords have mixed block lengths")
        return cls(tuple(b for b, _, _ in parsed), n, c)

    @classmethod
    def canonical(cls, words: Sequence[int], n: int, c: int) -> ClassicalCode:
        """Translate ``words`` by their smallest member so that 0 is a codeword."""
        shift = min(words)
        return cls(tuple(sorted(w ^ shift for w in words)), n, c)

    @property
    def K(self) -> int:
        return len(self.codewords)

    def strings(self) -> list[str]:
        return [format_vector(w, self.n, self.c) for w in self.codewords]


@dataclass(frozen=True)
class Violation:
    """Either a classical collision ``c1 ^ e == c2`` or a degenerate error
    that anticommutes with a word operator."""

    kind: str
    error: InducedError
    codeword_a: int
    codeword_b: int | None = None


def detects(code: ClassicalCode, induced: Sequence[InducedError],
            word_ops: Sequence[PauliOperator] = ()) -> tuple[bool, Violation | None]:
    """Detection test for a CWS-style classical code.

    Classical part: no induced vector equals the XOR of two distinct
    codewords. Quantum part, for each error whose induced vector is zero:
    its origin must commute with every word operator. Without word operators
    such errors are reported as unresolved violations.
    """
    if word_ops and len(word_ops) != code.K:
        raise ValueError("word_ops must match codewords one-to-one")
    for e in induced:
        if (e.n, e.c) != (code.n, code.c):
            raise ValueError(f"induced vector length {e.n}|{e.c} does not match code {code.n}|{code.c}")
    words = set(code.codewords)
    for e in induced:
        v = e.bits
        if v == 0:
            if not word_ops:
                return False, Violation("degenerate-unresolved", e, code.codewords[0])
            for cw, w in zip(code.codewords, word_ops):
                if not commutes(e.origin, w):
                    return False, Violation("degenerate-anticommutes", e, cw)
            continue
        for cw in code.codewords:
            if cw ^ v in words:
                return False, Violation("collision", e, cw, cw ^ v)
    return True, None


@dataclass
class DiffSet:
    """Nonzero induced differences plus the zero-difference pairs."""

    vectors: set[int]
    degenerate: list[tuple[PauliOperator, PauliOperator]] = field(default_factory=list)
    n: int = 0
    c: int = 0

    def __len__(self) -> int:
        return len(self.vectors)

    def __contains__(self, v: int) -> bool:
        return v in self.vectors

    def degenerate_products(self) -> list[PauliOperator]:
        return [multiply(a, b) for a, b in self.degenerate]


def detection_diff_set(errors: Iterable[PauliOperator], s: StabilizerSet) -> DiffSet:
    """Induced vectors of ``errors`` themselves; zero vectors go to ``degenerate``."""
    out = DiffSet(set(), [], s.n, s.c)
    ident = identity(s.n, s.c)
    for e in errors:
        v = cl_map(e, s).bits
        if v:
            out.vectors.add(v)
        else:
            out.degenerate.append((ident, e))
    return out


def correction_diff_set(errors: Iterable[PauliOperator], s: StabilizerSet) -> DiffSet:
    """``cl(E1 E2)`` over distinct pairs from ``errors`` plus the identity.

    ``cl`` is additive, so each product vector is the XOR of the two induced
    vectors.
    """
    ops = [identity(s.n, s.c)] + [e for e in errors if not e.is_identity]
    vecs = [cl_map(e, s).bits for e in ops]
    out = DiffSet(set(), [], s.n, s.c)
    for a in range(len(ops)):
        va = vecs[a]
        for b in range(a + 1, len(ops)):
            if ops[a].z_bits == ops[b].z_bits and ops[a].x_bits == ops[b].x_bits:
                continue
            d = va ^ vecs[b]
            if d:
                out.vectors.add(d)
            else:
                out.degenerate.append((ops[a], ops[b]))
    return out


def degenerate_filter(diff: DiffSet) -> list[int]:
    """Masks ``m`` such that an admissible codeword ``w`` (in a code containing 0)
    has even ``popcount(w & m)``.

    A degenerate product ``E`` acts on ``Z^w |S>`` with sign
    ``(-1)**<E, Z^w>``; with 0 in the code every word must see sign ``+``.
    """
    masks = set()
    for p in diff.degenerate_products():
        if p.x_bits:
            masks.add(p.x_bits)
    return sorted(masks)


def candidate_order(vectors: Iterable[int]) -> list[int]:
    """Weight first, then the bit string read left to right."""
    return sorted(set(vectors), key=lambda v: (popcount(v), v))


@dataclass
class CompatibilityGraph:
    candidates: list[int]
    adjacency: np.ndarray

    def __post_init__(self):
        a = self.adjacency
        if a.shape != (len(self.candidates),) * 2:
            raise ValueError("adjacency shape does not match candidates")
        if np.any(np.diag(a)) or not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric without self-loops")

    def neighbor_masks(self) -> list[int]:
        """Row ``i`` as an int bitset over candidate indices (bit ``j`` = vertex ``j``)."""
        packed = np.packbits(self.adjacency, axis=1, bitorder="little")
        return [int.from_bytes(row.tobytes(), "little") for row in packed]

    def is_clique(self, vertices: Sequence[int]) -> bool:
        pos = {v: i for i, v in enumerate(self.candidates)}
        ids = [pos[v] for v in vertices]
        return all(self.adjacency[a, b] for i, a in enumerate(ids) for b in ids[i + 1:])


def build_compatibility(candidates: Sequence[int], diff_set: DiffSet | set[int]) -> CompatibilityGraph:
    cand = np.asarray(list(candidates), dtype=np.int64)
    vectors = diff_set.vectors if isinstance(diff_set, DiffSet) else diff_set
    if len(cand) == 0:
        return CompatibilityGraph([], np.zeros((0, 0), dtype=bool))
    xor = cand[:, None] ^ cand[None, :]
    if vectors:
        bad = np.isin(xor, np.fromiter(vectors, dtype=np.int64, count=len(vectors)))
    else:
        bad = np.zeros_like(xor, dtype=bool)
    adj = ~bad & (xor != 0)
    return CompatibilityGraph([int(v) for v in cand], adj)


@dataclass
class CliqueResult:
    clique: list[int]
    flag: str
    nodes: int

    @property
    def exact(self) -> bool:
        return self.flag == "exact"


def _greedy(masks: list[int], order: list[int], rng: random.Random | None,
            tries: int = 8) -> list[int]:
    best: list[int] = []
    starts = order if rng is None else rng.sample(order, len(order))
    for start in starts[:tries]:
        clique = [start]
        cand = masks[start]
        while cand:
            # highest-degree vertex inside the remaining candidate set
            pick, pick_deg = -1, -1
            m = cand
            while m:
                low = m & -m
                v = low.bit_length() - 1
                deg = popcount(masks[v] & cand)
                if deg > pick_deg:
                    pick, pick_deg = v, deg
                m ^= low
            clique.append(pick)
            cand &= masks[pick]
        if len(clique) > len(best):
            best = clique
    return best


def _color_bound(p: int, masks: list[int]) -> list[tuple[int, int]]:
    """Greedy sequential colouring of the vertex set ``p``.

    Returns ``(vertex, colour)`` in non-decreasing colour order; a vertex's
    colour bounds the clique size reachable from it.
    """
    out = []
    uncoloured = p
    colour = 0
    while uncoloured:
        colour += 1
        q = uncoloured
        while q:
            low = q & -q
            v = low.bit_length() - 1
            uncoloured &= ~low
            q &= ~low
            q &= ~masks[v]
            out.append((v, colour))
    return out


def max_clique(g: CompatibilityGraph, target: int | None = None,
               budget: int | None = None, seed: int | None = None) -> CliqueResult:
    """Branch and bound with colouring bounds over int bitsets.

    Stops early once a clique of size ``target`` is found (flag ``"target"``)
    or after ``budget`` branch nodes (flag ``"budget"``); ``"exact"`` means
    the search space was exhausted and the clique is maximum. A greedy pass
    seeds the incumbent; its tie-breaking is randomised only when ``seed`` (or
    ``EBITFORGE_SEED``) is given.
    """
    n = len(g.candidates)
    if n == 0:
        return CliqueResult([], "exact", 0)
    masks = g.neighbor_masks()
    if seed is None and os.environ.get("EBITFORGE_SEED"):
        seed = int(os.environ["EBITFORGE_SEED"])
    rng = random.Random(seed) if seed is not None else None
    best = _greedy(masks, list(range(n)), rng)
    nodes = 0
    flag = "exact"

    class _Stop(Exception):
        pass

    def expand(r: list[int], p: int) -> None:
        nonlocal best, nodes, flag
        for v, colour in reversed(_color_bound(p, masks)):
            if len(r) + colour <= len(best):
                return
            nodes += 1
            if budget is not None and nodes > budget:
                flag = "budget"
                raise _Stop
            r.append(v)
            np_ = p & masks[v]
            if np_:
                expand(r, np_)
            elif len(r) > len(best):
                best = list(r)
                if target is not None and len(best) >= target:
                    flag = "target"
                    raise _Stop
            r.pop()
            p &= ~(1 << v)

    if target is not None and len(best) >= target:
        flag = "target"
    else:
        try:
            expand([], (1 << n) - 1)
        except _Stop:
            pass
    return CliqueResult(sorted(g.candidates[i] for i in best), flag, nodes)
