"""Graphs on Alice's qubits and the stabilizer generator sets built from them."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .pauli import PauliOperator, commutes, from_bits, render_pauli, symplectic_inner

__all__ = [
    "Graph",
    "CodeParams",
    "StabilizerSet",
    "ring_graph",
    "graph_from_edges",
    "read_graph",
    "write_graph",
    "standard_generators",
    "initial_generators",
    "symplectic_rank",
    "anticommutation_signature",
]


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph; ``adjacency`` is a symmetric 0/1 matrix."""

    adjacency: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.adjacency, dtype=np.uint8)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be square")
        if np.any(a > 1):
            raise ValueError("adjacency must be binary")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric")
        if np.any(np.diag(a)):
            raise ValueError("adjacency must have a zero diagonal")
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    def row_mask(self, i: int) -> int:
        """Row ``i`` (0-based) packed with vertex 1 as the most significant bit."""
        return int("".join(map(str, self.adjacency[i])), 2) if self.n else 0

    def edges(self) -> list[tuple[int, int]]:
        """1-indexed edge list, ``u < v``."""
        us, vs = np.nonzero(np.triu(self.adjacency))
        return [(int(u) + 1, int(v) + 1) for u, v in zip(us, vs)]

    def __eq__(self, other):
        return isinstance(other, Graph) and np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self):
        return hash(self.adjacency.tobytes())


@dataclass(frozen=True)
class CodeParams:
    n: int
    K: int
    d: int
    c: int

    def __post_init__(self):
        if not 0 <= self.c <= self.n:
            raise ValueError(f"ebit count {self.c} outside 0..{self.n}")
        if not 1 <= self.K <= 2 ** (self.n + self.c):
            raise ValueError(f"K={self.K} outside 1..2^(n+c)")
        if self.d < 1:
            raise ValueError("distance must be at least 1")

    def __str__(self) -> str:
        return f"(({self.n},{self.K},{self.d};{self.c}))"


@dataclass(frozen=True)
class StabilizerSet:
    """Generators ``g_1..g_n`` followed by ``h_1..h_c``.

    ``g_1..g_{n-c}`` span the isotropic part; ``(g_{n-c+j}, h_j)`` are the
    symplectic pairs that carry the ebits.
    """

    generators: tuple[PauliOperator, ...]
    n: int
    c: int
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if not self.check:
            return
        if len(self.generators) != self.n + self.c:
            raise ValueError(f"expected {self.n + self.c} generators, got {len(self.generators)}")
        for g in self.generators:
            if g.partition != (self.n, self.c):
                raise ValueError(f"generator {g} is not on {self.n}|{self.c} qubits")
        for a, g in enumerate(self.generators):
            for h in self.generators[a + 1:]:
                if not commutes(g, h):
                    raise ValueError(f"generators {g} and {h} anticommute")
        if symplectic_rank(self.generators) != len(self.generators):
            raise ValueError("generators are not independent")

    @property
    def g(self) -> tuple[PauliOperator, ...]:
        return self.generators[: self.n]

    @property
    def h(self) -> tuple[PauliOperator, ...]:
        return self.generators[self.n:]

    @property
    def isotropic(self) -> tuple[PauliOperator, ...]:
        return self.generators[: self.n - self.c]

    @property
    def symplectic_pairs(self) -> list[tuple[PauliOperator, PauliOperator]]:
        k = self.n - self.c
        return [(self.generators[k + j], self.generators[self.n + j]) for j in range(self.c)]

    def bob_z_generator(self, j: int) -> PauliOperator:
        """The generator carrying ``Z`` on Bob qubit ``j`` (0-based)."""
        return self.generators[self.n - self.c + j]

    def table(self) -> list[str]:
        names = [f"g_{i + 1}" for i in range(self.n)]
        names += ["h" if self.c == 1 else f"h_{j + 1}" for j in range(self.c)]
        return [f"{name} = {render_pauli(p)}" for name, p in zip(names, self.generators)]


def symplectic_rank(ops: Sequence[PauliOperator]) -> int:
    """GF(2) rank of the ``(z|x)`` vectors."""
    if not ops:
        return 0
    size = ops[0].num_qubits
    rows = [(p.z_bits << size) | p.x_bits for p in ops]
    rank = 0
    for bit in reversed(range(2 * size)):
        pivot = next((r for r in rows if (r >> bit) & 1), None)
        if pivot is None:
            continue
        rows = [r ^ pivot if (r >> bit) & 1 else r for r in rows if r is not pivot]
        rank += 1
    return rank


def ring_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a ring needs at least 3 vertices")
    a = np.zeros((n, n), dtype=np.uint8)
    for i in range(n):
        a[i, (i + 1) % n] = a[(i + 1) % n, i] = 1
    return Graph(a)


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph from 1-indexed edges."""
    a = np.zeros((n, n), dtype=np.uint8)
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n) or u == v:
            raise ValueError(f"bad edge ({u}, {v}) for {n} vertices")
        a[u - 1, v - 1] = a[v - 1, u - 1] = 1
    return Graph(a)


def read_graph(path: str | Path) -> Graph:
    """Read ``n <count>`` followed by one ``u v`` edge per line (1-indexed)."""
    lines = [ln.split("#")[0].strip() for ln in Path(path).read_text().splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError(f"{path}: empty graph file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise ValueError(f"{path}: first line must be 'n <count>'")
    n = int(head[1])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"{path}: bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return graph_from_edges(n, edges)


def write_graph(graph: Graph, path: str | Path) -> None:
    body = [f"n {graph.n}"] + [f"{u} {v}" for u, v in graph.edges()]
    Path(path).write_text("\n".join(body) + "\n")


def _check_c(n: int, c: int) -> None:
    if not 0 <= c <= n:
        raise ValueError(f"ebit count {c} outside 0..{n}")


def _bit(n_total: int, q: int) -> int:
    return 1 << (n_total - 1 - q)


def standard_generators(graph: Graph, c: int) -> StabilizerSet:
    """``X_i Z^{r_i}|I`` for the first ``n-c`` vertices; the last ``c`` vertices
    get ``X_i Z^{r_i}|Z_j`` and a partner ``h_j = Z_i|X_j``."""
    n = graph.n
    _check_c(n, c)
    total = n + c
    gens = []
    for i in range(n):
        z = graph.row_mask(i) << c
        j = i - (n - c)
        if j >= 0:
            z |= _bit(total, n + j)
        gens.append(from_bits(z, _bit(total, i), n, c))
    for j in range(c):
        i = n - c + j
        gens.append(from_bits(_bit(total, i), _bit(total, n + j), n, c))
    return StabilizerSet(tuple(gens), n, c)


def initial_generators(n: int, c: int) -> StabilizerSet:
    """Stabilizer of ``|0>^(n-c)`` times ``c`` Bell pairs shared with Bob."""
    _check_c(n, c)
    total = n + c
    gens = [from_bits(_bit(total, i), 0, n, c) for i in range(n - c)]
    for j in range(c):
        i = n - c + j
        gens.append(from_bits(_bit(total, i) | _bit(total, n + j), 0, n, c))
    for j in range(c):
        i = n - c + j
        gens.append(from_bits(0, _bit(total, i) | _bit(total, n + j), n, c))
    return StabilizerSet(tuple(gens), n, c)


def anticommutation_signature(s: StabilizerSet) -> tuple[int, int]:
    """(isotropic count, symplectic pair count) of a generator set.

    Restricted to Alice's block, the generators' commutation matrix has GF(2)
    rank ``2 * pairs``; everything else is isotropic.
    """
    alice = [g.alice_part() for g in s.generators]
    rows = []
    for a in alice:
        r = 0
        for b in alice:
            r = (r << 1) | symplectic_inner(a, b)
        rows.append(r)
    rank = _gf2_rank(rows)
    return len(alice) - rank, rank // 2


def _gf2_rank(rows: list[int]) -> int:
    rank = 0
    rows = list(rows)
    while rows:
        pivot = rows.pop()
        if not pivot:
            continue
        rank += 1
        top = pivot.bit_length() - 1
        rows = [r ^ pivot if (r >> top) & 1 else r for r in rows]
    return rank
