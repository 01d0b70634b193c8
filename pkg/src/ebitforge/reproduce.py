"""Checks that rebuild both published example codes and the supporting properties.

Each check returns a :class:`Criterion`; ``run_all`` drives them for the
``reproduce`` command and the acceptance tests.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Callable

import numpy as np

from . import fixtures
from .graphs import graph_from_edges, initial_generators, ring_graph, standard_generators
from .induction import (
    cl_map,
    cl_map_by_multiplication,
    enumerate_errors,
    induce_set,
)
from .pauli import PauliOperator, equal_up_to_phase, from_bits, multiply, parse_pauli, to_matrix
from .pipeline import search_code
from .search import ClassicalCode, detects
from .verify import basis_states, build_encoder, distance, kl_check
from .words import equiv_mod_stabilizer, pull_back, push_forward, synthesize_clifford, word_operators

TOL = 1e-9

__all__ = ["Criterion", "CRITERIA", "run_all", "format_line"]


@dataclass
class Criterion:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


def _timed(fn: Callable[[], object], repeat: int = 1) -> tuple[object, float]:
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return out, best


def cl_worked_example() -> Criterion:
    s = standard_generators(ring_graph(3), 2)
    e = parse_pauli("IXI|II")
    got, secs = _timed(lambda: cl_map(e, s), repeat=5)
    ok = str(got) == "101|10" and secs < 1e-3
    return Criterion(1, "cl-map worked example", ok, f"IXI|II -> {got} in {secs * 1e3:.3f} ms")


def induced_table() -> Criterion:
    s = fixtures.stabilizer("ring5")
    errs = list(enumerate_errors(5, 1, 1))
    got, secs = _timed(lambda: {str(e) for e in induce_set(errs, s)}, repeat=5)
    want = set(fixtures.RING5["induced"])
    ok = got == want and len(errs) == 15 and secs < 1e-2
    return Criterion(2, "15 induced vectors (5-ring, c=1)", ok,
                     f"{len(got & want)}/15 match, {secs * 1e3:.2f} ms")


def error_count() -> Criterion:
    k = sum(1 for _ in enumerate_errors(7, 2))
    return Criterion(3, "enumerate_errors(7, 2) count", k == 210, f"{k} operators")


def _fixture_words(name: str):
    data = fixtures.FIXTURES[name]
    s = fixtures.stabilizer(name)
    code = ClassicalCode.from_strings(data["codewords"])
    ops = word_operators(code.codewords, s)
    printed = [parse_pauli(w) for w in data["word_ops"]]
    return s, code, ops, printed


def ring5_fixture() -> Criterion:
    t0 = time.perf_counter()
    s, code, ops, printed = _fixture_words("ring5")
    induced = induce_set(enumerate_errors(5, 1, 1), s)
    det, _ = detects(code, induced, ops)
    strip_ok = all(equal_up_to_phase(a, b) for a, b in zip(ops, printed))
    basis = basis_states(s, ops, TOL)
    kl = kl_check(basis, enumerate_errors(5, 1, 1), TOL)
    dist = distance(s, ops, 2, TOL)
    secs = time.perf_counter() - t0
    wit = dist.witness
    ok = (det and strip_ok and kl.passed and dist.distance == 2 and wit is not None
          and bin(wit.z_bits | wit.x_bits).count("1") == 2 and secs < 1.0)
    return Criterion(4, "((5,16,2;1)) fixture", ok,
                     f"detects={det} strip_bob={strip_ok} kl(w=1)={kl.passed} "
                     f"d={dist} witness={wit} {secs:.3f} s", secs)


def ring7_fixture() -> Criterion:
    t0 = time.perf_counter()
    s, code, ops, printed = _fixture_words("ring7")
    strip_ok = all(equal_up_to_phase(a, b) for a, b in zip(ops, printed))
    basis = basis_states(s, ops, TOL)
    errs = list(enumerate_errors(7, 4, 4))
    kl = kl_check(basis, errs, TOL)
    dist = distance(s, ops, 5, TOL)
    secs = time.perf_counter() - t0
    ok = (strip_ok and len(errs) == 3990 and kl.passed and dist.distance == 5 and secs < 120)
    detail = (f"strip_bob={strip_ok} kl(w<=4, {len(errs)} errors)={kl.passed}"
              + ("" if kl.passed else f" first failure {kl.witness}")
              + f" d={dist}" + ("" if dist.witness is None else f" witness={dist.witness}")
              + f" {secs:.2f} s")
    return Criterion(5, "((7,4,5;4)) fixture", ok, detail, secs)


def pull_back_equivalence() -> Criterion:
    results = []
    for name in ("ring5", "ring7"):
        data = fixtures.FIXTURES[name]
        s, _, ops, _ = _fixture_words(name)
        init = initial_generators(s.n, s.c)
        cmap = synthesize_clifford(init, s)
        wp = [parse_pauli(w) for w in data["word_ops_initial"]]
        results.append(all(equiv_mod_stabilizer(pull_back(w, cmap), b, init)
                           for w, b in zip(ops, wp)))
    return Criterion(6, "pull-back matches w' tables", all(results),
                     f"ring5={results[0]} ring7={results[1]}")


def search_rediscovery() -> Criterion:
    t0 = time.perf_counter()
    r5 = search_code(ring_graph(5), 1, 1, "detect", target_k=16)
    s5 = time.perf_counter() - t0
    t1 = time.perf_counter()
    r7 = search_code(ring_graph(7), 4, 2, "correct", target_k=4)
    s7 = time.perf_counter() - t1
    ok5 = r5.code is not None and r5.code.params.K >= 16 and s5 < 600
    ok7 = r7.code is not None and r7.code.params.K >= 4 and s7 < 600
    d7 = None
    if r7.code is not None:
        # confirm the distance is at least 5 with an explicit sweep
        d7 = distance(r7.code.stabilizer(), r7.code.word_ops_encoded, 5, TOL)
        ok7 = ok7 and (d7.distance is None or d7.distance >= 5)
    return Criterion(7, "search rediscovery", ok5 and ok7,
                     f"ring5 K={len(r5.clique.clique)} verified={r5.code is not None} ({s5:.2f} s); "
                     f"ring7 K={len(r7.clique.clique)} verified={r7.code is not None} d={d7} ({s7:.2f} s)",
                     s5 + s7)


def _all_paulis(n: int, c: int = 0):
    size = n + c
    for z, x in cartesian(range(1 << size), repeat=2):
        yield from_bits(z, x, n, c)


def property_suites(seed: int = 2024) -> Criterion:
    notes = []
    # Pauli products against dense matrices, every pair on 1..3 qubits with all phases
    ok_alg = True
    for size in (1, 2, 3):
        ops = [PauliOperator(m, p.z_bits, p.x_bits, p.alice_len, p.bob_len)
               for p in _all_paulis(size) for m in range(4)]
        mats = {p: to_matrix(p) for p in ops}
        base = [p for p in ops if p.phase_exp == 0]
        for a in ops:
            for b in base:
                if not np.array_equal(to_matrix(multiply(a, b)), mats[a] @ mats[b]):
                    ok_alg = False
    notes.append(f"algebra={ok_alg}")
    # additivity of cl for every n <= 4 and every ebit count
    ok_add = True
    for n in (1, 2, 3, 4):
        graph = ring_graph(n) if n >= 3 else graph_from_edges(n, [(1, 2)] if n == 2 else [])
        for c in range(n + 1):
            s = standard_generators(graph, c)
            alice = [p for p in _all_paulis(n, 0)]
            lifted = [from_bits(p.z_bits << c, p.x_bits << c, n, c) for p in alice]
            cls = {p: cl_map(p, s).bits for p in lifted}
            for a in lifted:
                for b in lifted:
                    if cl_map(multiply(a, b), s).bits != cls[a] ^ cls[b]:
                        ok_add = False
    notes.append(f"additivity={ok_add}")
    # closed form vs generator multiplication on both fixtures' error sets
    ok_oracle = True
    for name in ("ring5", "ring7"):
        s = fixtures.stabilizer(name)
        for e in enumerate_errors(s.n, s.n, s.c):
            a, b = cl_map(e, s), cl_map_by_multiplication(e, s)
            ok_oracle &= a.bits == b.bits
    notes.append(f"cl-oracle={ok_oracle}")
    # encoder isometry
    ok_iso = True
    for name in ("ring5", "ring7"):
        s, _, ops, _ = _fixture_words(name)
        enc = build_encoder(s, ops, TOL)
        ok_iso &= float(np.abs(enc.conj().T @ enc - np.eye(len(ops))).max()) <= TOL
    notes.append(f"isometry={ok_iso}")
    # forward(pull_back(P)) == P on random Paulis
    rng = random.Random(seed)
    ok_round = True
    for name in ("ring5", "ring7"):
        s = fixtures.stabilizer(name)
        cmap = synthesize_clifford(initial_generators(s.n, s.c), s)
        size = s.n + s.c
        for _ in range(1000):
            p = PauliOperator(rng.randrange(4), rng.getrandbits(size), rng.getrandbits(size), s.n, s.c)
            ok_round &= push_forward(pull_back(p, cmap), cmap) == p
    notes.append(f"round-trip={ok_round}")
    ok = ok_alg and ok_add and ok_oracle and ok_iso and ok_round
    return Criterion(8, "property suites", ok, " ".join(notes))


CRITERIA: list[Callable[[], Criterion]] = [
    cl_worked_example,
    induced_table,
    error_count,
    ring5_fixture,
    ring7_fixture,
    pull_back_equivalence,
    search_rediscovery,
    property_suites,
]


def format_line(c: Criterion) -> str:
    return f"[{'PASS' if c.passed else 'FAIL'}] {c.number}. {c.name}: {c.detail}"


def run_all() -> list[Criterion]:
    return [check() for check in CRITERIA]

