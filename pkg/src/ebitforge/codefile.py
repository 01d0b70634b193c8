"""JSON persistence for complete EA-CWS code descriptions."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .graphs import CodeParams, Graph, StabilizerSet, graph_from_edges, standard_generators
from .induction import format_vector, parse_vector
from .pauli import PauliOperator, parse_pauli, render_pauli, weight
from .search import ClassicalCode

SCHEMA = "ebitforge.code/1"

__all__ = ["EacwsCode", "SCHEMA", "load_code", "save_code"]


@dataclass(frozen=True)
class EacwsCode:
    params: CodeParams
    graph: Graph
    codewords: ClassicalCode
    word_ops_encoded: tuple[PauliOperator, ...]
    word_ops_initial: tuple[PauliOperator, ...] | None = None
    provenance: str = ""

    def __post_init__(self):
        p = self.params
        if self.graph.n != p.n or (self.codewords.n, self.codewords.c) != (p.n, p.c):
            raise ValueError("graph, codewords and params disagree on n or c")
        if not (self.codewords.K == len(self.word_ops_encoded) == p.K):
            raise ValueError(f"K={p.K} but {self.codewords.K} codewords and "
                             f"{len(self.word_ops_encoded)} word operators")
        for w in self.word_ops_encoded:
            if w.partition != (p.n, p.c):
                raise ValueError(f"word operator {w} has the wrong size")
            if weight(w, "bob"):
                raise ValueError(f"word operator {w} acts on Bob's qubits")
        if self.word_ops_initial is not None and len(self.word_ops_initial) != p.K:
            raise ValueError("initial word operator count differs from K")

    def stabilizer(self) -> StabilizerSet:
        return standard_generators(self.graph, self.params.c)

    def to_json(self) -> dict:
        p = self.params
        return {
            "schema": SCHEMA,
            "params": {"n": p.n, "K": p.K, "d": p.d, "c": p.c},
            "graph": {"n": self.graph.n, "edges": [list(e) for e in self.graph.edges()]},
            "codewords": [format_vector(w, p.n, p.c) for w in self.codewords.codewords],
            "word_ops_encoded": [render_pauli(w) for w in self.word_ops_encoded],
            "word_ops_initial": (None if self.word_ops_initial is None
                                 else [render_pauli(w) for w in self.word_ops_initial]),
            "provenance": self.provenance,
        }

    @classmethod
    def from_json(cls, data: dict) -> EacwsCode:
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported schema {data.get('schema')!r}; expected {SCHEMA}")
        p = data["params"]
        params = CodeParams(p["n"], p["K"], p["d"], p["c"])
        graph = graph_from_edges(data["graph"]["n"], [tuple(e) for e in data["graph"]["edges"]])
        words = []
        for s in data["codewords"]:
            bits, n, c = parse_vector(s)
            if (n, c) != (params.n, params.c):
                raise ValueError(f"codeword {s} does not match n={params.n}, c={params.c}")
            words.append(bits)
        init = data.get("word_ops_initial")
        return cls(
            params,
            graph,
            ClassicalCode(tuple(words), params.n, params.c),
            tuple(parse_pauli(s) for s in data["word_ops_encoded"]),
            None if init is None else tuple(parse_pauli(s) for s in init),
            data.get("provenance", ""),
        )


def save_code(code: EacwsCode, path: str | Path) -> None:
    Path(path).write_text(json.dumps(code.to_json(), indent=2) + "\n")


def load_code(path: str | Path) -> EacwsCode:
    return EacwsCode.from_json(json.loads(Path(path).read_text()))
