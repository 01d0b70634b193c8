"""The two published example codes, transcribed verbatim.

Word operator tables are unsigned, as printed.
"""
from __future__ import annotations

from .codefile import EacwsCode
from .graphs import CodeParams, ring_graph, standard_generators
from .pauli import parse_pauli
from .search import ClassicalCode

__all__ = ["RING5", "RING7", "fixture", "FIXTURES"]

RING5 = {
    "name": "ring5",
    "params": (5, 16, 2, 1),
    "generators": [
        "XZIIZ|I", "ZXZII|I", "IZXZI|I", "IIZXZ|I", "ZIIZX|Z", "IIIIZ|X",
    ],
    "induced": [
        "10000|0", "01001|0", "11001|0",
        "01000|0", "10100|0", "11100|0",
        "00100|0", "01010|0", "01110|0",
        "00010|0", "00101|0", "00111|0",
        "00001|0", "10010|1", "10011|1",
    ],
    "codewords": [
        "00000|0", "00011|0", "00101|1", "00110|1",
        "01001|1", "01010|1", "01100|0", "01111|0",
        "10001|0", "10010|0", "10100|1", "10111|1",
        "11000|1", "11011|1", "11101|0", "11110|0",
    ],
    "word_ops": [
        "IIIII|I", "IIIZZ|I", "ZIZZY|I", "ZIZIX|I",
        "ZZIZY|I", "ZZIIX|I", "IZZII|I", "IZZZZ|I",
        "ZIIIZ|I", "ZIIZI|I", "IIZZX|I", "IIZIY|I",
        "IZIZX|I", "IZIIY|I", "ZZZIZ|I", "ZZZZI|I",
    ],
    "word_ops_initial": [
        "IIIII|I", "IIIXX|I", "IIXIY|I", "IIXXZ|I",
        "IXIIY|I", "IXIXZ|I", "IXXII|I", "IXXXX|I",
        "XIIIX|I", "XIIXI|I", "XIXIZ|I", "XIXXY|I",
        "XXIIZ|I", "XXIXY|I", "XXXIX|I", "XXXXI|I",
    ],
}

# The printed h_2 has eight Alice letters ("IIIIZIII|IXII"); the seven-qubit
# form below is the only one consistent with h_j = Z_i|X_j.
RING7 = {
    "name": "ring7",
    "params": (7, 4, 5, 4),
    "generators": [
        "XZIIIIZ|IIII", "ZXZIIII|IIII", "IZXZIII|IIII", "IIZXZII|ZIII",
        "IIIZXZI|IZII", "IIIIZXZ|IIZI", "ZIIIIZX|IIIZ",
        "IIIZIII|XIII", "IIIIZII|IXII", "IIIIIZI|IIXI", "IIIIIIZ|IIIX",
    ],
    "codewords": ["0000000|0000", "1011110|1110", "1100010|1111", "0011101|0001"],
    "word_ops": ["IIIIIII|IIII", "ZIIXYXZ|IIII", "IZZYXYY|IIII", "ZIZZZZY|IIII"],
    "word_ops_initial": ["IIIIIII|IIII", "XIXYYYI|IIII", "XXIZZYZ|IIII", "IIXXXIY|IIII"],
}

FIXTURES = {"ring5": RING5, "ring7": RING7}


def fixture(name: str) -> EacwsCode:
    """Published code as an :class:`EacwsCode` with the printed word operators."""
    data = FIXTURES[name]
    n, K, d, c = data["params"]
    graph = ring_graph(n)
    code = ClassicalCode.from_strings(data["codewords"])
    return EacwsCode(
        CodeParams(n, K, d, c),
        graph,
        code,
        tuple(parse_pauli(s) for s in data["word_ops"]),
        tuple(parse_pauli(s) for s in data["word_ops_initial"]),
        provenance=f"published example (({n},{K},{d};{c})) on the {n}-vertex ring",
    )


def stabilizer(name: str):
    n, _, _, c = FIXTURES[name]["params"]
    return standard_generators(ring_graph(n), c)
