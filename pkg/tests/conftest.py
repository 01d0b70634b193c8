import pytest

from ebitforge import fixtures
from ebitforge.graphs import initial_generators, ring_graph, standard_generators
from ebitforge.search import ClassicalCode
from ebitforge.words import word_operators


@pytest.fixture(scope="session")
def s5():
    return standard_generators(ring_graph(5), 1)


@pytest.fixture(scope="session")
def s7():
    return standard_generators(ring_graph(7), 4)


@pytest.fixture(scope="session")
def s3():
    return standard_generators(ring_graph(3), 2)


@pytest.fixture(scope="session")
def code5():
    return ClassicalCode.from_strings(fixtures.RING5["codewords"])


@pytest.fixture(scope="session")
def code7():
    return ClassicalCode.from_strings(fixtures.RING7["codewords"])


@pytest.fixture(scope="session")
def ops5(s5, code5):
    return word_operators(code5.codewords, s5)


@pytest.fixture(scope="session")
def ops7(s7, code7):
    return word_operators(code7.codewords, s7)


@pytest.fixture(scope="session")
def init5():
    return initial_generators(5, 1)


@pytest.fixture(scope="session")
def init7():
    return initial_generators(7, 4)
