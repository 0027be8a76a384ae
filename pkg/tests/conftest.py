import pytest

from corank.cache import DecisionCache
from corank.enumeration import enumerate_connected_graphs
from corank.sweeps import compute_gamma_table


@pytest.fixture(scope="session")
def shared_cache():
    return DecisionCache()


@pytest.fixture(scope="session")
def gamma_table_143(shared_cache):
    """mz and exact gamma over Z and Q for the 143 connected graphs n <= 6."""
    return compute_gamma_table(enumerate_connected_graphs(6), cache=shared_cache)
