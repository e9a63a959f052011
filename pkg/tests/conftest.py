import pytest


@pytest.fixture(scope="session")
def census_by_order():
    """Connected graphs up to isomorphism for 1 <= n <= 7 (computed once)."""
    from spectra_rho.census import enumerate_connected

    return {n: enumerate_connected(n) for n in range(1, 8)}
