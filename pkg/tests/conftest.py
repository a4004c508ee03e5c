import pytest

from stoimenow.enumeration import enumerate_matchings, CENSUS_LIMIT


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False, help="also run the n=8 census")


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: large census, only runs with --runslow')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope='session')
def stoimenow_matchings():
    """n -> all Stoimenow matchings with n arcs, for n up to the census limit."""
    return {n: enumerate_matchings(n) for n in range(1, CENSUS_LIMIT + 1)}
