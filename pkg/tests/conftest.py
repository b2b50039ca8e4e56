import pytest

from adjoint_quadrics import build_root_system, build_sign_table, generate_all_equations

_SYSTEMS: dict = {}
_EQSETS: dict = {}


def _system(name: str):
    if name not in _SYSTEMS:
        rs = build_root_system(name)
        _SYSTEMS[name] = (rs, build_sign_table(rs))
    return _SYSTEMS[name]


def _eqset(name: str):
    if name not in _EQSETS:
        rs, signs = _system(name)
        _EQSETS[name] = generate_all_equations(rs, signs)
    return _EQSETS[name]


@pytest.fixture(scope="session")
def system():
    """Callable returning a cached (RootSystem, SignTable) pair by name."""
    return _system


@pytest.fixture(scope="session")
def eqset_for():
    """Callable returning a cached full EquationSet by system name."""
    return _eqset
