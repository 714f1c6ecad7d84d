import pytest

from dp1 import counting, real_forms, wallcross
from dp1.lattice import PicClass, pic


def clear_model_caches() -> None:
    """Reset every memoized lattice/model table (used by corruption tests)."""
    real_forms.lambda_basis.cache_clear()
    real_forms._kernel_sublattice.cache_clear()
    counting.b_classes_cached.cache_clear()
    wallcross.vanishing_roots_cached.cache_clear()


@pytest.fixture
def fresh_caches():
    clear_model_caches()
    yield
    clear_model_caches()


@pytest.fixture(scope="session")
def kperp():
    return real_forms.kperp()


@pytest.fixture(scope="session")
def all_classes():
    return real_forms.deformation_classes()


def l(i: int) -> PicClass:
    return PicClass(tuple(1 if j == i else 0 for j in range(9)))


def root_h3(i: int, j: int, k: int) -> PicClass:
    return pic(1, *[-1 if t in (i, j, k) else 0 for t in range(1, 9)])
