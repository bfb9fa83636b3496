import pytest
from hypothesis import HealthCheck, settings, strategies as st

from reedbound import _pykernels
from reedbound.graph import Graph

try:
    from reedbound import _ckernels
except ImportError:
    _ckernels = None

# the backend fixture is a stateless module parameter
settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture]
)
settings.load_profile("default")

BACKENDS = [pytest.param(_pykernels, id="python")]
if _ckernels is not None:
    BACKENDS.append(pytest.param(_ckernels, id="cython"))


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@st.composite
def graphs(draw, min_order=1, max_order=9):
    n = draw(st.integers(min_order, max_order))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return Graph.from_mask(n, mask)
