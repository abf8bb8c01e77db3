import os

import pytest
from hypothesis import HealthCheck
from hypothesis import settings as hypothesis_settings

from fiedler.graphs import build, half_graph, parse_spec

hypothesis_settings.register_profile(
    "default",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
hypothesis_settings.register_profile("thorough", max_examples=200, deadline=None)
hypothesis_settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def golden():
    """NSG(2,2,2;2,3,2): -2 = -m_h is an eigenvalue and V_3 is neutral for it."""
    return build(parse_spec("nsg:2,2,2;2,3,2"))


@pytest.fixture
def star():
    """K_{1,3} = NSG(3;1); the leaves are vertices 0..2, the center is 3."""
    return build(parse_spec("nsg:3;1"))


@pytest.fixture
def h4():
    return half_graph(4)
