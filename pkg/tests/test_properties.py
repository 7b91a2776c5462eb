"""Quick runs of the structural properties; the acceptance suite runs them
with ten thousand examples each."""

import pytest

import properties


@pytest.mark.parametrize("name", sorted(properties.PROPERTIES))
def test_property(name):
    properties.PROPERTIES[name](300)()
