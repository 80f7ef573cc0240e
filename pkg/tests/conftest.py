"""
Pytest configuration and shared fixtures.

Settings are named after the algebra, the number m of imaginary units and
the last slice-base index p.
"""

import pytest

from hyperck.algebra.setting import HypercomplexSetting
from hyperck.verify.sampling import RationalSampler


@pytest.fixture
def r02_p0() -> HypercomplexSetting:
    """R_{0,2}, p=0, q=2."""
    return HypercomplexSetting.build("clifford", 2, 0)


@pytest.fixture
def r02_p1() -> HypercomplexSetting:
    """R_{0,2}, p=1, q=1."""
    return HypercomplexSetting.build("clifford", 2, 1)


@pytest.fixture
def r03_p0() -> HypercomplexSetting:
    """Quaternion-type R_{0,3}, p=0, q=3."""
    return HypercomplexSetting.build("clifford", 3, 0)


@pytest.fixture
def r03_p1() -> HypercomplexSetting:
    """R_{0,3}, p=1, q=2."""
    return HypercomplexSetting.build("clifford", 3, 1)


@pytest.fixture
def r05_p2() -> HypercomplexSetting:
    """R_{0,5}, p=2, q=3."""
    return HypercomplexSetting.build("clifford", 5, 2)


@pytest.fixture
def r01_p0() -> HypercomplexSetting:
    """R_{0,1} (complex numbers), p=0, q=1."""
    return HypercomplexSetting.build("clifford", 1, 0)


@pytest.fixture
def oct_p0() -> HypercomplexSetting:
    """Octonions with m=4, p=0, q=4."""
    return HypercomplexSetting.build("octonion", 4, 0)


@pytest.fixture
def oct_p1() -> HypercomplexSetting:
    """Octonions with m=4, p=1, q=3."""
    return HypercomplexSetting.build("octonion", 4, 1)


@pytest.fixture
def sampler() -> RationalSampler:
    """Deterministic sampler for randomized inputs."""
    return RationalSampler(1234)
