import pytest

from divgrace import Labeling, build_grid


@pytest.fixture
def t8():
    return build_grid(1, 2)


@pytest.fixture
def t8_labeling(t8):
    # A known 3-divisible graceful alpha-labeling of the prism C_4 x P_2,
    # written out literally so checker tests do not lean on the
    # construction code they are meant to police.
    return Labeling(t8, (7, 5, 9, 6, 0, 14, 1, 12))
