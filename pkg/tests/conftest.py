import pytest

from qdissect import schur


@pytest.fixture(scope="session")
def residues40k():
    """Residues mod 32 of the first 40,000 counts; serves mod 8/16/32 checks."""
    return schur.residue_table(40_000, 32)


@pytest.fixture(scope="session")
def residues4k():
    """Smaller table for unit tests that do not need theorem-scale depth."""
    return schur.residue_table(4_000, 32)


@pytest.fixture(scope="session")
def exact5k():
    return schur.s_series(5_000)
