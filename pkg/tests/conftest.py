import pytest

from fusionkit import paperdata
from fusionkit.condense import condensed_modular_data
from fusionkit.wzw import AlgebraSpec


@pytest.fixture(scope="session")
def cat9():
    return condensed_modular_data(AlgebraSpec.sl3(9))


@pytest.fixture(scope="session")
def table_order(cat9):
    """Indices reordering the condensed simples as I, Y1..Y5, X1..X3."""
    pos = {paperdata.table_label(str(lab)): i for i, lab in enumerate(cat9.simples)}
    return [pos[n] for n in ["I", "Y1", "Y2", "Y3", "Y4", "Y5", "X1", "X2", "X3"]]
