import json

import pytest

from lietori.lietorus import ConstructionParams


@pytest.fixture(scope='module')
def sp6_params():
    return ConstructionParams('SP', 3)


@pytest.fixture(scope='module')
def sp_quaternion_params():
    return ConstructionParams('SP', 3, k=1)


@pytest.fixture(scope='module')
def sl3_qminus1_params():
    return ConstructionParams('SL', 2, quantum=((2, 1),))


@pytest.fixture(scope='module')
def o8_params():
    return ConstructionParams('O', 4)


@pytest.fixture(scope='module')
def su_shifted_params():
    """
    A special unitary Lie torus with a hermitian form degree that is not in
    twice the lattice, so its degrees are genuinely shifted.
    """
    return ConstructionParams('SU', 1, p=2, m=2, delta=((0, 0), (1, 0)))


@pytest.fixture(scope='function')
def model_file(tmp_path):
    """
    Returns a function which writes a model file for the given parameters
    (and optional cached invariants) and returns its path.
    """
    def write(params, invariants=None, name='model.json'):
        document = {'schema_version': 1, 'params': params.to_json()}
        if invariants is not None:
            document['invariants'] = invariants
        path = tmp_path / name
        path.write_text(json.dumps(document))
        return str(path)

    return write
