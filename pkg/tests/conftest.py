import numpy as np
import pytest

from helpers import REFERENCE_WEIGHTS, reference_map


@pytest.fixture
def ref_map():
    return reference_map()


@pytest.fixture
def ref_csv(tmp_path):
    lines = ["u1,u2,u3,u4"]
    lines += [",".join(str(v) for v in row) for row in REFERENCE_WEIGHTS]
    path = tmp_path / "reference.csv"
    path.write_text("\n".join(lines) + "\n")
    return str(path)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
