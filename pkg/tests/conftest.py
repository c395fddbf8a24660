import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from groupdata import make_group, make_rep  # noqa: E402


@pytest.fixture
def s3():
    return make_group("S3")


@pytest.fixture
def z2():
    return make_group("Z2")


@pytest.fixture
def s3_perm():
    return make_rep("S3-perm")


@pytest.fixture
def z2_sign():
    return make_rep("Z2-sign")
