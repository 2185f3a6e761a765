import sys
import warnings
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

with warnings.catch_warnings():
    warnings.simplefilter("ignore", DeprecationWarning)
    from fastapi.testclient import TestClient

from sandhisearch.service import create_app


@pytest.fixture()
def client():
    with TestClient(create_app()) as c:
        yield c
