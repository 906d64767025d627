import warnings

import numpy as np
import pytest

from monogen import fixtures


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture(params=sorted(fixtures.algebras()))
def algebra_name(request):
    return request.param


def rel_err(x, y):
    x, y = np.asarray(x), np.asarray(y)
    return float(np.max(np.abs(x - y)) / max(1.0, float(np.max(np.abs(y)))))


def quiet(fn, *a, **kw):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return fn(*a, **kw)
