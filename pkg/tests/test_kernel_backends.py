import random

import pytest

from helpers import literal_combine, random_spectrum
from plotkin_wef import combine, combine_single_weight, kernel


@pytest.mark.parametrize("backend", kernel.available_backends())
def test_backend_matches_literal_reference(backend):
    """Each backend reproduces a from-scratch nested-sum evaluation exactly."""
    rng = random.Random(1234)
    with kernel.use_backend(backend):
        for _ in range(25):
            n = rng.randint(1, 9)
            u = random_spectrum(rng, n)
            v = random_spectrum(rng, n)
            assert combine(u, v) == literal_combine(u, v)


@pytest.mark.skipif(
    len(kernel.available_backends()) < 2, reason="compiled backend not built"
)
def test_backends_agree_on_dense_input():
    rng = random.Random(77)
    u = random_spectrum(rng, 32, max_num=50, max_den=9)
    v = random_spectrum(rng, 32, max_num=50, max_den=9)
    results = {}
    for backend in kernel.available_backends():
        with kernel.use_backend(backend):
            results[backend] = (combine(u, v), combine_single_weight(u, v, 31))
    first, *rest = results.values()
    assert all(r == first for r in rest)


def test_active_backend_is_available():
    assert kernel.backend_name() in kernel.available_backends()


def test_use_backend_restores_previous():
    before = kernel.backend_name()
    with kernel.use_backend("python"):
        assert kernel.backend_name() == "python"
    assert kernel.backend_name() == before


def test_use_backend_rejects_unknown():
    with pytest.raises(ValueError):
        with kernel.use_backend("fortran"):
            pass
