import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import o_ambient, o_inner, o_weight
from z2z4 import kernels
from z2z4.kernels import available_backends

BACKENDS = available_backends()


def test_compiled_backend_is_built():
    # the package ships with the extension; a pure-only environment would
    # still work but this build is expected to carry the fast path
    assert "compiled" in BACKENDS
    assert kernels.BACKEND in BACKENDS


@pytest.fixture(params=sorted(BACKENDS))
def backend(request):
    return BACKENDS[request.param]


def random_matrix(rng, n, alpha, beta):
    return np.concatenate(
        [
            rng.integers(0, 2, size=(n, alpha), dtype=np.uint8),
            rng.integers(0, 4, size=(n, beta), dtype=np.uint8),
        ],
        axis=1,
    )


def test_lee_weights_against_oracle(backend):
    rng = np.random.default_rng(7)
    for alpha, beta in ((0, 3), (3, 0), (2, 2), (5, 3)):
        mat = random_matrix(rng, 50, alpha, beta)
        got = backend.lee_weights(mat, alpha)
        expected = [o_weight(tuple(int(x) for x in row), alpha) for row in mat]
        assert got.tolist() == expected


def test_ambient_orthogonal_against_oracle(backend):
    rng = np.random.default_rng(11)
    for alpha, beta in ((1, 1), (2, 2), (3, 1), (0, 2), (2, 0)):
        gens = random_matrix(rng, 2, alpha, beta)
        got = backend.ambient_orthogonal(gens, alpha, beta)
        gen_tuples = [tuple(int(x) for x in g) for g in gens]
        expected = sorted(
            w
            for w in o_ambient(alpha, beta)
            if all(o_inner(w, g, alpha) == 0 for g in gen_tuples)
        )
        assert [tuple(int(x) for x in row) for row in got] == expected


def test_ambient_orthogonal_no_generators_is_everything(backend):
    got = backend.ambient_orthogonal(np.zeros((0, 3), np.uint8), 1, 2)
    assert len(got) == 2 * 16
    assert [tuple(int(x) for x in row) for row in got] == sorted(o_ambient(1, 2))


def test_permuted_equals_basics(backend):
    mat = np.array([[0, 0, 0, 0], [0, 1, 1, 3], [1, 0, 2, 2]], dtype=np.uint8)
    identity = np.arange(4, dtype=np.int64)
    assert backend.permuted_equals(mat, identity, mat)
    swap = np.array([1, 0, 2, 3], dtype=np.int64)
    swapped = np.array(sorted(map(tuple, mat[:, swap])), dtype=np.uint8)
    assert backend.permuted_equals(mat, swap, swapped)
    assert not backend.permuted_equals(mat, swap, mat)
    assert not backend.permuted_equals(mat, identity, mat[:2])


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_backends_agree(data):
    if len(BACKENDS) < 2:
        pytest.skip("only one backend importable")
    rng = np.random.default_rng(data.draw(st.integers(0, 2**32 - 1)))
    alpha = data.draw(st.integers(0, 3))
    beta = data.draw(st.integers(0 if alpha else 1, 3))
    n = data.draw(st.integers(1, 8))
    mat = np.unique(random_matrix(rng, n, alpha, beta), axis=0)
    gens = random_matrix(rng, data.draw(st.integers(0, 3)), alpha, beta)

    results = {}
    for name, impl in BACKENDS.items():
        perm = np.concatenate(
            [
                rng.permutation(alpha).astype(np.int64),
                alpha + rng.permutation(beta).astype(np.int64),
            ]
        )
        results[name] = (
            impl.lee_weights(mat, alpha).tolist(),
            impl.ambient_orthogonal(gens, alpha, beta).tolist(),
        )
        rng = np.random.default_rng(0)  # same perm draw for each backend
    first, second = results.values()
    assert first == second


def test_permuted_equals_backends_agree_on_random_perms():
    if len(BACKENDS) < 2:
        pytest.skip("only one backend importable")
    rng = np.random.default_rng(3)
    mat = np.unique(random_matrix(rng, 12, 3, 3), axis=0)
    mat = mat[np.lexsort(mat.T[::-1])]
    for sigma in itertools.permutations(range(3)):
        for tau in itertools.permutations(range(3)):
            perm = np.array(list(sigma) + [3 + j for j in tau], dtype=np.int64)
            answers = {
                name: impl.permuted_equals(mat, perm, mat)
                for name, impl in BACKENDS.items()
            }
            assert len(set(answers.values())) == 1
