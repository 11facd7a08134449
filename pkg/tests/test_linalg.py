import pytest

from jonesq.laurent import ONE, Q, LaurentQ
from jonesq.linalg import Matrix, TensorMorphism, V, VD, basis, index_signs, sign_index, tensor_all


def m(rows):
    return Matrix.from_rows(rows)


def test_matmul_and_identity():
    a = m([[1, Q], [0, 2]])
    assert a @ Matrix.identity(2) == a
    assert (a @ a) == m([[1, Q + 2 * Q], [0, 4]])
    with pytest.raises(ValueError):
        a @ Matrix.identity(3)


def test_det_and_adjugate():
    a = m([[1, Q, 0], [0, 2, 1], [Q, 0, 1]])
    det = a.det()
    assert a @ a.adjugate() == Matrix.identity(3).scale(det)
    assert Matrix.identity(4).det() == ONE
    with pytest.raises(ValueError):
        Matrix((2, 3)).det()


def test_kron_numpy_order():
    a = m([[1, 2], [3, 4]])
    b = m([[0, 1], [1, 0]])
    k = a.kron(b)
    assert k.to_rows()[0] == [0, 1, 0, 2]
    assert k.shape == (4, 4)


def test_transpose_and_zero_dropping():
    a = Matrix((2, 2), {(0, 1): Q, (1, 0): 0})
    assert a.entries == {(0, 1): Q}
    assert a.T.entries == {(1, 0): Q}


def test_sign_index_round_trip():
    for n in range(4):
        for i, s in enumerate(basis(n)):
            assert sign_index(s) == i and index_signs(i, n) == s


def test_tensor_morphism_composition_is_typed():
    f = TensorMorphism.identity((V,))
    g = TensorMorphism.identity((VD,))
    with pytest.raises(ValueError):
        f @ g
    with pytest.raises(ValueError):
        TensorMorphism((V,), (V,), Matrix.identity(4))


def test_tensor_leftmost_fastest():
    x = TensorMorphism.from_signs((V,), (V,), {((1,), (-1,)): ONE})
    i = TensorMorphism.identity((V,))
    xi = x.tensor(i)
    assert xi.apply((-1, -1)) == {(1, -1): ONE}
    assert tensor_all([x, i]) == xi


def test_scalar_multiplication():
    i = TensorMorphism.identity((V, V))
    assert (i * Q).matrix == Matrix.identity(4).scale(Q)
    assert (Q * i) == i * Q
    assert i - i == TensorMorphism((V, V), (V, V), Matrix((4, 4)))
    assert TensorMorphism.scalar(LaurentQ({4: 2})).matrix[(0, 0)] == 2 * Q
