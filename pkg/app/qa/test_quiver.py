from itertools import product

import pytest

from app.core import linalg
from app.core.quiver import (double_quiver, enumerate_paths, jordan_quiver, linear_quiver,
                             path_product, path_to_elementary)
from app.types.errors import DomainError
from app.types.quivers import Arrow, Path, Quiver


def test_linear_quiver_paths():
    paths = enumerate_paths(linear_quiver(3), 3)
    assert len(paths) == 6
    assert [p.length for p in paths] == [0, 0, 0, 1, 1, 2]
    assert str(paths[-1]) == "a1 a2"


def test_path_product_and_zero():
    q = linear_quiver(3)
    a1, a2 = q.arrow("a1"), q.arrow("a2")
    p = Path(start=2, arrows=(a1,))
    r = Path(start=3, arrows=(a2,))
    assert path_product(p, r) == Path(start=3, arrows=(a2, a1))
    assert path_product(r, p) is None
    assert path_product(Path(start=1), p) == p


def test_path_product_is_associative_on_a3():
    q = linear_quiver(3)
    paths = enumerate_paths(q, 3)
    composable = 0
    for p, r, s in product(paths, repeat=3):
        pr = path_product(p, r, q)
        rs = path_product(r, s, q)
        left = None if pr is None else path_product(pr, s, q)
        right = None if rs is None else path_product(p, rs, q)
        assert left == right, (p, r, s)
        composable += left is not None
    # chains x >= y >= z >= w in {1, 2, 3}
    assert composable == 15


def test_path_product_rejects_paths_from_another_quiver():
    a3 = linear_quiver(3)
    p = Path(start=2, arrows=(a3.arrow("a1"),))
    foreign = Path(start=1, arrows=(Arrow("a1", 1, 2),))
    with pytest.raises(DomainError):
        path_product(p, foreign)
    with pytest.raises(DomainError):
        path_product(p, Path(start=4), a3)
    with pytest.raises(DomainError):
        path_product(Path(start=1, arrows=(Arrow("b", 1, 2),)), p, a3)
    assert path_product(p, Path(start=2), a3) == p


def test_paths_map_to_elementary_matrices():
    """Composition of paths matches the product of elementary matrices."""
    q = linear_quiver(3)
    paths = enumerate_paths(q, 2)
    for p in paths:
        for r in paths:
            prod = path_product(p, r)
            mat = linalg.matmul(path_to_elementary(p, 3), path_to_elementary(r, 3))
            if prod is None:
                assert linalg.is_zero(mat)
            else:
                assert linalg.equal(mat, path_to_elementary(prod, 3))


def test_jordan_quiver_has_one_path_per_length():
    assert len(enumerate_paths(jordan_quiver(), 4)) == 5


def test_loops_need_opt_in():
    with pytest.raises(DomainError):
        Quiver(vertices=(1,), arrows=(Arrow("t", 1, 1),))


def test_bad_quivers():
    with pytest.raises(DomainError):
        Quiver(vertices=(1, 2), arrows=(Arrow("a", 1, 3),))
    with pytest.raises(DomainError):
        Quiver(vertices=(1, 2), arrows=(Arrow("a", 1, 2), Arrow("a", 2, 1)))
    with pytest.raises(DomainError):
        Path(start=1, arrows=(Arrow("a", 2, 1),))


def test_double_quiver_orientation_and_signs():
    left = double_quiver(3)
    assert left.omega == {"a1", "a2"}
    assert left.sign("a1") == 1 and left.sign("a1bar") == -1
    assert left.bar("a2bar") == "a2"
    right = double_quiver(3, "right")
    assert right.omega == {"a1bar", "a2bar"}
    assert [a.id for a in left.omega_quiver().arrows] == ["a1", "a2"]
    with pytest.raises(DomainError):
        double_quiver(3, "up")


def test_quiver_json_round_trip():
    q = linear_quiver(4)
    assert Quiver.from_json_dict(q.to_json_dict()) == q
    with pytest.raises(DomainError):
        Quiver.from_json_dict({"vertices": [1]})
