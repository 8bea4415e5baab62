import math

import pytest

import hatilt


def test_dyck_paths():
    assert hatilt.enumerate_dyck(3, 4) == ["HHHVVVV", "HHVHVVV", "HHVVHVV", "HVHHVVV", "HVHVHVV"]
    assert len(hatilt.enumerate_paths(3, 4)) == math.comb(7, 3)
    assert hatilt.coords(3, 4, "HVHVHVV") == [1, 3, 5]


def test_rotation_orbits_have_one_dyck_path():
    for steps in hatilt.enumerate_paths(2, 5):
        orbit = [steps]
        while (nxt := hatilt.rotate(2, 5, orbit[-1])) != steps:
            orbit.append(nxt)
        assert len(orbit) == 7
        assert sum(hatilt.is_dyck(2, 5, p) for p in orbit) == 1


def test_hom_dims_agree():
    assert hatilt.hom_dim(3, 3, [1, 2, 4, 6], 0, [1, 3, 5, 7], 0) == 1
    assert hatilt.hom_dim(3, 3, [2, 3, 5, 7], 0, [1, 2, 4, 6], 1) == 1
    assert hatilt.hom_dim_linear(3, 3, [2, 3, 5, 7], 0, [1, 2, 4, 6], 1) == 1
    assert hatilt.hom_dim(3, 3, [1, 2, 4, 6], 1, [1, 2, 4, 6], 0) == 0


def test_claims():
    assert hatilt.run_claim("gldim_B", 3, 2) == ("pass", "6")
    assert hatilt.run_claim("gldim_B", 3, 2, max_len=2)[0] == "skipped"
    assert "rigidity" in hatilt.claim_names()


def test_errors():
    with pytest.raises(ValueError):
        hatilt.coords(3, 4, "HHH")
    with pytest.raises(ValueError):
        hatilt.run_claim("nope", 3, 2)
