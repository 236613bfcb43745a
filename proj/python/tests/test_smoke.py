import json

import pytest

import arrchow


def test_chow_polynomials():
    assert arrchow.chow_type_a(3) == [1, 8, 1]
    assert arrchow.chow_type_b(4) == [1, 99, 99, 1]
    assert arrchow.chow_dns(5, 2) == [1, 478, 2298, 478, 1]


def test_arrangement_routes_agree():
    a = arrchow.Arrangement.family("dns", 4, 2)
    assert len(a) == 14
    h = a.h_polynomial()
    assert h == h[::-1]
    assert arrchow.gamma_vector(h) == [1, 56, 48]
    assert a.chow_polynomial() == [1, 79, 79, 1]
    assert a.characteristic_polynomial()[-1] == 1
    assert len(a.chambers()) == sum(h)


def test_custom_arrangement():
    a = arrchow.Arrangement(2, [[1, -1], [1, 1], [1, 0], [0, 1]])
    assert a.f_vector() == [1, 8, 8]
    assert a.h_polynomial() == [1, 6, 1]
    with pytest.raises(arrchow.Error):
        arrchow.Arrangement(2, [[0, 0]])


def test_closed_forms():
    assert arrchow.h_b_closed(3) == [1, 23, 23, 1]
    assert arrchow.h_d_closed(3) == [1, 11, 11, 1]
    assert arrchow.gamma_increment(5) == [0, 16, 128]


def test_big_coefficients_are_python_ints():
    h = arrchow.chow_type_b(7)
    assert h[3] == 3724100
    assert all(isinstance(c, int) for c in h)


def test_verify_and_cli():
    reports = arrchow.verify("chains", 3)
    assert reports and all(r["status"] == "pass" for r in reports)
    status, out, err = arrchow.run_cli(["chow", "--family", "dns", "--n", "4", "--s", "1", "--format", "json"])
    assert status == 0 and err == ""
    assert json.loads(out)["coeffs"] == ["1", "69", "69", "1"]
    status, _, err = arrchow.run_cli(["chow", "--family", "dns", "--n", "4"])
    assert status == 2 and "error" in err
