import json

import pytest

import vctk

E8_WORD = "a7 a6 a5 a4 a3 a2 a1 b5 b4 b7 b6 b5 b7 b6 b5 b8 b7 b6 k2 k7 k8"


def test_conversions():
    s = [[-2, 1], [1, -2]]
    l = vctk.seifert_from_intersection(s, 2)
    assert l == [[1, 0], [-1, 1]]
    assert vctk.intersection_from_seifert(l, 2) == s
    h = vctk.monodromy_from_seifert(l, 2)
    assert h == [[-1, 1], [-1, 0]]
    assert vctk.seifert_from_monodromy(h, 2) == l
    assert vctk.bou_coxeter(s, 2) == [[0, -1], [1, -1]]


def test_e8_word():
    g = vctk.catalog_gram("E8:gabrielov")
    r = vctk.apply_word(g, 2, E8_WORD)
    assert r["gram"] == vctk.catalog_gram("E8:standard")


def test_spectral_and_constants():
    h = vctk.coxeter_element(vctk.catalog_gram("E6"), 2)
    coeffs = vctk.char_poly(h)
    ok, factors, _ = vctk.cyclotomic_factors(coeffs)
    assert ok and factors == [3, 12]
    assert vctk.signature(vctk.catalog_gram("T(2,3,7)"), 2) == (1, 1, 9)
    assert vctk.ll_degree("E8") == 37968750
    assert vctk.stored_constant("D_count:E8")[0] == 324000000
    assert vctk.group_order("D4") == 192
    assert vctk.group_order("T(2,3,7)", cap=100) is None


def test_big_integers_are_exact():
    big = 10**30
    l = [[1, 0], [big, 1]]
    s = vctk.intersection_from_seifert(l, 2)
    assert s[1][0] == -big and isinstance(s[1][0], int)


def test_orbit_and_suites():
    orbit = vctk.braid_orbit("A3")
    assert orbit["orbit_size"] == 128 and orbit["diagram_count"] == 16
    report = vctk.run_suite("braid", seed=42, random=20)
    assert report["pass"]
    assert vctk.run_suite("braid", seed=42, random=20) == report


def test_errors():
    with pytest.raises(ValueError):
        vctk.catalog_gram("Q7")
    with pytest.raises(ValueError):
        vctk.seifert_from_monodromy([[2]], 0)


def test_service_round_trip():
    svc = vctk.Service()
    status, body = svc.handle("POST", "/sessions", json.dumps({"catalog": "A2:pham"}))
    assert status == 201
    sid = json.loads(body)["id"]
    before = svc.handle("GET", f"/sessions/{sid}")[1]
    status, body = svc.handle("POST", f"/sessions/{sid}/moves", json.dumps({"token": "a1"}))
    assert status == 200
    assert json.loads(body)["state"]["diagram"]["edges"][0]["weight"] == 1
    assert svc.handle("POST", f"/sessions/{sid}/undo")[1] == before
    assert svc.handle("POST", f"/sessions/{sid}/undo")[0] == 409
