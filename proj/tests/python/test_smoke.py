import pytest

import qtscreen


def test_cartan_b2():
    cd = qtscreen.Cartan("B2")
    assert cd.rank == 2
    assert cd.matrix == [[2, -1], [-2, 2]]
    assert cd.symmetrizers == [2, 1]
    assert not cd.is_ade


def test_bad_cartan_raises():
    with pytest.raises(ValueError):
        qtscreen.Cartan('{"C": [[2, 1], [1, 2]]}')


def test_gauss_binom():
    assert qtscreen.gauss_binom(3, 1) == {-2: 1, 0: 1, 2: 1}
    assert qtscreen.t_integer(2) == {0: 1, 2: 1}


def test_eval_canonical():
    assert qtscreen.eval("W[1,0]*(1+V[1,1])", cartan="sl2") == "W[1,0] + W[1,0]·V[1,1]"
    assert qtscreen.eval("(t^2+1) Y[1,0]^-1", ring="y") == "(1 + t^2)·Y[1,0]^-1"


def test_eval_parse_error():
    with pytest.raises(ValueError):
        qtscreen.eval("W[1,")


def test_eval_json_terms():
    terms = qtscreen.eval_json("3 Y[1,0]", ring="classical")
    assert len(terms) == 1
    assert terms[0]["coeff"] == 3


def test_screen_expansion_is_killed():
    assert qtscreen.screen("W[1,0]*(1+V[1,1])", 1, kind="hatF", cartan="sl2") == "0"
    assert qtscreen.screen("Y[1,0]", 1, kind="classicalF") == "Y[1,0]·S[1,0]"


def test_epoly():
    assert qtscreen.epoly("W[1,0]", 1, cartan="sl2") == "W[1,0] + W[1,0]·V[1,1]"
    assert qtscreen.epoly("Y[1,0]", 1, flavor="y", cartan="sl2") == "Y[1,0] + Y[1,2]^-1"


def test_kernel_routes_agree():
    yes = qtscreen.kernel("W[1,0] + W[1,0]*V[1,1]", 1, cartan="sl2")
    assert yes["member"] and yes["routes_agree"] and yes["screen_nf"] == "0"
    no = qtscreen.kernel("V[1,1]", 1, cartan="sl2")
    assert not no["member"] and no["routes_agree"]


def test_in_kt():
    assert qtscreen.in_kt("Y[1,0] + Y[1,2]^-1*Y[2,1] + Y[2,3]^-1")
    assert not qtscreen.in_kt("Y[1,0]", cartan="sl2")


def test_verify_report():
    report = qtscreen.verify("binom", samples=20)
    assert report["suite"] == "binom"
    assert report["failed"] == 0
    assert report["passed"] > 0
    assert "kernel-hat" in qtscreen.suite_names()
