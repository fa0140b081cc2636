import json

import pytest

import sphtwist


def test_mesh_hom_and_oracle():
    m = sphtwist.MeshModel("d4", -6, 6)
    assert m.hom_dim((1, 0), (2, 1)) == 1
    assert m.hom_dim_oracle((1, 0), (2, 1)) == 1
    assert m.shift((1, 0)) == (1, 3)
    assert len(m.vertices) == 4 * 13
    with pytest.raises(sphtwist.ComputationError):
        sphtwist.MeshModel("d4", 3, -3)


def test_d4_twists():
    m = sphtwist.MeshModel("d4", -9, 9)
    e, e2 = sphtwist.standard_sequences("d4")
    assert sphtwist.check_spherical(m, e)[0]
    te, te2 = sphtwist.builtin_d4_twists(m)
    assert te((2, 0)) == (3, 1)
    assert sphtwist.derive_twist(m, e).table() == te.table()
    assert sphtwist.verify_relation([te, te2], "s1 s2 s1", "s2 s1 s2")
    assert not sphtwist.verify_relation([te, te2], "s1", "s2")
    orbit = json.loads(sphtwist.orbit_json([te, te2], m, [e, e2]))
    assert len(orbit["nodes"]) == 3
    assert sphtwist.detect_exceptional(m, e, e2, "A")


def test_a3_twists():
    m = sphtwist.MeshModel("a3", -8, 8)
    e = sphtwist.SphericalSequence("E", [(0, 0), (0, -1)], [1, 0])
    e2 = sphtwist.SphericalSequence("E'", [(1, 0), (1, -1), (-1, 0), (-1, -1)], [1, 0, 1, 0])
    assert e2.sphericity == 2
    te, te2 = sphtwist.derive_twist(m, e), sphtwist.derive_twist(m, e2)
    assert te((1, 0)) == (-1, 1)
    assert sphtwist.verify_relation([te, te2], "s1 s2", "s2 s1")
    assert sphtwist.verify_relation([te, te2], "(s1 s2^-1)^2", "e")
    with pytest.raises(sphtwist.InsufficientWindow):
        te((0, 40))


def test_groups_and_classification():
    assert sphtwist.are_equal("s3z", "s1^2", "s2^2")
    assert not sphtwist.are_equal("a2", "s1", "s2")
    assert sphtwist.normal_form("a2", "s1 s2 s1") == "center Delta^0 ; a"
    assert sphtwist.classify(3, 2, 3, 2, 3)["tag"] == "ExceptionalA2orS3Z"
    family = sphtwist.classify(3, 5, 9, 15, 9)
    assert family["tag"] == "QuotientFamily"
    assert family["center_power_multiplier"] == 3
    with pytest.raises(sphtwist.ParseError):
        sphtwist.normal_form("a2", "s1 (")


def test_lambda_and_picard():
    info = sphtwist.lambda_info(2)
    assert info["dimension"] == 28
    assert info["nakayama_order"] == 6
    assert (info["a"], info["a2"]) == (3, 1)
    assert info["central_action_matches_k0"]
    assert sphtwist.picard_normal_form("[(s1 s2)^3 ; 0 ; 0]", 1) == "[e ; 5 ; 0 ; (-1)^1]"
    assert sphtwist.picard_equal("[(s1 s2)^3 ; 0 ; 0]", "[e ; 5 ; 3 ; (-1)^2]", 2)


def test_suites_and_cli():
    assert all(passed for _, passed, _ in sphtwist.verify_d4())
    assert all(passed for _, passed, _ in sphtwist.verify_a3())
    code, out, _ = sphtwist.run_cli(["--format", "json", "group", "eq", "s3z", "s1^2", "s2^2"])
    assert code == 0
    assert json.loads(out)["equal"] is True
    code, _, err = sphtwist.run_cli(["group", "nf", "a2"])
    assert code == 2
    assert err


@pytest.mark.parametrize(
    "args",
    [
        ["verify", "d4"],
        ["twist", "orbit"],
        ["algebra", "lambda", "--k", "1"],
        ["twist", "pingpong", "--system", "line"],
    ],
)
def test_json_reserializes_identically(args):
    code, out, _ = sphtwist.run_cli(["--format", "json", *args])
    assert code in (0, 1)
    body = out.rstrip("\n")
    again = json.dumps(json.loads(body), separators=(",", ":"), sort_keys=True, ensure_ascii=False)
    assert again == body
