import pathlib

import pytest

import monoidal_lab as ml

PROGRAMS = pathlib.Path(__file__).resolve().parents[2] / "programs"


def test_fixture_names():
    assert ml.fixture_names() == [
        "construction-3-4",
        "example-5-6",
        "pure-quadratic",
        "quadratic-extended-d4",
    ]


def test_member_and_witness():
    p = ml.Program.fixture("construction-3-4")
    yes = p.member("y/(x^2*z^3)")
    assert yes["status"] == "yes"
    assert yes["witness"]["stage"] <= 6
    no = p.member([1, 0, -1])
    assert no["status"] == "no"
    assert no["certificate"]["kind"] == "recurrence"


def test_file_matches_fixture():
    p = ml.Program.from_file(PROGRAMS / "example-5-6.prog")
    assert p.dimension == 3
    assert p.serialize() == ml.Program.fixture("example-5-6").serialize()


def test_gcd_and_intersection():
    pq = ml.Program.fixture("pure-quadratic")
    assert pq.gcd("y", "z")["status"] == "diverges"
    assert pq.intersect(["y", "z"])["kind"] == "not-finitely-generated"
    c34 = ml.Program.fixture("construction-3-4")
    inter = c34.intersect(["x", "z"])
    assert inter["kind"] == "principal"
    assert inter["generator"]["exponents"] == [1, 0, 1]
    assert c34.divides("x", "x*y")["status"] == "yes"


def test_chains_and_classify():
    e = ml.Program.fixture("example-5-6")
    assert len(e.chains()["chains"]) == 2
    report = ml.Program.fixture("pure-quadratic").classify()
    assert report["gcd"]["status"] == "no"


def test_run_fixture():
    run = ml.run_fixture("example-5-6")
    assert run["passed"]
    assert all(c["passed"] for c in run["checks"])


def test_errors():
    with pytest.raises(ml.InputError):
        ml.Program.from_text("monoidal-program v1\ndimension 3\ncycle {1,2}:3\n")
    with pytest.raises(ml.InputError):
        ml.Program.fixture("construction-3-4").member("q")
    with pytest.raises(ml.InputError):
        ml.Program.fixture("construction-3-4").member([1, 2])
