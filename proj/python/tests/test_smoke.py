import mckay


def test_tables():
    assert mckay.group_order("bi") == 120
    table = mckay.character_table("bt")
    assert len(table["classes"]) == len(table["characters"]) == 7
    assert all(passed for _, passed, _ in mckay.verify_table("bo"))


def test_graphs():
    e8 = mckay.split_graph("bi")
    assert e8["label"].startswith("(E_8)")
    assert len(e8["vertices"]) == 9
    f4 = mckay.fold("bt", "m=4,H=")
    assert f4["label"] == "(E_6)' ~ F4"
    assert mckay.classify(f4) == "(E_6)' ~ F4"


def test_realizability():
    assert mckay.hilbert_symbol("-1", "-1") == -1
    assert mckay.hilbert_symbol("-1", "5") == 1
    assert mckay.realizable("bd:2")["verdict"] == "NotRealizable"
    v = mckay.realizable("bd:2", "m=4,H=")
    assert v["verdict"] == "Realizable"
    assert set(v["witness"]) == {"sigma", "tau"}
    assert all(passed for _, passed, _ in v["checks"])


def test_toric():
    assert mckay.self_intersections(6) == [-2] * 5
    assert mckay.tautological_degrees(3) == [[1, 0], [0, 1]]
    for form in ("mu", "constant"):
        assert all(passed for _, passed, _ in mckay.verify_mckay_cyclic(5, form))


def test_cli():
    code, out, err = mckay.run_cli(["realizable", "bd:2", "--field", "m=1,H="])
    assert code == 1 and "NotRealizable" in out
    assert mckay.run_cli(["nonsense"])[0] == 64
    assert mckay.run_cli(["graph", "bo"]) == mckay.run_cli(["graph", "bo"])
