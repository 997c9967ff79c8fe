import pytest

import sedf


def test_version():
    assert sedf.__version__ == "0.1.0"


def test_enumerate_admissible():
    rows = sedf.enumerate_admissible(64)
    assert len(rows) == 117
    assert rows[0] == (5, 2, 2, 1)
    assert all(lam * (n - 1) == k * k * (m - 1) for n, m, k, lam in rows)
    assert len(sedf.enumerate_admissible(24)) == 18
    with_trivial = sedf.enumerate_admissible(5, include_trivial=True)
    assert (5, 5, 1, 1) in with_trivial


def test_group_info():
    d10 = sedf.group_info("D10")
    assert d10["order"] == 10
    assert not d10["abelian"]
    assert "sr^4" in d10["labels"]
    z9 = sedf.group_info("Z3xZ3")
    assert z9["abelian"]
    with pytest.raises(sedf.Error):
        sedf.group_info("Q8")


def test_search_and_classify():
    result = sedf.search_all("Z5", 2, 2, 1)
    assert len(result["families"]) == 4
    assert result["nodes"] > 0
    assert "Z5: {0,1},{2,4}" in result["families"]

    classes = sedf.classify(result["families"])
    assert len(classes) == 1
    assert sorted(classes[0]["members"]) == [0, 1, 2, 3]

    hits17 = sedf.search_all("Z17", 2, 4, 1)
    assert len(sedf.classify(hits17["families"])) == 2


def test_constructions_round_trip():
    line = sedf.pa_st(4)
    assert line == "Z17: {0,1,2,3},{4,8,12,16}"
    assert sedf.verify(line, "sedf", 1)
    assert not sedf.verify("Z5: {0,1},{2,3}", "sedf", 1)

    assert sedf.verify(sedf.paley(13), "sedf", 3)
    assert any(sedf.verify(f, "sedf", 1) for f in sedf.cyclotomic(17, 4))
    assert sedf.verify(sedf.even_k(2), "sedf", 1)
    assert sedf.verify(sedf.dihedral_sedf(3), "sedf", 1)
    assert sedf.verify(sedf.trivial("Z4"), "sedf", 1)

    one, two = sedf.composite_pair(2, 2)
    assert not sedf.equivalent(one, two)
    assert sedf.equivalent(one, sedf.pa_st(4))

    blown = sedf.recursive_lambda1("Z5: {0,1},{2,4}", 2)
    assert blown == sedf.pa_st(4)
    big = sedf.recursive_gsedf("Z7: {0,3},{4,5,6}", 6, 4, 2, 3)
    assert sedf.verify(big, "sedf", 1)
    assert sedf.verify_gsedf(big, [12, 12], [1, 1])


def test_verify_variants():
    assert sedf.verify("D10: {e,s,r},{sr,r^3,sr^4}", "cosedf", 1)
    assert sedf.verify("Z3: {0},{1},{2}", "edf", 3)
    assert sedf.verify_pds("Z13: {1,3,4,9,10,12}", 2, 3)
    with pytest.raises(sedf.Error):
        sedf.verify("Z5: {0,1},{2,4}", "sedf", 0)
