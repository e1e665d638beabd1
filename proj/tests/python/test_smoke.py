import mtcheck


def test_catalog_d4():
    entries = mtcheck.catalog("D", 4)
    assert [e["weight"] for e in entries] == [1, 3, 4]
    assert all(e["dim"] == 8 for e in entries)


def test_catalog_large_dimension_is_exact():
    (spin,) = [e for e in mtcheck.catalog("D", 80) if e["weight"] == 80]
    assert spin["dim"] == 2**79


def test_pair_and_survivors():
    status, reason = mtcheck.check_pair("A:4:2", "A:9:1", 3)
    assert status == "Admissible"
    assert reason.startswith("Prop6.3:A")
    assert mtcheck.surviving_inners(56, "nsd", 15) == ["A:7:3"]
    assert mtcheck.surviving_inners(112, "symp", 15) == []


def test_quadratic_and_constraints():
    assert mtcheck.quadratic_min_rank("A:7:3") == 15
    assert mtcheck.quadratic_min_rank("E:6:1") is None
    assert mtcheck.transvection_constraint(8)["shapes"] == ["A:7:1", "C:4:1"]
    assert mtcheck.rank2_constraint(10, "symp") == ["C:5:1"]


def test_lemmas():
    sols = mtcheck.divisibility_solutions(20)
    assert (7, 3) in sols and all(s == 2 for m, s in sols if m != 7 or s != 3)
    assert mtcheck.gcd_mod4_check(9) == [4, 5, 6, 8, 9]
    pairs = [(g, r) for g, r, _ in mtcheck.exception_pairs(60)]
    assert (56, 15) in pairs and (10, 3) in pairs
    assert mtcheck.is_exception_pair(56, 15)


def test_monodromy_invariants():
    report = mtcheck.check_invariants(5, 3, 42)
    assert report and all(report.values())


def test_decide():
    v = mtcheck.decide("--g 4 --endo Q --toric-rank 2 --bad-semistable-split --simple")
    assert v["conclusion"] == "MT_and_divisorial"
    assert v["citations"] == ["Thm5.2", "Thm6.6"]
    hit = mtcheck.decide("--g 56 --endo k --signature 28,28 --toric-rank 30 --bad-semistable-split --simple")
    assert hit["conclusion"] == "ExceptionPairHit"


def test_decide_batch_reports_bad_lines():
    out = mtcheck.decide_batch("# comment\n--g 5 --endo Q --toric-rank 3 --bad-semistable-split\n--g 4 --endo Z\n")
    assert [v["conclusion"] for v in out] == ["MT", "InputInconsistent"]
