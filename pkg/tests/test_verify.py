from flagcoh.verify import all_passed, run_checks


def by_name(results):
    return {r.name: r for r in results}


def test_small_types_fully_pass():
    for name in ["A2", "A3", "C3", "G2"]:
        results = run_checks(name)
        assert all_passed(results), [(r.name, r.detail) for r in results if r.status == "fail"]
        assert not [r for r in results if r.status == "warn"], name


def test_a1_warns_only_on_condition_redundancy():
    # the rank-1 reflection flips nothing, so the identity cover has equal
    # signs but unequal counts: condition c is independent already here
    results = run_checks("A1")
    assert all_passed(results)
    warned = {r.name for r in results if r.status == "warn"}
    assert warned == {"cover-condition-redundancy"}


def test_b3_warns_but_passes():
    results = run_checks("B3")
    assert all_passed(results)
    warned = {r.name for r in results if r.status == "warn"}
    assert warned == {"negative-components", "cover-condition-redundancy"}


def test_e8_runs_longest_checks_only():
    results = run_checks("E8")
    assert all_passed(results)
    named = by_name(results)
    assert named["blowups-at-longest"].status == "pass"
    assert named["longest-length"].status == "pass"
    assert named["enumeration"].status == "skip"


def test_component_reference_values_enforced():
    named = by_name(run_checks("A3"))
    assert named["graph-components"].status == "pass"
    assert "10" in named["graph-components"].detail
    named = by_name(run_checks("B3"))
    assert "17" in named["graph-components"].detail


def test_cap_override_degrades_gracefully():
    results = run_checks("A3", cap=10)
    named = by_name(results)
    assert named["enumeration"].status == "skip"
    assert all_passed(results)
