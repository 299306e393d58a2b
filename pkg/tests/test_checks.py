import pytest

from msmetric import nmultiset
from msmetric.checks import SUITES, run_all, run_suite, suite_rng


@pytest.fixture
def faulty_costs(monkeypatch):
    """Triple one cost entry; zeros stay zero, so only the triangle law can break."""

    def hook(c):
        c = c.copy()
        c[0, 0] *= 3.0
        return c

    monkeypatch.setattr(nmultiset, "_cost_hook", hook)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_every_suite_passes_small(name):
    result = run_suite(name, seed=1, iterations=200)
    assert result.passed, result.counterexample
    assert result.checks > 0


def test_fault_injection_breaks_triangle(faulty_costs):
    result = run_suite("nmultiset_metric_axioms", seed=42, iterations=10_000)
    assert not result.passed
    cex = result.counterexample
    assert cex["law"] == "triangle"
    assert cex["d_ac"] > cex["d_ab"] + cex["d_bc"]
    assert {"a", "b", "c"} <= cex.keys()


def test_fault_counterexample_reproduces(faulty_costs):
    from msmetric import jsonio
    from msmetric.nmultiset import matching_distance

    cex = run_suite("nmultiset_metric_axioms", seed=42, iterations=10_000).counterexample
    space = jsonio.space_from_json(cex["space"])
    a, b, c = (jsonio.multiset_from_json(space, cex[k]) for k in "abc")
    assert matching_distance(a, c) > matching_distance(a, b) + matching_distance(b, c)


def test_rng_streams_independent_of_order():
    x = suite_rng(5, "l1_enclosure").random(4)
    suite_rng(5, "other").random(100)
    assert (suite_rng(5, "l1_enclosure").random(4) == x).all()
    assert not (suite_rng(6, "l1_enclosure").random(4) == x).all()


def test_run_all_sorted():
    names = [r.name for r in run_all(seed=0, iterations=5, names=["quotient_lipschitz", "assignment_oracle"])]
    assert names == ["assignment_oracle", "quotient_lipschitz"]
