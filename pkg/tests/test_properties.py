import json

import pytest

from suhiggs.properties import PROPERTIES, SuiteConfig, run_property_suite


def test_small_run_passes_and_has_appendix():
    s = run_property_suite(seed=7, p_max=2, trials=6)
    assert s.ok, s.failures
    assert set(s.counts) == set(PROPERTIES)
    assert all(c == [6, 0] for c in s.counts.values())
    assert set(s.appendix) == {"trace_formula", "descent_lemma", "su21_example"}


def test_zero_trials_is_vacuous():
    s = run_property_suite(seed=1, p_max=3, trials=0)
    assert s.ok and s.appendix == {}
    assert all(c == [0, 0] for c in s.counts.values())


def test_determinism():
    a = json.dumps(run_property_suite(3, 2, 4).to_dict(), sort_keys=True)
    b = json.dumps(run_property_suite(3, 2, 4).to_dict(), sort_keys=True)
    assert a == b


def test_failures_are_counted(monkeypatch):
    monkeypatch.setitem(PROPERTIES, "broken", lambda rng, p: False)
    s = run_property_suite(0, 1, 2)
    assert not s.ok
    assert s.counts["broken"] == [0, 2]


def test_config_bounds():
    with pytest.raises(ValueError):
        SuiteConfig(p_max=4)
    with pytest.raises(ValueError):
        SuiteConfig(trials=-1)
