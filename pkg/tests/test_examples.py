"""Bundled example states and their catalog-value verification."""
import numpy as np
import pytest

from spinorinv.examples import (EXAMPLES, example_names, get_example,
                                load_example, verify_example)


def test_twenty_examples_registered():
    assert len(EXAMPLES) == 20
    assert len(example_names()) == 20
    assert "ghz3" in example_names()


def test_get_example_unknown():
    with pytest.raises(KeyError):
        get_example("no_such_state")
    with pytest.raises(KeyError):
        load_example("no_such_state")


def test_load_example_shapes():
    assert load_example("ghz3").tensor.shape == (4, 4, 4)
    assert load_example("cluster4").tensor.shape == (4, 4, 4, 4)
    assert np.isclose(load_example("ghz3").norm(), 1.0)


def test_expected_tables_are_consistent():
    for spec in EXAMPLES:
        assert spec.n_parties in (3, 4)
        assert spec.expected, spec.name
        for name, mag in spec.expected.items():
            assert mag > 0, (spec.name, name)


@pytest.mark.parametrize("name", [s.name for s in EXAMPLES])
def test_verify_example(name):
    report = verify_example(name)
    assert report.passed, report.to_dict()
    assert report.max_nonzero_error <= 1e-10
    assert report.max_zero_magnitude < 1e-12


def test_report_to_dict_round_trips_keys():
    d = verify_example("ghz3").to_dict()
    assert d["name"] == "ghz3"
    assert d["passed"] is True
