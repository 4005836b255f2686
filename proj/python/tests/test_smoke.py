import json

import pytest

import kgturan as kg


def test_families():
    assert kg.complete(4).num_edges() == 6
    assert kg.complete_uniform(5, 3).num_edges() == 10
    assert kg.path(3).n == 4
    assert kg.matching(3).edges == [[0, 1], [2, 3], [4, 5]]


def test_petersen_chi():
    petersen = kg.kneser(kg.complete_uniform(5, 2))
    assert petersen.n == 10
    assert petersen.num_edges() == 15
    assert kg.chromatic_number(petersen)["value"] == 3


def test_occurrences_and_turan():
    assert len(kg.occurrences(kg.complete(4), [kg.path(2)])) == 12
    assert kg.ex(kg.complete(4), [kg.path(2)])["value"] == 2
    assert kg.ex_alt(kg.complete(4), [kg.path(2)])["value"] == 2
    assert kg.ex_alt_sigma(kg.complete(4), [kg.path(2)], [0, 5, 1, 4, 2, 3])["value"] == 2
    assert kg.kneser_chi(kg.complete(4), [kg.path(2)]) == 4


def test_alternation():
    assert kg.alt([1, -1, 0, -1, 0, 1, 1, -1]) == 4
    h = kg.cycle(5).with_isolated_vertices(5)
    sigma = [0, 5, 1, 6, 2, 7, 3, 8, 4, 9]
    assert kg.alt_sigma(h, sigma, 1) == 7
    cert = kg.altermatic_certificate(h, sigma)
    assert cert["value"] == 3
    assert cert["verified"]
    assert kg.altermatic_certificate(kg.cycle(5))["value"] == 2


def test_unbounded_and_errors():
    assert kg.chromatic_number(kg.Hypergraph(2, [[0]]))["value"] == "unbounded"
    with pytest.raises(ValueError):
        kg.Hypergraph(2, [[0, 2]])
    with pytest.raises(ValueError):
        kg.complete_uniform(3, 4)
    with pytest.raises(kg.CapExceeded):
        kg.ex_alt(kg.complete(5), [kg.path(2)])


def test_json_round_trip():
    h = kg.multigraph(kg.cycle(3), 2)
    text = h.to_json()
    assert kg.Hypergraph.from_json(text) == h
    assert kg.Hypergraph.from_json(text).to_json() == text


def test_golden_and_cli():
    report = kg.golden(["kneser"])
    assert report["ok"]
    assert all(c["status"] == "pass" for c in report["cases"])
    code, out, _ = kg.run_cli(["compute", "chi", "--family", "kneser", "--n", "5", "--k", "2"])
    assert code == 0
    assert json.loads(out)["chi"] == 3
    code, _, err = kg.run_cli(["compute", "chi", "--family", "nope", "--n", "5"])
    assert code == 2
    assert err
