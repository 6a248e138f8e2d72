import json
import os
import subprocess

import pytest

import gnorm


def cycle(n):
    return [(i, (i + 1) % n) for i in range(n)]


PETERSEN = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]


def test_decide_golden():
    assert gnorm.decide(5, cycle(5))["outcome"] == "NotNormal"
    assert gnorm.decide(7, cycle(7))["outcome"] == "NotNormal"
    res = gnorm.decide(9, cycle(9))
    assert res["outcome"] == "Normal"
    assert res["cliques"] and res["independents"]
    assert gnorm.verify(9, cycle(9), res["cliques"], res["independents"])["valid"]


def test_verify_flags_violations():
    bad = gnorm.verify(5, cycle(5), [[0, 1], [2, 3], [4]], [[0, 2], [1, 3], [2, 4]])
    assert not bad["valid"]
    assert len(bad["violations"]) == 3
    assert all("disjoint" in v for v in bad["violations"])


def test_star_covering_of_c9():
    res = gnorm.decide(9, cycle(9))
    cover = gnorm.star_covering(9, cycle(9), res["cliques"], res["independents"])
    assert len(cover["stars"]) <= gnorm.independence_number(9, cycle(9))
    seen = set()
    for star in cover["stars"]:
        members = {star["center"], *star["leaves"]}
        assert not (seen & members)
        seen |= members
    with pytest.raises(ValueError):
        gnorm.star_covering(3, [(0, 1), (1, 2), (0, 2)], [[0, 1, 2]], [[0], [1], [2]])


def test_graph_facts():
    assert gnorm.girth(10, PETERSEN) == 5
    assert gnorm.girth(4, [(0, 1), (1, 2)]) is None
    assert gnorm.count_short_cycles(10, PETERSEN, 5) == 12
    assert gnorm.independence_number(10, PETERSEN) == 4
    assert len(gnorm.maximal_cliques(10, PETERSEN)) == 15
    removed = gnorm.short_cycle_transversal(10, PETERSEN, 7)
    assert 0 < len(removed) <= gnorm.count_short_cycles(10, PETERSEN, 7)


def test_graph6_round_trip():
    assert gnorm.to_graph6(5, cycle(5)) == "Dhc"
    n, edges = gnorm.from_graph6("Dhc")
    assert n == 5
    assert sorted(edges) == sorted(tuple(sorted(e)) for e in cycle(5))


def test_sampling_determinism():
    a = gnorm.sample_gnp(30, 0.2, 7, 1)
    assert a == gnorm.sample_gnp(30, 0.2, 7, 1)
    assert a != gnorm.sample_gnp(30, 0.2, 7, 2)


@pytest.fixture(scope="module")
def cli():
    path = os.environ.get("GNORM_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("GNORM_CLI not set")
    return path


def run_cli(cli, *args, stdin=None):
    return subprocess.run([cli, *args], input=stdin, capture_output=True, text=True)


def test_cli_check_exit_codes(cli, tmp_path):
    c5 = tmp_path / "c5.g6"
    c5.write_text(gnorm.to_graph6(5, cycle(5)) + "\n")
    c9 = tmp_path / "c9.g6"
    c9.write_text(gnorm.to_graph6(9, cycle(9)) + "\n")

    not_normal = run_cli(cli, "check", "--graph", str(c5))
    assert not_normal.returncode == 1
    payload = json.loads(not_normal.stdout)
    assert payload["outcome"] == "NotNormal"

    normal = run_cli(cli, "check", "--graph", str(c9))
    assert normal.returncode == 0
    payload = json.loads(normal.stdout)
    assert payload["outcome"] == "Normal"
    assert payload["certificate"]["cliques"]

    usage = run_cli(cli, "check")
    assert usage.returncode == 64


def test_cli_verify_and_reduce(cli, tmp_path):
    c9 = tmp_path / "c9.g6"
    c9.write_text(gnorm.to_graph6(9, cycle(9)) + "\n")
    checked = run_cli(cli, "check", "--graph", str(c9))
    cert = tmp_path / "cert.json"
    cert.write_text(json.dumps(json.loads(checked.stdout)["certificate"]))

    verified = run_cli(cli, "verify", "--graph", str(c9), "--cert", str(cert))
    assert verified.returncode == 0
    assert json.loads(verified.stdout)["valid"]

    reduced = run_cli(cli, "reduce", "--graph", str(c9), "--cert", str(cert))
    assert reduced.returncode == 0
    stars = json.loads(reduced.stdout)["stars"]
    assert stars and len(stars) <= 4


def test_cli_lemma_report(cli):
    res = run_cli(cli, "lemma", "transversal", "--n", "400", "--trials", "3")
    assert res.returncode == 0
    report = json.loads(res.stdout)
    assert report["suite"] == "transversal"
    assert len(report["trials"]) == 3
