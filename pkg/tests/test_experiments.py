import math
from fractions import Fraction
from math import comb

import pytest

from blockstable.experiments import (
    CSV_HEADER,
    ExperimentConfig,
    ExperimentReport,
    binomial_union_bound,
    degree_tail_bound_k,
    degree_tail_bound_n,
    degree_threshold,
    diameter_threshold,
    eps,
    eta,
    load_base,
    path_tail_bound,
    scaled_diameter_bound,
    scaled_diameter_threshold,
    rare_degree_bound,
    run_experiment,
    sigma,
    tree_path_probability,
    tree_rare_degree_rate,
    write_report,
)


def test_degree_formulas():
    assert degree_tail_bound_n(10, 3, 1) == pytest.approx(3 * math.e)
    assert degree_tail_bound_n(100, 10, 2) == pytest.approx(100 * (math.e / 20) ** 2)
    assert degree_tail_bound_k(4, 2) == pytest.approx(4 * math.e**2 / 4)
    n = 10**6
    assert eps(n) == pytest.approx(2 * math.log(math.log(math.log(n))) / math.log(math.log(n)))
    assert degree_threshold(n) == pytest.approx((1 + eps(n)) * math.log(n) / math.log(math.log(n)))


def test_binomial_union_matches_sum():
    n, k, s = 7, 5, 2
    direct = n * sum(comb(k - 1, i) * (1 / n) ** i * (1 - 1 / n) ** (k - 1 - i) for i in range(s, k))
    assert binomial_union_bound(n, k, s) == pytest.approx(direct)
    assert binomial_union_bound(7, 1, 1) == 0.0
    # the binomial union sits below the closed-form bound
    for s in range(1, 5):
        assert binomial_union_bound(50, 30, s) <= degree_tail_bound_n(50, 30, s) + 1e-12


def test_rare_degree_formula():
    n, c = 1000, 0.5
    assert eta(n) == pytest.approx(2 * math.log(math.log(n)) / math.log(n))
    assert rare_degree_bound(n, c) == pytest.approx(math.exp(-(1 - eta(n)) * c * n))
    assert tree_rare_degree_rate(n, c) == pytest.approx(math.exp(-c * n))
    # the exponent ratio 1 - eta(n) climbs towards one
    small = math.log(rare_degree_bound(100, c)) / math.log(tree_rare_degree_rate(100, c))
    assert small == pytest.approx(1 - eta(100))
    assert small < 1 - eta(10**8) < 1


def test_path_formulas():
    assert path_tail_bound(3, 0) == 18
    assert path_tail_bound(3, 4) == pytest.approx(18 * math.exp(-2))
    assert diameter_threshold(10**4) == pytest.approx(5 * math.sqrt(10**4 * math.log(10**4)))
    assert 1517 < diameter_threshold(10**4) < 1518
    assert scaled_diameter_threshold(100, 5) == pytest.approx(5 * math.sqrt(101 * math.log(100)) + 4)
    assert scaled_diameter_bound(10**6, 5) < scaled_diameter_bound(10**3, 5)
    assert scaled_diameter_bound(10**3, 4) == pytest.approx(2)


def test_tree_path_probability():
    assert tree_path_probability(4) == Fraction(3, 4)
    assert tree_path_probability(5) == Fraction(12, 25)


def test_config_validation(tmp_path):
    with pytest.raises(ValueError):
        ExperimentConfig("nope")
    with pytest.raises(ValueError):
        ExperimentConfig.from_dict({"experiment": "block_degree", "bogus": 1})
    with pytest.raises(ValueError):
        ExperimentConfig("block_degree", replicates=0)
    p = tmp_path / "c.json"
    p.write_text('{"experiment": "path_length", "base": "pendant_triangle", "replicates": 5}')
    cfg = ExperimentConfig.load(p)
    assert cfg.base == "pendant_triangle" and cfg.replicates == 5


def test_load_base(tmp_path):
    assert load_base("path:4").n == 4
    assert len(load_base("cycle:5").edges) == 5
    f = tmp_path / "g.txt"
    f.write_text("3 1\n1 2\n")
    assert load_base(str(f)).n == 3


def test_empty_report_is_header_only(tmp_path):
    csv_path, meta = write_report(ExperimentReport(), tmp_path / "r.csv")
    assert csv_path.read_text() == ",".join(CSV_HEADER) + "\n"
    assert meta.read_text() == "{}\n"


def test_block_degree_exact_pendant_triangle():
    rep = run_experiment(ExperimentConfig("block_degree", base="pendant_triangle"))
    assert rep.metadata["exact"]
    rows = {r.parameter: r for r in rep.select("max_block_degree_tail_n_bound")}
    # P(max block degree >= 3) = P(x1 == x2) = 1/5
    assert rows[2].empirical == pytest.approx(0.2)
    assert rows[1].empirical == pytest.approx(1.0)
    assert rep.passed


def test_one_block_base_is_constant():
    rep = run_experiment(ExperimentConfig("block_degree", base="cycle:6"))
    assert [r.statistic for r in rep.rows] == ["max_block_degree_constant"]
    assert rep.rows[0].empirical == 1.0


def test_exact_and_sampled_agree():
    exact = run_experiment(ExperimentConfig("block_degree", base="pendant_triangle", mode="exact"))
    sampled = run_experiment(ExperimentConfig("block_degree", base="pendant_triangle", mode="sample", replicates=20_000, seed=4))
    e = {r.parameter: r.empirical for r in exact.select("max_block_degree_tail_n_bound")}
    s = {r.parameter: r.empirical for r in sampled.select("max_block_degree_tail_n_bound")}
    assert e.keys() == s.keys()
    for key in e:
        assert abs(e[key] - s[key]) <= 4 * sigma(e[key], 20_000) + 1e-12


def test_path_length_exact_and_sampled():
    exact = run_experiment(ExperimentConfig("path_length", base="pendant_triangle", mode="exact"))
    sampled = run_experiment(ExperimentConfig("path_length", base="pendant_triangle", mode="sample", replicates=4000, seed=9))
    assert exact.passed and sampled.passed
    e = exact.select("path_blocks_tail")
    assert [r.parameter for r in e] == [0, 1, 2, 3]
    # some member has a path meeting all three blocks
    assert e[1].empirical > 0 and e[2].empirical == 0


def test_disconnected_base():
    rep = run_experiment(ExperimentConfig("block_degree", base="two_paths", replicates=500, seed=1))
    assert not rep.metadata["exact"]
    assert rep.metadata["components"] == 2 and rep.metadata["k"] == 4
    assert rep.passed


def test_report_deterministic(tmp_path):
    cfg = dict(experiment="block_degree", base="path:200", replicates=300, seed=3)
    a = run_experiment(ExperimentConfig(**cfg, output=str(tmp_path / "a.csv")))
    b = run_experiment(ExperimentConfig(**cfg, output=str(tmp_path / "b.csv")))
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
    assert a.to_csv() == b.to_csv()
    # replicate r uses seed + r, so a distant seed gives disjoint streams
    c = run_experiment(ExperimentConfig(**{**cfg, "seed": 10_000}))
    assert c.to_csv() != a.to_csv()


def test_jobs_do_not_change_results():
    cfg = dict(experiment="block_degree", base="path:300", replicates=2500, seed=2)
    assert run_experiment(ExperimentConfig(**cfg, jobs=1)).to_csv() == run_experiment(ExperimentConfig(**cfg, jobs=2)).to_csv()


def test_tree_baseline_small_grid():
    rep = run_experiment(ExperimentConfig("tree_baseline", replicates=200, n_grid=[2000], diameter_replicates=20))
    assert rep.select("path_probability_exact")[0].passed
    assert len(rep.select("max_degree_ratio_median")) == 1
    assert rep.passed
