from fractions import Fraction

import pytest

import eprqdba


def test_exact_forgery_probabilities():
    assert eprqdba.forgery_probability_exact(4) == Fraction(1, 2)
    assert eprqdba.forgery_probability_exact(16) == Fraction(1, 70)
    assert eprqdba.forgery_probability_exact(64) == Fraction(1, 601080390)
    with pytest.raises(ValueError):
        eprqdba.forgery_probability_exact(6)


def test_worked_command_vector():
    v = eprqdba.build_command_vector("11010010", n=3, i=1, c=0)
    assert v == "uu0100uu"
    assert eprqdba.positions_pair(v, n=3, i=1, x=0, j=0, y=0) == [1]
    assert eprqdba.positions_pair(v, n=3, i=1, x=0, j=0, y=1) == [2]


def test_registers_are_complementary():
    regs = eprqdba.sample_registers(n=4, m=8, seed=3)
    assert set(regs) == {"n", "m", "seed", "alice", "lieutenants"}
    alice = regs["alice"][::-1]
    for i, text in enumerate(regs["lieutenants"]):
        bits = text[::-1]
        for p in range(i, len(bits), 3):
            assert bits[p] != alice[p]


def test_genuine_vector_passes_commander_check():
    regs = eprqdba.sample_registers(n=3, m=32, seed=1)
    v = eprqdba.build_command_vector(regs["alice"], n=3, i=0, c=1)
    verdict = eprqdba.check_alice(3, 0, 1, v, regs["lieutenants"][0])
    assert verdict["passed"]
    assert verdict["kind"] == "check_alice"
    assert verdict["conditions"][-1]["name"] == "bit_mismatch"


def test_all_loyal_simulation_follows_order():
    out = eprqdba.simulate(n=5, m=32, seed=9, scenario="all-loyal", order=1, trace=True)
    assert out["rounds"] == 3
    assert all(l["final"] == "1" for l in out["lieutenants"])
    assert out["verdict"]["byzantine_agreement"]
    sends = [r for r in out["trace"] if r["kind"] == "send"]
    assert len(sends) == 4 + 12


def test_scenario_from_dict_and_errors():
    out = eprqdba.simulate(n=3, m=16, scenario={"preset": "liar", "order": 0})
    assert out["scenario"]["name"] == "liar"
    with pytest.raises(ValueError):
        eprqdba.simulate(n=3, m=16, scenario="no-such-scenario")
    with pytest.raises(ValueError):
        eprqdba.simulate(n=2, m=16)
    assert "equivocating+forger" in eprqdba.scenario_names()


def test_experiment_summary():
    summary = eprqdba.run_experiment(
        {"config": {"n": 4, "m": 32}, "scenario": {"preset": "equivocating"}, "trials": 10}
    )
    assert summary["trials"] == 10
    assert summary["consistency_holds"] == 10


def test_monte_carlo_and_oracle():
    est = eprqdba.forgery_probability_monte_carlo(8, trials=20000, seed=2)
    assert abs(est["rate"] - 1 / 6) < 4 * est["standard_error"]
    cmp = eprqdba.oracle_check(3, 4, draws=5000, seed=1)
    assert cmp["complement_exact"]
    assert len(cmp["p_values"]) == 2


def test_expected_accounting():
    rounds = eprqdba.expected_accounting(4, 8)
    assert [r["messages"] for r in rounds] == [3, 6, 0]
