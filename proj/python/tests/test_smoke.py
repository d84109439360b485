from fractions import Fraction

import pytest

import omuco


def test_six_item_example_front():
    inst = omuco.fixtures.six_item_example()
    front = omuco.solve(inst, algorithm="greedy")
    assert front.points == [(-3, -3, -3, 8), (-3, -3, -2, 7), (-3, -2, -2, 6)]
    assert front.solutions == ["110010", "110100", "111000"]
    assert front.stats["subproblems"] == 10


def test_greedy_candidates_in_order():
    cands = omuco.greedy_candidates(omuco.fixtures.six_item_example())
    assert [z[-1] for _, z in cands] == [13, 10, 8, 6, 7, 8]


def test_instance_b_brute_force():
    front = omuco.oracle_solve(omuco.fixtures.instance_b())
    assert len(front) == 15
    assert "0011" not in front.solutions


def test_epsilon_matches_oracle_on_generated_instance():
    inst = omuco.generate(n=9, alpha=1, beta=-1, gamma=1, ktilde=3, khat=2, fmax=15, seed=4)
    assert omuco.solve(inst).points == omuco.oracle_solve(inst).points
    aug = omuco.solve(inst, augment="auto", workers=2)
    assert aug.points == omuco.oracle_solve(inst).points
    assert aug.stats["dominated_removed"] == 0


def test_text_round_trip_and_exact_f():
    inst = omuco.Instance(alpha=1, gamma=-1, tilde=[1, 2, 2], f=["0.5", 2, Fraction(1, 3)], ktilde=3)
    again = omuco.Instance.from_text(inst.to_text())
    assert again == inst
    assert again.f == [Fraction(1, 2), Fraction(2), Fraction(1, 3)]
    assert inst.outcome("101") == (2, 1, 0, Fraction(-5, 6))


def test_errors_are_value_errors():
    with pytest.raises(omuco.ParseError):
        omuco.Instance.from_text("omuco 1\nn 2 alpha 1 beta 0 gamma 0\ntilde K 1 1 2\nhat none\nf none\n")
    with pytest.raises(omuco.InvalidInstance):
        omuco.Instance(alpha=1, tilde=[1, 2], w=5)


def test_lattice_and_dominance_helpers():
    assert len(omuco.enumerate_U_w(3, 6, 3)) == 10
    assert omuco.dominates([1, 1, 0, 1, 1, 1, -10], [2, 1, 0, 2, 1, 1, -5])
    assert not omuco.dominates([1, 2], [2, 1])
    assert omuco.count_Ue(omuco.fixtures.instance_a()) == sum(((w + 1) * (w + 2) // 2) ** 2 for w in range(5))


def test_csv_output_and_selftest():
    csv = omuco.solve(omuco.fixtures.six_item_example()).to_csv()
    assert csv.splitlines()[0] == "tilde1,tilde2,tilde3,f,solution"
    failures, report = omuco.selftest()
    assert failures == 0, report
