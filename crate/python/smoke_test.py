"""Smoke test for the pynimcash extension.

Build and install first:

    pip install --no-build-isolation ./crates/py
"""

import pynimcash as nc


def main():
    a = nc.MoveSet([4, 1, 3])
    assert a.values == [1, 3, 4]
    assert a.legal_moves(5, 2, 0) == [1]
    assert repr(a) == "MoveSet({1,3,4})"

    assert nc.solve([1, 3, 4], 14, 4, 4) == "II"
    assert nc.solve([1, 3, 4], 14, 9, 9) == "I"
    assert nc.solve([1, 3, 4], 10, 7, 7) == "I"
    assert nc.solve([1, 3, 4], 14, "UF", "UF") == "II"

    rows = nc.thresholds([1, 4], 13)
    assert rows[13][2] == 10

    assert nc.detect_period([1, 4]) == 5
    assert nc.detect_period([1, 5, 6]) == 11
    assert nc.detect_period([3, 5, 6, 10, 11]) is None

    assert nc.family_win("oneL", 4, 13, 8, 7) == "I"
    f1, f2 = nc.family_thresholds("oneLL-even", 6, 10**18)
    assert f1 > 0 and f2 > 0

    game = nc.Game([1, 3, 4], 60)
    assert game.period == 7 and game.uses_solution_set
    r = game.solve(14, 9, 9)
    assert r["winner"] == "I" and r["winning_moves"] == [1], r
    assert r["region"] == "CRITICAL" and r["cs"] == (0, 0, 0)
    assert game.classify(14, 4, 4) == "POOR_BOTH"

    try:
        nc.MoveSet([1, 1])
    except ValueError:
        pass
    else:
        raise AssertionError("duplicate move accepted")

    print("pynimcash smoke test passed")


if __name__ == "__main__":
    main()
