import random

import pytest

from ellab.catalog import ALL_CLASSES
from ellab.configs import FiberConfig, default_points, parse_config
from ellab.errors import NotPrime, UnsupportedPrime
from ellab.isogeny import candidate_moves
from ellab.torsion import (Provenance, TorsionAnswer, _few_nondivisible,
                           excludes_two_torsion, sufficient_torsion_criterion,
                           torsion_status)


def cfg(indices):
    return FiberConfig(default_points(len(indices)), tuple(indices))


@pytest.mark.parametrize("indices,p,expected", [
    ((4, 4, 2, 2), 2, True),        # no odd index at all
    ((3, 3, 3, 2, 1), 3, True),     # only 2 and 1 escape divisibility by 3
    ((1, 1, 8, 1, 1), 2, False),    # (-1)^5 * 1 = 7 = 8 - 1 mod 8, so the subset test fails
    ((5, 3, 2, 1, 1), 2, False),    # four odd indices and the leftover 2 is not divisible by 4
    ((3, 3, 3, 3), 3, True),
    ((5, 5, 1, 1), 5, True),
    ((5, 4, 1, 1, 1), 2, False),    # (-1)^5 * 5 = 3 = 4 - 1 mod 8
    ((5, 4, 1, 1, 1), 5, False),    # 4 is a square mod 5
    ((1, 1, 1, 1, 4, 4), 2, False),  # 1 = 3 * 3 mod 8
])
def test_sufficient_criterion(indices, p, expected):
    assert sufficient_torsion_criterion(cfg(indices), p) is expected


def test_sufficient_criterion_rejects_composite():
    with pytest.raises(NotPrime):
        sufficient_torsion_criterion(cfg((4, 4, 2, 2)), 4)


@pytest.mark.parametrize("indices,expected", [
    ((3, 3, 1, 1, 1, 1, 1, 1), True),
    ((1, 1, 8, 1, 1), False),
    ((4, 4, 2, 2), False),
])
def test_excludes_two_torsion(indices, expected):
    assert excludes_two_torsion(cfg(indices)) is expected


def test_status_catalog_table_provenance():
    status = torsion_status(parse_config("11811"), 2)
    assert status.answer is TorsionAnswer.YES
    assert status.provenances == (Provenance.CATALOG_TABLE,)


def test_status_move_nonexistence():
    status = torsion_status(parse_config("72111"), 2)
    assert status.answer is TorsionAnswer.NO
    assert status.provenances == (Provenance.MOVE_NONEXISTENCE,)


def test_status_sufficient():
    status = torsion_status(parse_config("3333"), 3)
    assert status.answer is TorsionAnswer.YES
    assert Provenance.SUFFICIENT_CRITERION in status.provenances


def test_status_reports_both_no_provenances():
    status = torsion_status(cfg((3, 3, 1, 1, 1, 1, 1, 1)), 2)
    assert status.answer is TorsionAnswer.NO
    assert status.provenances == (Provenance.NECESSARY_CRITERION,
                                  Provenance.MOVE_NONEXISTENCE)


def test_status_unknown():
    status = torsion_status(cfg((1, 1, 1, 1, 4, 4)), 2)
    assert status.answer is TorsionAnswer.UNKNOWN
    assert status.provenances == ()
    assert str(status) == "Unknown"


def test_status_rejects_unsupported_prime():
    with pytest.raises(UnsupportedPrime):
        torsion_status(parse_config("3333"), 7)


def test_status_str():
    assert str(torsion_status(parse_config("53211"), 2)) == "No (MoveNonexistence)"


def test_exclusion_kills_all_two_moves():
    # necessary criterion and move generation agree: with more than four odd
    # indices no even subset can reach the required sum
    rng = random.Random(7)
    samples = 0
    while samples < 200:
        n = rng.randint(6, 12)
        indices = [1] * n
        budget = 12 - n
        while budget:
            i = rng.randrange(n)
            indices[i] += 1
            budget -= 1
        config = cfg(indices)
        if not excludes_two_torsion(config):
            continue
        samples += 1
        assert candidate_moves(config, 2) == ()


def test_condition_one_monotone_under_divisible_append():
    rng = random.Random(11)
    for _ in range(500):
        p = rng.choice([2, 3, 5])
        indices = tuple(rng.randint(1, 9) for _ in range(rng.randint(4, 9)))
        if _few_nondivisible(indices, p):
            assert _few_nondivisible(indices + (p * rng.randint(1, 4),), p)


def test_soundness_sweep_over_catalog_rows():
    for cls in ALL_CLASSES:
        for row in cls:
            config = cfg(row)
            for p in (2, 3, 5):
                status = torsion_status(config, p)  # raises on contradiction
                yes = sufficient_torsion_criterion(config, p)
                no = p == 2 and excludes_two_torsion(config)
                assert not (yes and no)
                assert not (yes and not candidate_moves(config, p))
