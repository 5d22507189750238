import math
import random
from fractions import Fraction

import pytest

from classprod.alt_group import (
    AltClass,
    NormalSet,
    class_size,
    enumerate_alt_classes,
    identity_class,
    inverse_class,
    long_cycle_classes,
    long_cycle_type,
)
from classprod.brute_force import alt_conjugacy_classes, oracle_product_set
from classprod.errors import ConsistencyError
from classprod.product_engine import (
    _collapse,
    _counted,
    check_dvir_rodgers,
    contains,
    covering_number,
    dvir_rodgers_applies,
    exactness_check_count,
    frobenius_sum,
    large_pair_coverage_report,
    long_cycle_product_checks,
    missing_classes,
    power_covers,
    product_set,
    verify_four_class_theorem,
)


def test_frobenius_identity_triple():
    ident = identity_class(5)
    result = frobenius_sum(ident, ident, ident)
    assert result.pair_count == 1
    assert result.sum_value == Fraction(math.factorial(5) // 2)


def test_frobenius_inverse_pair_gives_class_size():
    for n in (4, 5, 6, 7):
        ident = identity_class(n)
        for cls in enumerate_alt_classes(n):
            assert frobenius_sum(cls, inverse_class(cls), ident).pair_count == class_size(cls)


def test_identity_needs_the_inverse_class():
    ident = identity_class(5)
    for cls in enumerate_alt_classes(5):
        for other in enumerate_alt_classes(5):
            expected = other == inverse_class(cls)
            assert contains(cls, other, ident) == expected


def test_frobenius_symmetric_in_a_b():
    classes = enumerate_alt_classes(6)
    rng = random.Random(3)
    for _ in range(40):
        a, b, g = rng.choice(classes), rng.choice(classes), rng.choice(classes)
        assert frobenius_sum(a, b, g).pair_count == frobenius_sum(b, a, g).pair_count


def test_three_cycles_squared_reach_five_cycles():
    threes = AltClass((3, 1, 1))
    for tag in ("+", "-"):
        result = frobenius_sum(threes, threes, AltClass((5,), tag))
        assert result.pair_count > 0
        assert contains(threes, threes, AltClass((5,), tag))


def test_pair_counts_match_oracle_exhaustively_n4_n6():
    from classprod.brute_force import oracle_pair_count

    for n in (4, 5, 6):
        table = alt_conjugacy_classes(n)
        for a in table.classes:
            for b in table.classes:
                for g in table.classes:
                    assert (
                        frobenius_sum(a, b, g).pair_count
                        == oracle_pair_count(table, a, b, table.representative(g))
                    )


def test_mass_conservation_up_to_9():
    # summing pair counts against class sizes recovers |A| |B|
    from itertools import combinations_with_replacement

    for n in (5, 6, 7, 8, 9):
        classes = enumerate_alt_classes(n)
        for a, b in combinations_with_replacement(classes, 2):
            total = sum(
                class_size(g) * frobenius_sum(a, b, g).pair_count for g in classes
            )
            assert total == class_size(a) * class_size(b)


def test_product_set_matches_oracle():
    # n = 8 is the exhaustive top tier: identical products for every class
    # pair means identical containment verdicts for every triple
    for n in (5, 6, 8):
        table = alt_conjugacy_classes(n)
        classes = enumerate_alt_classes(n)
        for a in classes:
            for b in classes:
                s, t = NormalSet.of([a]), NormalSet.of([b])
                assert product_set(s, t) == oracle_product_set(table, s, t)


def test_product_set_commutes_and_associates():
    classes = enumerate_alt_classes(7)
    rng = random.Random(11)
    for _ in range(10):
        s = NormalSet.of(rng.sample(classes, rng.randint(1, 3)))
        t = NormalSet.of(rng.sample(classes, rng.randint(1, 3)))
        u = NormalSet.of(rng.sample(classes, rng.randint(1, 2)))
        assert product_set(s, t) == product_set(t, s)
        assert product_set(product_set(s, t), u) == product_set(s, product_set(t, u))


def test_product_of_identities():
    ident = NormalSet.of([identity_class(5)])
    assert product_set(ident, ident) == ident


def test_split_long_cycle_classes_enter_products_together():
    # whenever neither class consists of long cycles, the two split
    # long-cycle classes enter a product together or not at all
    for n in range(5, 10):
        lplus, lminus = long_cycle_classes(n)
        lct = long_cycle_type(n)
        classes = [c for c in enumerate_alt_classes(n) if c.cycle_type != lct]
        for a in classes:
            for b in classes:
                assert contains(a, b, lplus) == contains(a, b, lminus)


def test_power_covers_and_covering_number():
    fpf = AltClass((2, 2, 2, 2))
    assert not power_covers(fpf, 1)
    assert not power_covers(fpf, 3)
    assert power_covers(fpf, 4)
    assert covering_number(fpf, 5) == 4
    assert covering_number(AltClass((2, 2, 1)), 1) is None
    with pytest.raises(ValueError):
        covering_number(identity_class(5), 3)


def test_missing_classes_cube_witness():
    fpf = AltClass((2, 2, 2, 2))
    missed = missing_classes(fpf, 3)
    assert missed
    assert AltClass((5, 3), "+") in missed
    assert not missing_classes(fpf, 4)


def test_dvir_rodgers_applies_arithmetic():
    nine = AltClass((9,), "+")
    assert dvir_rodgers_applies(nine, nine)  # 8 + 8 > 8
    fpf = AltClass((2, 2, 2, 2))
    assert not dvir_rodgers_applies(fpf, fpf)  # 4 + 4 = 8, not > 8
    threes = AltClass((3, 3, 3))
    assert dvir_rodgers_applies(threes, threes)  # 6 + 6 > 8


def test_check_dvir_rodgers_small():
    for n in (5, 6, 7):
        report = check_dvir_rodgers(n)
        assert report.passed, report.violations
    assert check_dvir_rodgers(5, mode="both").passed
    assert check_dvir_rodgers(7, mode="oracle").passed


def test_lemma_excon_small():
    report = long_cycle_product_checks(9)
    assert all(part.passed for part in report.parts)
    both = long_cycle_product_checks(7, mode="both")
    assert [p.part for p in both.parts] == [1, 2, 3, 4]


def test_large_pair_coverage_report_structure():
    report = large_pair_coverage_report(9, Fraction(1, 4))
    assert report.rows
    order = math.factorial(9) // 2
    for row in report.rows:
        assert row.size_product**4 >= order**5  # (1 + 1/4 exponent, exact)
    assert not report.flagged


def test_four_class_sweep_small_is_deterministic():
    r1 = verify_four_class_theorem(7, Fraction(1, 10))
    r2 = verify_four_class_theorem(7, Fraction(1, 10))
    assert r1 == r2
    assert r1.quadruples
    assert all(q.covered for q in r1.quadruples)
    # ordering: descending minimum pairwise product
    mins = [q.min_pair_product for q in r1.quadruples]
    assert mins == sorted(mins, reverse=True)


def test_four_class_sweep_huge_epsilon_is_empty():
    report = verify_four_class_theorem(7, Fraction(5))
    assert report.quadruples == ()


def test_four_class_sweep_matches_oracle_n7():
    report = verify_four_class_theorem(7, Fraction(1, 10), mode="both")
    assert all(q.covered for q in report.quadruples)


def test_exactness_guards():
    with pytest.raises(ConsistencyError):
        _collapse(Fraction(1), {5: Fraction(1, 2)})
    assert _collapse(Fraction(3), {5: Fraction(0)}) == Fraction(3)
    with pytest.raises(ConsistencyError):
        _counted(Fraction(1, 5), 6, 6, 12)  # 36/12 * 1/5 is not an integer
    with pytest.raises(ConsistencyError):
        _counted(Fraction(-1), 6, 6, 12)  # negative count
    before = exactness_check_count()
    frobenius_sum(identity_class(4), identity_class(4), identity_class(4))
    assert exactness_check_count() > before


def test_engine_rejects_mixed_n():
    with pytest.raises(ValueError):
        contains(identity_class(4), identity_class(5), identity_class(5))
    with pytest.raises(ValueError):
        product_set(NormalSet.full(4), NormalSet.full(5))


def test_fpf_involution_square_matches_oracle_n8():
    table = alt_conjugacy_classes(8)
    fpf = AltClass((2, 2, 2, 2))
    hit = oracle_product_set(table, NormalSet.of([fpf]), NormalSet.of([fpf]))
    for g in enumerate_alt_classes(8):
        assert contains(fpf, fpf, g) == (g in hit)
