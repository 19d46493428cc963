import math
import random

import pytest

from coversieve.covering import ResidueClass
from coversieve.cyclotomic import primes_of_order
from coversieve.modarith import CapacityError, Congruence, crt_combine
from coversieve.progression import (
    CombineConflictError,
    PrimeAssignment,
    build_riesel,
    build_sierpinski,
    combine_brier,
    replace_offset,
    subprogression_shift,
    verify_base2_delicate,
    verify_brier,
    verify_digit_robust,
    verify_riesel,
    verify_sierpinski,
)

import sieve_data as sd


def assignment(rows):
    return [PrimeAssignment(ResidueClass(a, b), p) for a, b, p in rows]


# ---------------------------------------------------------------------------
# builders


def test_build_sierpinski_diagnostic_single_class():
    prog = build_sierpinski(assignment([(0, 4, 5)]), require_covering=False)
    assert prog.B % 5 == 4
    assert prog.B % 10 == 9
    assert prog.A == 10


def test_build_riesel_diagnostic_single_class():
    prog = build_riesel(assignment([(2, 4, 5)]), require_covering=False)
    assert prog.B % 5 == 4
    assert prog.B % 10 == 9


def test_build_sierpinski_classical():
    prog = build_sierpinski(assignment(sd.CLASSICAL_S_ASSIGNMENT))
    assert prog.A == sd.CLASSICAL_S_A
    assert prog.B == sd.CLASSICAL_S_B
    assert math.gcd(prog.A, prog.B) == 1
    assert verify_sierpinski(prog.B, sd.CLASSICAL_S_PRIMES).ok


def test_build_riesel_classical():
    prog = build_riesel(assignment(sd.CLASSICAL_R_ASSIGNMENT))
    assert prog.A == sd.CLASSICAL_R_A
    assert prog.B == sd.CLASSICAL_R_B
    assert verify_riesel(prog.B, sd.CLASSICAL_R_PRIMES).ok


def test_build_rejects_non_covering():
    with pytest.raises(ValueError, match="cover"):
        build_sierpinski(assignment([(0, 4, 5), (1, 2, 3)]))


def test_build_rejects_duplicates_and_bad_orders():
    with pytest.raises(ValueError, match="duplicate"):
        build_riesel(assignment([(2, 4, 5), (2, 4, 13)]), require_covering=False)
    with pytest.raises(ValueError, match="used by two"):
        build_riesel(assignment([(2, 4, 5), (1, 4, 5)]), require_covering=False)
    with pytest.raises(ValueError, match="ord"):
        build_sierpinski(assignment([(0, 4, 13)]), require_covering=False)
    with pytest.raises(ValueError, match="odd prime"):
        build_sierpinski(assignment([(0, 1, 2)]), require_covering=False)
    with pytest.raises(ValueError, match="no prime"):
        build_sierpinski([PrimeAssignment(ResidueClass(0, 4), None, index=1)],
                         require_covering=False)


def test_combine_brier_shared_subset():
    ps = build_sierpinski(assignment([(0, 4, 5)]), require_covering=False)
    pr = build_riesel(assignment([(2, 4, 5)]), require_covering=False)
    assert ps.B % 10 == pr.B % 10 == 9
    comb = combine_brier([ps, pr])
    assert comb.A == 10 and comb.B == 9
    assert comb.kind == "brier"
    assert comb.primes == frozenset({2, 5})


def test_combine_brier_conflict_names_prime():
    ps = build_sierpinski(assignment([(0, 4, 5)]), require_covering=False)
    pr = build_riesel(assignment([(0, 4, 5)]), require_covering=False)
    assert pr.B % 10 == 1
    with pytest.raises(CombineConflictError) as exc:
        combine_brier([ps, pr])
    assert exc.value.prime == 5


def test_combine_three_disjoint_parts_matches_brute_force():
    p1 = build_sierpinski(assignment([(0, 2, 3)]), require_covering=False)
    p2 = build_sierpinski(assignment([(0, 4, 5)]), require_covering=False)
    p3 = build_riesel(assignment([(0, 3, 7)]), require_covering=False)
    comb = combine_brier([p1, p2, p3])
    expected = min(
        x for x in range(1, comb.A + 1)
        if x % p1.A == p1.B and x % p2.A == p2.B and x % p3.A == p3.B
    )
    assert comb.B == expected
    # combined ≡ each part modulo that part's A
    for part in (p1, p2, p3):
        assert comb.B % part.A == part.B


# ---------------------------------------------------------------------------
# verifiers


def test_verify_sierpinski_selfridge():
    res = verify_sierpinski(sd.SELFRIDGE_K, sd.SELFRIDGE_PRIMES)
    assert res.ok and res.period == 36


def test_verify_sierpinski_classical():
    res = verify_sierpinski(sd.CLASSICAL_S_B, sd.CLASSICAL_S_PRIMES)
    assert res.ok and res.period == 64


def test_verify_sierpinski_false():
    res = verify_sierpinski(3, [3])
    assert not res.ok and res.witness == 0


def test_verify_riesel_classical():
    res = verify_riesel(sd.CLASSICAL_R_B, sd.CLASSICAL_R_PRIMES)
    assert res.ok and res.period == 24


def test_verify_riesel_false():
    res = verify_riesel(5, [3])
    assert not res.ok and res.witness == 0


def test_verify_clavier_and_brier_numbers():
    assert verify_riesel(sd.CLAVIER_K, sd.CLAVIER_R_PRIMES).ok
    assert verify_brier(sd.CLAVIER_K, sd.CLAVIER_S_PRIMES, sd.CLAVIER_R_PRIMES).ok
    assert verify_brier(sd.BRIER_K, sd.BRIER_S_PRIMES, sd.BRIER_R_PRIMES).ok
    assert not verify_brier(3, [3], [3]).ok


def test_verifier_certificates_are_sound():
    res = verify_sierpinski(sd.SELFRIDGE_K, sd.SELFRIDGE_PRIMES)
    for kind, a, b, p in res.certificate:
        assert (sd.SELFRIDGE_K * pow(2, a, p) + 1) % p == 0
    res = verify_riesel(sd.CLASSICAL_R_B, sd.CLASSICAL_R_PRIMES)
    for kind, a, b, p in res.certificate:
        assert (sd.CLASSICAL_R_B * pow(2, a, p) - 1) % p == 0


def test_verdict_depends_on_k_only_through_residues():
    prod = math.prod(sd.SELFRIDGE_PRIMES)
    shifted = sd.SELFRIDGE_K + 2 * prod
    assert verify_sierpinski(shifted, sd.SELFRIDGE_PRIMES).ok


def test_verify_pm_input_validation():
    with pytest.raises(ValueError):
        verify_sierpinski(78556, sd.SELFRIDGE_PRIMES)  # even
    with pytest.raises(ValueError):
        verify_sierpinski(-3, sd.SELFRIDGE_PRIMES)
    with pytest.raises(ValueError):
        verify_sierpinski(9, [2])


def test_period_cap():
    # two primes with huge lcm of orders
    with pytest.raises(CapacityError):
        verify_sierpinski(78557, sd.SELFRIDGE_PRIMES, cap=10)


def test_verify_digit_robust_toy():
    res = verify_digit_robust(sd.TOY3_K, sd.TOY3_PRIMES, base=3)
    assert res.ok
    assert res.period == sd.TOY3_PERIOD
    for d, a, o, p in res.certificate:
        assert (sd.TOY3_K + d * pow(3, a, p)) % p == 0


def test_verify_digit_robust_negative_cases():
    res = verify_digit_robust(294001, [7])
    assert not res.ok and res.witness is not None
    d, n = res.witness
    assert (294001 + d * 10**n) % 7 != 0
    assert not verify_digit_robust(101, []).ok
    with pytest.raises(ValueError, match="divides the base"):
        verify_digit_robust(101, [5], base=10)


def test_verify_base2_delicate():
    res = verify_base2_delicate(sd.CLAVIER_K, sd.CLAVIER_S_PRIMES, sd.CLAVIER_R_PRIMES)
    assert res.ok
    for sign, a, o, p in res.certificate:
        assert (sd.CLAVIER_K + sign * pow(2, a, p)) % p == 0
    assert not verify_base2_delicate(3, [], []).ok


def test_base2_delicate_crt_toys_agree_with_brute_force():
    # CRT-placed toys over {3, 5, 17}: the orders 2, 4, 8 have total density
    # 1/2 + 1/4 + 1/8 < 1, so no placement can cover a full side; the scan
    # verdict must match a literal brute force over one period either way.
    rng = random.Random(5)
    for _ in range(25):
        residues = [(-pow(2, rng.randrange(o), p)) % p for p, o in ((3, 2), (5, 4), (17, 8))]
        k = crt_combine(
            [Congruence(r, p) for r, p in zip(residues, (3, 5, 17))] + [Congruence(1, 2)]
        ).residue
        res = verify_base2_delicate(k, [3, 5, 17], [3, 5, 17])
        L = 8
        brute = all(
            any((k + 2**n) % p == 0 for p in (3, 5, 17)) for n in range(L)
        ) and all(any((k - 2**n) % p == 0 for p in (3, 5, 17)) for n in range(L))
        assert res.ok == brute
        assert not res.ok


# ---------------------------------------------------------------------------
# builder/verifier roundtrip over random coverings


SUPPLY_MODULI = [2, 3, 4, 8, 12, 24, 36, 36]


def random_covering(rng):
    """Random covering with moduli from {2,3,4,8,12,24,36}, built by always
    covering the smallest uncovered residue mod 72."""
    while True:
        classes, remaining = [], list(SUPPLY_MODULI)
        rng.shuffle(remaining)
        cov = bytearray(72)
        ok = False
        while remaining:
            gap = cov.find(0)
            if gap < 0:
                ok = True
                break
            b = remaining.pop()
            a = gap % b
            classes.append((a, b))
            cov[a::b] = b"\x01" * len(range(a, 72, b))
        if ok or cov.find(0) < 0:
            return classes


def test_builder_roundtrip_panel():
    rng = random.Random(987654321)
    supply = {b: list(primes_of_order(b, 2).primes) for b in set(SUPPLY_MODULI)}
    assert supply[36] == [37, 109]
    for _ in range(60):
        classes = random_covering(rng)
        used = {b: 0 for b in supply}
        rows = []
        for a, b in classes:
            p = supply[b][used[b]]
            used[b] += 1
            rows.append((a, b, p))
        for builder, verifier in (
            (build_sierpinski, verify_sierpinski),
            (build_riesel, verify_riesel),
        ):
            prog = builder(assignment(rows))
            primes = [p for p in prog.primes if p != 2]
            k = prog.B
            if k <= max(primes) + 1:
                k += prog.A  # later member of the progression
            res = verifier(k, primes)
            assert res.ok, (rows, builder.__name__, res)


# ---------------------------------------------------------------------------
# the subprogression shift


def test_shift_worked_example():
    s = subprogression_shift(130, 1, 10)
    assert (s.ell, s.v) == (3, 12)
    assert s.A0 == 10**42 * 130
    assert s.B0 == 10**39 - 10**3 + 1
    assert s.B0 % 130 == 1
    assert math.gcd(s.A0, s.B0) == 1
    # A divides b^(l(v+1)) - b^l
    assert (10 ** (3 * 13) - 10**3) % 130 == 0


def test_shift_preconditions():
    with pytest.raises(ValueError, match="divides the base"):
        subprogression_shift(6, 1, 10)       # 5 does not divide A
    with pytest.raises(ValueError, match="no prime divisor"):
        subprogression_shift(10, 1, 10)      # nothing above the base
    with pytest.raises(ValueError, match="gcd"):
        subprogression_shift(130, 13, 10)


def test_shift_value_mod_matches_materialized():
    s = subprogression_shift(130, 1, 10)
    for m, d, n, p in [(0, 1, 0, 13), (3, -9, 7, 13), (11, 5, 50, 101)]:
        assert s.value_mod(m, d, n, p) == (s.A0 * m + s.B0 + d * 10**n) % p


def test_shift_materialization_cap():
    s = subprogression_shift(sd.TOY3_A, sd.TOY3_K, 3)
    with pytest.raises(CapacityError):
        _ = s.A0
    with pytest.raises(CapacityError):
        _ = s.B0
    assert s.B0_mod(sd.TOY3_A) == sd.TOY3_K % sd.TOY3_A


def test_shift_digit_robust_probes():
    s = subprogression_shift(sd.TOY3_A, sd.TOY3_K, 3)
    rng = random.Random(1234)
    for _ in range(100):
        m = rng.randrange(10**9)
        d = rng.choice([-2, -1, 1, 2])
        n = rng.randrange(3 * s.exp_b0)
        hits = [p for p in sd.TOY3_PRIMES if s.value_mod(m, d, n, p) == 0]
        assert hits
        p = hits[0]
        # the shifted value can never be ±p for a certificate prime p:
        if n <= s.exp_b0 - 1:
            # value >= base^(ell+1) - base^ell + B > base^ell > A + B >= p
            assert 3**s.ell > s.A + s.B >= p
        else:
            # value ≡ B - base^ell (mod base^(2 ell)), pinned away from ±p
            mod = 3 ** (2 * s.ell)
            r = s.value_mod(m, d, n, mod)
            assert r == (s.B - 3**s.ell) % mod
            assert r != p and r != mod - p


def test_replace_offset():
    assert replace_offset(10, 3) == (10, 23)
    assert math.gcd(*replace_offset(10, 3)) == 1
    assert (2 * 10 + 3) % 10 == 3
    with pytest.raises(ValueError):
        replace_offset(10, 5)
