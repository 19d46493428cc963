"""Sieved arithmetic progressions: construction and direct verification.

A covering of the integers by classes n ≡ a (mod b), with each class bound
to a prime p of order b base 2, pins B modulo each prime so that every
k = Am + B makes k*2^n + 1 (or k*2^n - 1) divisible by one of the primes.
This module builds such progressions from assignments, combines compatible
ones into dual-sieve (Brier) progressions, and independently verifies the
divisibility properties for concrete k by scanning one full period.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .covering import CoveringSystem, ResidueClass, Verdict, verify_naive, verify_partitioned
from .modarith import (
    Budget,
    CapacityError,
    Congruence,
    DEFAULT_BUDGET,
    IncompatibleCongruencesError,
    crt_combine,
    factor,
    inverse_mod,
    is_probable_prime,
    lcm_all,
    multiplicative_order,
    verify_order,
)

PERIOD_CAP = 10 ** 7
MATERIALIZE_BITS = 5_000_000


class CombineConflictError(ValueError):
    """Two progressions disagree modulo a shared prime."""

    def __init__(self, prime: int):
        super().__init__(f"progressions disagree modulo the shared prime {prime}")
        self.prime = prime


@dataclass(frozen=True)
class PrimeAssignment:
    """One covering class bound to a prime of matching order (or to an
    unresolved slot index when the literal prime is unknown)."""

    cls: ResidueClass
    prime: int | None
    base: int = 2
    index: int | None = None

    @property
    def resolved(self) -> bool:
        return self.prime is not None


@dataclass(frozen=True)
class SievedProgression:
    """Am + B with a divisibility certificate.

    certificate entries are (kind, a, b, p): for kind 'sierpinski',
    B*2^a + 1 ≡ 0 (mod p); for 'riesel', B*2^a - 1 ≡ 0 (mod p), so the
    corresponding k*2^n ∓/± 1 is divisible by p whenever n ≡ a (mod b).
    """

    A: int
    B: int
    kind: str
    primes: frozenset[int]
    certificate: tuple[tuple[str, int, int, int], ...]


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a period-scan verification."""

    ok: bool
    witness: object = None
    period: int = 0
    certificate: tuple = ()
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class BrierCheck:
    ok: bool
    sierpinski: CheckResult
    riesel: CheckResult

    def __bool__(self) -> bool:
        return self.ok


def _verify_covering(classes: tuple[ResidueClass, ...]) -> Verdict:
    system = CoveringSystem(classes)
    if lcm_all(system.moduli()) <= 10 ** 6:
        return verify_naive(system)
    return verify_partitioned(system)


def _check_assignments(assignments, budget: Budget):
    seen_primes = set()
    seen_classes = {}
    for asg in assignments:
        if not asg.resolved:
            raise ValueError(f"assignment {asg.cls} has no prime bound to it")
        if asg.base != 2:
            raise ValueError("builders work in base 2")
        p = asg.prime
        if p == 2 or not is_probable_prime(p):
            raise ValueError(f"{p} is not an odd prime")
        if p in seen_primes:
            raise ValueError(f"prime {p} used by two assignments")
        seen_primes.add(p)
        key = (asg.cls.a, asg.cls.b)
        if key in seen_classes:
            raise ValueError(f"duplicate congruence class {asg.cls}")
        seen_classes[key] = p
        if not verify_order(2, p, asg.cls.b, budget):
            raise ValueError(
                f"ord_{p}(2) != {asg.cls.b}; {p} cannot serve class {asg.cls}"
            )


def _build(assignments, kind: str, require_covering: bool, budget: Budget):
    assignments = list(assignments)
    if not assignments:
        raise ValueError("no assignments given")
    _check_assignments(assignments, budget)
    classes = tuple(a.cls for a in assignments)
    if require_covering:
        verdict = _verify_covering(classes)
        if not verdict.covered:
            raise ValueError(
                f"assignment classes do not cover the integers "
                f"(witness {verdict.witness})"
            )
    sign = -1 if kind == "sierpinski" else 1
    congruences = [Congruence(1, 2)]
    for asg in assignments:
        p = asg.prime
        inv = inverse_mod(pow(2, asg.cls.a, p), p)
        congruences.append(Congruence(sign * inv, p))
    combined = crt_combine(congruences)
    A = 2 * math.prod(a.prime for a in assignments)
    if combined.modulus != A:
        raise AssertionError("CRT modulus does not match 2 * product of primes")
    B = combined.residue
    cert = []
    for asg in assignments:
        p = asg.prime
        if (B * pow(2, asg.cls.a, p) - sign) % p != 0:
            raise AssertionError(f"certificate check failed at prime {p}")
        cert.append((kind, asg.cls.a, asg.cls.b, p))
    if math.gcd(A, B) != 1:
        raise AssertionError("built progression has gcd(A, B) != 1")
    return SievedProgression(
        A=A,
        B=B,
        kind=kind,
        primes=frozenset({2, *(a.prime for a in assignments)}),
        certificate=tuple(cert),
    )


def build_sierpinski(
    assignments,
    require_covering: bool = True,
    budget: Budget = DEFAULT_BUDGET,
) -> SievedProgression:
    """Progression of Sierpinski candidates: B ≡ -2^(-a) (mod p) per class,
    B odd, A = 2 * product of the primes.  With require_covering=False the
    covering check is skipped (diagnostic mode for partial assignments)."""
    return _build(assignments, "sierpinski", require_covering, budget)


def build_riesel(
    assignments,
    require_covering: bool = True,
    budget: Budget = DEFAULT_BUDGET,
) -> SievedProgression:
    """Mirror of build_sierpinski with B ≡ +2^(-a) (mod p)."""
    return _build(assignments, "riesel", require_covering, budget)


def combine_brier(parts) -> SievedProgression:
    """Merge progressions by CRT into one progression satisfying all of
    their certificates.  Prime sets may overlap only where the offsets
    already agree; a disagreement raises CombineConflictError naming the
    prime."""
    parts = list(parts)
    if not parts:
        raise ValueError("no parts to combine")
    try:
        combined = crt_combine([Congruence(p.B, p.A) for p in parts])
    except IncompatibleCongruencesError as exc:
        f = factor(exc.prime_power)
        raise CombineConflictError(f.primes()[0] if f.factors else exc.prime_power)
    A, B = combined.modulus, combined.residue
    if math.gcd(A, B) != 1:
        raise AssertionError("combined progression has gcd(A, B) != 1")
    cert = []
    for part in parts:
        for kind, a, b, p in part.certificate:
            sign = -1 if kind == "sierpinski" else 1
            if (B * pow(2, a, p) - sign) % p != 0:
                raise AssertionError(
                    f"certificate of a part fails against the combined B (prime {p})"
                )
            cert.append((kind, a, b, p))
    return SievedProgression(
        A=A,
        B=B,
        kind="brier",
        primes=frozenset().union(*(p.primes for p in parts)),
        certificate=tuple(cert),
    )


# ---------------------------------------------------------------------------
# direct verification of concrete k


def _order_map(primes, base: int, budget: Budget) -> dict[int, int]:
    orders = {}
    for p in primes:
        if not is_probable_prime(p):
            raise ValueError(f"{p} is not prime")
        orders[p] = multiplicative_order(base, p, budget=budget)
    return orders


def _hit_class(k: int, target: int, base: int, p: int, order: int) -> int | None:
    """Least a in [0, order) with k * base^a ≡ target (mod p), or None."""
    if p == 0:
        return None
    t = target % p
    x = k % p
    for a in range(order):
        if x == t:
            return a
        x = x * base % p
    return None


def _scan(period: int, classes: list[tuple[int, int]]) -> int | None:
    """Least n in [0, period) covered by no class (a mod o), or None."""
    mask = bytearray(period)
    for a, o in classes:
        mask[a % o::o] = b"\x01" * len(range(a % o, period, o))
    gap = mask.find(0)
    return None if gap < 0 else gap


def _period(orders, cap: int) -> int:
    L = lcm_all(orders)
    if L > cap:
        raise CapacityError(
            f"scan period {L} exceeds {cap}; supply per-class certificates "
            f"instead of a whole-period scan"
        )
    return L


def _verify_pm(k, primes, sign, kind, budget, cap):
    """Shared core of verify_sierpinski / verify_riesel: k*2^n - sign."""
    if k <= 0 or k % 2 == 0:
        raise ValueError(f"k must be a positive odd integer, got {k}")
    primes = sorted(set(primes))
    for p in primes:
        if p == 2:
            raise ValueError("2 cannot divide k*2^n ± 1; use odd primes")
    orders = _order_map(primes, 2, budget)
    L = _period(orders.values(), cap) if primes else 1
    classes = []
    cert = []
    for p in primes:
        a = _hit_class(k, sign, 2, p, orders[p])
        if a is not None:
            classes.append((a, orders[p]))
            cert.append((kind, a, orders[p], p))
    gap = _scan(L, classes)
    if gap is not None:
        return CheckResult(
            False, witness=gap, period=L, certificate=tuple(cert),
            reason=f"n = {gap}: no prime in the set divides k*2^n {'+' if sign < 0 else '-'} 1",
        )
    bound = max(primes) + (0 if sign < 0 else 1) if primes else 0
    if k <= bound:
        return CheckResult(
            False, witness=None, period=L, certificate=tuple(cert),
            reason=f"k = {k} does not exceed {bound}; divisibility cannot force compositeness",
        )
    return CheckResult(True, period=L, certificate=tuple(cert))


def verify_sierpinski(
    k: int, primes, budget: Budget = DEFAULT_BUDGET, cap: int = PERIOD_CAP
) -> CheckResult:
    """Does every k*2^n + 1 (n >= 0) have a divisor in the prime set?

    Scans one full period L = lcm of the orders of 2; also requires
    k > max(primes) so that divisibility implies compositeness.
    """
    return _verify_pm(k, primes, -1, "sierpinski", budget, cap)


def verify_riesel(
    k: int, primes, budget: Budget = DEFAULT_BUDGET, cap: int = PERIOD_CAP
) -> CheckResult:
    """Mirror of verify_sierpinski for k*2^n - 1 (requires k > max(p) + 1,
    covering the n = 0 boundary case)."""
    return _verify_pm(k, primes, 1, "riesel", budget, cap)


def verify_brier(
    k: int, primes_s, primes_r, budget: Budget = DEFAULT_BUDGET, cap: int = PERIOD_CAP
) -> BrierCheck:
    """k is Brier (relative to the two certificates) iff both checks pass."""
    s = verify_sierpinski(k, primes_s, budget, cap)
    r = verify_riesel(k, primes_r, budget, cap)
    return BrierCheck(s.ok and r.ok, s, r)


def verify_digit_robust(
    k: int,
    primes,
    base: int = 10,
    budget: Budget = DEFAULT_BUDGET,
    cap: int = PERIOD_CAP,
) -> CheckResult:
    """Does every k + d*base^n (d = ±1..±(base-1), n >= 0) have a divisor
    in the prime set?  Primes dividing the base have no order and are
    rejected outright."""
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    primes = sorted(set(primes))
    for p in primes:
        if base % p == 0:
            raise ValueError(
                f"{p} divides the base {base}, so base^n is 0 mod {p} and the "
                f"order of {base} mod {p} does not exist; drop it from the set"
            )
    orders = _order_map(primes, base, budget)
    L = _period(orders.values(), cap) if primes else 1
    deltas = [d for d in range(-(base - 1), base) if d != 0]
    cert = []
    for d in deltas:
        classes = []
        for p in primes:
            if d % p == 0:
                # base^n is a unit mod p, so p | k + d*base^n iff p | k
                if k % p == 0:
                    classes.append((0, 1))
                    cert.append((d, 0, 1, p))
                continue
            # k + d*base^n ≡ 0 (mod p)  <=>  d*base^n ≡ -k (mod p)
            a = _hit_class(d, -k, base, p, orders[p])
            if a is not None:
                classes.append((a, orders[p]))
                cert.append((d, a, orders[p], p))
        gap = _scan(L, classes)
        if gap is not None:
            return CheckResult(
                False, witness=(d, gap), period=L, certificate=tuple(cert),
                reason=f"k + ({d})*{base}^{gap} has no divisor in the set",
            )
    return CheckResult(True, period=L, certificate=tuple(cert))


def verify_base2_delicate(
    k: int, primes_s, primes_r, budget: Budget = DEFAULT_BUDGET, cap: int = PERIOD_CAP
) -> CheckResult:
    """Every k + 2^n must have a divisor among primes_s and every k - 2^n
    one among primes_r (the plus side inherits from the Sierpinski facts,
    the minus side from the Riesel facts)."""
    if k <= 0 or k % 2 == 0:
        raise ValueError(f"k must be a positive odd integer, got {k}")
    cert = []
    periods = []
    for sign, primes in ((1, primes_s), (-1, primes_r)):
        primes = sorted(set(primes))
        if any(p == 2 for p in primes):
            raise ValueError("k ± 2^n is odd for n >= 1; use odd primes")
        orders = _order_map(primes, 2, budget)
        L = _period(orders.values(), cap) if primes else 1
        periods.append(L)
        classes = []
        for p in primes:
            # k + sign*2^n ≡ 0 (mod p)  <=>  2^n ≡ -sign*k (mod p)
            a = _hit_class(1, -sign * k, 2, p, orders[p])
            if a is not None:
                classes.append((a, orders[p]))
                cert.append((sign, a, orders[p], p))
        gap = _scan(L, classes)
        if gap is not None:
            return CheckResult(
                False, witness=(sign, gap), period=L, certificate=tuple(cert),
                reason=f"k {'+' if sign > 0 else '-'} 2^{gap} has no divisor in the set",
            )
    return CheckResult(True, period=math.lcm(*periods), certificate=tuple(cert))


# ---------------------------------------------------------------------------
# the subprogression shift


@dataclass(frozen=True)
class ShiftResult:
    """Outputs of the subprogression shift.

    A0 = base**(ell*(v+2)) * A and B0 = base**(ell*(v+1)) - base**ell + B
    are astronomically large whenever v = φ(A') is; they materialize on
    demand and value_mod() evaluates A0*m + B0 + d*base^n modulo anything
    without ever forming the integers.
    """

    A: int
    B: int
    base: int
    ell: int
    v: int
    a_primes: tuple[int, ...]

    @property
    def exp_a0(self) -> int:
        return self.ell * (self.v + 2)

    @property
    def exp_b0(self) -> int:
        return self.ell * (self.v + 1)

    def _materialize_guard(self, exponent: int):
        bits = exponent * self.base.bit_length()
        if bits > MATERIALIZE_BITS:
            raise CapacityError(
                f"shifted progression needs ~{bits} bits; use value_mod "
                f"or the exponent fields instead"
            )

    @property
    def A0(self) -> int:
        self._materialize_guard(self.exp_a0)
        return self.base ** self.exp_a0 * self.A

    @property
    def B0(self) -> int:
        self._materialize_guard(self.exp_b0)
        return self.base ** self.exp_b0 - self.base ** self.ell + self.B

    def A0_mod(self, m: int) -> int:
        return pow(self.base, self.exp_a0, m) * self.A % m

    def B0_mod(self, m: int) -> int:
        return (pow(self.base, self.exp_b0, m) - pow(self.base, self.ell, m) + self.B) % m

    def value_mod(self, m: int, d: int, n: int, modulus: int) -> int:
        """(A0*m + B0 + d*base^n) mod modulus."""
        return (
            self.A0_mod(modulus) * m + self.B0_mod(modulus) + d * pow(self.base, n, modulus)
        ) % modulus


def subprogression_shift(
    A: int, B: int, base: int, budget: Budget = DEFAULT_BUDGET
) -> ShiftResult:
    """Shift Am + B to a subprogression A0*m + B0 whose members keep every
    divisibility certificate of the original (B0 ≡ B mod A) while the
    shifted values k + d*base^n are provably never equal to ±p for the
    certificate primes p.

    A' is the largest divisor of A coprime to the base, u the least power
    with A | base^u * A', v = φ(A'), and ell the least exponent >= max(u, 2)
    with base^ell > A + B.
    """
    if A < 1 or B < 1:
        raise ValueError("A and B must be positive")
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if math.gcd(A, B) != 1:
        raise ValueError(f"gcd(A, B) = {math.gcd(A, B)} != 1")
    fb = factor(base, budget)
    if not fb.complete:
        raise CapacityError(f"cannot factor the base {base}")
    for q in fb.primes():
        if A % q != 0:
            raise ValueError(f"prime {q} divides the base but not A")
    a_prime = A
    for q in fb.primes():
        while a_prime % q == 0:
            a_prime //= q
    # A must have a prime divisor exceeding the base
    probe = a_prime
    if base > 10 ** 6:
        raise CapacityError("base too large for the prime-divisor precondition check")
    for c in range(2, base + 1):
        while probe % c == 0:
            probe //= c
    if probe == 1:
        raise ValueError(f"A = {A} has no prime divisor > base {base}")
    fa = factor(a_prime, budget)
    if not fa.complete:
        raise ValueError(
            f"cannot certify φ: the base-coprime part {a_prime} of A resists "
            f"factorization under the given budget"
        )
    v = 1
    for p, e in fa.factors:
        v *= (p - 1) * p ** (e - 1)
    u = 1
    for q, eb in fb.factors:
        ea = 0
        x = A
        while x % q == 0:
            ea += 1
            x //= q
        u = max(u, -(-ea // eb))
    ell = max(u, 2)
    while base ** ell <= A + B:
        ell += 1
    a_primes = tuple(sorted(set(fa.primes()) | set(fb.primes())))
    result = ShiftResult(A=A, B=B, base=base, ell=ell, v=v, a_primes=a_primes)
    if result.B0_mod(A) != B % A:
        raise AssertionError("B0 is not congruent to B mod A")
    for p in a_primes:
        if result.B0_mod(p) == 0:
            raise AssertionError(f"gcd(A0, B0) > 1 at prime {p}")
    return result


def replace_offset(A: int, B: int) -> tuple[int, int]:
    """Slide the progression to its representative 2A + B in [2A, 3A); the
    gcd is preserved, so primality reasoning downstream is unaffected."""
    if math.gcd(A, B) != 1:
        raise ValueError(f"gcd(A, B) = {math.gcd(A, B)} != 1")
    return A, 2 * A + B
