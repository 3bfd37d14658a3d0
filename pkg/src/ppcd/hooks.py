"""Hook partitions of p'-degree and the alternating-group degree bound.

The set of p'-degree hooks of n is built two independent ways: by
filtering binomial coefficients with Kummer digit sums, and by the
layered construction that adds top p-power hooks to the row and column
of each smaller member.  Their agreement with the closed counting
formula a_1 * p^{n_1} * prod(a_j + 1) is the main verification target.

On top of that sit the quasihook degree families (n-c-t, c, 1^t) and
``verify_An_bound``, which certifies at least three distinct p'-degrees
of A_n characters that extend to S_n for every n >= 7 and prime p > 3.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod

from .degrees import degree, factorial_valuation, hook_degree, is_pprime_macdonald
from .partitions import (
    DEFAULT_ENUMERATION_BOUND,
    Partition,
    _conjugate_parts,
    _partition_tuples,
    hook_partition,
    is_self_conjugate,
    p_adic_expansion,
    require_prime,
)

__all__ = [
    "AnBoundResult",
    "DEFAULT_SCAN_BOUND",
    "SCAN_BOUND_ENV",
    "count_pprime_hooks_formula",
    "ext_pprime_degree_set",
    "halved_count_lower_bound",
    "layered_pprime_hooks",
    "list_pprime_hooks",
    "pprime_hook_xs",
    "pprime_partitions_small",
    "quasihook",
    "quasihook_monotone",
    "scan_bound",
    "scan_ext_degree_sets",
    "verify_An_bound",
    "verify_hook_counts",
]

DEFAULT_SCAN_BOUND = 40
SCAN_BOUND_ENV = "PPCD_SCAN_BOUND"


def scan_bound() -> int:
    """Partition-scan bound for exact mode; PPCD_SCAN_BOUND overrides."""
    raw = os.environ.get(SCAN_BOUND_ENV)
    if raw is None:
        return DEFAULT_SCAN_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{SCAN_BOUND_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{SCAN_BOUND_ENV} must be non-negative, got {value}")
    return value


def _digit_sums(limit: int, p: int) -> list[int]:
    """s[i] = sum of base-p digits of i, for 0 <= i <= limit."""
    s = [0] * (limit + 1)
    for i in range(1, limit + 1):
        s[i] = s[i // p] + i % p
    return s


def pprime_hook_xs(n: int, p: int, _sums: list[int] | None = None) -> list[int]:
    """Leg lengths x with binomial(n-1, x) coprime to p, increasing.

    Kummer: the exponent of p in binomial(a+b, a) counts the carries of
    a + b in base p, so x qualifies iff the digit sums of x and n-1-x
    add up to that of n-1 with no carry.
    """
    require_prime(p)
    if n < 1:
        raise ValueError(f"expected n >= 1, got {n!r}")
    s = _digit_sums(n - 1, p) if _sums is None else _sums
    r = n - 1
    target = s[r]
    return [x for x in range(n) if s[x] + s[r - x] == target]


def list_pprime_hooks(n: int, p: int) -> list[Partition]:
    """The p'-degree hooks of n, by increasing leg length."""
    return [hook_partition(n, x) for x in pprime_hook_xs(n, p)]


def count_pprime_hooks_formula(n: int, p: int) -> int:
    """Closed form for the number of p'-degree hooks of n.

    With n = sum a_j p^{n_j} (nonzero digits, increasing exponents) the
    count is a_1 * p^{n_1} * prod_{j >= 2} (a_j + 1).
    """
    if n < 1:
        raise ValueError(f"expected n >= 1, got {n!r}")
    digits = p_adic_expansion(n, p).digits
    a1, e1 = digits[0]
    return a1 * p**e1 * prod(a + 1 for a, _ in digits[1:])


@lru_cache(maxsize=None)
def _layered_first_parts(n: int, p: int) -> tuple[int, ...]:
    """First parts of the p'-degree hooks of n, layered construction.

    Single base-p digit: every hook of n qualifies (for n < p because p
    does not divide n!, for n = a * p^e because the full first hook is
    stripped in one layer).  Otherwise each p'-hook of m = n minus the
    top layer grows by x top-power hooks on the row and the rest on the
    column, x = 0 .. a; the first part determines the hook.
    """
    digits = p_adic_expansion(n, p).digits
    if len(digits) == 1:
        return tuple(range(1, n + 1))
    a, e = digits[-1]
    step = p**e
    out = []
    for g1 in _layered_first_parts(n - a * step, p):
        out.extend(g1 + x * step for x in range(a + 1))
    return tuple(sorted(out))


def layered_pprime_hooks(n: int, p: int) -> list[Partition]:
    """Same set as list_pprime_hooks, built by the layered construction."""
    require_prime(p)
    if n < 1:
        raise ValueError(f"expected n >= 1, got {n!r}")
    first_parts = _layered_first_parts(n, p)
    return [hook_partition(n, n - m) for m in reversed(first_parts)]


def verify_hook_counts(n_max: int, primes: tuple[int, ...]) -> list[dict]:
    """Cross-check formula vs binomial filter vs layered sets up to n_max.

    Returns one row per (n, p) with the three counts and an ``ok`` flag
    meaning all counts and both constructed sets agree.
    """
    rows = []
    for p in primes:
        require_prime(p)
        sums = _digit_sums(max(n_max - 1, 0), p)
        for n in range(1, n_max + 1):
            xs = pprime_hook_xs(n, p, sums)
            layered = _layered_first_parts(n, p)
            formula = count_pprime_hooks_formula(n, p)
            filtered_parts = [n - x for x in reversed(xs)]
            ok = (
                formula == len(xs) == len(layered)
                and filtered_parts == list(layered)
            )
            rows.append(
                {
                    "n": n,
                    "p": p,
                    "formula": formula,
                    "filtered": len(xs),
                    "layered": len(layered),
                    "ok": ok,
                }
            )
    return rows


def quasihook(n: int, c: int, t: int) -> Partition:
    """The partition (n - c - t, c, 1^t) for c in {2, 3}.

    Larger c is rejected: the strict degree growth in t that makes
    these families useful fails already at c = 5.
    """
    if c not in (2, 3):
        raise ValueError(f"second row must be 2 or 3, got {c!r}")
    if n < 4 + c:
        raise ValueError(f"need n >= {4 + c} for second row {c}, got {n}")
    if not (0 <= t <= n - 2 * c):
        raise ValueError(f"leg length {t} out of range for (n, c) = ({n}, {c})")
    return Partition._from_valid((n - c - t, c) + (1,) * t, n)


def quasihook_monotone(n: int, c: int, t: int) -> bool:
    """Whether degree((n-c-t, c, 1^t)) < degree for leg t + 1.

    Contract: true whenever 0 <= t <= floor((n - 4 - c) / 2), i.e. as
    long as the first row stays at least as long as the first column.
    """
    if c not in (2, 3):
        raise ValueError(f"second row must be 2 or 3, got {c!r}")
    if n < 4 + c or not (0 <= t <= (n - 4 - c) // 2):
        raise ValueError(f"leg length {t} out of monotone range for (n, c) = ({n}, {c})")
    return degree(quasihook(n, c, t)) < degree(quasihook(n, c, t + 1))


def pprime_partitions_small(m: int, p: int) -> list[Partition]:
    """All p'-degree partitions of m = 1 + p^k, k >= 1.

    Exactly the quasihooks (p^k - t, 2, 1^{t-1}) for t = 1 .. p^k - 2
    together with the row (m) and the column (1^m); descending
    lexicographic order, matching the enumeration stream.
    """
    require_prime(p)
    q = m - 1
    if q < p or q % p:
        raise ValueError(f"expected m = 1 + p^k with k >= 1, got m = {m}")
    e = q
    while e % p == 0:
        e //= p
    if e != 1:
        raise ValueError(f"expected m = 1 + p^k with k >= 1, got m = {m}")
    out = [Partition._from_valid((m,), m)]
    for t in range(1, q - 1):
        out.append(Partition._from_valid((q - t, 2) + (1,) * (t - 1), m))
    out.append(Partition._from_valid((1,) * m, m))
    return out


def _valuation_table(limit: int, p: int) -> list[int]:
    tab = [0] * (limit + 1)
    for i in range(p, limit + 1, p):
        tab[i] = tab[i // p] + 1
    return tab


def scan_ext_degree_sets(n: int, primes: tuple[int, ...]) -> dict[int, set[int]]:
    """Full-scan extendable p'-degree sets of A_n, one pass per n.

    For every prime p given, collects the degrees of the partitions of
    n with p'-degree and lam != lam' (exactly the p'-degree characters
    of A_n that extend to S_n).
    """
    primes = tuple(primes)
    for p in primes:
        require_prime(p)
    if n < 1:
        raise ValueError(f"expected n >= 1, got {n!r}")
    fact = factorial(n)
    # per-hook p-valuations, only for hook lengths that have any
    vtabs = [_valuation_table(n, p) for p in primes]
    nonzero: list[tuple[tuple[int, int], ...]] = [()] * (n + 1)
    for h in range(2, n + 1):
        entries = tuple(
            (idx, vtabs[idx][h]) for idx in range(len(primes)) if vtabs[idx][h]
        )
        nonzero[h] = entries
    fact_vals = [factorial_valuation(n, p) for p in primes]
    out: dict[int, set[int]] = {p: set() for p in primes}
    k = len(primes)
    for parts in _partition_tuples(n):
        conj = _conjugate_parts(parts)
        if conj == parts:
            continue
        hooks = []
        append = hooks.append
        for i, v in enumerate(parts):
            base = v - i - 1
            for j in range(v):
                append(base - j + conj[j])
        vals = [0] * k
        for h in hooks:
            for idx, v in nonzero[h]:
                vals[idx] += v
        deg = None
        for idx in range(k):
            if vals[idx] == fact_vals[idx]:
                if deg is None:
                    deg = fact // prod(hooks)
                out[primes[idx]].add(deg)
    return out


def ext_pprime_degree_set(n: int, p: int, *, bound: int | None = None) -> set[int]:
    """Degrees of p'-degree A_n characters that extend to S_n.

    Exact (full partition scan) for n within the scan bound; above it,
    a certified subset built from p'-hooks and the quasihook families,
    every member re-checked p'-degree before inclusion.
    """
    require_prime(p)
    if n < 1:
        raise ValueError(f"expected n >= 1, got {n!r}")
    b = scan_bound() if bound is None else bound
    if n <= b:
        return scan_ext_degree_sets(n, (p,))[p]
    return _constructive_ext_degrees(n, p)


def _constructive_ext_degrees(n: int, p: int) -> set[int]:
    degs = set()
    for x in pprime_hook_xs(n, p):
        if 2 * x != n - 1:  # skip the self-conjugate hook
            degs.add(hook_degree(n, x))
    for c in (2, 3):
        if n >= 4 + c:
            for t in range(0, n - 2 * c + 1):
                lam = quasihook(n, c, t)
                if is_pprime_macdonald(lam, p) and not is_self_conjugate(lam):
                    degs.add(degree(lam))
    digits = p_adic_expansion(n, p).digits
    if (
        len(digits) == 3
        and digits[0] == (1, 0)
        and digits[1][0] == 1
        and digits[2][0] == 1
    ):
        degs.update(_row_extension_degrees(n, p))
    return degs


def halved_count_lower_bound(n: int, p: int) -> int:
    """floor(|p'-hooks of n| / 2): a lower bound for the extendable set."""
    return count_pprime_hooks_formula(n, p) // 2


@dataclass(frozen=True)
class AnBoundResult:
    """Outcome of verify_An_bound: flag, witness degrees, strategy used."""

    ok: bool
    witnesses: tuple[int, ...]
    method: str


def _quasihook_witnesses(n: int, p: int, c: int, need: int) -> set[int]:
    out: set[int] = set()
    for t in range(0, n - 2 * c + 1):
        lam = quasihook(n, c, t)
        if is_pprime_macdonald(lam, p) and not is_self_conjugate(lam):
            out.add(degree(lam))
            if len(out) >= need:
                break
    return out


def _row_extension_degrees(n: int, p: int) -> set[int]:
    """Degrees from extending the first row of every p'-partition of
    m = 1 + p^k by the top power p^h, for n = 1 + p^k + p^h."""
    digits = p_adic_expansion(n, p).digits
    k = digits[1][1]
    h = digits[2][1]
    step = p**h
    out: set[int] = set()
    for gamma in pprime_partitions_small(1 + p**k, p):
        parts = (gamma.parts[0] + step,) + gamma.parts[1:]
        lam = Partition._from_valid(parts, n)
        if is_pprime_macdonald(lam, p) and not is_self_conjugate(lam):
            out.add(degree(lam))
    return out


def verify_An_bound(n: int, p: int) -> AnBoundResult:
    """Certify >= 3 distinct extendable p'-degrees of A_n (n >= 7, p > 3).

    Generic case: floor(count/2) >= 3 and the short-leg p'-hooks give
    distinct degrees directly.  The remaining base-p shapes of n
    (1 + a p^k, 2 + p^k, 1 + p^k + p^h) use the quasihook and
    row-extension families; every constructed witness is re-checked
    p'-degree and non-self-conjugate rather than trusted.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 7:
        raise ValueError(f"expected an integer n >= 7, got {n!r}")
    require_prime(p)
    if p <= 3:
        raise ValueError(f"expected a prime p > 3, got {p}")

    if count_pprime_hooks_formula(n, p) // 2 >= 3:
        wits: set[int] = set()
        for x in pprime_hook_xs(n, p):
            if 2 * x < n - 1:
                wits.add(hook_degree(n, x))
                if len(wits) == 3:
                    break
        return AnBoundResult(len(wits) >= 3, tuple(sorted(wits)), "hook-degrees")

    digits = p_adic_expansion(n, p).digits
    if len(digits) == 2 and digits[0] == (1, 0):
        wits = {1} | _quasihook_witnesses(n, p, 2, 2)
        method = "quasihook-row2"
    elif len(digits) == 2 and digits[0] == (2, 0) and digits[1][0] == 1:
        if p ** digits[1][1] == 5:
            wits = scan_ext_degree_sets(n, (p,))[p]
            method = "direct-scan"
        else:
            wits = {1} | _quasihook_witnesses(n, p, 3, 2)
            method = "quasihook-row3"
    elif (
        len(digits) == 3
        and digits[0] == (1, 0)
        and digits[1][0] == 1
        and digits[2][0] == 1
    ):
        wits = {1} | _row_extension_degrees(n, p)
        method = "row-extension"
    elif n <= DEFAULT_ENUMERATION_BOUND:
        wits = scan_ext_degree_sets(n, (p,))[p]
        method = "direct-scan"
    else:
        return AnBoundResult(False, (), "unclassified")

    return AnBoundResult(len(wits) >= 3, tuple(sorted(wits))[:3], method)
