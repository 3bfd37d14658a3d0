"""Character degrees of the symmetric and alternating groups.

Degrees come from the hook-length formula with exact big-integer
arithmetic.  p-divisibility questions go through Legendre's factorial
valuation, so n! is never factored and never materialized for a mere
p'-test; the recursive p-power-core criterion (Macdonald) is the fast
check and the valuation computation is its independent oracle.
"""

from __future__ import annotations

from math import comb, factorial, prod

from .partitions import (
    Partition,
    _hook_lengths,
    conjugate,
    divisible_hooks,
    e_core,
    p_adic_expansion,
    require_prime,
)

__all__ = [
    "an_degrees",
    "binomial_coprime_lucas",
    "degree",
    "degree_valuation",
    "factorial_valuation",
    "hook_degree",
    "hook_degree_valuation",
    "int_valuation",
    "is_pprime_macdonald",
    "is_pprime_oracle",
]


def int_valuation(m: int, p: int) -> int:
    """Largest v with p^v dividing m (m >= 1)."""
    if m < 1:
        raise ValueError(f"valuation needs a positive integer, got {m!r}")
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def factorial_valuation(n: int, p: int) -> int:
    """Legendre's formula: the exponent of p in n!."""
    s = 0
    while n:
        n //= p
        s += n
    return s


def degree(lam: Partition) -> int:
    """Degree of the irreducible S_n character labelled by lam.

    n! divided by the product of all hook lengths; the division is
    exact, anything else means the hook computation is broken.
    """
    hooks = _hook_lengths(lam.parts)
    q, r = divmod(factorial(lam.n), prod(hooks))
    if r:
        raise ArithmeticError(f"hook product does not divide {lam.n}! for {lam}")
    return q


def hook_degree(n: int, x: int) -> int:
    """Degree of the hook character (n - x, 1^x): binomial(n-1, x)."""
    if not (0 <= x <= n - 1):
        raise ValueError(f"leg length {x} out of range for n = {n}")
    return comb(n - 1, x)


def hook_degree_valuation(n: int, x: int, p: int) -> int:
    """Exponent of p in binomial(n-1, x), via Legendre's formula."""
    if not (0 <= x <= n - 1):
        raise ValueError(f"leg length {x} out of range for n = {n}")
    return (
        factorial_valuation(n - 1, p)
        - factorial_valuation(x, p)
        - factorial_valuation(n - 1 - x, p)
    )


def degree_valuation(lam: Partition, p: int) -> int:
    """Exponent of p in degree(lam), without computing the degree."""
    require_prime(p)
    v = factorial_valuation(lam.n, p)
    for h in _hook_lengths(lam.parts):
        if h % p == 0:
            v -= int_valuation(h, p)
    if v < 0:
        raise ArithmeticError(f"negative valuation for {lam} at p = {p}")
    return v


def is_pprime_oracle(lam: Partition, p: int) -> bool:
    """Brute-force p'-degree test: the degree valuation is zero."""
    return degree_valuation(lam, p) == 0


def is_pprime_macdonald(lam: Partition, p: int) -> bool:
    """Recursive p'-degree test (Macdonald).

    Strip the top base-p layer: with p^k the largest p-power <= n and a
    its digit, lam has p'-degree iff lam has exactly a hooks divisible
    by p^k and the p^k-core again has p'-degree.  A partition of n < p
    is always p'-degree since p does not divide n!.
    """
    require_prime(p)
    cur = lam
    n = cur.n
    while n >= p:
        e = p
        while e * p <= n:
            e *= p
        a = n // e
        if len(divisible_hooks(cur, e)) != a:
            return False
        cur = e_core(cur, e)
        n = cur.n
    return True


def binomial_coprime_lucas(n: int, k: int, p: int) -> bool:
    """Lucas test: p does not divide binomial(n, k) iff every base-p
    digit of k is at most the matching digit of n."""
    require_prime(p)
    if not (0 <= k <= n):
        return False
    while k:
        if k % p > n % p:
            return False
        k //= p
        n //= p
    return True


def an_degrees(lam: Partition) -> list[int]:
    """Degrees of the A_n constituents of the S_n character of lam.

    For lam != lam' the restriction stays irreducible (one degree, and
    the character extends to S_n); a self-conjugate lam splits into two
    constituents of equal degree.  The equal split forces an even
    degree; an odd one would mean a degree bug.
    """
    if lam.n < 2:
        raise ValueError("alternating-group restriction needs n >= 2")
    d = degree(lam)
    if conjugate(lam) != lam:
        return [d]
    half, r = divmod(d, 2)
    if r:
        raise ArithmeticError(f"self-conjugate {lam} has odd degree {d}")
    return [half, half]


def sum_of_degree_squares(n: int) -> int:
    """Sum of squared degrees over all partitions of n (equals n!)."""
    from .partitions import enumerate_partitions

    return sum(degree(lam) ** 2 for lam in enumerate_partitions(n))
