"""Integer partitions and Young-diagram hook arithmetic.

Everything here is exact integer combinatorics: conjugation, hook
lengths, e-cores, base-p digit expansions, and deterministic
enumeration of partitions and hook partitions.

e-cores are computed on a beta-set abacus (push every bead to the top
of its runner), which is order-independent by construction and runs in
O(parts + e).  A naive rim-hook remover is kept alongside it as the
cross-check oracle for the core computation.

Partitions are immutable values and every function is pure, so the
module is safe for concurrent use.  Enumeration order is fixed
(descending lexicographic) so that downstream output is reproducible
byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator

__all__ = [
    "DEFAULT_ENUMERATION_BOUND",
    "PAdicExpansion",
    "Partition",
    "conjugate",
    "divisible_hooks",
    "e_core",
    "e_core_by_removal",
    "enumerate_hooks",
    "enumerate_partitions",
    "hook_length",
    "hook_multiset",
    "hook_partition",
    "is_prime",
    "is_self_conjugate",
    "p_adic_expansion",
    "require_prime",
]

# Partition enumeration refuses n above this unless the caller raises the
# bound explicitly; p(60) is about 966k, already a deliberate request.
DEFAULT_ENUMERATION_BOUND = 60


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test; inputs here are tiny."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def require_prime(p: int) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise ValueError(f"expected a prime, got {p!r}")
    return p


@total_ordering
class Partition:
    """A partition: weakly decreasing positive parts stored as a tuple.

    The empty partition is the unique partition of 0.  Instances are
    immutable and hashable; ordering is lexicographic on the parts, so
    ``sorted(..., reverse=True)`` matches the enumeration order used
    throughout.
    """

    __slots__ = ("parts", "n")

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        prev = None
        for x in parts:
            if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                raise ValueError(f"parts must be positive integers: {parts!r}")
            if prev is not None and x > prev:
                raise ValueError(f"parts must be weakly decreasing: {parts!r}")
            prev = x
        self.parts = parts
        self.n = sum(parts)

    @classmethod
    def _from_valid(cls, parts: tuple[int, ...], n: int | None = None) -> "Partition":
        """Wrap an already-validated parts tuple (internal fast path)."""
        self = object.__new__(cls)
        self.parts = parts
        self.n = sum(parts) if n is None else n
        return self

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        """Parse the textual form ``"4,1"``; "" and "0" mean the empty partition."""
        text = text.strip()
        if text in ("", "0"):
            return cls()
        return cls(int(tok) for tok in text.split(","))

    def to_list(self) -> list[int]:
        return list(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]


def _conjugate_parts(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    conj = [0] * parts[0]
    for v in parts:
        for j in range(v):
            conj[j] += 1
    return tuple(conj)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram; an involution."""
    return Partition._from_valid(_conjugate_parts(lam.parts), lam.n)


def is_self_conjugate(lam: Partition) -> bool:
    parts = lam.parts
    if parts and parts[0] != len(parts):
        return False
    return parts == _conjugate_parts(parts)


def hook_length(lam: Partition, i: int, j: int) -> int:
    """Hook length at node (i, j), rows and columns 1-indexed.

    arm + leg + 1, i.e. (lam_i - j) + (lam'_j - i) + 1.
    """
    parts = lam.parts
    if not (1 <= i <= len(parts) and 1 <= j <= parts[i - 1]):
        raise ValueError(f"node ({i}, {j}) is not in the diagram of {lam}")
    col_height = sum(1 for v in parts if v >= j)
    return (parts[i - 1] - j) + (col_height - i) + 1


def _hook_lengths(parts: tuple[int, ...], conj: tuple[int, ...] | None = None) -> list[int]:
    """All hook lengths in row-major node order (internal, unsorted)."""
    if conj is None:
        conj = _conjugate_parts(parts)
    hooks = []
    append = hooks.append
    for i, v in enumerate(parts):
        base = v - i  # hook at (i, j) = v - j + conj[j] - i - 1, 0-indexed
        for j in range(v):
            append(base - j + conj[j] - 1)
    return hooks


def hook_multiset(lam: Partition) -> tuple[int, ...]:
    """Multiset of all hook lengths, as a descending tuple of size |lam|."""
    return tuple(sorted(_hook_lengths(lam.parts), reverse=True))


def divisible_hooks(lam: Partition, e: int) -> tuple[int, ...]:
    """Sub-multiset of the hook lengths divisible by e (descending tuple)."""
    _require_core_modulus(e)
    return tuple(sorted((h for h in _hook_lengths(lam.parts) if h % e == 0), reverse=True))


def _require_core_modulus(e: int) -> int:
    if not isinstance(e, int) or isinstance(e, bool) or e < 2:
        raise ValueError(f"hook modulus must be an integer >= 2, got {e!r}")
    return e


def e_core(lam: Partition, e: int) -> Partition:
    """The e-core: what is left after removing all rim hooks of length e.

    Beta-set abacus: place the first-column hook lengths as beads on e
    runners and slide every bead as far up its runner as it goes.  This
    is removal-order independent by construction.
    """
    _require_core_modulus(e)
    parts = lam.parts
    ell = len(parts)
    if ell == 0:
        return lam
    beta = [parts[i] + (ell - 1 - i) for i in range(ell)]
    runner_counts = [0] * e
    for b in beta:
        runner_counts[b % e] += 1
    new_beta = []
    for r in range(e):
        new_beta.extend(r + e * i for i in range(runner_counts[r]))
    new_beta.sort(reverse=True)
    core = [new_beta[i] - (ell - 1 - i) for i in range(ell)]
    return Partition._from_valid(tuple(x for x in core if x > 0))


def _removable_nodes(parts: tuple[int, ...], e: int) -> list[tuple[int, int]]:
    """0-indexed nodes whose hook length is exactly e, row-major order."""
    conj = _conjugate_parts(parts)
    nodes = []
    for i, v in enumerate(parts):
        for j in range(v):
            if v - j + conj[j] - i - 1 == e:
                nodes.append((i, j))
    return nodes


def _remove_rim_hook(parts: tuple[int, ...], i: int, j: int) -> tuple[int, ...]:
    """Strip the rim hook anchored at 0-indexed node (i, j)."""
    conj = _conjugate_parts(parts)
    leg = conj[j] - 1 - i
    out = list(parts)
    for r in range(i, i + leg):
        out[r] = parts[r + 1] - 1
    out[i + leg] = j
    return tuple(x for x in out if x > 0)


def e_core_by_removal(lam: Partition, e: int, *, rightmost: bool = False) -> Partition:
    """Naive e-core oracle: repeatedly strip a removable rim e-hook.

    ``rightmost`` switches which removable hook is taken first (last vs
    first in row-major node order); the result must not depend on it.
    """
    _require_core_modulus(e)
    parts = lam.parts
    while True:
        nodes = _removable_nodes(parts, e)
        if not nodes:
            return Partition._from_valid(parts)
        i, j = nodes[-1] if rightmost else nodes[0]
        parts = _remove_rim_hook(parts, i, j)


@dataclass(frozen=True)
class PAdicExpansion:
    """Base-p expansion of n with zero digits omitted.

    ``digits`` is a tuple of (digit, exponent) pairs with strictly
    increasing exponents and 1 <= digit <= p-1; the empty tuple
    represents n = 0.
    """

    p: int
    digits: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        require_prime(self.p)
        prev_exp = -1
        for a, k in self.digits:
            if not (1 <= a <= self.p - 1):
                raise ValueError(f"digit {a} out of range for base {self.p}")
            if k <= prev_exp:
                raise ValueError("exponents must be strictly increasing")
            prev_exp = k

    def value(self) -> int:
        return sum(a * self.p**k for a, k in self.digits)

    def __len__(self) -> int:
        return len(self.digits)


def p_adic_expansion(n: int, p: int) -> PAdicExpansion:
    """Base-p digits of n >= 0, least significant first, zeros omitted."""
    require_prime(p)
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"expected a non-negative integer, got {n!r}")
    digits = []
    k = 0
    while n:
        n, a = divmod(n, p)
        if a:
            digits.append((a, k))
        k += 1
    return PAdicExpansion(p, tuple(digits))


def _partition_tuples(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n as raw tuples, descending lexicographic."""
    if n == 0:
        yield ()
        return
    r = (n,)
    yield r
    while True:
        i = len(r) - 1
        while i >= 0 and r[i] == 1:
            i -= 1
        if i < 0:
            return
        rest = len(r) - i
        r = r[:i] + (r[i] - 1,)
        while rest > 0:
            nxt = min(r[-1], rest)
            r += (nxt,)
            rest -= nxt
        yield r


def enumerate_partitions(n: int, *, bound: int = DEFAULT_ENUMERATION_BOUND) -> Iterator[Partition]:
    """Every partition of n exactly once, descending lexicographic order."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"expected a non-negative integer, got {n!r}")
    if n > bound:
        raise ValueError(f"n = {n} exceeds the partition scan bound {bound}")
    return (Partition._from_valid(parts, n) for parts in _partition_tuples(n))


def hook_partition(n: int, x: int) -> Partition:
    """The hook (n - x, 1^x)."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"expected a positive integer, got {n!r}")
    if not (0 <= x <= n - 1):
        raise ValueError(f"leg length {x} out of range for n = {n}")
    return Partition._from_valid((n - x,) + (1,) * x, n)


def enumerate_hooks(n: int) -> list[Partition]:
    """The n hook partitions (n - x, 1^x), x = 0 .. n-1, in that order."""
    return [hook_partition(n, x) for x in range(n)]
