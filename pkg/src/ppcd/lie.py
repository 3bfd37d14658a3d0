"""Degree polynomials in q for characters of finite groups of Lie type.

Three layers:

* ``DegreeFormula`` -- a product form scalar * q^e * prod(q^m - s) over
  prod(q^m - s), evaluated exactly; integrality is enforced at
  evaluation time because a few of the classical q'-part entries carry
  a bare 1/2 that only clears for odd q.
* generic-order arithmetic for GL/GU, giving semisimple character
  degrees as p'-parts of centralizer indices, cross-checkable against
  the closed forms they are supposed to reproduce.
* per-family data for the small-rank groups (PSL2, PSL3/PSU3, PSp4,
  the Suzuki and small Ree groups, and the defining-characteristic
  G2/F4/triality-D4 constants), selecting for each (family, q, p) a
  pair of p'-degrees (d1, d2) with d2 never dividing d1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import is_prime, require_prime

__all__ = [
    "CentralizerSpec",
    "DegreeFormula",
    "ExceptionalPairRecord",
    "NonIntegralDegreeError",
    "classical_families",
    "classical_family_rank_range",
    "classical_grid",
    "classical_unipotent_pair",
    "eval_formula",
    "exceptional_families",
    "exceptional_grid",
    "exceptional_pair",
    "exceptional_pair_record",
    "gl_order",
    "in_contract_regime",
    "nondivisibility_check",
    "not_both_divisible",
    "pprime_part",
    "prime_power_decomposition",
    "prime_powers_upto",
    "qprime_part",
    "semisimple_degree",
    "steinberg_qpower",
]


class NonIntegralDegreeError(ArithmeticError):
    """A degree formula evaluated to a non-integral rational."""

    def __init__(self, message: str, value: Fraction):
        super().__init__(message)
        self.value = value


def prime_power_decomposition(q: int) -> tuple[int, int] | None:
    """(r, a) with q = r^a and r prime, or None."""
    if not isinstance(q, int) or isinstance(q, bool) or q < 2:
        return None
    r = q
    for f in range(2, q):
        if f * f > q:
            break
        if q % f == 0:
            r = f
            break
    a = 0
    m = q
    while m % r == 0:
        m //= r
        a += 1
    return (r, a) if m == 1 else None


def require_prime_power(q: int) -> tuple[int, int]:
    dec = prime_power_decomposition(q)
    if dec is None:
        raise ValueError(f"expected a prime power >= 2, got {q!r}")
    return dec


def prime_powers_upto(limit: int, *, minimum: int = 2) -> list[int]:
    """All prime powers q with minimum <= q <= limit, increasing."""
    return [q for q in range(max(minimum, 2), limit + 1) if prime_power_decomposition(q)]


def _primes_in(lo: int, hi: int) -> list[int]:
    return [p for p in range(lo, hi + 1) if is_prime(p)]


@dataclass(frozen=True)
class DegreeFormula:
    """scalar * q^qpower * prod(q^m - s) / prod(q^m - s), s = +-1.

    Evaluation at a prime power q >= 2 must yield a positive integer;
    anything else raises NonIntegralDegreeError.
    """

    scalar: Fraction = Fraction(1)
    qpower: int = 0
    factors: tuple[tuple[int, int], ...] = ()
    denominator_factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        scalar = self.scalar if isinstance(self.scalar, Fraction) else Fraction(self.scalar)
        object.__setattr__(self, "scalar", scalar)
        if scalar <= 0:
            raise ValueError(f"scalar must be positive, got {scalar}")
        if self.qpower < 0:
            raise ValueError(f"q-power must be non-negative, got {self.qpower}")
        for m, s in self.factors + self.denominator_factors:
            if m < 1 or s not in (1, -1):
                raise ValueError(f"bad factor (m, s) = ({m}, {s})")

    def evaluate_rational(self, q: int) -> Fraction:
        num = self.scalar.numerator * q**self.qpower
        for m, s in self.factors:
            num *= q**m - s
        den = self.scalar.denominator
        for m, s in self.denominator_factors:
            den *= q**m - s
        return Fraction(num, den)

    def __str__(self) -> str:
        pieces = []
        if self.scalar != 1:
            pieces.append(str(self.scalar))
        if self.qpower:
            pieces.append(f"q^{self.qpower}" if self.qpower > 1 else "q")
        for m, s in self.factors:
            op = "-" if s == 1 else "+"
            pieces.append(f"(q^{m} {op} 1)" if m > 1 else f"(q {op} 1)")
        text = " ".join(pieces) if pieces else "1"
        if self.denominator_factors:
            dens = []
            for m, s in self.denominator_factors:
                op = "-" if s == 1 else "+"
                dens.append(f"(q^{m} {op} 1)" if m > 1 else f"(q {op} 1)")
            text += " / " + "".join(dens)
        return text


def eval_formula(f: DegreeFormula, q: int) -> int:
    """Exact integer value of f at a prime power q >= 2."""
    require_prime_power(q)
    value = f.evaluate_rational(q)
    if value.denominator != 1:
        raise NonIntegralDegreeError(
            f"{f} is not integral at q = {q}: {value}", value
        )
    return value.numerator


def qprime_part(N: int, r: int) -> int:
    """N with every factor of the prime r removed."""
    require_prime(r)
    if not isinstance(N, int) or isinstance(N, bool) or N < 1:
        raise ValueError(f"expected a positive integer, got {N!r}")
    while N % r == 0:
        N //= r
    return N


# same operation, p'-part naming
pprime_part = qprime_part


def gl_order(n: int, eps: int, q: int) -> int:
    """|GL_n(q)| for eps = +1, |GU_n(q)| for eps = -1."""
    if eps not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {eps!r}")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"rank must be a positive integer, got {n!r}")
    require_prime_power(q)
    order = q ** (n * (n - 1) // 2)
    for i in range(1, n + 1):
        order *= q**i - eps**i
    return order


@dataclass(frozen=True)
class CentralizerSpec:
    """Product of general linear/unitary factors inside GL_n^eps(q).

    Each factor (rank, sign, twist) contributes GL_rank^sign(q^twist);
    the ranks weighted by their twists must fill the ambient rank.
    """

    factors: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        factors = tuple(tuple(f) for f in self.factors)
        object.__setattr__(self, "factors", factors)
        for rank, sign, twist in factors:
            if rank < 1 or twist < 1 or sign not in (1, -1):
                raise ValueError(f"bad centralizer factor {(rank, sign, twist)!r}")

    @property
    def ambient_rank(self) -> int:
        return sum(rank * twist for rank, _, twist in self.factors)

    def order(self, q: int) -> int:
        out = 1
        for rank, sign, twist in self.factors:
            out *= gl_order(rank, sign, q**twist)
        return out


def semisimple_degree(n: int, eps: int, q: int, r: int | None, c: CentralizerSpec) -> int:
    """Degree of the semisimple character attached to a centralizer.

    The r'-part of [GL_n^eps(q) : C], r the defining prime of q unless
    overridden.  A centralizer whose order does not divide the group
    order is rejected.
    """
    char, _ = require_prime_power(q)
    if r is None:
        r = char
    require_prime(r)
    if c.ambient_rank != n:
        raise ValueError(
            f"centralizer fills rank {c.ambient_rank}, ambient rank is {n}"
        )
    index, rem = divmod(gl_order(n, eps, q), c.order(q))
    if rem:
        raise ArithmeticError(f"centralizer order does not divide the group order: {c}")
    return qprime_part(index, r)


# -- classical-family unipotent degree pairs ---------------------------------
#
# For each classical family two specific low unipotent characters are
# carried, as q'-parts of their degrees.  The twisted-A entries resolve
# the parity-dependent signs at construction time.  The rows with a
# bare 1/2 scalar (B/C, the rank-4 D row, and the even-q B2 row) are
# integral only for odd q; they are evaluated as written and
# non-integrality is flagged at evaluation.

CLASSICAL_FAMILY_ALIASES = {"C": "B"}

_CLASSICAL_RANK_RANGES = {
    "A": (4, None),
    "2A": (4, None),
    "B": (2, None),
    "B2-even": (2, 2),
    "D": (5, None),
    "D4": (4, 4),
    "2D": (4, None),
}


def classical_families() -> list[str]:
    return list(_CLASSICAL_RANK_RANGES)


def classical_family_rank_range(family: str) -> tuple[int, int | None]:
    """(min_rank, max_rank) for a classical family; None = unbounded."""
    fam = CLASSICAL_FAMILY_ALIASES.get(family, family)
    if fam not in _CLASSICAL_RANK_RANGES:
        raise ValueError(f"unknown classical family {family!r}")
    return _CLASSICAL_RANK_RANGES[fam]


def _parity_sign(k: int) -> int:
    """s with q^k - s = q^k - (-1)^k."""
    return 1 if k % 2 == 0 else -1


def classical_unipotent_pair(family: str, n: int) -> tuple[DegreeFormula, DegreeFormula]:
    """The two carried unipotent q'-degree formulas for a classical family.

    Ranks follow the matrix size for the (twisted) linear families
    (so family "A" with n means GL_n-type, n >= 4) and the Lie rank for
    the others.  "B" covers both B_n and C_n; rank 2 there presumes odd
    q, even q being the separate "B2-even" row.
    """
    fam = CLASSICAL_FAMILY_ALIASES.get(family, family)
    lo, hi = classical_family_rank_range(fam)
    if n < lo or (hi is not None and n > hi):
        raise ValueError(f"rank {n} out of range for family {family!r}")
    half = Fraction(1, 2)
    if fam == "A":
        f1 = DegreeFormula(factors=((n - 1, 1),), denominator_factors=((1, 1),))
        f2 = DegreeFormula(
            factors=((n, 1), (n - 3, 1)),
            denominator_factors=((1, 1), (2, 1)),
        )
    elif fam == "2A":
        f1 = DegreeFormula(
            factors=((n - 1, _parity_sign(n - 1)),),
            denominator_factors=((1, -1),),
        )
        f2 = DegreeFormula(
            factors=((n, _parity_sign(n)), (n - 3, _parity_sign(n - 3))),
            denominator_factors=((1, -1), (2, 1)),
        )
    elif fam == "B":
        f1 = DegreeFormula(
            scalar=half, factors=((n - 1, 1), (n, -1)), denominator_factors=((1, 1),)
        )
        f2 = DegreeFormula(
            scalar=half, factors=((n - 1, -1), (n, 1)), denominator_factors=((1, 1),)
        )
    elif fam == "B2-even":
        f1 = DegreeFormula(scalar=half, factors=((1, 1), (1, 1)))
        f2 = DegreeFormula(scalar=half, factors=((1, -1), (1, -1)))
    elif fam == "D":
        f1 = DegreeFormula(factors=((n, 1), (n - 2, -1)), denominator_factors=((2, 1),))
        f2 = DegreeFormula(
            factors=((n - 1, -1), (n - 1, 1)), denominator_factors=((2, 1),)
        )
    elif fam == "D4":
        f1 = DegreeFormula(scalar=half, factors=((1, -1), (1, -1), (1, -1), (3, -1)))
        # (q^2+1)^2 (q^2+q+1) / 2, with q^2+q+1 written (q^3-1)/(q-1)
        f2 = DegreeFormula(
            scalar=half,
            factors=((2, -1), (2, -1), (3, 1)),
            denominator_factors=((1, 1),),
        )
    else:  # 2D
        f1 = DegreeFormula(factors=((n, -1), (n - 2, 1)), denominator_factors=((2, 1),))
        f2 = DegreeFormula(
            factors=((n - 1, -1), (n - 1, 1)), denominator_factors=((2, 1),)
        )
    return f1, f2


def steinberg_qpower(family: str, n: int) -> int:
    """Number of positive roots N; the Steinberg character has degree q^N."""
    fam = CLASSICAL_FAMILY_ALIASES.get(family, family)
    lo, hi = classical_family_rank_range(fam)
    if n < lo or (hi is not None and n > hi):
        raise ValueError(f"rank {n} out of range for family {family!r}")
    if fam in ("A", "2A"):
        return n * (n - 1) // 2
    if fam in ("B", "B2-even"):
        return n * n
    return n * (n - 1)


def _check_q_parity(family: str, n: int, q: int) -> None:
    fam = CLASSICAL_FAMILY_ALIASES.get(family, family)
    if fam == "B" and n == 2 and q % 2 == 0:
        raise ValueError("the rank-2 B/C row needs odd q; use B2-even instead")
    if fam == "B2-even" and q % 2 == 1:
        raise ValueError("the B2-even row needs even q")


def _divisible(value: Fraction, p: int) -> bool:
    if value.denominator % p == 0:
        raise ArithmeticError(f"prime {p} in the denominator of {value}")
    return value.numerator % p == 0


def not_both_divisible(family: str, n: int, q: int, p: int) -> bool:
    """Whether p > 3 fails to divide at least one of the family's pair.

    Contract: always true on valid parameters (p coprime to q, rank in
    range, q parity matching the row).
    """
    require_prime(p)
    if p <= 3:
        raise ValueError(f"expected a prime p > 3, got {p}")
    require_prime_power(q)
    if q % p == 0:
        raise ValueError(f"p = {p} must not divide q = {q}")
    _check_q_parity(family, n, q)
    f1, f2 = classical_unipotent_pair(family, n)
    d1 = f1.evaluate_rational(q)
    d2 = f2.evaluate_rational(q)
    return not (_divisible(d1, p) and _divisible(d2, p))


def classical_grid(
    q_max: int,
    p_max: int,
    families: list[str] | None = None,
    rank_max: int = 10,
) -> list[dict]:
    """One row per (family, rank, q, p) combination of the verification grid.

    Degrees are exact rationals (the 1/2-scalar rows are non-integral
    for even q); ``ok`` is the not-both-divisible check.
    """
    fams = families if families is not None else classical_families()
    qs = prime_powers_upto(q_max)
    ps = [p for p in _primes_in(5, p_max)]
    rows = []
    for family in fams:
        fam = CLASSICAL_FAMILY_ALIASES.get(family, family)
        lo, hi = classical_family_rank_range(fam)
        top = min(rank_max, hi) if hi is not None else rank_max
        for n in range(lo, top + 1):
            formulas = classical_unipotent_pair(fam, n)
            for q in qs:
                if fam == "B" and n == 2 and q % 2 == 0:
                    continue
                if fam == "B2-even" and q % 2 == 1:
                    continue
                d1 = formulas[0].evaluate_rational(q)
                d2 = formulas[1].evaluate_rational(q)
                for p in ps:
                    if q % p == 0:
                        continue
                    ok = not (_divisible(d1, p) and _divisible(d2, p))
                    rows.append(
                        {
                            "family": family,
                            "n": n,
                            "q": q,
                            "p": p,
                            "d1": d1,
                            "d2": d2,
                            "ok": ok,
                        }
                    )
    return rows


# -- exceptional pairs for the excluded small families -----------------------

_EXC_ALIASES = {
    "PSL3e": "PSL3",
    "2B2": "Suzuki",
    "2G2": "Ree2G2",
    "3D4": "TriD4",
}

_EXC_FAMILIES = (
    "PSL2",
    "PSL3",
    "PSU3",
    "PSp4",
    "Suzuki",
    "Ree2G2",
    "G2",
    "F4",
    "TriD4",
)


def exceptional_families() -> tuple[str, ...]:
    return _EXC_FAMILIES


@dataclass(frozen=True)
class CharacterWitness:
    degree: int
    origin: str
    extends_to_aut: bool
    p_group_invariant: bool


@dataclass(frozen=True)
class ExceptionalPairRecord:
    family: str
    q: int
    p: int
    case: str
    chi1: CharacterWitness
    chi2: CharacterWitness

    @property
    def degrees(self) -> tuple[int, int]:
        return (self.chi1.degree, self.chi2.degree)


def _split_exponent(a: int, p: int) -> tuple[int, int]:
    """a = p^b * m with p not dividing m."""
    b = 0
    while a % p == 0:
        a //= p
        b += 1
    return b, a


def _psl2_record(q: int, p: int) -> ExceptionalPairRecord:
    r, a = require_prime_power(q)
    if q < 4:
        raise ValueError(f"PSL2({q}) is not simple")
    _, m = _split_exponent(a, p)
    square = a % 2 == 0
    if p == r:
        # defining characteristic: semisimple pairs from rank-1 tori
        if p > 5:
            chi1 = CharacterWitness(q + 1, "semisimple:split-torus", True, True)
            chi2 = CharacterWitness(
                q - 1, "semisimple:nonsplit-torus", not square, True
            )
            case = "defining"
        elif m > 1:
            d1 = q + 1 if square else q - 1
            d2 = q - 1 if square else q + 1
            chi1 = CharacterWitness(d1, "semisimple:order-6-eigenvalues", True, True)
            chi2 = CharacterWitness(d2, "semisimple:subfield-torus", False, True)
            case = "defining-p5-mixed-exponent"
        else:
            chi1 = CharacterWitness(q - 1, "semisimple:order-6-eigenvalues", True, True)
            chi2 = CharacterWitness((q + 1) // 2, "half-discrete-series", False, True)
            case = "defining-p5-tower"
        return ExceptionalPairRecord("PSL2", q, p, case, chi1, chi2)
    if q == 5:
        # q+1 = 6 is not a degree of PSL2(5); pair the Steinberg with
        # the discrete-series degree 4 instead
        chi1 = CharacterWitness(q, "steinberg", True, True)
        chi2 = CharacterWitness(q - 1, "semisimple:nonsplit-torus", False, True)
        return ExceptionalPairRecord("PSL2", q, p, "nondefining-small-q", chi1, chi2)
    if (q + 1) % p and (q - 1) % p:
        if r > 3:
            extends2 = r > 5 and not square
            chi1 = CharacterWitness(q + 1, "semisimple:split-torus", True, True)
            chi2 = CharacterWitness(q - 1, "semisimple:nonsplit-torus", extends2, True)
            return ExceptionalPairRecord(
                "PSL2", q, p, "nondefining-generic", chi1, chi2
            )
        # q a power of 2 or 3: Steinberg plus a torus character fixed
        # by the p-power field automorphisms
        chi1 = CharacterWitness(q, "steinberg", True, True)
        if m > 1:
            chi2 = CharacterWitness(q + 1, "semisimple:subfield-torus", False, True)
        elif r == 2:
            chi2 = CharacterWitness(q - 1, "semisimple:order-3-eigenvalues", False, True)
        else:
            chi2 = CharacterWitness((q - 1) // 2, "half-discrete-series", False, True)
        return ExceptionalPairRecord(
            "PSL2", q, p, "nondefining-small-field", chi1, chi2
        )
    chi1 = CharacterWitness(q, "steinberg", True, True)
    if (q + 1) % p == 0:
        chi2 = CharacterWitness(q - 1, "semisimple:nonsplit-torus", False, True)
        case = "nondefining-p-divides-q-plus-1"
    else:
        chi2 = CharacterWitness(q + 1, "semisimple:split-torus", False, True)
        case = "nondefining-p-divides-q-minus-1"
    return ExceptionalPairRecord("PSL2", q, p, case, chi1, chi2)


def _psl3_record(family: str, q: int, p: int) -> ExceptionalPairRecord:
    eps = 1 if family == "PSL3" else -1
    r, a = require_prime_power(q)
    if eps == -1 and q < 3:
        raise ValueError("PSU3(2) is not simple")
    square = a % 2 == 0
    cyclo = q * q + eps * q + 1
    if p == r:
        chi1 = CharacterWitness((q + 1) * cyclo, "semisimple:split-torus", True, True)
        chi2 = CharacterWitness(
            (q - 1) * cyclo, "semisimple:nonsplit-torus", not square, True
        )
        return ExceptionalPairRecord(family, q, p, "defining", chi1, chi2)
    st = CharacterWitness(q**3, "steinberg", True, True)
    if (q + eps) % p:
        chi2 = CharacterWitness(q * (q + eps), "unipotent-subregular", True, True)
        case = "nondefining-unipotent"
    else:
        extends2 = eps == -1 or not square
        chi2 = CharacterWitness(
            (q - eps) * cyclo, "semisimple:nonsplit-torus", extends2, True
        )
        case = "nondefining-semisimple"
    return ExceptionalPairRecord(family, q, p, case, st, chi2)


def _psp4_record(q: int, p: int) -> ExceptionalPairRecord:
    r, a = require_prime_power(q)
    if r <= 3:
        raise ValueError(
            f"PSp4 degree pair is only carried for q a power of a prime > 3, got q = {q}"
        )
    square = a % 2 == 0
    chi1 = CharacterWitness((q + 1) * (q * q + 1), "principal-series", True, True)
    chi2 = CharacterWitness(
        (q - 1) * (q * q + 1), "discrete-series", not square, True
    )
    return ExceptionalPairRecord("PSp4", q, p, "defining", chi1, chi2)


def _suzuki_record(q2: int, p: int) -> ExceptionalPairRecord:
    dec = prime_power_decomposition(q2)
    if dec is None or dec[0] != 2 or dec[1] % 2 == 0 or dec[1] < 3:
        raise ValueError(f"Suzuki groups need q^2 = 2^(2m+1) with m >= 1, got {q2}")
    if (q2 - 1) % p:
        raise ValueError(
            f"the carried Suzuki pair needs p dividing q^2 - 1 = {q2 - 1}, got p = {p}"
        )
    chi1 = CharacterWitness(q2 * q2, "steinberg", True, True)
    chi2 = CharacterWitness(q2 * q2 + 1, "torus-series", False, True)
    return ExceptionalPairRecord("Suzuki", q2, p, "p-divides-q2-minus-1", chi1, chi2)


def _ree_record(q2: int, p: int) -> ExceptionalPairRecord:
    dec = prime_power_decomposition(q2)
    if dec is None or dec[0] != 3 or dec[1] % 2 == 0 or dec[1] < 3:
        raise ValueError(f"small Ree groups need q^2 = 3^(2m+1) with m >= 1, got {q2}")
    if (q2 - 1) % p:
        raise ValueError(
            f"the carried Ree pair needs p dividing q^2 - 1 = {q2 - 1}, got p = {p}"
        )
    chi1 = CharacterWitness(q2**3, "steinberg", True, True)
    chi2 = CharacterWitness(q2 * q2 - q2 + 1, "cuspidal-unique-degree", True, True)
    return ExceptionalPairRecord("Ree2G2", q2, p, "p-divides-q2-minus-1", chi1, chi2)


def _exceptional_defining_record(family: str, q: int, p: int) -> ExceptionalPairRecord:
    """G2/F4/triality-D4 defining-characteristic constants.

    These degrees are carried as data (unique characters of the stated
    degrees); there is no independent oracle for them here.
    """
    r, _ = require_prime_power(q)
    if p != r or r <= 3:
        raise ValueError(
            f"{family} degrees are only carried in defining characteristic > 3"
        )
    if family == "G2":
        eps = 1 if q % 6 == 1 else -1
        d1, d2 = q**4 + q**2 + 1, q**3 + eps
    elif family == "F4":
        d1 = q**8 + q**4 + 1
        d2 = (q**2 + 1) * (q**4 + 1) * (q**8 + q**4 + 1)
    else:  # TriD4
        d1 = q**8 + q**4 + 1
        d2 = (q + 1) * (q**8 + q**4 + 1)
    chi1 = CharacterWitness(d1, "unique-degree", True, True)
    chi2 = CharacterWitness(d2, "unique-degree", True, True)
    return ExceptionalPairRecord(family, q, p, "defining", chi1, chi2)


def exceptional_pair_record(family: str, q: int, p: int) -> ExceptionalPairRecord:
    """Full record (degrees plus invariance metadata) for a small family."""
    fam = _EXC_ALIASES.get(family, family)
    if fam not in _EXC_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    require_prime(p)
    if p <= 3:
        raise ValueError(f"expected a prime p > 3, got {p}")
    if fam == "PSL2":
        return _psl2_record(q, p)
    if fam in ("PSL3", "PSU3"):
        return _psl3_record(fam, q, p)
    if fam == "PSp4":
        return _psp4_record(q, p)
    if fam == "Suzuki":
        return _suzuki_record(q, p)
    if fam == "Ree2G2":
        return _ree_record(q, p)
    return _exceptional_defining_record(fam, q, p)


def exceptional_pair(family: str, q: int, p: int) -> tuple[int, int]:
    """The selected pair (chi1(1), chi2(1)) for (family, q, p)."""
    return exceptional_pair_record(family, q, p).degrees


def nondivisibility_check(d1: int, d2: int, p: int) -> bool:
    """p divides neither degree and d2 does not divide d1."""
    if d1 < 1 or d2 < 1:
        raise ValueError("degrees must be positive")
    return d1 % p != 0 and d2 % p != 0 and d1 % d2 != 0


def in_contract_regime(family: str, q: int, p: int) -> bool:
    """Whether (family, q, p) falls under the nondivisibility contract.

    The PSp4 and exceptional-type constants are only claimed in
    defining characteristic; for them a non-defining p yields a valid
    degree pair but no divisibility guarantee.  The other families'
    case analysis covers every accepted p.
    """
    fam = _EXC_ALIASES.get(family, family)
    if fam in ("PSp4", "G2", "F4", "TriD4"):
        r, _ = require_prime_power(q)
        return p == r
    return True


def exceptional_grid(q_max: int = 128, p_max: int = 97) -> list[tuple[str, int, int]]:
    """Every regime-valid (family, q, p) combination within the caps.

    For PSp4 and the carried exceptional-type constants the regime is
    defining characteristic (p = char q > 3); the Suzuki/Ree rows need
    p dividing q^2 - 1; the rank <= 3 linear families accept any prime
    p > 3 (the case split covers dividing and non-dividing p alike).
    """
    ps = _primes_in(5, p_max)
    combos: list[tuple[str, int, int]] = []
    for q in prime_powers_upto(q_max, minimum=4):
        r, _ = prime_power_decomposition(q)
        for p in ps:
            if p != r and q % p == 0:
                continue
            if p == r and r <= 3:
                continue
            combos.append(("PSL2", q, p))
    for fam, q_min in (("PSL3", 2), ("PSU3", 3)):
        for q in prime_powers_upto(q_max, minimum=q_min):
            r, _ = prime_power_decomposition(q)
            for p in ps:
                if p == r and r <= 3:
                    continue
                if p != r and q % p == 0:
                    continue
                combos.append((fam, q, p))
    for q in prime_powers_upto(q_max, minimum=5):
        r, _ = prime_power_decomposition(q)
        if r > 3 and r <= p_max:
            for fam in ("PSp4", "G2", "F4", "TriD4"):
                combos.append((fam, q, r))
    for q2 in (8, 32, 128):
        if q2 <= q_max:
            for p in ps:
                if (q2 - 1) % p == 0:
                    combos.append(("Suzuki", q2, p))
    for q2 in (27,):
        if q2 <= q_max:
            for p in ps:
                if (q2 - 1) % p == 0:
                    combos.append(("Ree2G2", q2, p))
    return combos
