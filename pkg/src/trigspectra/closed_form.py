"""Closed-form spectra and power-sum constants, in exact rational arithmetic.

Three circulant off-diagonal Hermitian matrices are studied throughout this
package: A with entries 1 + i*cot((j-k)pi/n), B with entries
sin^-2((j-k)pi/n) and C with entries sin^-4((j-k)pi/n), all with zero
diagonal.  Their eigenvalues have closed forms indexed by s = 1..n:

  a_s = 2s - n - 1
  b_s = sigma(n,1) - 2s(n-s)
  c_s = sigma(n,2) - 2s(n-s)(s(n-s)+2)/3

where sigma(n,p) is the power sum of inverse squared sines over k = 1..n-1.
Everything in this module is a fractions.Fraction (or int); floating point
never enters.  All functions are pure, so they are safe to call from any
number of threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

__all__ = [
    "sigma",
    "eig_a",
    "eig_b",
    "eig_c",
    "cot_sin_rhs",
    "spectrum_closed",
    "trace_identities",
    "TraceIdentity",
]

MATRIX_KINDS = ("A", "B", "C")


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"matrix rank must be a positive integer, got {n!r}")


def _check_index(n: int, s: int) -> None:
    _check_n(n)
    if not isinstance(s, int) or not 1 <= s <= n:
        raise ValueError(f"spectral index s must satisfy 1 <= s <= {n}, got {s!r}")


def sigma(n: int, p: int) -> Fraction:
    """Exact value of sum_{k=1}^{n-1} sin^-2p(k pi / n) for p in 1..4.

    The p = 3, 4 values are kept as the product of the p - 2 value with a
    small rational polynomial in n; this keeps the intermediate integers
    small.  Denominators divide 3, 45, 945 and 14175 respectively.
    """
    _check_n(n)
    if p == 1:
        return Fraction(n * n - 1, 3)
    if p == 2:
        return Fraction((n * n - 1) * (n * n + 11), 45)
    if p == 3:
        return sigma(n, 1) * Fraction(2 * n**4 + 23 * n * n + 191, 315)
    if p == 4:
        return sigma(n, 2) * Fraction(3 * n**4 + 10 * n * n + 227, 315)
    raise ValueError(f"power sum exponent must be 1, 2, 3 or 4, got {p!r}")


def eig_a(n: int, s: int) -> int:
    """Eigenvalue of A for the spectral index s: the integer 2s - n - 1."""
    _check_index(n, s)
    return 2 * s - n - 1


def eig_b(n: int, s: int) -> Fraction:
    """Eigenvalue of B for the spectral index s: sigma(n,1) - 2s(n-s)."""
    _check_index(n, s)
    return sigma(n, 1) - 2 * s * (n - s)


def eig_c(n: int, s: int) -> Fraction:
    """Eigenvalue of C: sigma(n,2) - 2s(n-s)(s(n-s)+2)/3."""
    _check_index(n, s)
    w = s * (n - s)
    return sigma(n, 2) - Fraction(2 * w * (w + 2), 3)


def cot_sin_rhs(n: int, s: int) -> int:
    """Closed form n - 2s of sum_k cot(k pi/n) sin(2sk pi/n), s = 1..n-1.

    The formula does not continue to s = n (the sum vanishes there while
    n - 2s does not), so s outside 1..n-1 is rejected.
    """
    _check_n(n)
    if n < 2:
        raise ValueError("the cot*sin sum rule needs n >= 2")
    if not isinstance(s, int) or not 1 <= s <= n - 1:
        raise ValueError(f"s must satisfy 1 <= s <= {n - 1}, got {s!r}")
    return n - 2 * s


def spectrum_closed(kind: str, n: int) -> list[Fraction]:
    """The n closed-form eigenvalues of A, B or C, sorted ascending.

    Duplicates are retained: b_s = b_{n-s} (and likewise for c_s) produces
    genuine multiplicity two, and comparison against an eigensolver needs
    the full multiset.
    """
    _check_n(n)
    if kind == "A":
        vals = [Fraction(eig_a(n, s)) for s in range(1, n + 1)]
    elif kind == "B":
        vals = [eig_b(n, s) for s in range(1, n + 1)]
    elif kind == "C":
        vals = [eig_c(n, s) for s in range(1, n + 1)]
    else:
        raise ValueError(f"kind must be one of {MATRIX_KINDS}, got {kind!r}")
    vals.sort()
    return vals


class TraceIdentity(NamedTuple):
    identity_id: str
    left: Fraction
    right: Fraction
    equal: bool


def trace_identities(n: int) -> list[TraceIdentity]:
    """Evaluate the five exact trace identities of the spectra of B and C.

    Summing over s = 1..n:

      trace-b   sum b_s           = 0
      trace-c   sum c_s           = 0
      trace-b2  sum b_s^2         = n * sigma(n,2)
      trace-bc  sum b_s c_s       = n * sigma(n,3)
      trace-c2  sum c_s^2         = n * sigma(n,4)

    The left sides are brute sums over the spectrum.  For speed they are
    accumulated as integer numerators over the fixed denominators 3 of b_s
    and 45 of c_s, which is exact; no closed form for the sums is used.
    """
    _check_n(n)
    nn = n * n
    # 3*b_s and 45*c_s as integers
    sum_b = sum_c = sum_b2 = sum_bc = sum_c2 = 0
    for s in range(1, n + 1):
        w = s * (n - s)
        nb = nn - 1 - 6 * w
        nc = (nn - 1) * (nn + 11) - 30 * w * (w + 2)
        sum_b += nb
        sum_c += nc
        sum_b2 += nb * nb
        sum_bc += nb * nc
        sum_c2 += nc * nc

    pairs = [
        ("trace-b", Fraction(sum_b, 3), Fraction(0)),
        ("trace-c", Fraction(sum_c, 45), Fraction(0)),
        ("trace-b2", Fraction(sum_b2, 9), n * sigma(n, 2)),
        ("trace-bc", Fraction(sum_bc, 135), n * sigma(n, 3)),
        ("trace-c2", Fraction(sum_c2, 2025), n * sigma(n, 4)),
    ]
    return [TraceIdentity(cid, l, r, l == r) for cid, l, r in pairs]
