"""Dense construction of the three circulant matrices and their eigenvectors.

Entries are computed once per residue class d = (j-k) mod n and replicated,
so the circulant property holds bit for bit and a rank-n build makes O(n)
trig calls instead of O(n^2).  Because the residue tables come from
trig.sin_rational_pi / cot_rational_pi, whose reflection symmetries are
bitwise, the constructed matrices are exactly Hermitian in floating point:
hermiticity_residual returns 0.0 for every built matrix.

Matrix indices in every public signature are 1-based, matching the closed
forms elsewhere in the package; the underlying numpy storage is 0-based.
Matrices and vectors are immutable once constructed (the numpy buffers are
write-protected), which makes them safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .trig import cos_rational_pi, cot_rational_pi, sin_rational_pi

__all__ = [
    "DenseHermitian",
    "build_a",
    "build_b",
    "build_c",
    "build_matrix",
    "dft_eigenvector",
    "dft_matrix",
    "matvec",
    "matmul",
    "frobenius_norm",
    "hermiticity_residual",
    "dump_text",
    "inv_sin_pow_table",
    "cot_table",
]


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"matrix rank must be a positive integer, got {n!r}")


@lru_cache(maxsize=None)
def cot_table(n: int) -> np.ndarray:
    """cot(d pi / n) for residues d = 0..n-1, with 0.0 at the d = 0 slot.

    The d = 0 slot is a placeholder for the zero diagonal, not a cotangent
    value (the true cotangent is singular there).
    """
    _check_n(n)
    t = np.zeros(n)
    for d in range(1, n):
        t[d] = cot_rational_pi(d, n)
    t.flags.writeable = False
    return t


@lru_cache(maxsize=None)
def inv_sin_pow_table(n: int, p: int) -> np.ndarray:
    """sin^-2p(d pi / n) for residues d = 0..n-1, 0.0 at the d = 0 slot."""
    _check_n(n)
    if p not in (1, 2, 3, 4):
        raise ValueError(f"exponent p must be in 1..4, got {p!r}")
    t = np.zeros(n)
    for d in range(1, n):
        t[d] = sin_rational_pi(d, n) ** (-2 * p)
    t.flags.writeable = False
    return t


@dataclass(frozen=True)
class DenseHermitian:
    """An n x n complex Hermitian matrix with zero diagonal, stored dense.

    Construct through build_a / build_b / build_c; the entries array is
    row-major complex128 and is write-protected.
    """

    n: int
    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.entries.shape != (self.n, self.n):
            raise ValueError(
                f"expected a {self.n} x {self.n} array, got {self.entries.shape}"
            )
        self.entries.flags.writeable = False

    @property
    def array(self) -> np.ndarray:
        """The read-only complex128 array backing this matrix (0-based)."""
        return self.entries

    def entry(self, j: int, k: int) -> complex:
        """Entry at 1-based row j, column k."""
        if not (1 <= j <= self.n and 1 <= k <= self.n):
            raise ValueError(f"indices must be in 1..{self.n}, got ({j}, {k})")
        return complex(self.entries[j - 1, k - 1])


def _circulant(n: int, residue_values: np.ndarray) -> DenseHermitian:
    idx = np.arange(n)
    entries = residue_values[(idx[:, None] - idx[None, :]) % n]
    return DenseHermitian(n, entries)


def build_a(n: int) -> DenseHermitian:
    """The matrix with off-diagonal entries 1 + i*cot((j-k) pi / n)."""
    _check_n(n)
    vals = np.zeros(n, dtype=np.complex128)
    vals[1:] = 1.0 + 1j * cot_table(n)[1:]
    return _circulant(n, vals)


def build_b(n: int) -> DenseHermitian:
    """The matrix with off-diagonal entries sin^-2((j-k) pi / n)."""
    _check_n(n)
    return _circulant(n, inv_sin_pow_table(n, 1).astype(np.complex128))


def build_c(n: int) -> DenseHermitian:
    """The matrix with off-diagonal entries sin^-4((j-k) pi / n)."""
    _check_n(n)
    return _circulant(n, inv_sin_pow_table(n, 2).astype(np.complex128))


_BUILDERS = {"A": build_a, "B": build_b, "C": build_c}


def build_matrix(kind: str, n: int) -> DenseHermitian:
    """Build A, B or C by kind letter."""
    try:
        builder = _BUILDERS[kind]
    except KeyError:
        raise ValueError(f"kind must be one of 'A', 'B', 'C', got {kind!r}") from None
    return builder(n)


@lru_cache(maxsize=None)
def _dft_phases(n: int) -> np.ndarray:
    # exp(-2 pi i r / n) for r = 0..n-1, exact at multiples of pi/2
    w = np.empty(n, dtype=np.complex128)
    for r in range(n):
        w[r] = complex(cos_rational_pi(2 * r, n), -sin_rational_pi(2 * r, n))
    w.flags.writeable = False
    return w


def dft_eigenvector(n: int, s: int) -> np.ndarray:
    """Vector with 1-based component j equal to exp(-2 pi i s j / n).

    Every component has unit modulus.  These vectors diagonalize any
    circulant matrix, so one family serves A, B and C simultaneously.
    """
    _check_n(n)
    if not isinstance(s, int) or not 1 <= s <= n:
        raise ValueError(f"s must satisfy 1 <= s <= {n}, got {s!r}")
    w = _dft_phases(n)
    v = w[(s * np.arange(1, n + 1)) % n]
    v.flags.writeable = False
    return v


def dft_matrix(n: int) -> np.ndarray:
    """All n eigenvectors as columns: column s-1 is dft_eigenvector(n, s)."""
    _check_n(n)
    w = _dft_phases(n)
    j = np.arange(1, n + 1)
    s = np.arange(1, n + 1)
    m = w[(j[:, None] * s[None, :]) % n]
    m.flags.writeable = False
    return m


def _as_array(m) -> np.ndarray:
    return m.array if isinstance(m, DenseHermitian) else np.asarray(m)


def matvec(m, v: np.ndarray, compensated: bool = False) -> np.ndarray:
    """Matrix-vector product; compensated mode sums each row with fsum."""
    a = _as_array(m)
    v = np.asarray(v, dtype=np.complex128)
    if a.shape[1] != v.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {v.shape}")
    if not compensated:
        return a @ v
    rows = a * v[None, :]
    out = np.empty(a.shape[0], dtype=np.complex128)
    for i in range(a.shape[0]):
        out[i] = complex(math.fsum(rows[i].real), math.fsum(rows[i].imag))
    return out


def matmul(m, other, compensated: bool = False) -> np.ndarray:
    """Dense matrix product, returned as a plain complex array.

    The product of two Hermitian matrices is in general not Hermitian, so
    no structure is claimed for the result.
    """
    a = _as_array(m)
    b = _as_array(other)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    if not compensated:
        return a @ b
    out = np.empty((a.shape[0], b.shape[1]), dtype=np.complex128)
    bt = b.T.copy()
    for i in range(a.shape[0]):
        for k in range(bt.shape[0]):
            prod = a[i] * bt[k]
            out[i, k] = complex(math.fsum(prod.real), math.fsum(prod.imag))
    return out


def frobenius_norm(m) -> float:
    """Frobenius norm sqrt(sum |entry|^2)."""
    return float(np.linalg.norm(_as_array(m)))


def hermiticity_residual(m) -> float:
    """max |entry(j,k) - conj(entry(k,j))|; 0.0 for every built matrix."""
    a = _as_array(m)
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


def _fmt_real(x) -> str:
    s = repr(float(x) + 0.0)  # normalizes -0.0 and numpy scalars
    return s[:-2] if s.endswith(".0") else s


def dump_text(m) -> str:
    """Plain-text matrix dump: one row per line, tab-separated 're +imi' pairs."""
    a = _as_array(m)
    lines = []
    for row in a:
        cells = []
        for z in row:
            im = float(z.imag) + 0.0
            sign = "-" if im < 0 else "+"
            cells.append(f"{_fmt_real(z.real)} {sign}{_fmt_real(abs(im))}i")
        lines.append("\t".join(cells))
    return "\n".join(lines)
