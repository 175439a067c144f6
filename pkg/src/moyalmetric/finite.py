"""Finite-dimensional clock/shift Weyl algebra and its discrete symbol calculus.

The clock matrix g = diag(1, w, w^2, ...) with w = exp(2*pi*i/N) and the
cyclic shift h (mapping basis vector e_k to e_{k+1 mod N}) generate the
relations g*h = exp(i*phi)*h*g with phi = 2*pi/N and g^N = h^N = 1.  The
words U(n, m) = g^n h^m form a trace-orthogonal basis, so every N x N matrix
has a unique coefficient array a[n, m]; multiplying matrices corresponds to
convolving coefficient arrays with the phase exp(-i*m*n'*phi), which is the
discrete star product implemented here.
"""

from __future__ import annotations

import numpy as np

from .errors import BadDimension, DimensionMismatch

MAX_DIMENSION = 256

_basis_cache: dict[int, np.ndarray] = {}


def _check_dim(n: int) -> None:
    if not isinstance(n, int) or n < 2 or n > MAX_DIMENSION:
        raise BadDimension(f"dimension must be an integer in [2, {MAX_DIMENSION}], got {n!r}")


def phase_angle(n: int) -> float:
    _check_dim(n)
    return 2.0 * np.pi / n


def clock(n: int) -> np.ndarray:
    """Diagonal phase matrix diag(exp(2*pi*i*k/N)), k = 0..N-1."""
    _check_dim(n)
    return np.diag(np.exp(2j * np.pi * np.arange(n) / n))


def shift(n: int) -> np.ndarray:
    """Cyclic permutation sending e_k to e_{k+1 mod N}."""
    _check_dim(n)
    h = np.zeros((n, n), dtype=complex)
    for k in range(n):
        h[(k + 1) % n, k] = 1.0
    return h


def basis_words(n: int) -> np.ndarray:
    """All U(a, b) = clock^a @ shift^b, shaped (n, n, n, n)."""
    _check_dim(n)
    cached = _basis_cache.get(n)
    if cached is not None:
        return cached
    g, h = clock(n), shift(n)
    g_pows = [np.linalg.matrix_power(g, a) for a in range(n)]
    h_pows = [np.linalg.matrix_power(h, b) for b in range(n)]
    words = np.empty((n, n, n, n), dtype=complex)
    for a in range(n):
        for b in range(n):
            words[a, b] = g_pows[a] @ h_pows[b]
    _basis_cache[n] = words
    return words


class DiscreteSymbol:
    """Coefficient array a[n, m] of an operator in the clock/shift basis."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: np.ndarray):
        arr = np.asarray(coeffs, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise BadDimension("coefficient array must be square")
        _check_dim(arr.shape[0])
        self.coeffs = arr

    @property
    def n(self) -> int:
        return self.coeffs.shape[0]

    def coefficient(self, a: int, b: int) -> complex:
        return complex(self.coeffs[a % self.n, b % self.n])

    def __repr__(self):
        return f"DiscreteSymbol(n={self.n})"


def to_symbol(operator: np.ndarray) -> DiscreteSymbol:
    """Expansion coefficients a[n, m] = tr(U(n, m)^dag A) / N."""
    arr = np.asarray(operator, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise BadDimension("operator must be a square matrix")
    n = arr.shape[0]
    _check_dim(n)
    words = basis_words(n)
    coeffs = np.empty((n, n), dtype=complex)
    for a in range(n):
        for b in range(n):
            coeffs[a, b] = np.vdot(words[a, b], arr) / n
    return DiscreteSymbol(coeffs)


def from_symbol(symbol: DiscreteSymbol) -> np.ndarray:
    """Reconstruct the operator sum a[n, m] g^n h^m."""
    n = symbol.n
    words = basis_words(n)
    return np.tensordot(symbol.coeffs, words, axes=([0, 1], [0, 1]))


def discrete_star(s1: DiscreteSymbol, s2: DiscreteSymbol) -> DiscreteSymbol:
    """Coefficient convolution with the ordering phase exp(-i*m*n'*phi)."""
    if s1.n != s2.n:
        raise DimensionMismatch(f"dimension mismatch: {s1.n} vs {s2.n}")
    n = s1.n
    phi = 2.0 * np.pi / n
    phases = np.exp(-1j * phi * np.outer(np.arange(n), np.arange(n)))  # [m, n']
    out = np.zeros((n, n), dtype=complex)
    for a in range(n):
        for b in range(n):
            c = s1.coeffs[a, b]
            if c == 0:
                continue
            out += c * np.roll(phases[b][:, None] * s2.coeffs, (a, b), axis=(0, 1))
    return DiscreteSymbol(out)


def discrete_dagger(symbol: DiscreteSymbol) -> DiscreteSymbol:
    """Coefficients of the conjugate-transpose: a*[-n, -m] * exp(-i*m*n*phi)."""
    n = symbol.n
    phi = 2.0 * np.pi / n
    idx = (-np.arange(n)) % n
    flipped = np.conj(symbol.coeffs)[np.ix_(idx, idx)]
    phases = np.exp(-1j * phi * np.outer(np.arange(n), np.arange(n)))
    return DiscreteSymbol(flipped * phases)


def evaluate(symbol: DiscreteSymbol, k: int, l: int) -> complex:
    """Value sum a[n, m] exp(2*pi*i*(n*k + m*l)/N) on the Fourier grid."""
    n = symbol.n
    vn = np.exp(2j * np.pi * k * np.arange(n) / n)
    vm = np.exp(2j * np.pi * l * np.arange(n) / n)
    return complex(vn @ symbol.coeffs @ vm)
