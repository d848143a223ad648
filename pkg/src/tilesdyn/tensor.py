"""Dense matrix algebra on tensor-product spaces.

Subsystem factors are ordered globally as A, B, C; a matrix on the composite
space is indexed so that factor 0 is the slowest-varying index (the ordering
produced by ``np.kron``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import math

import numpy as np

from .errors import ConfigError, PreconditionError

HERMITIAN_TOL = 1e-10


def _check_dims(m: np.ndarray, dims: Sequence[int]) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ConfigError(f"expected a square matrix, got shape {m.shape}")
    if any(d < 1 for d in dims) or math.prod(dims) != m.shape[0]:
        raise ConfigError(f"dims {dims} inconsistent with matrix of size {m.shape[0]}")
    return dims


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(np.asarray(a), np.asarray(b))


def kron_all(mats: Iterable[np.ndarray]) -> np.ndarray:
    out = np.ones((1, 1))
    for m in mats:
        out = np.kron(out, m)
    return out


def partial_trace(rho: np.ndarray, dims: Sequence[int], keep: Iterable[int]) -> np.ndarray:
    """Trace out every factor not listed in ``keep``.

    The kept factors stay in their original order regardless of the order
    in which ``keep`` lists them.
    """
    rho = np.asarray(rho)
    dims = _check_dims(rho, dims)
    keep = sorted(set(int(k) for k in keep))
    if not keep or keep[0] < 0 or keep[-1] >= len(dims):
        raise ConfigError(f"invalid subsystems to keep: {keep} for dims {dims}")
    n = len(dims)
    traced = [i for i in range(n) if i not in keep]
    # einsum labels: row indices 0..n-1, column indices n..2n-1; traced factors share a label
    row = list(range(n))
    col = [i if i in traced else n + i for i in range(n)]
    out_labels = keep + [n + i for i in keep]
    t = np.einsum(rho.reshape(dims + dims), row + col, out_labels)
    d = math.prod(dims[i] for i in keep)
    return t.reshape(d, d)


def partial_transpose(rho: np.ndarray, dims: Sequence[int], sub: int) -> np.ndarray:
    rho = np.asarray(rho)
    dims = _check_dims(rho, dims)
    n = len(dims)
    if n < 2:
        raise ConfigError("partial transpose needs at least two factors")
    if not 0 <= sub < n:
        raise ConfigError(f"invalid subsystem index {sub} for dims {dims}")
    axes = list(range(2 * n))
    axes[sub], axes[n + sub] = axes[n + sub], axes[sub]
    return rho.reshape(dims + dims).transpose(axes).reshape(rho.shape)


def realign(rho: np.ndarray, dims: Sequence[int]) -> np.ndarray:
    """Realignment R[(i,k),(j,l)] = <i,j|rho|k,l> for a bipartite matrix.

    Rows are grouped by the two A indices, columns by the two B indices,
    giving a dA**2 x dB**2 matrix.
    """
    rho = np.asarray(rho)
    dims = _check_dims(rho, dims)
    if len(dims) != 2:
        raise ConfigError(f"realignment needs a bipartite split, got dims {dims}")
    da, db = dims
    return rho.reshape(da, db, da, db).transpose(0, 2, 1, 3).reshape(da * da, db * db)


def trace_norm(m: np.ndarray, hermitian: bool = False) -> float:
    """Sum of singular values.

    With ``hermitian=True`` the caller certifies hermiticity and the sum of
    absolute eigenvalues is used instead of an SVD.
    """
    m = np.asarray(m)
    if hermitian:
        return float(np.abs(np.linalg.eigvalsh(m)).sum())
    return float(np.linalg.svd(m, compute_uv=False).sum())


def hermiticity_defect(m: np.ndarray) -> float:
    m = np.asarray(m)
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


@dataclass(frozen=True)
class Propagator:
    """exp(-i h t) from one cached eigendecomposition of a Hermitian ``h``."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @classmethod
    def from_hamiltonian(cls, h: np.ndarray, tol: float = HERMITIAN_TOL) -> "Propagator":
        h = np.asarray(h, dtype=complex)
        if h.ndim != 2 or h.shape[0] != h.shape[1]:
            raise PreconditionError(f"generator must be square, got shape {h.shape}")
        defect = hermiticity_defect(h)
        if defect > tol:
            raise PreconditionError(f"generator is not Hermitian (max |h - h^dag| = {defect:.3e})")
        w, v = np.linalg.eigh(h)
        return cls(w, v)

    def __call__(self, t: float) -> np.ndarray:
        v = self.eigenvectors
        return (v * np.exp(-1j * self.eigenvalues * t)) @ v.conj().T


def hermitian_evolution_operator(h: np.ndarray, t: float) -> np.ndarray:
    return Propagator.from_hamiltonian(h)(t)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Square complex matrix tagged with its tensor-factor dimensions."""

    data: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        data = np.asarray(self.data, dtype=complex)
        object.__setattr__(self, "dims", _check_dims(data, self.dims))
        if not np.all(np.isfinite(data)):
            raise PreconditionError("density matrix has non-finite entries")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    def trace(self) -> complex:
        return complex(np.trace(self.data))

    def ptrace(self, keep: Iterable[int]) -> "DensityMatrix":
        keep = sorted(set(keep))
        return DensityMatrix(partial_trace(self.data, self.dims, keep), tuple(self.dims[i] for i in keep))
