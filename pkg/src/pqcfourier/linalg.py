"""Dense complex linear algebra for small (<= 2**10) Hermitian problems.

Matrix exponentials are always taken through the eigendecomposition, so
spectral identities such as ``evolve(H, 2*pi) == I`` for integer spectra hold
to round-off.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, IllConditioned, NoConvergence, NotHermitian, Singular

HERMITIAN_TOL = 1e-10
ILL_CONDITIONED = 1e8


def _as_square(a, name: str = "matrix") -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise DimensionMismatch(f"{name} must be a non-empty square matrix, got shape {a.shape}")
    return a


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    """A Hermitian matrix together with its ascending spectrum and eigenbasis.

    Build instances with :func:`eigendecompose`; the eigenvectors are the
    columns of ``eigenvectors``.
    """

    matrix: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def shifted(self, c: float) -> "HermitianOperator":
        """Return ``H + c*I`` without redoing the decomposition."""
        return HermitianOperator(
            self.matrix + c * np.eye(self.dim), self.eigenvalues + c, self.eigenvectors
        )

    def scaled(self, s: float) -> "HermitianOperator":
        """Return ``s*H`` for ``s > 0`` (keeps the ascending order)."""
        if s <= 0:
            raise ValueError("scale must be positive")
        return HermitianOperator(s * self.matrix, s * self.eigenvalues, self.eigenvectors)


def eigendecompose(a, tol: float = HERMITIAN_TOL) -> HermitianOperator:
    """Diagonalize a Hermitian matrix.

    Raises:
        NotHermitian: if ``max|A - A^H| > tol * max|A|``.
        NoConvergence: if LAPACK fails to converge.
    """
    a = _as_square(a)
    scale = np.max(np.abs(a))
    if np.max(np.abs(a - a.conj().T)) > tol * max(scale, 1e-300):
        raise NotHermitian("matrix is not Hermitian within tolerance")
    # symmetrize so the stored matrix satisfies the tighter 1e-12 invariant
    a = (a + a.conj().T) / 2
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    a.setflags(write=False)
    w.setflags(write=False)
    v.setflags(write=False)
    return HermitianOperator(a, w, v)


def evolve(h: HermitianOperator, t: float) -> np.ndarray:
    """``exp(-i t H)`` assembled from the eigenbasis."""
    phases = np.exp(-1j * t * h.eigenvalues)
    v = h.eigenvectors
    return (v * phases) @ v.conj().T


def apply_evolution(h: HermitianOperator, t: float, psi: np.ndarray) -> np.ndarray:
    """``exp(-i t H) @ psi`` without forming the full matrix."""
    v = h.eigenvectors
    phases = np.exp(-1j * t * h.eigenvalues)
    return v @ (phases * (v.conj().T @ psi))


def solve_linear(a, y, *, warn: bool = True) -> tuple[np.ndarray, float]:
    """Solve ``A x = y`` and return ``(x, cond)``.

    ``cond`` is the 1-norm condition number of ``A``.  When it reaches
    1e8 an :class:`IllConditioned` warning is issued (the solution is still
    returned unchanged).

    Raises:
        Singular: if ``A`` is numerically rank deficient.
    """
    a = _as_square(a, "A")
    y = np.asarray(y, dtype=complex)
    if y.shape != (a.shape[0],):
        raise DimensionMismatch(f"right-hand side has shape {y.shape}, expected ({a.shape[0]},)")
    try:
        x = np.linalg.solve(a, y)
        inv = np.linalg.inv(a)
    except np.linalg.LinAlgError as exc:
        raise Singular(str(exc)) from exc
    cond = float(np.linalg.norm(a, 1) * np.linalg.norm(inv, 1))
    if not np.isfinite(cond) or not np.all(np.isfinite(x)):
        raise Singular("matrix is numerically singular")
    if warn and cond >= ILL_CONDITIONED:
        warnings.warn(f"linear system is ill-conditioned (cond ~ {cond:.3g})", IllConditioned, stacklevel=2)
    return x, cond


def condition_number(a) -> float:
    """1-norm condition estimate; ``inf`` for exactly singular input."""
    a = _as_square(a)
    try:
        inv = np.linalg.inv(a)
    except np.linalg.LinAlgError:
        return float("inf")
    return float(np.linalg.norm(a, 1) * np.linalg.norm(inv, 1))


def is_unitary(u, tol: float = 1e-10) -> bool:
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return bool(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) <= tol)
