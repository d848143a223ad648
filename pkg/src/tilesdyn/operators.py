"""Single-qutrit x/y/z operator triples.

Two conventions are available: the spin-1 angular momentum matrices
(``Sz = diag(1, 0, -1)``) and the first three Gell-Mann matrices
(``lambda_3 = diag(1, -1, 0)``).
"""

from __future__ import annotations

import enum
from typing import NamedTuple

import numpy as np


class Convention(str, enum.Enum):
    SPIN1 = "spin1"
    GELLMANN = "gellmann"


class OperatorTriple(NamedTuple):
    x: np.ndarray
    y: np.ndarray
    z: np.ndarray


def _spin1() -> OperatorTriple:
    r = 1 / np.sqrt(2)
    sx = r * np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex)
    sy = r * np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]], dtype=complex)
    sz = np.diag([1, 0, -1]).astype(complex)
    return OperatorTriple(sx, sy, sz)


def _gellmann() -> OperatorTriple:
    l1 = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]], dtype=complex)
    l2 = np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]], dtype=complex)
    l3 = np.diag([1, -1, 0]).astype(complex)
    return OperatorTriple(l1, l2, l3)


def operator_triple(conv: Convention | str = Convention.SPIN1) -> OperatorTriple:
    """Return fresh copies of (Sx, Sy, Sz) for the requested convention."""
    conv = Convention(conv)
    return _spin1() if conv is Convention.SPIN1 else _gellmann()
