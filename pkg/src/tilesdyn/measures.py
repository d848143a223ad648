"""Negativity, the CCNR indicator, and state diagnostics.

Measurements are taken on a bipartition of the factors that remain after
tracing out a chosen set. Factors are labelled ``A``, ``B``, ``C`` in tensor
order.
"""

from __future__ import annotations

from dataclasses import dataclass

import math

import numpy as np

from .errors import ConfigError
from .tensor import DensityMatrix, hermiticity_defect, partial_transpose, realign, trace_norm

LABELS = "ABC"
DETECTION_TOL = 1e-9


def _parse_block(block: str) -> tuple[str, ...]:
    block = block.strip().upper()
    if not block or any(c not in LABELS for c in block):
        raise ConfigError(f"invalid cut block {block!r}")
    return tuple(block)


@dataclass(frozen=True)
class MeasurementConfig:
    """Which factors to trace out and how to split the remainder.

    ``pt_side`` selects the block that is partially transposed for the
    negativity; the result does not depend on it.
    """

    left: tuple[str, ...] = ("A",)
    right: tuple[str, ...] = ("B",)
    reduce: tuple[str, ...] = ("C",)
    pt_side: str = "right"

    def __post_init__(self):
        if not self.left or not self.right:
            raise ConfigError("cut needs two non-empty blocks")
        used = list(self.left) + list(self.right) + list(self.reduce)
        if len(used) != len(set(used)):
            raise ConfigError(f"factor listed twice in cut {self.cut_string()} / reduce {self.reduce_string()}")
        if self.pt_side not in ("left", "right"):
            raise ConfigError(f"pt_side must be 'left' or 'right', got {self.pt_side!r}")

    @classmethod
    def parse(cls, cut: str = "A|B", reduce: str | None = None, pt_side: str = "right",
              n_factors: int = 3) -> "MeasurementConfig":
        """Build from strings such as ``cut="A|BC"`` and ``reduce="none"``.

        ``reduce=None`` means: trace out every factor the cut does not mention.
        """
        parts = cut.split("|")
        if len(parts) != 2:
            raise ConfigError(f"cut must look like 'A|B', got {cut!r}")
        left, right = (_parse_block(p) for p in parts)
        labels = set(LABELS[:n_factors])
        if reduce is None:
            red = tuple(sorted(labels - set(left) - set(right)))
        elif reduce.strip().lower() in ("", "none"):
            red = ()
        else:
            red = _parse_block(reduce)
        cfg = cls(left, right, red, pt_side)
        if set(cfg.factors()) != labels:
            raise ConfigError(
                f"cut {cut!r} with reduce {cfg.reduce_string()!r} does not cover factors {sorted(labels)} exactly once"
            )
        return cfg

    def factors(self) -> tuple[str, ...]:
        return self.left + self.right + self.reduce

    def cut_string(self) -> str:
        return "".join(self.left) + "|" + "".join(self.right)

    def reduce_string(self) -> str:
        return "".join(self.reduce) or "none"


PAPER_LITERAL = MeasurementConfig()


def cut_state(rho: DensityMatrix, cfg: MeasurementConfig) -> DensityMatrix:
    """Trace out ``cfg.reduce`` and regroup the rest as a (left | right) bipartite state."""
    labels = LABELS[: len(rho.dims)]
    if sorted(cfg.factors()) != sorted(labels):
        raise ConfigError(
            f"measurement over factors {sorted(cfg.factors())} does not match state factors {list(labels)}"
        )
    keep = sorted(labels.index(f) for f in cfg.left + cfg.right)
    reduced = rho.ptrace(keep)
    kept_labels = [labels[i] for i in keep]
    order = [kept_labels.index(f) for f in cfg.left + cfg.right]
    n = len(order)
    dims = reduced.dims
    t = reduced.data.reshape(dims + dims).transpose(order + [n + i for i in order])
    dl = math.prod(dims[i] for i in order[: len(cfg.left)])
    dr = math.prod(dims[i] for i in order[len(cfg.left):])
    return DensityMatrix(t.reshape(dl * dr, dl * dr), (dl, dr))


def bipartite_negativity(rho: DensityMatrix, pt_side: str = "right") -> float:
    """Negativity of a state already split as (left | right)."""
    pt = partial_transpose(rho.data, rho.dims, 0 if pt_side == "left" else 1)
    return (trace_norm(pt, hermitian=True) - 1) / 2


def negativity(rho: DensityMatrix, cfg: MeasurementConfig = PAPER_LITERAL) -> float:
    """(||rho^PT||_1 - 1) / 2 on the cut state. Not clamped at zero."""
    return bipartite_negativity(cut_state(rho, cfg), cfg.pt_side)


def bipartite_ccnr(rho: DensityMatrix) -> float:
    ra = rho.ptrace([0]).data
    rb = rho.ptrace([1]).data
    corr = realign(rho.data - np.kron(ra, rb), rho.dims)
    pa = float(np.real(np.trace(ra @ ra)))
    pb = float(np.real(np.trace(rb @ rb)))
    # rounding can push a pure marginal's 1 - purity slightly below zero
    bound = np.sqrt(max(0.0, (1 - pa) * (1 - pb)))
    return trace_norm(corr) - bound


def ccnr(rho: DensityMatrix, cfg: MeasurementConfig = PAPER_LITERAL) -> float:
    """||(rho - rho_L (x) rho_R)^R||_1 - sqrt((1 - tr rho_L^2)(1 - tr rho_R^2)).

    Positive values detect entanglement across the cut.
    """
    return bipartite_ccnr(cut_state(rho, cfg))


@dataclass(frozen=True)
class Diagnostics:
    trace: float
    purity: float
    min_eigenvalue: float
    max_hermiticity_defect: float


def diagnostics(rho: DensityMatrix | np.ndarray) -> Diagnostics:
    m = rho.data if isinstance(rho, DensityMatrix) else np.asarray(rho)
    herm = (m + m.conj().T) / 2
    return Diagnostics(
        trace=float(np.real(np.trace(m))),
        purity=float(np.real(np.trace(m @ m))),
        min_eigenvalue=float(np.linalg.eigvalsh(herm)[0]),
        max_hermiticity_defect=hermiticity_defect(m),
    )


def is_entangled(neg: float, ccnr_value: float, tol: float = DETECTION_TOL) -> bool:
    """Entanglement is detected when either indicator exceeds ``tol``."""
    return neg > tol or ccnr_value > tol


def is_bound_entangled(neg: float, ccnr_value: float, tol: float = DETECTION_TOL) -> bool:
    return abs(neg) <= tol and ccnr_value > tol
