"""Von Neumann measurement protocol with impulsive coupling H = g A P.

Free Hamiltonians are switched off during the interaction window [0, eps], so
the joint unitary is exactly exp(-i g eps A x P) and each eigenvalue branch
a_j rigidly translates the pointer by g * eps * a_j while leaving the system
amplitudes untouched. Post-selection then conditions the pointer on a final
system state, which is where weak values enter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    BasisMismatch,
    NotHermitian,
    OrthogonalSelection,
    PostSelectionImpossible,
    WidthMismatch,
    ZeroVector,
)
from .pointer import (
    SHIFT_MERGE_TOL,
    PointerMixture,
    PointerState,
    bures_pure,
    gaussian,
    normalize_terms,
)
from .qstate import HERMITICITY_TOL, Observable, SystemState, apply, inner

DEFAULT_OVERLAP_FLOOR = 1e-12
DIAGONAL_TOL = 1e-12


@dataclass(frozen=True)
class CouplingConfig:
    """Coupling strength g, interaction duration epsilon, pointer width delta."""

    g: float
    epsilon: float
    delta: float

    def __post_init__(self):
        if self.g <= 0 or self.epsilon <= 0 or self.delta <= 0:
            raise ValueError(
                f"g, epsilon and delta must be positive, got "
                f"({self.g}, {self.epsilon}, {self.delta})")


@dataclass(frozen=True, eq=False)
class JointState:
    """Entangled system-pointer state, one Gaussian branch per eigenvalue.

    `labels` index the branch basis; when the observable had to be
    diagonalized, `basis` holds its eigenvectors as columns in the original
    basis (None means the branch basis is the original one) and
    `system_labels` keeps the original labels for post-selection checks.
    """

    labels: tuple[int, ...]
    amplitudes: tuple[complex, ...]
    shifts: tuple[float, ...]
    width: float
    system_labels: tuple[int, ...]
    basis: np.ndarray | None = None


@dataclass(frozen=True)
class PostSelectionResult:
    """Conditioned pointer state and the probability of the post-selection."""

    pointer: PointerState
    probability: float


class ShiftCheck(NamedTuple):
    actual: PointerState
    ideal: PointerState
    distance: float


def weak_value(pre: SystemState, post: SystemState, a: Observable,
               floor: float = DEFAULT_OVERLAP_FLOOR) -> complex:
    """<post|A|pre> / <post|pre>; complex and unbounded by the spectrum."""
    denom = inner(post, pre)
    if abs(denom) <= floor:
        raise OrthogonalSelection(
            f"|<post|pre>| = {abs(denom):.3e} at or below floor {floor:.3e}")
    numer = complex(np.vdot(post.vector, apply(a, pre)))
    return numer / denom


def _eigenbranches(a: Observable) -> tuple[np.ndarray, np.ndarray | None]:
    """Eigenvalues and, if the matrix is not diagonal, its eigenvectors."""
    m = a.matrix
    off = m - np.diag(np.diagonal(m))
    if np.max(np.abs(off)) <= DIAGONAL_TOL:
        return np.real(np.diagonal(m)).copy(), None
    vals, vecs = np.linalg.eigh(m)
    return vals, vecs


def couple(pre: SystemState, a: Observable, cfg: CouplingConfig,
           pointer0: PointerState) -> JointState:
    """Entangle system and pointer through the impulsive coupling.

    The eigenvalue-a_j branch of `pre` is paired with the initial Gaussian
    shifted by g * eps * a_j. The observable is diagonalized first if needed;
    the pointer couples to eigenvalues only.
    """
    if pre.labels != a.labels:
        raise BasisMismatch(f"bases differ: {pre.labels} vs {a.labels}")
    if np.max(np.abs(a.matrix - a.matrix.conj().T)) > HERMITICITY_TOL:
        raise NotHermitian("observable matrix is not Hermitian")
    if len(pointer0.shifts) != 1:
        raise ValueError("initial pointer must be a single Gaussian")
    if pointer0.width != cfg.delta:
        raise WidthMismatch(
            f"pointer width {pointer0.width} differs from coupling delta {cfg.delta}")
    vals, vecs = _eigenbranches(a)
    if vecs is None:
        labels = pre.labels
        amps = pre.vector
    else:
        labels = tuple(range(len(vals)))
        amps = vecs.conj().T @ pre.vector
    center = pointer0.shifts[0]
    amps = amps * pointer0.coeffs[0]
    shifts = tuple(center + cfg.g * cfg.epsilon * float(v) for v in vals)
    return JointState(labels=labels, amplitudes=tuple(map(complex, amps)),
                      shifts=shifts, width=pointer0.width,
                      system_labels=pre.labels, basis=vecs)


def post_select(joint: JointState, post: SystemState) -> PostSelectionResult:
    """Project the system on `post` and renormalize the conditioned pointer.

    The probability is the squared norm of the unnormalized conditional
    pointer, evaluated with the exact Gaussian Gram matrix (not the weak
    limit |<post|pre>|^2, which it approaches as eps -> 0).
    """
    if post.labels != joint.system_labels:
        raise BasisMismatch(f"bases differ: {post.labels} vs {joint.system_labels}")
    d = post.vector if joint.basis is None else joint.basis.conj().T @ post.vector
    weights = np.conj(d) * np.asarray(joint.amplitudes, dtype=complex)
    try:
        pointer, norm_sq = normalize_terms(
            joint.width, zip(joint.shifts, map(complex, weights)))
    except ZeroVector:
        raise PostSelectionImpossible(
            "post-selection amplitude vanishes for every pointer component") from None
    return PostSelectionResult(pointer=pointer, probability=min(norm_sq, 1.0))


def no_postselect_mixture(joint: JointState) -> PointerMixture:
    """Reduced pointer state when nothing is post-selected.

    Distinct shifts carry mutually orthogonal system branches, so tracing out
    the system yields a classical mixture with one Gaussian per distinct
    shift, weighted by the Born weight of that shift.
    """
    groups: list[list[float]] = []
    for mu, amp in sorted(zip(joint.shifts, joint.amplitudes), key=lambda t: t[0]):
        w = abs(amp) ** 2
        if groups and abs(mu - groups[-1][0]) <= SHIFT_MERGE_TOL:
            groups[-1][1] += w
        else:
            groups.append([mu, w])
    components = tuple((w, gaussian(mu, joint.width)) for mu, w in groups if w > 0.0)
    return PointerMixture(components)


def weakness_metric(pre: SystemState, post: SystemState, a: Observable,
                    cfg: CouplingConfig) -> float:
    """Relative change of the selection scalar product <post|pre> induced by
    the full coupling unitary (pointer returned to its initial Gaussian).

    Zero means the interaction left the two-state selection untouched; values
    of order one mean the coupling destroyed it.
    """
    base = inner(post, pre)
    if abs(base) <= DEFAULT_OVERLAP_FLOOR:
        raise OrthogonalSelection("pre- and post-selection are orthogonal")
    if pre.labels != a.labels:
        raise BasisMismatch(f"bases differ: {pre.labels} vs {a.labels}")
    vals, vecs = _eigenbranches(a)
    c = pre.vector if vecs is None else vecs.conj().T @ pre.vector
    d = post.vector if vecs is None else vecs.conj().T @ post.vector
    damping = np.exp(-((cfg.g * cfg.epsilon * vals) ** 2) / (8.0 * cfg.delta ** 2))
    perturbed = complex(np.vdot(d, damping * c))
    return abs(perturbed - base) / abs(base)


def postselect_probability_drift(pre: SystemState, post: SystemState, a: Observable,
                                 cfg: CouplingConfig) -> float:
    """Relative deviation of the exact post-selection probability from its
    zero-coupling value |<post|pre>|^2.

    Complements `weakness_metric`: near-cancelling selections can keep the
    coherent scalar product almost unchanged while the conditioned branch is
    already dominated by measurement back-action.
    """
    base = inner(post, pre)
    if abs(base) <= DEFAULT_OVERLAP_FLOOR:
        raise OrthogonalSelection("pre- and post-selection are orthogonal")
    joint = couple(pre, a, cfg, gaussian(0.0, cfg.delta))
    result = post_select(joint, post)
    p0 = abs(base) ** 2
    return abs(result.probability - p0) / p0


def effective_shift_check(pre: SystemState, post: SystemState, a: Observable,
                          cfg: CouplingConfig) -> ShiftCheck:
    """Compare the conditioned pointer against a rigid shift by g*eps*Re(A_w).

    In the weak regime the distance between them is O(eps^2) while the pointer
    has moved O(eps) away from where it started, so the observable acts on the
    probe like the single number Re(A_w).
    """
    aw = weak_value(pre, post, a)
    joint = couple(pre, a, cfg, gaussian(0.0, cfg.delta))
    actual = post_select(joint, post).pointer
    ideal = gaussian(cfg.g * cfg.epsilon * aw.real, cfg.delta)
    return ShiftCheck(actual, ideal, bures_pure(actual, ideal))
