"""Iterated B-transformation: strict type, periodicity and orbits.

:func:`classify` follows ``P, B(P), B^2(P), ...`` and stops at the first
non-Fano iterate (strict type), at the first canonical key seen before
(periodic, hence type B_inf) or when the step budget runs out (unresolved).
"""

import logging
from dataclasses import dataclass
from typing import Optional, Union

from config import (
    DEFAULT_BUDGET,
    DEFAULT_MAX_HULL_VERTICES,
    DEFAULT_PSEUDO_PERIODIC_WINDOW,
    FailureReason,
    VerdictKind,
)
from geometry.polytope import VPolytope, hull
from analysis.fano import (
    FanoPolytope,
    b_transform_fano,
    cone_barycenter,
    face_fan_cones,
    is_kahler_einstein,
    is_smooth,
    validate_fano,
)
from analysis.symmetry import is_symmetric
from classification.canonical import CanonicalKey, canonical_key

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StrictType:
    """``B^k(P)`` is Fano and ``B^{k+1}(P)`` is not, for the given reason."""

    k: int
    reason: FailureReason
    kind: VerdictKind = VerdictKind.STRICT_TYPE

    def __str__(self) -> str:
        return f"strict type B{self.k} ({self.reason.value})"


@dataclass(frozen=True)
class PeriodicBInfinity:
    """``B^{t+k}(P)`` is equivalent to ``B^t(P)``; every iterate is Fano."""

    preperiod: int
    period: int
    kind: VerdictKind = VerdictKind.PERIODIC

    def __str__(self) -> str:
        return f"B_inf, periodic (t={self.preperiod}, k={self.period})"


@dataclass(frozen=True)
class Unresolved:
    """At least of type ``B_budget``; no repeat was found within the budget.

    Attributes:
        budget: Number of B-transformations attempted.
        resource_abort: True if the run stopped at the hull-size ceiling.
    """

    budget: int
    resource_abort: bool = False
    kind: VerdictKind = VerdictKind.UNRESOLVED

    def __str__(self) -> str:
        suffix = ", hull-size ceiling reached" if self.resource_abort else ""
        return f"unresolved within budget {self.budget}{suffix}"


TypeVerdict = Union[StrictType, PeriodicBInfinity, Unresolved]


@dataclass(frozen=True)
class StepFlags:
    kahler_einstein: bool
    symmetric: bool
    smooth: bool


@dataclass(frozen=True)
class TrajectoryStep:
    step: int
    polytope: FanoPolytope
    key: CanonicalKey
    vertex_count: int
    flags: Optional[StepFlags] = None


@dataclass(frozen=True)
class Trajectory:
    """Fano iterates ``B^0(P), ..., B^m(P)``.

    Attributes:
        steps: One entry per Fano iterate, step 0 being the input.
        terminal: The first non-Fano iterate when the run ended on a failure.
    """

    steps: tuple[TrajectoryStep, ...]
    terminal: Optional[VPolytope] = None

    @property
    def keys(self) -> list[CanonicalKey]:
        return [s.key for s in self.steps]

    @property
    def vertex_counts(self) -> list[int]:
        return [s.vertex_count for s in self.steps]

    def __len__(self) -> int:
        return len(self.steps)

    def __getitem__(self, index: int) -> TrajectoryStep:
        return self.steps[index]


def step_flags(P: FanoPolytope) -> StepFlags:
    return StepFlags(
        kahler_einstein=is_kahler_einstein(P),
        symmetric=is_symmetric(P),
        smooth=is_smooth(P),
    )


def _make_step(step: int, P: FanoPolytope, key: CanonicalKey, with_flags: bool) -> TrajectoryStep:
    flags = step_flags(P) if with_flags else None
    return TrajectoryStep(step, P, key, len(P), flags)


def classify(
    P: FanoPolytope,
    budget: int = DEFAULT_BUDGET,
    max_hull_vertices: int = DEFAULT_MAX_HULL_VERTICES,
    with_flags: bool = True,
) -> tuple[TypeVerdict, Trajectory]:
    """Classify ``P`` by iterating the B-transformation.

    Args:
        P: Starting Fano polytope.
        budget: Maximum number of B-transformations.
        max_hull_vertices: Abort when an iterate would be the hull of more
            barycenters than this.
        with_flags: Record Kähler-Einstein, symmetry and smoothness per step.

    Returns:
        The verdict and the trajectory of Fano iterates. A periodic run
        records the repeating iterate as its last step.

    Raises:
        ValueError: If ``budget`` is smaller than 1.

    Example:
        >>> from analysis.families import named_fixture
        >>> verdict, _ = classify(named_fixture("strict-b1"))
        >>> verdict.k
        1
    """
    if budget < 1:
        raise ValueError(f"budget must be at least 1, got {budget}")

    key = canonical_key(P)
    steps = [_make_step(0, P, key, with_flags)]
    seen = {key: 0}
    current = P

    for step in range(1, budget + 1):
        cones = face_fan_cones(current)
        if len(cones) > max_hull_vertices:
            logger.warning(
                f"Step {step}: {len(cones)} barycenters exceed the ceiling {max_hull_vertices}"
            )
            return Unresolved(budget, resource_abort=True), Trajectory(tuple(steps))

        image = hull([cone_barycenter(c) for c in cones])
        result = validate_fano(image.vertices)
        if isinstance(result, FailureReason):
            logger.debug(f"Step {step}: B-transform is not Fano ({result.value})")
            return StrictType(step - 1, result), Trajectory(tuple(steps), terminal=image)

        key = canonical_key(result)
        steps.append(_make_step(step, result, key, with_flags))
        if key in seen:
            t = seen[key]
            logger.debug(f"Step {step}: repeats step {t}")
            return PeriodicBInfinity(t, step - t), Trajectory(tuple(steps))
        seen[key] = step
        current = result

    return Unresolved(budget), Trajectory(tuple(steps))


@dataclass(frozen=True)
class OrbitClasses:
    """Distinct equivalence classes along a trajectory.

    Attributes:
        keys: Canonical keys of the classes.
        complete: True when the trajectory was proven periodic, so no further
            class can appear.
    """

    keys: frozenset[CanonicalKey]
    complete: bool

    def __len__(self) -> int:
        return len(self.keys)


def orbit_classes(
    P: FanoPolytope, budget: int = DEFAULT_BUDGET, include_start: bool = True
) -> OrbitClasses:
    """Equivalence classes of the iterates ``B^n(P)``.

    Args:
        P: Starting Fano polytope.
        budget: Step budget for :func:`classify`.
        include_start: Count ``n = 0`` as well as ``n >= 1``.
    """
    verdict, trajectory = classify(P, budget, with_flags=False)
    keys = trajectory.keys if include_start else trajectory.keys[1:]
    return OrbitClasses(frozenset(keys), isinstance(verdict, PeriodicBInfinity))


def _extended_counts(verdict: TypeVerdict, trajectory: Trajectory, budget: int) -> list[int]:
    counts = trajectory.vertex_counts
    if not isinstance(verdict, PeriodicBInfinity):
        return counts
    # The last step repeats step t, so the cycle is steps t .. t + k - 1.
    cycle = counts[verdict.preperiod : verdict.preperiod + verdict.period]
    extended = counts[:-1]
    while len(extended) <= budget:
        extended.extend(cycle)
    return extended[: budget + 1]


def is_pseudo_periodic(
    P: FanoPolytope,
    budget: int = DEFAULT_BUDGET,
    window: int = DEFAULT_PSEUDO_PERIODIC_WINDOW,
) -> bool:
    """Heuristic: the vertex count is constant for ``window`` steps from some step on.

    True iff some step ``j <= budget - window`` starts a run of ``window + 1``
    iterates of equal vertex count. This is finite evidence only.

    Raises:
        ValueError: Unless ``budget > window >= 2``.
    """
    if not budget > window >= 2:
        raise ValueError(f"need budget > window >= 2, got budget={budget}, window={window}")
    verdict, trajectory = classify(P, budget, with_flags=False)
    counts = _extended_counts(verdict, trajectory, budget)
    return any(
        len(set(counts[j : j + window + 1])) == 1
        for j in range(0, budget - window + 1)
        if j + window < len(counts)
    )


def exact_period(P: FanoPolytope, budget: int = DEFAULT_BUDGET) -> Optional[tuple[int, int]]:
    """Least ``(t, k)`` with ``B^{t+k}(P)`` and ``B^t(P)`` equal as vertex sets.

    Returns:
        ``(t, k)``, or None if an iterate fails to be Fano or no exact repeat
        occurs within ``budget`` steps.
    """
    seen = {P.polytope.vertex_set: 0}
    current = P
    for step in range(1, budget + 1):
        result = b_transform_fano(current)
        if isinstance(result, FailureReason):
            return None
        vertex_set = result.polytope.vertex_set
        if vertex_set in seen:
            return seen[vertex_set], step - seen[vertex_set]
        seen[vertex_set] = step
        current = result
    return None
