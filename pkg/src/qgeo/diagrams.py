"""Randomized verification of the intertwining diagrams and invariance laws.

Every identity the library is built around is checked here on seeded random
inputs: the one-qubit Moebius intertwining, the two-qubit encoding squares
for both local unitary variants, the three-way equality of conformal images
along independent computation paths, the closed-form expressions for the
transformed Schmidt and concurrence data, and the concurrence invariance
laws.  Alongside the positive checks, counterexample searches demonstrate
that the alternative operand orderings of the quaternionic Moebius action
genuinely fail to intertwine.

All randomness is derived from (seed, check index, trial index), so reports
are deterministic for a fixed seed regardless of evaluation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .quaternion import Quaternion, ZERO_NORM_SQ, _abs2, chordal_distance
from .states import (
    OneQubitState,
    Quaterbit,
    TwoQubitState,
    concurrence_term,
    haar_random_one_qubit,
    haar_random_state,
    quaternionify,
    schmidt_term,
    wootters_preconcurrence,
)
from .conformal import (
    INFINITY,
    conformal_map,
    conformal_map_one_qubit,
    embed_complex,
    schmidt_concurrence_form,
)
from .local_unitary import (
    LocalUnitary,
    QuatMat2,
    SO2Element,
    SU2Element,
    Variant,
    apply_B_quaterbit,
    apply_Bprime_quaterbit,
    apply_cb,
    apply_su2,
    quat_matrix,
    random_local_unitary,
    random_su2,
)
from .moebius import (
    MoebiusC,
    MoebiusQ,
    VariantOrder,
    apply_moebius_c,
    apply_moebius_q,
    apply_moebius_q_variant,
    moebius_from_local_unitary,
)

# Deviation above which an alternative ordering counts as a genuine failure:
# far above roundoff, far below the chordal metric's bound of 2.
WITNESS_THRESHOLD = 0.01

# Suite-level tolerance whose default leaves every check at its contract value.
DEFAULT_SUITE_TOL = 1e-10

# Rejection bound keeping the rotation angle away from the degenerate values
# where all operand orderings coincide.
_MIN_ABS_SIN = 0.1


class FailureSearch(Enum):
    """Which alternative intertwining to hunt counterexamples for."""

    LEFT_DENOMINATOR_ON_SO2XSU2 = "left_denominator_variant_on_so2xsu2"
    CANONICAL_ON_SU2XSO2 = "right_coefficient_map_on_su2xso2"


# ---------------------------------------------------------------------------
# Per-input deviation evaluators
# ---------------------------------------------------------------------------


def check_one_qubit_diagram(a: SU2Element, psi: OneQubitState) -> float:
    """Chordal gap between the Moebius image of the conformal point and the
    conformal image of the transformed state."""
    f = MoebiusC.from_su2(a)
    lhs = apply_moebius_c(f, conformal_map_one_qubit(psi))
    rhs = conformal_map_one_qubit(apply_su2(a, psi))
    return chordal_distance(embed_complex(lhs), embed_complex(rhs))


def _quaterbit_gap(x: Quaterbit, y: Quaterbit) -> float:
    return max(abs(x.q1 - y.q1), abs(x.q2 - y.q2))


def check_quadrangle(u: LocalUnitary, psi: TwoQubitState) -> float:
    """Component gap between encode-then-transform and transform-then-encode
    for an so2xsu2 element."""
    lhs = quaternionify(apply_cb(u, psi))
    rhs = apply_B_quaterbit(u, quaternionify(psi))
    return _quaterbit_gap(lhs, rhs)


def check_quadrangle_prime(u: LocalUnitary, psi: TwoQubitState) -> float:
    """Same encoding square for a su2xso2 element."""
    lhs = quaternionify(apply_cb(u, psi))
    rhs = apply_Bprime_quaterbit(u, quaternionify(psi))
    return _quaterbit_gap(lhs, rhs)


def _three_way_all(u: LocalUnitary, psi: TwoQubitState) -> tuple[float, float, float]:
    """Both chordal gaps of the three-way equality plus the closed-form gap.

    The three primary paths to a point of the extended quaternion line are:
    conformal image of the transformed amplitudes, conformal image of the
    transformed spinor, and Moebius image of the original conformal point.
    The closed-form cross-check compares the first value against the
    (S' + C'*j)/|q2'|^2 expression of the transformed state and against the
    same fraction predicted from the original state's Schmidt/concurrence
    data and the rotation angle; all three are independently coded.
    """
    qb = quaternionify(psi)
    psi2 = apply_cb(u, psi)

    v1 = conformal_map(quaternionify(psi2))
    v2 = conformal_map(apply_B_quaterbit(u, qb))
    v3 = apply_moebius_q(moebius_from_local_unitary(u), conformal_map(qb))

    w1, _ = schmidt_concurrence_form(psi2)

    s_term = schmidt_term(psi)
    c_term = concurrence_term(psi)
    n1 = _abs2(psi.alpha) + _abs2(psi.beta)
    n2 = _abs2(psi.gamma) + _abs2(psi.delta)
    c, s = math.cos(u.rot.theta), math.sin(u.rot.theta)
    den = n2 * c * c + n1 * s * s - 2.0 * s * c * s_term.real
    if den < ZERO_NORM_SQ:
        w2 = INFINITY
    else:
        num = c * c * s_term - s * s * s_term.conjugate() + s * c * (n2 - n1)
        w2 = Quaternion(num / den, c_term / den)

    first = chordal_distance(v1, v2)
    second = chordal_distance(v2, v3)
    closed = max(
        chordal_distance(v1, w1),
        chordal_distance(v1, w2),
        chordal_distance(w1, w2),
    )
    return first, second, closed


def check_three_way(u: LocalUnitary, psi: TwoQubitState) -> tuple[float, float]:
    """Chordal gaps (first equality, second equality) among the three paths."""
    first, second, _ = _three_way_all(u, psi)
    return first, second


def closed_form_gap(u: LocalUnitary, psi: TwoQubitState) -> float:
    """Largest pairwise gap among the three closed-form codings of the image."""
    return _three_way_all(u, psi)[2]


def check_second_qubit_inertness(a: SU2Element, psi: TwoQubitState) -> float:
    """Gap showing an SU(2) acting on the second qubit alone fixes the conformal image."""
    u = LocalUnitary(Variant.SO2_X_SU2, SO2Element(0.0), a)
    before = conformal_map(quaternionify(psi))
    after = conformal_map(quaternionify(apply_cb(u, psi)))
    return chordal_distance(before, after)


def concurrence_invariance_gap(u: LocalUnitary, psi: TwoQubitState) -> float:
    """Deviation of the signed complex concurrence term under an so2xsu2 element."""
    return abs(concurrence_term(apply_cb(u, psi)) - concurrence_term(psi))


def concurrence_magnitude_gap(u: LocalUnitary, psi: TwoQubitState) -> float:
    """Deviation of |concurrence term| under a su2xso2 element."""
    return abs(abs(concurrence_term(apply_cb(u, psi))) - abs(concurrence_term(psi)))


def wootters_relation_gap(psi: TwoQubitState) -> float:
    """Deviation from preconcurrence = 2 * conj(concurrence term)."""
    return abs(wootters_preconcurrence(psi) - 2.0 * concurrence_term(psi).conjugate())


def variant_failure_deviation(
    which: FailureSearch, psi: TwoQubitState, u: LocalUnitary
) -> float:
    """Chordal gap of the designated alternative intertwining on one input.

    LEFT_DENOMINATOR_ON_SO2XSU2 plays the left-denominator ordering of the
    rotation-induced matrix against the conformal image of the transformed
    spinor.  CANONICAL_ON_SU2XSO2 plays the canonical right-coefficient
    action of the matrix built from su2xso2 parameters against the conformal
    image of that variant's spinor action.
    """
    which = FailureSearch(which)
    qb = quaternionify(psi)
    x = conformal_map(qb)
    if which is FailureSearch.LEFT_DENOMINATOR_ON_SO2XSU2:
        f = moebius_from_local_unitary(u)
        lhs = apply_moebius_q_variant(f, x, VariantOrder.LEFT_DENOMINATOR)
        rhs = conformal_map(apply_B_quaterbit(u, qb))
    else:
        f = MoebiusQ(quat_matrix(u))
        lhs = apply_moebius_q(f, x)
        rhs = conformal_map(apply_Bprime_quaterbit(u, qb))
    return chordal_distance(lhs, rhs)


def left_coefficient_candidate_deviation(psi: TwoQubitState, u: LocalUnitary) -> float:
    """Gap of the left-coefficient ordering built from bare SU(2) entries on su2xso2.

    This is the one natural candidate not covered by the failure searches;
    the suite reports its deviation without asserting a contract.  (The
    rotation's right factor cancels inside the conformal image, so the
    candidate matrix carries the SU(2) entries alone.)
    """
    a, b = u.su2.a, u.su2.b
    m = QuatMat2(
        Quaternion(a, 0j),
        Quaternion(b, 0j),
        Quaternion(-b.conjugate(), 0j),
        Quaternion(a.conjugate(), 0j),
    )
    qb = quaternionify(psi)
    lhs = apply_moebius_q_variant(MoebiusQ(m), conformal_map(qb), VariantOrder.LEFT_COEFFICIENTS)
    rhs = conformal_map(apply_Bprime_quaterbit(u, qb))
    return chordal_distance(lhs, rhs)


# ---------------------------------------------------------------------------
# Serialization of inputs (for reports and re-evaluation)
# ---------------------------------------------------------------------------


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def state_doc(psi: TwoQubitState) -> list[list[float]]:
    return [_pair(psi.alpha), _pair(psi.beta), _pair(psi.gamma), _pair(psi.delta)]


def state_from_doc(doc) -> TwoQubitState:
    return TwoQubitState(*(complex(re, im) for re, im in doc))


def one_qubit_doc(psi: OneQubitState) -> list[list[float]]:
    return [_pair(psi.a1), _pair(psi.a2)]


def one_qubit_from_doc(doc) -> OneQubitState:
    (r1, i1), (r2, i2) = doc
    return OneQubitState(complex(r1, i1), complex(r2, i2))


def transform_doc(u: LocalUnitary) -> dict:
    return {
        "variant": u.variant.value,
        "theta": u.rot.theta,
        "a": _pair(u.su2.a),
        "b": _pair(u.su2.b),
    }


def transform_from_doc(doc) -> LocalUnitary:
    return LocalUnitary(
        Variant(doc["variant"]),
        SO2Element(doc["theta"]),
        SU2Element(complex(*doc["a"]), complex(*doc["b"])),
    )


def su2_doc(a: SU2Element) -> dict:
    return {"a": _pair(a.a), "b": _pair(a.b)}


def su2_from_doc(doc) -> SU2Element:
    return SU2Element(complex(*doc["a"]), complex(*doc["b"]))


# ---------------------------------------------------------------------------
# Report structures
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    trials: int
    max_deviation: float
    tolerance: float
    passed: bool
    worst_case: dict

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "trials": self.trials,
            "max_deviation": self.max_deviation,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "worst_case": self.worst_case,
        }


@dataclass(frozen=True)
class Witness:
    """A concrete (state, transform) pair on which an alternative ordering fails."""

    state: TwoQubitState
    transform: LocalUnitary
    variant_tag: str
    deviation: float

    def to_dict(self) -> dict:
        return {
            "state": state_doc(self.state),
            "transform": transform_doc(self.transform),
            "variant_tag": self.variant_tag,
            "deviation": self.deviation,
        }

    def reevaluate(self) -> float:
        return variant_failure_deviation(
            FailureSearch(self.variant_tag), self.state, self.transform
        )


@dataclass(frozen=True)
class WitnessSearchResult:
    name: str
    trials: int
    threshold: float
    witness: Witness | None

    @property
    def found(self) -> bool:
        return self.witness is not None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "trials": self.trials,
            "threshold": self.threshold,
            "found": self.found,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


@dataclass(frozen=True)
class ExploratoryResult:
    name: str
    trials: int
    max_deviation: float

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "trials": self.trials,
            "max_deviation": self.max_deviation,
        }


@dataclass(frozen=True)
class DiagramReport:
    seed: int
    trials: int
    tolerance: float
    checks: tuple[CheckResult, ...]
    witness_searches: tuple[WitnessSearchResult, ...]
    exploratory: tuple[ExploratoryResult, ...]

    @property
    def overall_pass(self) -> bool:
        return all(c.passed for c in self.checks) and all(
            w.found for w in self.witness_searches
        )

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "tolerance": self.tolerance,
            "checks": [c.to_dict() for c in self.checks],
            "witnesses": [w.to_dict() for w in self.witness_searches],
            "exploratory": [e.to_dict() for e in self.exploratory],
            "overall_pass": self.overall_pass,
        }


# ---------------------------------------------------------------------------
# Suite machinery
# ---------------------------------------------------------------------------

# Seed-space indices fixed per check group so reports are reproducible.
_IDX_ONE_QUBIT = 0
_IDX_QUADRANGLE = 1
_IDX_THREE_WAY = 2
_IDX_INERTNESS = 3
_IDX_QUADRANGLE_PRIME = 4
_IDX_CONCURRENCE = 5
_IDX_CONCURRENCE_PRIME = 6
_IDX_WOOTTERS = 7
_SEARCH_IDX = {
    FailureSearch.LEFT_DENOMINATOR_ON_SO2XSU2: 8,
    FailureSearch.CANONICAL_ON_SU2XSO2: 9,
}
_IDX_EXPLORATORY = 10


def _sample_state(seed: int, idx: int, trial: int) -> TwoQubitState:
    return haar_random_state([seed, idx, trial, 1])


def _sample_transform(variant: Variant, seed: int, idx: int, trial: int) -> LocalUnitary:
    return random_local_unitary(variant, [seed, idx, trial, 0])


def _sample_transform_rejected(
    variant: Variant, seed: int, idx: int, trial: int
) -> LocalUnitary:
    """Transform sample with |sin(theta)| bounded away from zero.

    At theta in {0, pi} the induced matrices have a single nonzero diagonal
    and all operand orderings coincide, so failure searches reject them.
    """
    rng = np.random.default_rng([seed, idx, trial, 0])
    while True:
        u = random_local_unitary(variant, rng)
        if abs(math.sin(u.rot.theta)) > _MIN_ABS_SIN:
            return u


def find_variant_failure_witness(
    which: FailureSearch,
    max_trials: int,
    seed: int,
    transform_sampler=None,
) -> Witness | None:
    """Search random inputs for a failure of the designated alternative intertwining.

    Returns the worst witness found if its deviation exceeds the
    ``WITNESS_THRESHOLD``, else None.  ``transform_sampler`` (trial index ->
    LocalUnitary) overrides the default rejection sampler, e.g. to restrict
    the search to degenerate regions where no witness exists.
    """
    if max_trials < 1:
        raise ValueError("max_trials must be at least 1")
    which = FailureSearch(which)
    idx = _SEARCH_IDX[which]
    variant = (
        Variant.SO2_X_SU2
        if which is FailureSearch.LEFT_DENOMINATOR_ON_SO2XSU2
        else Variant.SU2_X_SO2
    )
    best: Witness | None = None
    for trial in range(max_trials):
        psi = _sample_state(seed, idx, trial)
        if transform_sampler is None:
            u = _sample_transform_rejected(variant, seed, idx, trial)
        else:
            u = transform_sampler(trial)
        dev = variant_failure_deviation(which, psi, u)
        if best is None or dev > best.deviation:
            best = Witness(psi, u, which.value, dev)
    if best is not None and best.deviation > WITNESS_THRESHOLD:
        return best
    return None


def _run_group(seed, idx, trials, entries, sample, evaluate, serialize):
    """Run one trial loop, tracking per-entry maxima and worst-case inputs."""
    n = len(entries)
    max_dev = [0.0] * n
    worst: list[dict | None] = [None] * n
    for trial in range(trials):
        inputs = sample(seed, idx, trial)
        devs = evaluate(*inputs)
        for k in range(n):
            if worst[k] is None or devs[k] >= max_dev[k]:
                max_dev[k] = devs[k]
                worst[k] = serialize(*inputs)
    return max_dev, worst


def run_suite(trials: int, seed: int, tol: float = DEFAULT_SUITE_TOL) -> DiagramReport:
    """Run every check, both failure searches, and the exploratory candidate.

    ``tol`` rescales each check's pass threshold relative to its contract
    value (the default leaves the contracts untouched).  Witness searches use
    min(trials, 100) attempts; the report passes overall when every check
    meets its threshold and both searches find a witness.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    scale = tol / DEFAULT_SUITE_TOL

    checks: list[CheckResult] = []

    def add(names_tols, idx, sample, evaluate, serialize):
        entries = list(names_tols)
        max_dev, worst = _run_group(seed, idx, trials, entries, sample, evaluate, serialize)
        for (name, contract), dev, wc in zip(entries, max_dev, worst):
            tolerance = contract * scale
            checks.append(
                CheckResult(
                    name=name,
                    trials=trials,
                    max_deviation=dev,
                    tolerance=tolerance,
                    passed=dev <= tolerance,
                    worst_case=wc,
                )
            )

    add(
        [("one_qubit_intertwining", 1e-11)],
        _IDX_ONE_QUBIT,
        lambda s, i, t: (random_su2([s, i, t, 0]), haar_random_one_qubit([s, i, t, 1])),
        lambda a, psi: (check_one_qubit_diagram(a, psi),),
        lambda a, psi: {"state": one_qubit_doc(psi), "transform": su2_doc(a)},
    )
    add(
        [("quaterbit_transport_so2xsu2", 1e-12)],
        _IDX_QUADRANGLE,
        lambda s, i, t: (
            _sample_transform(Variant.SO2_X_SU2, s, i, t),
            _sample_state(s, i, t),
        ),
        lambda u, psi: (check_quadrangle(u, psi),),
        lambda u, psi: {"state": state_doc(psi), "transform": transform_doc(u)},
    )
    add(
        [
            ("three_way_first_equality", 1e-10),
            ("three_way_second_equality", 1e-10),
            ("closed_form_consistency", 1e-10),
        ],
        _IDX_THREE_WAY,
        lambda s, i, t: (
            _sample_transform(Variant.SO2_X_SU2, s, i, t),
            _sample_state(s, i, t),
        ),
        _three_way_all,
        lambda u, psi: {"state": state_doc(psi), "transform": transform_doc(u)},
    )
    add(
        [("second_qubit_inertness", 1e-11)],
        _IDX_INERTNESS,
        lambda s, i, t: (random_su2([s, i, t, 0]), _sample_state(s, i, t)),
        lambda a, psi: (check_second_qubit_inertness(a, psi),),
        lambda a, psi: {"state": state_doc(psi), "transform": su2_doc(a)},
    )
    add(
        [("quaterbit_transport_su2xso2", 1e-12)],
        _IDX_QUADRANGLE_PRIME,
        lambda s, i, t: (
            _sample_transform(Variant.SU2_X_SO2, s, i, t),
            _sample_state(s, i, t),
        ),
        lambda u, psi: (check_quadrangle_prime(u, psi),),
        lambda u, psi: {"state": state_doc(psi), "transform": transform_doc(u)},
    )
    add(
        [("concurrence_invariance_so2xsu2", 1e-12)],
        _IDX_CONCURRENCE,
        lambda s, i, t: (
            _sample_transform(Variant.SO2_X_SU2, s, i, t),
            _sample_state(s, i, t),
        ),
        lambda u, psi: (concurrence_invariance_gap(u, psi),),
        lambda u, psi: {"state": state_doc(psi), "transform": transform_doc(u)},
    )
    add(
        [("concurrence_magnitude_su2xso2", 1e-12)],
        _IDX_CONCURRENCE_PRIME,
        lambda s, i, t: (
            _sample_transform(Variant.SU2_X_SO2, s, i, t),
            _sample_state(s, i, t),
        ),
        lambda u, psi: (concurrence_magnitude_gap(u, psi),),
        lambda u, psi: {"state": state_doc(psi), "transform": transform_doc(u)},
    )
    add(
        [("wootters_preconcurrence_relation", 1e-12)],
        _IDX_WOOTTERS,
        lambda s, i, t: (_sample_state(s, i, t),),
        lambda psi: (wootters_relation_gap(psi),),
        lambda psi: {"state": state_doc(psi), "transform": None},
    )

    search_trials = min(trials, 100)
    searches = tuple(
        WitnessSearchResult(
            name=which.value,
            trials=search_trials,
            threshold=WITNESS_THRESHOLD,
            witness=find_variant_failure_witness(which, search_trials, seed),
        )
        for which in (
            FailureSearch.LEFT_DENOMINATOR_ON_SO2XSU2,
            FailureSearch.CANONICAL_ON_SU2XSO2,
        )
    )

    exp_dev = 0.0
    for trial in range(search_trials):
        psi = _sample_state(seed, _IDX_EXPLORATORY, trial)
        u = _sample_transform_rejected(Variant.SU2_X_SO2, seed, _IDX_EXPLORATORY, trial)
        exp_dev = max(exp_dev, left_coefficient_candidate_deviation(psi, u))
    exploratory = (
        ExploratoryResult(
            name="left_coefficient_variant_on_su2xso2",
            trials=search_trials,
            max_deviation=exp_dev,
        ),
    )

    return DiagramReport(
        seed=seed,
        trials=trials,
        tolerance=tol,
        checks=tuple(checks),
        witness_searches=searches,
        exploratory=exploratory,
    )


# Re-evaluation hooks: map a check name and its worst_case record back to the
# deviation, so stored reports can be independently confirmed.
_REEVALUATORS = {
    "one_qubit_intertwining": lambda wc: check_one_qubit_diagram(
        su2_from_doc(wc["transform"]), one_qubit_from_doc(wc["state"])
    ),
    "quaterbit_transport_so2xsu2": lambda wc: check_quadrangle(
        transform_from_doc(wc["transform"]), state_from_doc(wc["state"])
    ),
    "three_way_first_equality": lambda wc: check_three_way(
        transform_from_doc(wc["transform"]), state_from_doc(wc["state"])
    )[0],
    "three_way_second_equality": lambda wc: check_three_way(
        transform_from_doc(wc["transform"]), state_from_doc(wc["state"])
    )[1],
    "closed_form_consistency": lambda wc: closed_form_gap(
        transform_from_doc(wc["transform"]), state_from_doc(wc["state"])
    ),
    "second_qubit_inertness": lambda wc: check_second_qubit_inertness(
        su2_from_doc(wc["transform"]), state_from_doc(wc["state"])
    ),
    "quaterbit_transport_su2xso2": lambda wc: check_quadrangle_prime(
        transform_from_doc(wc["transform"]), state_from_doc(wc["state"])
    ),
    "concurrence_invariance_so2xsu2": lambda wc: concurrence_invariance_gap(
        transform_from_doc(wc["transform"]), state_from_doc(wc["state"])
    ),
    "concurrence_magnitude_su2xso2": lambda wc: concurrence_magnitude_gap(
        transform_from_doc(wc["transform"]), state_from_doc(wc["state"])
    ),
    "wootters_preconcurrence_relation": lambda wc: wootters_relation_gap(
        state_from_doc(wc["state"])
    ),
}


def reevaluate_check(name: str, worst_case: dict) -> float:
    """Recompute the deviation recorded for a check's worst-case inputs."""
    try:
        fn = _REEVALUATORS[name]
    except KeyError:
        raise ValueError(f"unknown check name {name!r}") from None
    return fn(worst_case)
