"""Local unitary subgroups of Sp(2), their complex and quaternionic actions.

Two one-parameter families are covered: rotation-on-first-qubit with SU(2) on
the second ("so2xsu2"), and SU(2)-on-first with rotation on the second
("su2xso2").  Each has a 4x4 complex form acting on amplitudes and an
equivalent quaternionic spinor action; the module also provides the
membership tests that characterize Sp(2) in both the quaternionic and the
complexified pictures.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .quaternion import Quaternion
from .states import NORMALIZATION_TOL, TwoQubitState, OneQubitState, Quaterbit, _abs2


class Variant(str, Enum):
    """Which tensor factor carries the rotation and which the SU(2) element."""

    SO2_X_SU2 = "so2xsu2"
    SU2_X_SO2 = "su2xso2"


@dataclass(frozen=True)
class SU2Element:
    """SU(2) element with matrix rows (a, b) and (-conj(b), conj(a))."""

    a: complex
    b: complex

    def __post_init__(self):
        a = complex(self.a)
        b = complex(self.b)
        if not (cmath.isfinite(a) and cmath.isfinite(b)):
            raise ValueError("SU(2) parameters must be finite")
        if abs(_abs2(a) + _abs2(b) - 1.0) > NORMALIZATION_TOL:
            raise ValueError(f"|a|^2 + |b|^2 must be 1, got {_abs2(a) + _abs2(b)!r}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def normalized(cls, a: complex, b: complex) -> SU2Element:
        n = math.sqrt(_abs2(complex(a)) + _abs2(complex(b)))
        if n < 1e-12:
            raise ZeroDivisionError("cannot normalize zero SU(2) parameters")
        return cls(a / n, b / n)

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [-self.b.conjugate(), self.a.conjugate()]])


@dataclass(frozen=True)
class SO2Element:
    """Plane rotation by theta, matrix ((cos, sin), (-sin, cos))."""

    theta: float

    def __post_init__(self):
        t = float(self.theta)
        if not math.isfinite(t):
            raise ValueError("rotation angle must be finite")
        object.__setattr__(self, "theta", t)

    @property
    def matrix(self) -> np.ndarray:
        c, s = math.cos(self.theta), math.sin(self.theta)
        return np.array([[c, s], [-s, c]])


@dataclass(frozen=True)
class LocalUnitary:
    """A separable two-qubit unitary, parameterized by (theta, a, b) and a variant."""

    variant: Variant
    rot: SO2Element
    su2: SU2Element

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))


def _require_variant(u: LocalUnitary, variant: Variant, op: str) -> None:
    if u.variant is not variant:
        raise ValueError(f"{op} requires variant {variant.value!r}, got {u.variant.value!r}")


def _kron2(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two 2x2 matrices (np.kron, minus its overhead)."""
    out = np.empty((4, 4), dtype=complex)
    out[0:2, 0:2] = a[0, 0] * b
    out[0:2, 2:4] = a[0, 1] * b
    out[2:4, 0:2] = a[1, 0] * b
    out[2:4, 2:4] = a[1, 1] * b
    return out


def cb_matrix(u: LocalUnitary) -> np.ndarray:
    """4x4 complex form R(theta) (x) SU(2) of an so2xsu2 element."""
    _require_variant(u, Variant.SO2_X_SU2, "cb_matrix")
    return _kron2(u.rot.matrix, u.su2.matrix)


def cbprime_matrix(u: LocalUnitary) -> np.ndarray:
    """4x4 complex form SU(2) (x) R(theta) of a su2xso2 element."""
    _require_variant(u, Variant.SU2_X_SO2, "cbprime_matrix")
    return _kron2(u.su2.matrix, u.rot.matrix)


def complex_form(u: LocalUnitary) -> np.ndarray:
    """The 4x4 complex form of either variant."""
    if u.variant is Variant.SO2_X_SU2:
        return cb_matrix(u)
    return cbprime_matrix(u)


def apply_cb(u: LocalUnitary, psi: TwoQubitState) -> TwoQubitState:
    """Apply the 4x4 complex form to the amplitude vector."""
    return TwoQubitState.from_vector(complex_form(u) @ psi.amplitudes)


def apply_cbprime(u: LocalUnitary, psi: TwoQubitState) -> TwoQubitState:
    """Apply the SU(2) (x) R(theta) complex form (su2xso2 only)."""
    _require_variant(u, Variant.SU2_X_SO2, "apply_cbprime")
    return TwoQubitState.from_vector(cbprime_matrix(u) @ psi.amplitudes)


def apply_su2(a: SU2Element, psi: OneQubitState) -> OneQubitState:
    """One-qubit action of an SU(2) element on the amplitude pair."""
    v = a.matrix @ np.array([psi.a1, psi.a2])
    return OneQubitState(v[0], v[1])


def apply_local_pair(a_prime: np.ndarray, a: SU2Element, psi: TwoQubitState) -> TwoQubitState:
    """Apply A' (x) A via the matrix sandwich A' Psi A^T on the amplitude matrix."""
    m = np.asarray(a_prime, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"a_prime must be a 2x2 matrix, got shape {m.shape}")
    psi_mat = np.array([[psi.alpha, psi.beta], [psi.gamma, psi.delta]])
    out = m @ psi_mat @ a.matrix.T
    return TwoQubitState(out[0, 0], out[0, 1], out[1, 0], out[1, 1])


def apply_B_quaterbit(u: LocalUnitary, qb: Quaterbit) -> Quaterbit:
    """Spinor action of an so2xsu2 element: rotate, then right-multiply.

    The rotation acts real-linearly on (q1, q2) from the left and the unit
    quaternion (a - conj(b)*j) multiplies each component from the right.
    """
    _require_variant(u, Variant.SO2_X_SU2, "apply_B_quaterbit")
    c, s = math.cos(u.rot.theta), math.sin(u.rot.theta)
    right = Quaternion(u.su2.a, -u.su2.b.conjugate())
    return Quaterbit((c * qb.q1 + s * qb.q2) * right, (-s * qb.q1 + c * qb.q2) * right)


def apply_Bprime_quaterbit(u: LocalUnitary, qb: Quaterbit) -> Quaterbit:
    """Spinor action of a su2xso2 element: complex left action, then right factor.

    The SU(2) entries multiply the quaternion components from the left as
    complex scalars, then both components are right-multiplied by the unit
    quaternion (cos(theta) - sin(theta)*j).
    """
    _require_variant(u, Variant.SU2_X_SO2, "apply_Bprime_quaterbit")
    a, b = u.su2.a, u.su2.b
    c, s = math.cos(u.rot.theta), math.sin(u.rot.theta)
    right = Quaternion(complex(c), complex(-s))
    return Quaterbit(
        (a * qb.q1 + b * qb.q2) * right,
        ((-b.conjugate()) * qb.q1 + a.conjugate() * qb.q2) * right,
    )


@dataclass(frozen=True)
class QuatMat2:
    """2x2 matrix with quaternion entries."""

    m11: Quaternion
    m12: Quaternion
    m21: Quaternion
    m22: Quaternion

    @classmethod
    def identity(cls) -> QuatMat2:
        one = Quaternion(1 + 0j, 0j)
        zero = Quaternion(0j, 0j)
        return cls(one, zero, zero, one)

    def __matmul__(self, other: QuatMat2) -> QuatMat2:
        if not isinstance(other, QuatMat2):
            return NotImplemented
        return QuatMat2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def __neg__(self) -> QuatMat2:
        return QuatMat2(-self.m11, -self.m12, -self.m21, -self.m22)

    def dagger(self) -> QuatMat2:
        """Conjugate transpose: entry (i, j) becomes conj(m_ji)."""
        return QuatMat2(
            self.m11.conjugate(),
            self.m21.conjugate(),
            self.m12.conjugate(),
            self.m22.conjugate(),
        )

    def entries(self) -> tuple[Quaternion, Quaternion, Quaternion, Quaternion]:
        return (self.m11, self.m12, self.m21, self.m22)

    def scaled_right(self, s: Quaternion) -> QuatMat2:
        """Multiply every entry by s on the right."""
        return QuatMat2(self.m11 * s, self.m12 * s, self.m21 * s, self.m22 * s)


def quat_matrix(u: LocalUnitary) -> QuatMat2:
    """Quaternionic 2x2 matrix of a local unitary.

    so2xsu2 elements have entries R(theta)_ij * (a - conj(b)*j); su2xso2
    elements have entries A_ij * (cos(theta) - sin(theta)*j) with A the SU(2)
    matrix and the complex entry acting as a left factor.
    """
    c, s = math.cos(u.rot.theta), math.sin(u.rot.theta)
    a, b = u.su2.a, u.su2.b
    if u.variant is Variant.SO2_X_SU2:
        f = Quaternion(a, -b.conjugate())
        return QuatMat2(c * f, s * f, -s * f, c * f)
    f = Quaternion(complex(c), complex(-s))
    return QuatMat2(a * f, b * f, (-b.conjugate()) * f, a.conjugate() * f)


_EPSILON = np.array([[0.0, -1.0], [1.0, 0.0]])
J_METRIC = np.kron(np.eye(2), _EPSILON)
J_PRIME = np.kron(_EPSILON, np.eye(2))


def sp2_check_quaternionic(m: QuatMat2, tol: float) -> bool:
    """Membership test M^dagger M = I, entry-wise within tol."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    d = m.dagger() @ m
    ident = QuatMat2.identity()
    return all(abs(x - y) < tol for x, y in zip(d.entries(), ident.entries()))


def sp2_check_complex(u: np.ndarray, tol: float) -> bool:
    """Membership test in the 4x4 picture: unitarity plus U J U^T = J."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    u = np.asarray(u, dtype=complex)
    unitary = np.max(np.abs(u.conjugate().T @ u - np.eye(4))) < tol
    preserves = np.max(np.abs(u @ J_METRIC @ u.T - J_METRIC)) < tol
    return bool(unitary and preserves)


def complexify(m: QuatMat2) -> np.ndarray:
    """Replace each entry z1 + z2*j by the 2x2 block ((z1, -z2), (conj(z2), conj(z1))).

    This is the injective algebra map from quaternionic to complex matrices:
    it preserves sums, products, and conjugate transposes, sends the
    quaternion scalar matrix diag(j, j) to the metric J, and its image is
    exactly the set of U with J U J^-1 = conj(U).
    """
    out = np.zeros((4, 4), dtype=complex)
    for i, row in enumerate(((m.m11, m.m12), (m.m21, m.m22))):
        for j, q in enumerate(row):
            out[2 * i, 2 * j] = q.z1
            out[2 * i, 2 * j + 1] = -q.z2
            out[2 * i + 1, 2 * j] = q.z2.conjugate()
            out[2 * i + 1, 2 * j + 1] = q.z1.conjugate()
    return out


def complexify_alt(m: QuatMat2) -> np.ndarray:
    """Alternative complexification with the z1 and z2 parts gathered in 2x2 blocks.

    The 4x4 result is ((Z1, -conj(Z2)), (Z2, conj(Z1))) where (Z1)_ij and
    (Z2)_ij collect the complex parts of the entries.  It sends diag(j, j)
    to J' = epsilon (x) I, and images of su2xso2 elements satisfy the
    congruence U^T J' U = J'.
    """
    z1 = np.array([[m.m11.z1, m.m12.z1], [m.m21.z1, m.m22.z1]])
    z2 = np.array([[m.m11.z2, m.m12.z2], [m.m21.z2, m.m22.z2]])
    return np.block([[z1, -z2.conjugate()], [z2, z1.conjugate()]])


def is_quaternionic_complex_matrix(u: np.ndarray, tol: float) -> bool:
    """True when J U J^-1 = conj(U) within tol, i.e. U complexifies a quaternion matrix."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    u = np.asarray(u, dtype=complex)
    # J^2 = -I, so J^-1 = -J.
    return bool(np.max(np.abs(J_METRIC @ u @ (-J_METRIC) - u.conjugate())) < tol)


def random_local_unitary(variant: Variant, seed) -> LocalUnitary:
    """Random element with theta uniform on [0, 2*pi) and (a, b) Haar on SU(2)."""
    rng = np.random.default_rng(seed)
    theta = rng.uniform(0.0, 2.0 * math.pi)
    g = rng.standard_normal(4)
    while g[0] ** 2 + g[1] ** 2 + g[2] ** 2 + g[3] ** 2 < 1e-24:
        g = rng.standard_normal(4)
    n = math.sqrt(g[0] ** 2 + g[1] ** 2 + g[2] ** 2 + g[3] ** 2)
    return LocalUnitary(
        Variant(variant),
        SO2Element(theta),
        SU2Element(complex(g[0], g[1]) / n, complex(g[2], g[3]) / n),
    )


def random_su2(seed) -> SU2Element:
    """Haar-random SU(2) element from a normalized complex Gaussian pair."""
    return random_local_unitary(Variant.SO2_X_SU2, seed).su2
