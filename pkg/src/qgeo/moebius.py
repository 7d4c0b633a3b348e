"""Fractional-linear (Moebius) actions on the extended complex plane and quaternion line.

Over the quaternions the order of every product matters, so one matrix
induces several inequivalent actions.  The canonical one used throughout,
``apply_moebius_q``, multiplies coefficients on the right and inverts the
denominator on the right:

    F_M(q) = (q*m11 + m12) * (q*m21 + m22)**-1

with F_M(INFINITY) = m11 * m21**-1 and a zero denominator mapping to
INFINITY.  This is the unique ordering under which a common right factor of
the matrix entries cancels, which is what makes the rotation-type local
unitaries act through it.  The two alternative orderings are available
behind an explicit selector for counterexample searches.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .quaternion import (
    INFINITY,
    ExtendedQuaternion,
    Quaternion,
    ZERO_NORM_SQ,
    _abs2,
    right_quotient,
)
from .conformal import ExtendedComplex
from .local_unitary import LocalUnitary, QuatMat2, SU2Element, Variant, _require_variant, complexify

# Invertibility threshold on the determinant of the complexified matrix.
DET_TOL = 1e-18


class DegenerateMapError(ZeroDivisionError):
    """Numerator and denominator vanished together; the map is ill-conditioned here."""


class VariantOrder(Enum):
    """Alternative operand orderings for the quaternionic fractional-linear action."""

    LEFT_DENOMINATOR = "left_denominator"
    LEFT_COEFFICIENTS = "left_coefficients"


@dataclass(frozen=True)
class MoebiusC:
    """Complex Moebius map z -> (a z + b) / (c z + d) with ad - bc != 0."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        vals = [complex(v) for v in (self.a, self.b, self.c, self.d)]
        if not all(cmath.isfinite(v) for v in vals):
            raise ValueError("Moebius coefficients must be finite")
        det = vals[0] * vals[3] - vals[1] * vals[2]
        if _abs2(det) < ZERO_NORM_SQ:
            raise ValueError(f"degenerate Moebius matrix: ad - bc = {det!r}")
        for name, v in zip("abcd", vals):
            object.__setattr__(self, name, v)

    @classmethod
    def from_su2(cls, u: SU2Element) -> MoebiusC:
        return cls(u.a, u.b, -u.b.conjugate(), u.a.conjugate())


def apply_moebius_c(f: MoebiusC, z: ExtendedComplex) -> ExtendedComplex:
    """Evaluate a complex Moebius map with the standard infinity conventions."""
    if z is INFINITY:
        if _abs2(f.c) < ZERO_NORM_SQ:
            return INFINITY
        return f.a / f.c
    z = complex(z)
    den = f.c * z + f.d
    if _abs2(den) < ZERO_NORM_SQ:
        return INFINITY
    return (f.a * z + f.b) / den


@dataclass(frozen=True)
class MoebiusQ:
    """Quaternionic Moebius map, backed by an invertible 2x2 quaternion matrix."""

    m: QuatMat2

    def __post_init__(self):
        det = np.linalg.det(complexify(self.m))
        if abs(det) < DET_TOL:
            raise ValueError(f"matrix is not invertible: complexified determinant {det!r}")

    @classmethod
    def identity(cls) -> MoebiusQ:
        return cls(QuatMat2.identity())

    @classmethod
    def from_entries(
        cls, m11: Quaternion, m12: Quaternion, m21: Quaternion, m22: Quaternion
    ) -> MoebiusQ:
        return cls(QuatMat2(m11, m12, m21, m22))


def apply_moebius_q(f: MoebiusQ, q: ExtendedQuaternion) -> ExtendedQuaternion:
    """Canonical action (q*m11 + m12) * (q*m21 + m22)**-1 on the extended line."""
    m = f.m
    if q is INFINITY:
        return right_quotient(m.m11, m.m21)
    num = q * m.m11 + m.m12
    den = q * m.m21 + m.m22
    if den.is_zero():
        if num.is_zero():
            raise DegenerateMapError("numerator and denominator vanished simultaneously")
        return INFINITY
    return num * den.inverse()


def apply_moebius_q_variant(
    f: MoebiusQ, q: ExtendedQuaternion, which: VariantOrder
) -> ExtendedQuaternion:
    """Evaluate one of the alternative operand orderings.

    LEFT_DENOMINATOR:   (q*m21 + m22)**-1 * (q*m11 + m12),  infinity -> m21**-1 * m11
    LEFT_COEFFICIENTS:  (m11*q + m12) * (m21*q + m22)**-1,  infinity -> m11 * m21**-1

    The infinity conventions follow the factor order of each formula; a zero
    denominator maps to INFINITY as in the canonical action.
    """
    m = f.m
    which = VariantOrder(which)
    if which is VariantOrder.LEFT_DENOMINATOR:
        if q is INFINITY:
            if m.m21.is_zero():
                return INFINITY
            return m.m21.inverse() * m.m11
        num = q * m.m11 + m.m12
        den = q * m.m21 + m.m22
        if den.is_zero():
            if num.is_zero():
                raise DegenerateMapError("numerator and denominator vanished simultaneously")
            return INFINITY
        return den.inverse() * num
    if q is INFINITY:
        return right_quotient(m.m11, m.m21)
    num = m.m11 * q + m.m12
    den = m.m21 * q + m.m22
    if den.is_zero():
        if num.is_zero():
            raise DegenerateMapError("numerator and denominator vanished simultaneously")
        return INFINITY
    return num * den.inverse()


def compose(f: MoebiusQ, g: MoebiusQ) -> MoebiusQ:
    """Matrix product of the underlying quaternion matrices.

    On matrices of the form (real 2x2) * (common right factor), which covers
    every map produced by :func:`moebius_from_local_unitary`, the product
    realizes functional composition of the canonical actions: applying the
    result equals applying ``g`` then ``f``.  Genuinely noncommuting entries
    admit no such law at all, since the composite of two canonical actions
    involves a value-dependent conjugation and is no longer of the same
    form; composing q -> q*i with q -> q*j yields q -> q*(i*j) while any
    matrix product can only produce q -> q*(j*i) or q -> q*(i*j) uniformly.
    """
    return MoebiusQ(f.m @ g.m)


def moebius_from_local_unitary(u: LocalUnitary) -> MoebiusQ:
    """The Moebius map intertwined with an so2xsu2 local unitary by the conformal map.

    The matrix entries are R(theta)_ij * (a - b*j).  Under the canonical
    action the right factor (a - b*j) cancels, so the induced map on the
    extended quaternion line depends on theta alone.
    """
    _require_variant(u, Variant.SO2_X_SU2, "moebius_from_local_unitary")
    c, s = math.cos(u.rot.theta), math.sin(u.rot.theta)
    factor = Quaternion(u.su2.a, -u.su2.b)
    return MoebiusQ(QuatMat2(c * factor, s * factor, -s * factor, c * factor))
