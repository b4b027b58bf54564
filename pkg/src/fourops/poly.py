"""Polynomials over the shared complex scalar type, plus the pieces the
descent solver needs: Horner evaluation, the square-magnitude objective,
Taylor shifts by repeated synthetic division, a certified search radius,
and synthetic-division deflation.

Coefficients are stored in ascending order (constant term first).  The
degree-n coefficient is nonzero after construction; literal zero
coefficients at the high end are trimmed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import ComplexScalar, ZERO, complex_from_json, complex_to_json

# A shifted coefficient counts as vanished (float backend only) when its
# one_norm is at most this fraction of the largest shifted coefficient
# one_norm.  Tight enough that genuine terms of reasonably scaled inputs
# survive, loose enough that pure rounding debris does not fake a term.
REL_ZERO_EPS = 2.0**-40

__all__ = ["REL_ZERO_EPS", "Polynomial", "ShiftDecomposition"]


@dataclass(frozen=True, slots=True)
class ShiftDecomposition:
    """P rewritten around a point z0:  P(z0 + h) = base_value + h^order * quotient(h).

    The quotient's constant term is nonzero, so ``order`` is the lowest
    power of h that actually moves the value away from ``base_value``.
    """

    base_value: ComplexScalar
    order: int
    quotient: "Polynomial"

    def evaluate_at(self, h: ComplexScalar) -> ComplexScalar:
        """base_value + h^order * quotient(h), for reconstruction checks."""
        return self.base_value + h.pow_int(self.order) * self.quotient.evaluate(h)


@dataclass(frozen=True, slots=True)
class Polynomial:
    coeffs: tuple[ComplexScalar, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        while len(coeffs) > 1 and coeffs[-1].is_zero:
            coeffs = coeffs[:-1]
        if not coeffs or all(c.is_zero for c in coeffs):
            raise ValueError("the zero polynomial is not representable")
        object.__setattr__(self, "coeffs", coeffs)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_scalars(cls, values: Iterable) -> "Polynomial":
        """Build from plain numbers (taken as real coefficients) or ComplexScalar."""
        coeffs = []
        for v in values:
            if isinstance(v, ComplexScalar):
                coeffs.append(v)
            else:
                coeffs.append(ComplexScalar(v, 0))
        return cls(tuple(coeffs))

    @classmethod
    def from_roots(cls, roots: Sequence[ComplexScalar]) -> "Polynomial":
        """The monic polynomial with exactly the given roots, by expansion."""
        coeffs = [ComplexScalar(1, 0)]
        for root in roots:
            grown = [ZERO] * (len(coeffs) + 1)
            for j, c in enumerate(coeffs):
                grown[j + 1] = grown[j + 1] + c
                grown[j] = grown[j] - root * c
            coeffs = grown
        return cls(tuple(coeffs))

    # -- basic queries ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_exact(self) -> bool:
        return all(c.is_exact() for c in self.coeffs)

    def to_float(self) -> "Polynomial":
        return Polynomial(tuple(c.to_float() for c in self.coeffs))

    def coeff_one_norm(self):
        """Sum of coefficient one-norms; the natural scale of the polynomial."""
        total = self.coeffs[0].one_norm()
        for c in self.coeffs[1:]:
            total = total + c.one_norm()
        return total

    def trailing_zero_order(self) -> int:
        """Index of the first literally nonzero coefficient (0 if a0 != 0).

        Equals the multiplicity of z = 0 as a root when positive.
        """
        for j, c in enumerate(self.coeffs):
            if not c.is_zero:
                return j
        raise AssertionError("unreachable: zero polynomial is rejected at construction")

    # -- evaluation -------------------------------------------------------------

    def evaluate(self, z: ComplexScalar) -> ComplexScalar:
        """Horner evaluation from the leading coefficient down."""
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * z + c
        return acc

    def objective(self, z: ComplexScalar):
        """f(z) = P(z) * conj(P(z)), a real nonnegative scalar.

        The product's imaginary part cancels identically (also in floats,
        where both contributions round the same way), and that is asserted
        rather than silently dropped.
        """
        w = self.evaluate(z)
        prod = w * w.conj()
        assert prod.im == 0, "objective must be real"
        return prod.re

    # -- Taylor shift -------------------------------------------------------------

    def taylor_shift(self, z0: ComplexScalar) -> ShiftDecomposition:
        """Expand P around z0 by n rounds of synthetic division (Horner with
        remainders), giving P(z0 + h) = P(z0) + h^k Q(h) with Q(0) != 0.

        Exact backend: k is the first index >= 1 whose shifted coefficient
        is exactly nonzero.  Float backend: a coefficient is treated as
        vanished when its one_norm is <= REL_ZERO_EPS times the largest
        shifted coefficient one_norm, which keeps k stable when z0 sits
        near a root and low coefficients turn into rounding residue.
        """
        n = self.degree
        if n < 1:
            raise ValueError("taylor_shift requires degree >= 1")
        b = list(self.coeffs)
        for i in range(n):
            for j in range(n - 1, i - 1, -1):
                b[j] = b[j] + z0 * b[j + 1]

        if self.is_exact() and z0.is_exact():
            order = next(j for j in range(1, n + 1) if not b[j].is_zero)
        else:
            biggest = max(c.one_norm() for c in b)
            threshold = REL_ZERO_EPS * biggest
            order = next(
                (j for j in range(1, n + 1) if b[j].one_norm() > threshold),
                None,
            )
            if order is None:
                # Badly scaled input: fall back to the literal reading.
                order = next(j for j in range(1, n + 1) if not b[j].is_zero)
        return ShiftDecomposition(b[0], order, Polynomial(tuple(b[order:])))

    # -- certified outer radius -----------------------------------------------

    def growth_radius(self) -> int:
        """Smallest radius R in {1, 2, 4, ...} with a certified excess of the
        objective over f(0) everywhere outside the taxicab ball of radius R.

        For one_norm(z) = t the objective is bounded below by

            g(t) = lead^2 * t^(2n) / 2^(2n+1)
                   - sum over j < k of 2 * norm_j * norm_k * t^(j+k)

        where norm_j = one_norm(a_j).  Once g(R) > f(0) the same holds for
        every t >= R, because the subtracted terms all carry powers below
        t^(2n): g(t) >= (t/R)^(2n) * g(R).  The search doubles R from 1 and
        returns the first radius whose excess is strict.  Arithmetic is done
        in exact rationals even for float inputs, so overflow cannot spoil
        the comparison.
        """
        n = self.degree
        if n < 1:
            raise ValueError("growth_radius requires degree >= 1")
        norms = [_exact(c.one_norm()) for c in self.coeffs]
        a0 = self.coeffs[0]
        f0 = _exact(a0.re) * _exact(a0.re) + _exact(a0.im) * _exact(a0.im)
        lead_sq = norms[n] * norms[n]
        pairs = [
            (j + k, 2 * norms[j] * norms[k])
            for j in range(n + 1)
            for k in range(j + 1, n + 1)
            if norms[j] != 0 and norms[k] != 0
        ]
        radius = 1
        while True:
            t = Fraction(radius)
            bound = lead_sq * t ** (2 * n) / 2 ** (2 * n + 1)
            for power, weight in pairs:
                bound -= weight * t**power
            if bound > f0:
                return radius
            radius *= 2

    def growth_bound_at(self, t):
        """The lower-bound expression from ``growth_radius`` at one_norm = t,
        exposed so tests can check f(z) >= bound(one_norm(z)) directly."""
        n = self.degree
        norms = [_exact(c.one_norm()) for c in self.coeffs]
        t = _exact(t)
        bound = norms[n] * norms[n] * t ** (2 * n) / 2 ** (2 * n + 1)
        for j in range(n + 1):
            for k in range(j + 1, n + 1):
                bound -= 2 * norms[j] * norms[k] * t ** (j + k)
        return bound

    # -- deflation ---------------------------------------------------------------

    def deflate(self, root: ComplexScalar) -> tuple["Polynomial", ComplexScalar]:
        """Divide by (z - root) synthetically.

        Returns (quotient, remainder).  The remainder equals P(root) and is
        handed back as a residual diagnostic instead of being dropped.
        """
        n = self.degree
        if n < 1:
            raise ValueError("deflate requires degree >= 1")
        q: list = [None] * n
        q[n - 1] = self.coeffs[n]
        for j in range(n - 1, 0, -1):
            q[j - 1] = self.coeffs[j] + root * q[j]
        remainder = self.coeffs[0] + root * q[0]
        return Polynomial(tuple(q)), remainder

    # -- serialization --------------------------------------------------------------

    def to_json(self) -> dict:
        return {"coeffs": [complex_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, payload) -> "Polynomial":
        if not isinstance(payload, dict) or "coeffs" not in payload:
            raise ValueError('polynomial JSON must be an object with a "coeffs" list')
        coeffs = payload["coeffs"]
        if not isinstance(coeffs, list) or not coeffs:
            raise ValueError('"coeffs" must be a non-empty list of [re, im] pairs')
        return cls(tuple(complex_from_json(c) for c in coeffs))


def _exact(value) -> Fraction:
    """Floats are binary rationals, so this conversion is lossless."""
    return value if isinstance(value, Fraction) else Fraction(value)
