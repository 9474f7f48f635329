"""Strictly increasing homographic reparametrizations of an interval.

Each map sends [a, b] onto [0, 1] with value 0 at a and 1 at b, and is
selected by a single real index ``alpha`` with alpha < 0 or alpha > 1:

    w(x) = alpha * (x - a) / (x + (alpha - 1) * b - alpha * a)

``INFINITY`` (either sign of ``math.inf``) selects the limiting linear map
w(x) = (x - a) / (b - a).  The module also provides the two split
reparametrizations that carry [a, b] onto the left or right piece of a
split at an interior point c; they are the parameter maps behind curve
subdivision.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import ArgumentError, DomainError

#: Index of the limiting linear reparametrization.
INFINITY = math.inf

#: Finite indices closer than this to the forbidden band [0, 1] are rejected,
#: because the denominator degenerates as alpha approaches 0 or 1.
ALPHA_MARGIN = 1e-9

#: Arguments within DOMAIN_RTOL * (b - a) of the interval are clamped onto it;
#: anything further out raises DomainError.  Subdivision recursion accumulates
#: roundoff of this order.
DOMAIN_RTOL = 1e-12


class Side(enum.Enum):
    """Which piece of a split interval a reparametrization targets."""

    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class HomographyMap:
    """Increasing homography from [a, b] onto [0, 1].

    ``alpha`` must be negative, greater than 1, or ``INFINITY``.  Instances
    are immutable and all methods are pure, so a map may be shared freely
    between threads.
    """

    a: float
    b: float
    alpha: float

    def __post_init__(self):
        a = float(self.a)
        b = float(self.b)
        alpha = float(self.alpha)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise ArgumentError("interval endpoints must be finite")
        if not a < b:
            raise ArgumentError(f"interval start {a} must be below end {b}")
        if math.isnan(alpha):
            raise ArgumentError("index must not be NaN")
        if math.isfinite(alpha) and not (alpha <= -ALPHA_MARGIN or alpha >= 1.0 + ALPHA_MARGIN):
            raise ArgumentError(
                f"index {alpha} invalid: need alpha <= -{ALPHA_MARGIN} or alpha >= 1 + {ALPHA_MARGIN}"
            )
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "alpha", alpha)

    @property
    def is_classical(self) -> bool:
        """True for the limiting linear reparametrization."""
        return math.isinf(self.alpha)

    @property
    def width(self) -> float:
        return self.b - self.a

    def _clamped(self, x: float) -> float:
        tol = DOMAIN_RTOL * self.width
        if x < self.a - tol or x > self.b + tol:
            raise DomainError(f"x={x!r} outside [{self.a}, {self.b}]")
        return min(max(x, self.a), self.b)

    def _denominator(self, x: float) -> float:
        return x + (self.alpha - 1.0) * self.b - self.alpha * self.a

    def value(self, x: float) -> float:
        """Map x in [a, b] into [0, 1]; exactly 0 at a and exactly 1 at b."""
        x = self._clamped(x)
        if x == self.a:
            return 0.0
        if x == self.b:
            return 1.0
        if self.is_classical:
            return (x - self.a) / self.width
        return self.alpha * (x - self.a) / self._denominator(x)

    __call__ = value

    def inverse(self, w: float) -> float:
        """Closed-form inverse: the x in [a, b] with value(x) = w."""
        if w < -DOMAIN_RTOL or w > 1.0 + DOMAIN_RTOL:
            raise DomainError(f"w={w!r} outside [0, 1]")
        w = min(max(w, 0.0), 1.0)
        if w == 0.0:
            return self.a
        if w == 1.0:
            return self.b
        if self.is_classical:
            return self.a + w * self.width
        return self.a + w * (self.alpha - 1.0) * self.width / (self.alpha - w)

    def deriv1(self, x: float) -> float:
        """First derivative of value at x; strictly positive on [a, b]."""
        x = self._clamped(x)
        if self.is_classical:
            return 1.0 / self.width
        d = self._denominator(x)
        return self.alpha * (self.alpha - 1.0) * self.width / (d * d)

    def deriv2(self, x: float) -> float:
        """Second derivative of value at x; identically 0 in the classical case."""
        x = self._clamped(x)
        if self.is_classical:
            return 0.0
        d = self._denominator(x)
        return -2.0 * self.alpha * (self.alpha - 1.0) * self.width / (d * d * d)

    def split_left(self, c: float) -> SegmentReparam:
        """Bijection of [a, b] onto [a, c] that multiplies this map by value(c)."""
        return SegmentReparam(self, c, Side.LEFT)

    def split_right(self, c: float) -> SegmentReparam:
        """Bijection of [a, b] onto [c, b], the mirror of :meth:`split_left`."""
        return SegmentReparam(self, c, Side.RIGHT)


@dataclass(frozen=True)
class SegmentReparam:
    """Increasing bijection of [a, b] onto one piece of a split at c.

    The LEFT map u satisfies f(u(t)) = f(c) * f(t) and carries [a, b] onto
    [a, c]; the RIGHT map v satisfies f(v(t)) = 1 - (1 - f(c)) * (1 - f(t))
    and carries [a, b] onto [c, b], where f is the parent homography.
    """

    parent: HomographyMap
    c: float
    side: Side

    def __post_init__(self):
        c = float(self.c)
        if not self.parent.a < c < self.parent.b:
            raise DomainError(f"split point {c} must lie strictly inside "
                              f"({self.parent.a}, {self.parent.b})")
        object.__setattr__(self, "c", c)

    def value(self, t: float) -> float:
        f = self.parent
        t = f._clamped(t)
        if self.side is Side.LEFT:
            if t == f.a:
                return f.a
            if t == f.b:
                return self.c
            return f.inverse(f.value(self.c) * f.value(t))
        if t == f.a:
            return self.c
        if t == f.b:
            return f.b
        return f.inverse(1.0 - (1.0 - f.value(self.c)) * (1.0 - f.value(t)))

    __call__ = value
