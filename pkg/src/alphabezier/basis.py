"""The homography-indexed rational Bernstein basis.

For a degree n and a reparametrization w of [a, b], the basis functions are

    B_i(x) = C(n, i) * w(x)**i * (1 - w(x))**(n - i),    i = 0..n

Each B_i is a rational function of degree (n, n) in x (a polynomial when the
classical linear reparametrization is selected).  The family is positive,
sums to 1, and is linearly independent; this module evaluates it together
with its derivatives, peak locations, degree-raising identities and
collocation matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ArgumentError
from .homography import HomographyMap

#: Specs above this degree are rejected at construction.
MAX_DEGREE = 60


@lru_cache(maxsize=None)
def binomial_row(n: int) -> np.ndarray:
    """C(n, 0..n) as a read-only float array; exact integers for n <= 60."""
    row = np.array([math.comb(n, i) for i in range(n + 1)], dtype=float)
    row.flags.writeable = False
    return row


def _powers(base: float, kmax: int) -> np.ndarray:
    # [1, base, base**2, ...] by repeated multiplication; keeps 0**0 == 1
    out = np.empty(kmax + 1)
    out[0] = 1.0
    for k in range(1, kmax + 1):
        out[k] = out[k - 1] * base
    return out


def peak_value(n: int, i: int) -> float:
    """Height of the unique maximum of B_i: C(n,i) * i**i * (n-i)**(n-i) / n**n.

    Independent of the reparametrization index.  Evaluated as an exact
    integer ratio (0**0 == 1), so equal indices give bit-identical values.
    """
    if not 0 <= i <= n:
        raise ArgumentError(f"index {i} outside 0..{n}")
    if n == 0:
        return 1.0
    return math.comb(n, i) * i**i * (n - i) ** (n - i) / n**n


@dataclass(frozen=True)
class MaxPoint:
    """Location and height of the unique maximum of one basis function."""

    index: int
    location: float
    value: float


@dataclass(frozen=True)
class BasisSpec:
    """A basis family: a degree plus the reparametrization of its interval.

    Degree 0 is allowed as the constant-1 convention.  Instances are
    immutable and every method is pure.
    """

    degree: int
    homography: HomographyMap

    def __post_init__(self):
        if not isinstance(self.degree, int) or isinstance(self.degree, bool):
            raise ArgumentError(f"degree must be an integer, got {self.degree!r}")
        if self.degree < 0:
            raise ArgumentError("degree must be nonnegative")
        if self.degree > MAX_DEGREE:
            raise ArgumentError(f"degree {self.degree} above supported maximum {MAX_DEGREE}")

    @property
    def a(self) -> float:
        return self.homography.a

    @property
    def b(self) -> float:
        return self.homography.b

    def raised(self) -> "BasisSpec":
        """The spec one degree higher on the same reparametrization."""
        return BasisSpec(self.degree + 1, self.homography)

    def values(self, x: float) -> np.ndarray:
        """All n+1 basis values at x, from the closed form.

        Nonnegative, summing to 1; exactly (1, 0, ..., 0) at a and
        (0, ..., 0, 1) at b.
        """
        w = self.homography.value(x)
        n = self.degree
        wp = _powers(w, n)
        vp = _powers(1.0 - w, n)
        return binomial_row(n) * wp * vp[::-1]

    def values_recursive(self, x: float) -> np.ndarray:
        """All n+1 basis values at x, built bottom-up from the two-term recursion."""
        w = self.homography.value(x)
        u = 1.0 - w
        vals = np.zeros(self.degree + 1)
        vals[0] = 1.0
        for r in range(1, self.degree + 1):
            vals[1 : r + 1] = w * vals[0:r] + u * vals[1 : r + 1]
            vals[0] = u * vals[0]
        return vals

    def derivatives(self, x: float, order: int = 1) -> np.ndarray:
        """First or second x-derivatives of all basis functions at x.

        Differentiates the closed form in w through the chain rule, so the
        result is well defined for every degree and index; terms whose
        integer coefficient vanishes are skipped rather than evaluated as
        0 to a negative power.
        """
        if order not in (1, 2):
            raise ArgumentError(f"order must be 1 or 2, got {order!r}")
        n = self.degree
        h = self.homography
        w = h.value(x)
        w1 = h.deriv1(x)
        wp = _powers(w, n)
        vp = _powers(1.0 - w, n)
        binom = binomial_row(n)
        out = np.zeros(n + 1)
        if order == 1:
            for i in range(n + 1):
                g1 = 0.0
                if i >= 1:
                    g1 += i * wp[i - 1] * vp[n - i]
                if n - i >= 1:
                    g1 -= (n - i) * wp[i] * vp[n - i - 1]
                out[i] = binom[i] * g1 * w1
            return out
        w2 = h.deriv2(x)
        for i in range(n + 1):
            g1 = 0.0
            g2 = 0.0
            if i >= 1:
                g1 += i * wp[i - 1] * vp[n - i]
            if n - i >= 1:
                g1 -= (n - i) * wp[i] * vp[n - i - 1]
            if i >= 2:
                g2 += i * (i - 1) * wp[i - 2] * vp[n - i]
            if i >= 1 and n - i >= 1:
                g2 -= 2.0 * i * (n - i) * wp[i - 1] * vp[n - i - 1]
            if n - i >= 2:
                g2 += (n - i) * (n - i - 1) * wp[i] * vp[n - i - 2]
            out[i] = binom[i] * (g2 * w1 * w1 + g1 * w2)
        return out

    def maxima(self) -> list[MaxPoint]:
        """Peak location and height of each basis function.

        The peak of B_i sits where w equals i/n; its height does not depend
        on the reparametrization index and is symmetric under i <-> n - i.
        """
        n = self.degree
        h = self.homography
        out = []
        for i in range(n + 1):
            if i == 0 or n == 0:
                x = h.a
            elif i == n:
                x = h.b
            elif h.is_classical:
                x = h.a + (i / n) * h.width
            else:
                x = h.a + i * (h.alpha - 1.0) * h.width / (n * h.alpha - i)
            out.append(MaxPoint(i, x, peak_value(n, i)))
        return out


def elevation_residual(spec: BasisSpec, x: float) -> float:
    """Largest absolute residual of the two degree-raising identities at x.

    The identities relate degree-n and degree-(n+1) values:
    (1 - w) * B_i of degree n equals (n+1-i)/(n+1) times B_i of degree n+1,
    and w * B_i equals (i+1)/(n+1) times B_{i+1} of degree n+1.
    """
    n = spec.degree
    w = spec.homography.value(x)
    lo = spec.values(x)
    hi = spec.raised().values(x)
    worst = 0.0
    for i in range(n + 1):
        worst = max(worst, abs((1.0 - w) * lo[i] - (n + 1.0 - i) / (n + 1.0) * hi[i]))
        worst = max(worst, abs(w * lo[i] - (i + 1.0) / (n + 1.0) * hi[i + 1]))
    return worst


def collocation_matrix(spec: BasisSpec, nodes) -> np.ndarray:
    """Matrix with row j holding the basis values at nodes[j].

    Rows sum to 1.  For n+1 distinct nodes the matrix is nonsingular, which
    is the finite-precision face of linear independence.  Nodes must be
    strictly increasing and lie inside the parameter interval.
    """
    xs = np.asarray(nodes, dtype=float)
    if xs.ndim != 1 or xs.size == 0:
        raise ArgumentError("nodes must be a nonempty 1-D sequence")
    if np.any(np.diff(xs) <= 0.0):
        raise ArgumentError("nodes must be strictly increasing")
    h = spec.homography
    tol = 1e-12 * h.width
    if xs[0] < h.a - tol or xs[-1] > h.b + tol:
        raise ArgumentError(f"nodes must lie inside [{h.a}, {h.b}]")
    return np.array([spec.values(x) for x in xs])


def is_nonsingular(matrix: np.ndarray, threshold: float = 1e-10) -> bool:
    """True when the smallest singular value exceeds threshold * spectral norm."""
    s = np.linalg.svd(np.asarray(matrix, dtype=float), compute_uv=False)
    return bool(s[-1] > threshold * s[0])
