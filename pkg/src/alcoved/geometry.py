"""Alcoves, central points and reduction into the fundamental alcove.

An alcove is represented primarily by its central point: the unique
point of the shrunken coweight lattice inside it.  Central points are
stored as integer omega-vectors ``y`` with the implicit denominator
``h_star``, so all alcove arithmetic stays in integers.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import _linalg
from .errors import DefectError, UserInputError
from .rootsys import RootSystemData, pairing, rho

REDUCTION_STEP_GUARD = 10**6


@dataclass(frozen=True)
class Alcove:
    """Integer vector ``m`` indexed like ``rs.positive_roots``."""

    rs: RootSystemData
    m: tuple


@dataclass(frozen=True)
class CentralPoint:
    """The point ``y / h_star`` in omega-coordinates.

    Valid central points have ``pairing(y, a) % h_star != 0`` for every
    positive root ``a``; construction rejects anything else.
    """

    rs: RootSystemData
    y: tuple

    def __post_init__(self):
        h = self.rs.h_star
        for root in self.rs.positive_roots:
            if pairing(self.y, root) % h == 0:
                raise UserInputError(
                    f"{self.y}/{h} lies on the hyperplane of root {root}"
                )

    def omega_point(self) -> tuple:
        """Exact rational omega-coordinates of the point."""
        h = self.rs.h_star
        return tuple(Fraction(v, h) for v in self.y)


@dataclass(frozen=True)
class AffineMap:
    """lambda -> linear . lambda + translation, on omega-coordinates."""

    linear: tuple
    translation: tuple

    @staticmethod
    def identity_map(rank: int) -> "AffineMap":
        return AffineMap(_linalg.identity(rank), (Fraction(0),) * rank)

    def apply(self, point) -> tuple:
        moved = _linalg.mat_vec(self.linear, tuple(point))
        return tuple(a + b for a, b in zip(moved, self.translation))

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self after other."""
        linear = _linalg.mat_mul(self.linear, other.linear)
        translation = tuple(
            a + b
            for a, b in zip(
                _linalg.mat_vec(self.linear, other.translation), self.translation
            )
        )
        return AffineMap(linear, translation)

    def inverse(self) -> "AffineMap":
        inv = _linalg.mat_inv(self.linear)
        return AffineMap(
            inv, tuple(-x for x in _linalg.mat_vec(inv, self.translation))
        )


def fundamental_central_point(rs: RootSystemData) -> CentralPoint:
    """rho / h_star, the central point of the fundamental alcove."""
    return CentralPoint(rs, rho(rs))


def alcove_of(point: CentralPoint) -> Alcove:
    """The m-vector of the alcove containing the central point."""
    h = point.rs.h_star
    m = tuple(pairing(point.y, root) // h for root in point.rs.positive_roots)
    return Alcove(point.rs, m)


def weyl_alcove(w) -> CentralPoint:
    """Central point of w(A_o)."""
    y = w.act_on_coweight(rho(w.rs))
    return CentralPoint(w.rs, tuple(int(v) for v in y))


def _reflect_central(point: CentralPoint, root, k: int) -> CentralPoint:
    """Reflect in the hyperplane (lambda, root) = k; exact on y-coordinates."""
    rs = point.rs
    h = rs.h_star
    covector = rs.coroot_covector(root)
    excess = pairing(point.y, root) - k * h
    y = tuple(v - excess * c for v, c in zip(point.y, covector))
    out = []
    for v in y:
        if v.denominator != 1:
            raise DefectError("reflection left the shrunken coweight lattice")
        out.append(int(v))
    return CentralPoint(rs, tuple(out))


def neighbors(point: CentralPoint) -> list:
    """The r+1 central points of the alcoves sharing a facet with this one.

    Candidates are the reflections in the two bounding hyperplanes of
    every positive root; those differing from the current m-vector in
    exactly one coordinate are facet neighbors.
    """
    rs = point.rs
    base = alcove_of(point).m
    found = []
    seen = set()
    for idx, root in enumerate(rs.positive_roots):
        for k in (base[idx], base[idx] + 1):
            candidate = _reflect_central(point, root, k)
            m = alcove_of(candidate).m
            diffs = [i for i in range(len(m)) if m[i] != base[i]]
            if diffs == [idx] and abs(m[idx] - base[idx]) == 1:
                if candidate.y not in seen:
                    seen.add(candidate.y)
                    found.append(candidate)
    if len(found) != rs.rank + 1:
        raise DefectError(
            f"alcove {point.y} has {len(found)} facet neighbors, "
            f"expected {rs.rank + 1}"
        )
    return found


def reduce_to_fundamental(rs: RootSystemData, point) -> tuple:
    """Affine map sigma and image with sigma(point) in the closed A_o.

    sigma is a composition of the simple reflections s_1..s_r and the
    affine reflection in (lambda, theta) = 1; the lowest-index violated
    wall is applied at each step, which terminates for every input.
    """
    rank = rs.rank
    p = tuple(Fraction(x) for x in point)
    if len(p) != rank:
        raise UserInputError("point has wrong dimension")
    sigma = AffineMap.identity_map(rank)
    theta_cov = rs.theta_covector
    zero = (Fraction(0),) * rank
    for _ in range(REDUCTION_STEP_GUARD):
        violated = None
        for i in range(rank):
            if p[i] < 0:
                violated = i
                break
        if violated is not None:
            i = violated
            covector = tuple(rs.cartan[j][i] for j in range(rank))
            linear = tuple(
                tuple(
                    (1 if a == b else 0) - (covector[a] if b == i else 0)
                    for b in range(rank)
                )
                for a in range(rank)
            )
            step = AffineMap(linear, zero)
        else:
            excess = pairing(p, rs.theta) - 1
            if excess <= 0:
                return sigma, p
            linear = tuple(
                tuple(
                    Fraction(1 if a == b else 0) - theta_cov[a] * rs.theta[b]
                    for b in range(rank)
                )
                for a in range(rank)
            )
            step = AffineMap(linear, theta_cov)
        p = step.apply(p)
        sigma = step.compose(sigma)
    raise DefectError("reduction to the fundamental alcove did not terminate")
