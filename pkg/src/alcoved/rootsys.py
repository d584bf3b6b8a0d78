"""Static data of an irreducible crystallographic root system.

Coordinate conventions used throughout the package:

* roots are integer vectors of coefficients in the simple-root basis;
* coweights are vectors in the fundamental-coweight basis (the dual
  basis to the simple roots), so that the pairing of a coweight ``y``
  with a root ``c`` is the plain dot product ``sum(y[i] * c[i])``.

No ambient Euclidean realization is ever needed here; types A and C get
concrete coordinate models in :mod:`alcoved.weyl` for cross-checking
only.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod

from . import _linalg
from .errors import DefectError, UserInputError

#: valid rank ranges per type letter
_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


def _positive_root_count(type_label: str, rank: int) -> int:
    n = rank
    if type_label == "A":
        return n * (n + 1) // 2
    if type_label in ("B", "C"):
        return n * n
    if type_label == "D":
        return n * (n - 1)
    if type_label == "E":
        return {6: 36, 7: 63, 8: 120}[n]
    return 24 if type_label == "F" else 6


@dataclass(frozen=True)
class RootSystemData:
    """Immutable tables for one irreducible root system.

    ``cartan[i][j]`` is the pairing of the i-th simple root with the
    j-th simple coroot.  ``marks`` are the coefficients of the highest
    root ``theta`` in the simple roots; ``h_star`` is ``1 + sum(marks)``
    and ``index_of_connection`` is ``|det(cartan)|``.
    """

    type_label: str
    rank: int
    cartan: tuple
    symmetrizer: tuple
    positive_roots: tuple
    theta: tuple
    marks: tuple
    h_star: int
    index_of_connection: int
    theta_covector: tuple
    cartan_inverse: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "_root_index", {root: i for i, root in enumerate(self.positive_roots)}
        )

    @property
    def simple_roots(self) -> tuple:
        r = self.rank
        return tuple(
            tuple(1 if i == j else 0 for j in range(r)) for i in range(r)
        )

    def root_index(self, root) -> int:
        try:
            return self._root_index[tuple(root)]
        except KeyError:
            raise UserInputError(f"{root} is not a positive root of {self}") from None

    def is_positive_root(self, vec) -> bool:
        return tuple(vec) in self._root_index

    def coroot_covector(self, root) -> tuple:
        """Fundamental-coweight coordinates of the coroot of ``root``.

        For the coroot of a root ``a`` these are ``2(a, b_j)/(a, a)``
        over the simple roots ``b_j``, computed with the symmetrized
        bilinear form.
        """
        inner = [
            sum(
                Fraction(c * self.cartan[i][j], self.symmetrizer[j])
                for i, c in enumerate(root)
            )
            for j in range(self.rank)
        ]
        norm = sum(c * ip for c, ip in zip(root, inner))
        return tuple(2 * ip / norm for ip in inner)

    def __repr__(self):
        return f"RootSystemData({self.type_label}{self.rank})"


def _cartan_matrix(type_label: str, rank: int) -> tuple:
    """Cartan matrix with the Bourbaki node numbering (0-indexed)."""
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if type_label == "A":
        for i in range(n - 1):
            bond(i, i + 1)
    elif type_label == "B":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1, -2, -1)
    elif type_label == "C":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1, -1, -2)
    elif type_label == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif type_label == "E":
        # chain 1-3-4-5-... with node 2 attached to node 4
        chain = [0] + list(range(2, n))
        for i, j in zip(chain, chain[1:]):
            bond(i, j)
        bond(1, 3)
    elif type_label == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)
        bond(2, 3)
    elif type_label == "G":
        bond(0, 1, -1, -3)
    return tuple(tuple(row) for row in a)


def _generate_positive_roots(cartan: tuple, rank: int) -> list:
    """Closure of the simple roots under root-string addition.

    Processes roots by height; ``beta + alpha_i`` is a root precisely
    when ``p - (beta, alpha_i^vee) > 0`` where ``p`` is the number of
    steps the string extends downward from ``beta``.
    """
    roots = {tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)}
    layer = list(roots)
    while layer:
        new_layer = []
        for beta in layer:
            for i in range(rank):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                pair = sum(beta[j] * cartan[j][i] for j in range(rank))
                if p - pair > 0:
                    cand = list(beta)
                    cand[i] += 1
                    cand = tuple(cand)
                    if cand not in roots:
                        roots.add(cand)
                        new_layer.append(cand)
        layer = new_layer
    return sorted(roots, key=lambda v: (sum(v), v))


def _symmetrizer(cartan: tuple, rank: int) -> tuple:
    """Positive integers d with d[i]*A[i][j] == d[j]*A[j][i]."""
    d = [None] * rank
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(rank):
            if cartan[i][j] != 0 and i != j and d[j] is None:
                d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                stack.append(j)
    if any(x is None for x in d):
        raise DefectError("Cartan matrix has a disconnected diagram")
    scale = 1
    for x in d:
        scale = scale * x.denominator // _gcd(scale, x.denominator)
    result = tuple(int(x * scale) for x in d)
    g = result[0]
    for x in result[1:]:
        g = _gcd(g, x)
    return tuple(x // g for x in result)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def build(type_label: str, rank: int) -> RootSystemData:
    """Construct the root-system tables for the given type and rank."""
    type_label = str(type_label).upper()
    if type_label not in _RANK_RANGE:
        raise UserInputError(f"unknown root-system type {type_label!r}")
    lo, hi = _RANK_RANGE[type_label]
    if rank < lo or (hi is not None and rank > hi):
        raise UserInputError(f"invalid rank {rank} for type {type_label}")

    cartan = _cartan_matrix(type_label, rank)
    positive_roots = _generate_positive_roots(cartan, rank)
    expected = _positive_root_count(type_label, rank)
    if len(positive_roots) != expected:
        raise DefectError(
            f"{type_label}{rank}: generated {len(positive_roots)} positive "
            f"roots, expected {expected}"
        )

    theta = positive_roots[-1]
    height = sum(theta)
    if len(positive_roots) > 1 and sum(positive_roots[-2]) == height:
        raise DefectError("highest root is not unique")
    marks = theta
    h_star = 1 + sum(marks)

    cartan_inverse = _linalg.mat_inv(cartan)
    f = abs(_linalg.det(cartan))
    if f.denominator != 1:
        raise DefectError("Cartan determinant is not an integer")
    f = int(f)
    if f != 1 + sum(1 for a in marks if a == 1):
        raise DefectError("index of connection disagrees with the minuscule count")

    symmetrizer = _symmetrizer(cartan, rank)
    rs = RootSystemData(
        type_label=type_label,
        rank=rank,
        cartan=cartan,
        symmetrizer=symmetrizer,
        positive_roots=tuple(positive_roots),
        theta=theta,
        marks=marks,
        h_star=h_star,
        index_of_connection=f,
        theta_covector=(),  # placeholder, replaced below
        cartan_inverse=cartan_inverse,
    )
    theta_covector = rs.coroot_covector(theta)
    object.__setattr__(rs, "theta_covector", theta_covector)
    if pairing(theta_covector, theta) != 2:
        raise DefectError("(theta_vee, theta) != 2")
    return rs


def pairing(coweight, root):
    """Pairing of a coweight (omega-coordinates) with a root (alpha-coordinates).

    Because the fundamental coweights are dual to the simple roots this
    is just the dot product of the two coordinate vectors.
    """
    if len(coweight) != len(root):
        raise UserInputError(
            f"dimension mismatch: coweight of length {len(coweight)}, "
            f"root of length {len(root)}"
        )
    return sum(y * c for y, c in zip(coweight, root))


def coroot_coordinates(rs: RootSystemData, coweight) -> tuple:
    """Coordinates of a coweight in the simple-coroot basis.

    The omega-coordinates of the j-th simple coroot form column j of the
    Cartan matrix, so this solves ``cartan . x = y`` exactly.
    """
    if len(coweight) != rs.rank:
        raise UserInputError("coweight has wrong length")
    return _linalg.mat_vec(rs.cartan_inverse, tuple(Fraction(y) for y in coweight))


def rho(rs: RootSystemData) -> tuple:
    """The sum of the fundamental coweights, i.e. the all-ones omega-vector."""
    return (1,) * rs.rank


def weyl_order(rs: RootSystemData) -> int:
    """``f * r! * a_1 ... a_r`` -- the order of the Weyl group."""
    return (
        rs.index_of_connection
        * prod(range(1, rs.rank + 1))
        * prod(rs.marks)
    )


def info_dict(rs: RootSystemData) -> dict:
    """JSON-ready summary used by the ``info`` CLI subcommand."""
    return {
        "type": rs.type_label,
        "rank": rs.rank,
        "cartan": [list(row) for row in rs.cartan],
        "marks": list(rs.marks),
        "h": rs.h_star,
        "f": rs.index_of_connection,
        "positive_roots": [list(r) for r in rs.positive_roots],
        "theta": list(rs.theta),
        "weyl_order": weyl_order(rs),
    }
