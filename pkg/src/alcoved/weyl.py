"""Weyl group elements, enumeration, inversions and descents.

An element is stored as the integer matrix of its action on root
coordinates (column ``j`` holds the simple-root coordinates of the image
of the j-th simple root).  Equality and hashing go through this matrix,
which makes group arithmetic O(r^2) and deduplication trivial.

The tail of the module houses the concrete one-line models: ordinary
permutations for type A and signed permutations for type C, with
conversion in both directions.
"""

from fractions import Fraction

from . import _linalg, rootsys
from .errors import BudgetExceededError, UserInputError
from .rootsys import RootSystemData

DEFAULT_GROUP_BUDGET = 10**6


class WeylElement:
    """An element of a finite Weyl group acting on root coordinates."""

    __slots__ = ("rs", "matrix", "_coweight_matrix", "_length", "_inverse")

    def __init__(self, rs: RootSystemData, matrix):
        self.rs = rs
        self.matrix = tuple(tuple(row) for row in matrix)
        self._coweight_matrix = None
        self._length = None
        self._inverse = None

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"WeylElement({self.rs.type_label}{self.rs.rank}, {self.matrix})"

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.rs is not other.rs:
            raise UserInputError("elements of different root systems")
        return WeylElement(self.rs, _linalg.mat_mul(self.matrix, other.matrix))

    def inverse(self) -> "WeylElement":
        if self._inverse is None:
            inv = _linalg.int_matrix(_linalg.mat_inv(self.matrix))
            self._inverse = WeylElement(self.rs, inv)
            self._inverse._inverse = self
        return self._inverse

    @property
    def coweight_matrix(self):
        """Matrix of the action on omega-coordinates, ``(M^-1)^T``."""
        if self._coweight_matrix is None:
            self._coweight_matrix = _linalg.transpose(self.inverse().matrix)
        return self._coweight_matrix

    def act_on_root(self, root) -> tuple:
        return _linalg.mat_vec(self.matrix, tuple(root))

    def act_on_coweight(self, coweight) -> tuple:
        return _linalg.mat_vec(self.coweight_matrix, tuple(coweight))

    @property
    def word_length(self) -> int:
        """Number of positive roots sent to negative roots."""
        if self._length is None:
            self._length = sum(
                1 for a in self.rs.positive_roots if _is_negative(self.act_on_root(a))
            )
        return self._length

    def is_identity(self) -> bool:
        return self.matrix == _linalg.identity(self.rs.rank)


def _is_negative(root_coords) -> bool:
    # root coordinate vectors are all-nonnegative or all-nonpositive
    return any(c < 0 for c in root_coords)


def identity_element(rs: RootSystemData) -> WeylElement:
    return WeylElement(rs, _linalg.identity(rs.rank))


def simple_reflection(rs: RootSystemData, i: int) -> WeylElement:
    """The reflection s_i, acting by a_j -> a_j - cartan[j][i] * a_i."""
    if not 1 <= i <= rs.rank:
        raise UserInputError(f"simple-reflection index {i} out of range 1..{rs.rank}")
    k = i - 1
    r = rs.rank
    cols = []
    for j in range(r):
        col = [1 if idx == j else 0 for idx in range(r)]
        col[k] -= rs.cartan[j][k]
        cols.append(col)
    matrix = tuple(tuple(cols[j][idx] for j in range(r)) for idx in range(r))
    return WeylElement(rs, matrix)


def enumerate_weyl(rs: RootSystemData, budget: int = DEFAULT_GROUP_BUDGET) -> list:
    """Breadth-first closure of the identity under the simple reflections.

    Deterministic: generators are applied in index order, so element
    positions in the returned list are stable across runs.  BFS depth is
    recorded as the word length.
    """
    gens = [simple_reflection(rs, i) for i in range(1, rs.rank + 1)]
    start = identity_element(rs)
    start._length = 0
    seen = {start.matrix}
    elements = [start]
    frontier = [start]
    depth = 0
    while frontier:
        depth += 1
        new_frontier = []
        for w in frontier:
            for s in gens:
                ws = w * s
                if ws.matrix not in seen:
                    if len(elements) >= budget:
                        raise BudgetExceededError(
                            f"Weyl group of {rs} exceeds budget {budget}"
                        )
                    ws._length = depth
                    seen.add(ws.matrix)
                    elements.append(ws)
                    new_frontier.append(ws)
        frontier = new_frontier
    return elements


def inv(w: WeylElement, root) -> int:
    """1 if the positive root is an inversion of w, else 0."""
    root = tuple(root)
    if not w.rs.is_positive_root(root):
        raise UserInputError(f"{root} is not a positive root of {w.rs}")
    return 1 if _is_negative(w.act_on_root(root)) else 0


def descents(w: WeylElement) -> tuple:
    """The bit vector (d_0, d_1, ..., d_r).

    ``d_i`` for i >= 1 records an inversion at the i-th simple root;
    ``d_0`` is the descent at ``-theta``, i.e. w(theta) > 0.
    """
    r = w.rs.rank
    d = [0] * (r + 1)
    d[0] = 0 if _is_negative(w.act_on_root(w.rs.theta)) else 1
    for i in range(r):
        image = w.act_on_root(tuple(1 if j == i else 0 for j in range(r)))
        d[i + 1] = 1 if _is_negative(image) else 0
    return tuple(d)


def longest_element(rs: RootSystemData, group=None) -> WeylElement:
    """The unique element of maximal length."""
    if group is None:
        group = enumerate_weyl(rs)
    top = max(group, key=lambda w: w.word_length)
    return top


# ---------------------------------------------------------------------------
# Type A model: permutations of [n] acting on e_i -> e_{w_i}.

def _check_type(rs, label, op):
    if rs.type_label != label:
        raise UserInputError(f"{op} requires type {label}, got {rs}")


def _decode_difference(ambient):
    """Recover (a, b) from an ambient vector equal to e_a - e_b (1-based)."""
    a = b = None
    for i, x in enumerate(ambient):
        if x == 1:
            a = i + 1
        elif x == -1:
            b = i + 1
        elif x != 0:
            raise UserInputError("vector is not of the form e_a - e_b")
    if a is None or b is None:
        raise UserInputError("vector is not of the form e_a - e_b")
    return a, b


def from_permutation(rs: RootSystemData, window) -> WeylElement:
    """Weyl element of A_{n-1} from one-line notation ``(w_1, ..., w_n)``."""
    _check_type(rs, "A", "from_permutation")
    n = rs.rank + 1
    window = tuple(window)
    if sorted(window) != list(range(1, n + 1)):
        raise UserInputError(f"{window} is not a permutation of 1..{n}")
    cols = []
    for j in range(rs.rank):
        # image of alpha_j = e_j - e_{j+1} is e_{w_j} - e_{w_{j+1}}
        ambient = [0] * n
        ambient[window[j] - 1] += 1
        ambient[window[j + 1] - 1] -= 1
        # alpha-coordinates of a zero-sum ambient vector are its partial sums
        coords, acc = [], 0
        for x in ambient[:-1]:
            acc += x
            coords.append(acc)
        cols.append(coords)
    matrix = tuple(tuple(cols[j][i] for j in range(rs.rank)) for i in range(rs.rank))
    return WeylElement(rs, matrix)


def to_permutation(w: WeylElement) -> tuple:
    """One-line notation of a type-A Weyl element."""
    _check_type(w.rs, "A", "to_permutation")
    n = w.rs.rank + 1
    window = [None] * (n + 1)
    first = None
    for j in range(2, n + 1):
        # e_1 - e_j in alpha coordinates
        coords = tuple(1 if i < j - 1 else 0 for i in range(w.rs.rank))
        image = w.act_on_root(coords)
        ambient = []
        prev = 0
        for c in list(image) + [0]:
            ambient.append(c - prev)
            prev = c
        a, b = _decode_difference(ambient)
        if first is None:
            first = a
        elif first != a:
            raise UserInputError("matrix is not a type-A permutation action")
        window[j] = b
    window[1] = first
    return tuple(window[1:])


def permutation_descents(window) -> tuple:
    """Descent bits (d_0, d_1, ..., d_{n-1}) of a permutation.

    ``d_i`` for 1 <= i <= n-1 is the classical descent ``w_i > w_{i+1}``
    and ``d_0`` is the circular descent ``w_n > w_1``.
    """
    n = len(window)
    d = [0] * n
    d[0] = 1 if window[-1] > window[0] else 0
    for i in range(1, n):
        d[i] = 1 if window[i - 1] > window[i] else 0
    return tuple(d)


def major_index(window) -> int:
    """Sum of the classical descent positions."""
    return sum(
        i for i in range(1, len(window)) if window[i - 1] > window[i]
    )


def long_cycle(rs: RootSystemData) -> WeylElement:
    """The n-cycle 1 -> 2 -> ... -> n -> 1 of type A_{n-1}."""
    n = rs.rank + 1
    return from_permutation(rs, tuple(range(2, n + 1)) + (1,))


# ---------------------------------------------------------------------------
# Type C model: signed permutations acting on e_i -> sign(w_i) e_{|w_i|}.

def _signed_images(window, n):
    for v in window:
        yield (abs(v) - 1, 1 if v > 0 else -1)


def from_signed_permutation(rs: RootSystemData, window) -> WeylElement:
    """Weyl element of C_n from a signed one-line window ``(w_1, ..., w_n)``."""
    _check_type(rs, "C", "from_signed_permutation")
    n = rs.rank
    window = tuple(window)
    if sorted(abs(v) for v in window) != list(range(1, n + 1)) or 0 in window:
        raise UserInputError(f"{window} is not a signed permutation of 1..{n}")

    def ambient_of(j):  # ambient image of e_j (0-based j)
        vec = [0] * n
        pos, sign = abs(window[j]) - 1, (1 if window[j] > 0 else -1)
        vec[pos] = sign
        return vec

    cols = []
    for j in range(n):
        if j < n - 1:  # alpha_j = e_j - e_{j+1}
            ambient = [x - y for x, y in zip(ambient_of(j), ambient_of(j + 1))]
        else:  # alpha_n = 2 e_n
            ambient = [2 * x for x in ambient_of(n - 1)]
        coords = _ambient_to_alpha_c(ambient, n)
        cols.append(coords)
    matrix = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    return WeylElement(rs, matrix)


def _ambient_to_alpha_c(ambient, n):
    """Solve v = sum c_j alpha_j for type C_n; exact, integer output."""
    coords = []
    acc = 0
    for x in ambient[: n - 1]:
        acc += x
        coords.append(acc)
    last2 = ambient[n - 1] + (coords[-1] if n > 1 else 0)
    if last2 % 2 != 0:
        raise UserInputError("vector is not in the type-C root lattice")
    coords.append(last2 // 2)
    return coords


def to_signed_permutation(w: WeylElement) -> tuple:
    """Signed one-line window of a type-C Weyl element."""
    _check_type(w.rs, "C", "to_signed_permutation")
    n = w.rs.rank
    window = []
    for i in range(n):
        # e_i in alpha coordinates: (0,...,0,1,...,1,1/2)
        coords = tuple(
            Fraction(1, 2) if j == n - 1 else (1 if i <= j else 0) for j in range(n)
        )
        image = w.act_on_root(coords)
        # back to ambient coordinates
        ambient = []
        prev = 0
        for j in range(n - 1):
            ambient.append(image[j] - prev)
            prev = image[j]
        ambient.append(2 * image[n - 1] - prev)
        nonzero = [(j, x) for j, x in enumerate(ambient) if x != 0]
        if len(nonzero) != 1 or abs(nonzero[0][1]) != 1:
            raise UserInputError("matrix is not a signed-permutation action")
        j, sign = nonzero[0]
        window.append((j + 1) * (1 if sign > 0 else -1))
    return tuple(window)


def signed_permutation_descents(window) -> tuple:
    """Descent bits (d_0, d_1, ..., d_n) of a signed permutation.

    Positions 1..n-1 compare window entries in the order
    ``1 < 2 < ... < n < -n < ... < -1`` (negative letters count as larger
    than positive ones); position 0 is a descent when ``w_1 > 0`` and
    position n when ``w_n < 0``.
    """
    n = len(window)

    def key(v):
        return v if v > 0 else 2 * n + 1 + v

    d = [0] * (n + 1)
    d[0] = 1 if window[0] > 0 else 0
    d[n] = 1 if window[-1] < 0 else 0
    for i in range(1, n):
        d[i] = 1 if key(window[i - 1]) > key(window[i]) else 0
    return tuple(d)


def negative_rotation(rs: RootSystemData) -> WeylElement:
    """The signed permutation (-n, -(n-1), ..., -1) of type C_n."""
    n = rs.rank
    return from_signed_permutation(rs, tuple(-(n + 1 - i) for i in range(1, n + 1)))
