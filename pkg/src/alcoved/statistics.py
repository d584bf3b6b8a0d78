"""Circular descent statistics, the group C, and the q-Weyl identity.

Polynomials in q are dense integer coefficient tuples (degrees stay
below ``h_star * rank``); elements of the group algebra over the
coweight-mod-coroot quotient map coset classes to such polynomials.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import polytope as polytope_mod
from .errors import DefectError, UserInputError
from .rootsys import RootSystemData, coroot_coordinates, rho, weyl_order
from .weyl import WeylElement, descents, enumerate_weyl, identity_element


# ---------------------------------------------------------------------------
# Polynomials in q as coefficient tuples (index = degree).

def poly_trim(p) -> tuple:
    p = tuple(p)
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def poly_add(p, q) -> tuple:
    n = max(len(p), len(q))
    p = tuple(p) + (0,) * (n - len(p))
    q = tuple(q) + (0,) * (n - len(q))
    return poly_trim(a + b for a, b in zip(p, q))


def poly_mul(p, q) -> tuple:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def q_power(k: int) -> tuple:
    return (0,) * k + (1,)


def q_integer(n: int) -> tuple:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise UserInputError("q-integer of a negative integer")
    return (1,) * n


@lru_cache(maxsize=None)
def eulerian_polynomial(n: int) -> tuple:
    """A_n(q), via the Eulerian-number recurrence; A_0 = 1."""
    if n < 0:
        raise UserInputError("Eulerian polynomial of negative index")
    if n == 0:
        return (1,)
    # E[k] = number of permutations of [n] with k descents
    prev = [1]
    for m in range(2, n + 1):
        cur = [0] * m
        for k in range(m):
            cur[k] = (k + 1) * (prev[k] if k < m - 1 else 0) + (m - k) * (
                prev[k - 1] if k >= 1 else 0
            )
        prev = cur
    return poly_trim((0,) + tuple(prev))


# ---------------------------------------------------------------------------
# Coset classes of the coweight lattice modulo the coroot lattice.

@dataclass(frozen=True)
class CosetClass:
    """Fractional parts of the simple-coroot coordinates of a coweight."""

    frac: tuple

    def __add__(self, other: "CosetClass") -> "CosetClass":
        return CosetClass(tuple((a + b) % 1 for a, b in zip(self.frac, other.frac)))


def coweight_class(rs: RootSystemData, coweight) -> CosetClass:
    """Class of an integral coweight in the coweight-mod-coroot group."""
    cw = tuple(coweight)
    if any(Fraction(x).denominator != 1 for x in cw):
        raise UserInputError(f"{cw} is not an integral coweight")
    coords = coroot_coordinates(rs, cw)
    return CosetClass(tuple(x % 1 for x in coords))


@dataclass
class GroupAlgebraElement:
    """Finitely supported map from coset classes to polynomials in q."""

    coeffs: dict = field(default_factory=dict)

    def add_term(self, cls: CosetClass, poly) -> None:
        self.coeffs[cls] = poly_add(self.coeffs.get(cls, ()), poly)

    def normalized(self) -> dict:
        return {c: p for c, p in self.coeffs.items() if poly_trim(p)}

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElement) and (
            self.normalized() == other.normalized()
        )

    def scalar_sum(self) -> tuple:
        total = ()
        for p in self.coeffs.values():
            total = poly_add(total, p)
        return total


# ---------------------------------------------------------------------------
# Statistics on Weyl group elements.

def cdes(w: WeylElement) -> int:
    """Circular descent number: marks-weighted sum of the descent bits."""
    d = descents(w)
    marks = (1,) + w.rs.marks
    value = sum(a * di for a, di in zip(marks, d))
    if value < 1:
        raise DefectError("cdes must be positive")
    return value


def delta(w: WeylElement) -> tuple:
    """The integral coweight translating w^-1(A_o) into the coweight box."""
    d = descents(w)
    return tuple(d[1:])


@dataclass
class CGroup:
    """The subgroup of elements with circular descent number one."""

    rs: RootSystemData
    elements: tuple
    identity: WeylElement
    class_of: dict  # CosetClass -> WeylElement

    def power(self, c: WeylElement, n: int) -> WeylElement:
        out = self.identity
        for _ in range(n):
            out = out * c
        return out


_C_CACHE = {}


def group_C(rs: RootSystemData, W=None) -> CGroup:
    """Elements with cdes = 1, cross-validated against the root-permutation
    descriptions; the class map is built from their delta coweights."""
    if rs in _C_CACHE:
        return _C_CACHE[rs]
    if W is None:
        W = enumerate_weyl(rs)
    elements = tuple(w for w in W if cdes(w) == 1)
    f = rs.index_of_connection
    if len(elements) != f:
        raise DefectError(
            f"|C| = {len(elements)} but the index of connection is {f}"
        )

    # the affine simple-root set, with -theta playing the role of index 0
    hat = [tuple(-c for c in rs.theta)] + list(rs.simple_roots)
    marks = (1,) + rs.marks
    hat_set = frozenset(hat)
    graded = {}
    for a, root in zip(marks, hat):
        graded.setdefault(a, set()).add(root)
    for c in elements:
        images = [tuple(c.act_on_root(a)) for a in hat]
        if frozenset(images) != hat_set:
            raise DefectError("an element of C does not permute the affine roots")
        for a, img in zip(marks, images):
            if img not in graded[a]:
                raise DefectError("C does not preserve the mark grading")

    ident = next(w for w in elements if w.is_identity())
    class_of = {}
    for c in elements:
        cls = coweight_class(rs, delta(c))
        if cls in class_of:
            raise DefectError("delta classes of C are not distinct")
        class_of[cls] = c
    for a in elements:
        for b in elements:
            if a * b not in elements:
                raise DefectError("C is not closed under multiplication")
    group = CGroup(rs=rs, elements=elements, identity=ident, class_of=class_of)
    _C_CACHE[rs] = group
    return group


def cmaj(w: WeylElement, group: CGroup = None) -> WeylElement:
    """The element of C whose class matches the delta coweight of w."""
    if group is None:
        group = group_C(w.rs)
    return group.class_of[coweight_class(w.rs, delta(w))]


def equivalent(u: WeylElement, w: WeylElement) -> bool:
    """Whether u(A_o) and w(A_o) differ by an integral coweight translation."""
    rs = u.rs
    h = rs.h_star
    du = u.act_on_coweight(rho(rs))
    dw = w.act_on_coweight(rho(rs))
    return all((a - b) % h == 0 for a, b in zip(du, dw))


def coset_representatives(rs: RootSystemData, W=None) -> list:
    """One representative per right coset wC: the w with cmaj(w^-1) = id.

    The elements with cmaj = id form a transversal of the left cosets;
    their inverses, used here, are pairwise inequivalent under alcove
    translation and therefore represent W/C.
    """
    if W is None:
        W = enumerate_weyl(rs)
    group = group_C(rs, W)
    reps = [w for w in W if cmaj(w.inverse(), group).is_identity()]
    expected = weyl_order(rs) // rs.index_of_connection
    if len(reps) != expected:
        raise DefectError(
            f"{len(reps)} coset representatives, expected {expected}"
        )
    for i, u in enumerate(reps):
        for w in reps[i + 1 :]:
            if equivalent(u, w):
                raise DefectError("two representatives lie in the same coset")
    return reps


# ---------------------------------------------------------------------------
# Identity checks.

def qweyl_check(rs: RootSystemData, W=None) -> dict:
    """Exact check of the group-algebra q-analogue of Weyl's formula."""
    if W is None:
        W = enumerate_weyl(rs)
    group = group_C(rs, W)
    lhs = GroupAlgebraElement()
    for w in W:
        lhs.add_term(coweight_class(rs, delta(w)), q_power(cdes(w)))
    rhs_poly = eulerian_polynomial(rs.rank)
    for a in rs.marks:
        rhs_poly = poly_mul(rhs_poly, q_integer(a))
    rhs = GroupAlgebraElement()
    for cls in group.class_of:
        rhs.add_term(cls, rhs_poly)
    scalar_lhs = lhs.scalar_sum()
    scalar_rhs = poly_mul((rs.index_of_connection,), rhs_poly)
    return {
        "lhs": lhs,
        "rhs": rhs,
        "identity_holds": lhs == rhs,
        "scalar_holds": scalar_lhs == scalar_rhs,
        "component_poly": rhs_poly,
    }


def hypersimplex_statistic_check(rs: RootSystemData, W=None) -> dict:
    """Hypersimplex volumes against circular-descent counts."""
    if W is None:
        W = enumerate_weyl(rs)
    f = rs.index_of_connection
    reps = coset_representatives(rs, W)
    volumes = {}
    coset_counts = {}
    element_counts = {}
    for k in range(1, rs.h_star):
        volumes[k] = polytope_mod.volume(polytope_mod.hypersimplex(rs, k))
        coset_counts[k] = sum(1 for w in reps if cdes(w.inverse()) == k)
        element_counts[k] = sum(1 for w in W if cdes(w.inverse()) == k)
    coset_ok = all(volumes[k] == coset_counts[k] for k in volumes)
    element_ok = all(f * volumes[k] == element_counts[k] for k in volumes)

    group = group_C(rs, W)
    constant_ok = all(
        cdes((c1 * w * c2).inverse()) == cdes(w.inverse())
        for w in reps
        for c1 in group.elements
        for c2 in group.elements
    )
    genfun = ()
    for k, v in volumes.items():
        genfun = poly_add(genfun, poly_mul((v,), q_power(k)))
    expected = eulerian_polynomial(rs.rank)
    for a in rs.marks:
        expected = poly_mul(expected, q_integer(a))
    return {
        "volumes": volumes,
        "coset_counts": coset_counts,
        "element_counts": element_counts,
        "coset_identity_holds": coset_ok,
        "element_identity_holds": element_ok,
        "cdes_constant_on_cosets": constant_ok,
        "generating_function_holds": genfun == expected,
    }


def double_coset_check(rs: RootSystemData, W=None) -> dict:
    """cdes is constant on double cosets of C."""
    if W is None:
        W = enumerate_weyl(rs)
    group = group_C(rs, W)
    for w in W:
        base = cdes(w)
        for c1 in group.elements:
            for c2 in group.elements:
                if cdes(c1 * w * c2) != base:
                    return {"holds": False, "witness": (c1, w, c2)}
    return {"holds": True}


def cmaj_twist_check(rs: RootSystemData, W=None) -> dict:
    """cmaj(c1 w c2) = c1 * cmaj(w) * c2^cdes(w), plus the inverse symmetry."""
    if W is None:
        W = enumerate_weyl(rs)
    group = group_C(rs, W)
    for w in W:
        base = cmaj(w, group)
        n = cdes(w)
        for c1 in group.elements:
            for c2 in group.elements:
                expected = c1 * base
                for _ in range(n):
                    expected = expected * c2
                if cmaj(c1 * w * c2, group) != expected:
                    return {"holds": False, "witness": (c1, w, c2)}

    lhs = GroupAlgebraElement()
    rhs = GroupAlgebraElement()
    for w in W:
        lhs.add_term(coweight_class(rs, delta(w)), q_power(cdes(w)))
        rhs.add_term(coweight_class(rs, delta(w.inverse())), q_power(cdes(w)))
    return {"holds": True, "inverse_symmetry_holds": lhs == rhs}


def cmaj_cross_table(rs: RootSystemData, W=None) -> dict:
    """q-refined joint distribution of cmaj(w) and cmaj(w^-1).

    Exploratory: entry (x, y) collects q^cdes(w) over the elements with
    cmaj(w) = x and cmaj(w^-1) = y.  Only the total mass is a theorem.
    """
    if W is None:
        W = enumerate_weyl(rs)
    group = group_C(rs, W)
    order = {c: i for i, c in enumerate(group.elements)}
    f = len(group.elements)
    table = [[() for _ in range(f)] for _ in range(f)]
    for w in W:
        x = order[cmaj(w, group)]
        y = order[cmaj(w.inverse(), group)]
        table[x][y] = poly_add(table[x][y], q_power(cdes(w)))
    total = sum(poly_eval(p, 1) for row in table for p in row)
    if total != len(W):
        raise DefectError("cross table does not partition the group")
    symmetric = all(
        table[x][y] == table[y][x] for x in range(f) for y in range(f)
    )
    return {"table": table, "total": total, "symmetric_under_transpose": symmetric}


def brute_force_eulerian(n: int) -> tuple:
    """Independent oracle: descent generating polynomial over all of S_n."""
    from itertools import permutations

    counts = [0] * (n + 1)
    for p in permutations(range(1, n + 1)):
        d = sum(1 for i in range(n - 1) if p[i] > p[i + 1])
        counts[d + 1] += 1
    assert sum(counts) == factorial(n)
    return poly_trim(counts)
