"""The three nilpotent 3-dimensional algebras Lei1, Lei2, Lei3 and the
matrix families describing ``Aut(Lei3)``.

Every matrix here uses the column convention: column ``j`` is the image of
``a_j``.  With that reading, ``g = s @ d`` and ``s = t @ j`` hold literally
for the factorizations below.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra
from .errors import InadmissibleParams, NotInFamily, UnknownName
from .linalg import Field, Matrix, Scalar


def make_lei1(field: Field) -> Algebra:
    """``[a1,a1] = a2``, ``[a1,a2] = a3``; nilpotency class 3."""
    return Algebra.from_brackets(field, 3, {(1, 1): {2: 1}, (1, 2): {3: 1}})


def make_lei2(field: Field) -> Algebra:
    """``[a1,a1] = a3``; the span of a2 splits off as a direct summand."""
    return Algebra.from_brackets(field, 3, {(1, 1): {3: 1}})


def make_lei3(field: Field) -> Algebra:
    """``[a1,a1] = [a1,a2] = a3``."""
    return Algebra.from_brackets(field, 3, {(1, 1): {3: 1}, (1, 2): {3: 1}})


CATALOG = {"lei1": make_lei1, "lei2": make_lei2, "lei3": make_lei3}


def make_catalog(name: str, field: Field) -> Algebra:
    try:
        return CATALOG[name](field)
    except KeyError:
        raise UnknownName(f"unknown catalog algebra {name!r}; choose from {', '.join(CATALOG)}") from None


@dataclass(frozen=True)
class AutParams:
    """Parameters of an automorphism of Lei3.

    ``a1, a2, a3`` are the coordinates of ``f(a_1)`` and ``b3`` the
    ``a_3``-coordinate of ``f(a_2)``.  The ``a_2``-coordinate of ``f(a_2)``
    is forced to ``a1 + a2`` and is therefore not a parameter.
    """

    field: Field
    a1: Scalar
    a2: Scalar
    a3: Scalar
    b3: Scalar

    def __post_init__(self):
        f = self.field
        for name in ("a1", "a2", "a3", "b3"):
            object.__setattr__(self, name, f(getattr(self, name)))
        if self.a1 == 0:
            raise InadmissibleParams("alpha1 must be nonzero")
        if f.add(self.a1, self.a2) == 0:
            raise InadmissibleParams("alpha1 + alpha2 must be nonzero")

    @property
    def b2(self) -> Scalar:
        return self.field.add(self.a1, self.a2)

    @property
    def top(self) -> Scalar:
        """Coefficient of ``a_3`` in ``f(a_3)``: ``a1^2 + a1 a2``."""
        f = self.field
        return f.mul(self.a1, self.b2)


def general_aut_matrix(p: AutParams) -> Matrix:
    f = p.field
    return Matrix.from_rows(f, [
        [p.a1, 0, 0],
        [p.a2, p.b2, 0],
        [p.a3, p.b3, p.top],
    ])


def _nonzero(f: Field, x: Scalar, what: str) -> None:
    if x == 0:
        raise InadmissibleParams(f"{what} must be nonzero")


def s_matrix(field: Field, a2, a3, b3) -> Matrix:
    """The automorphisms fixing ``a_1`` modulo the left center."""
    f = field
    d = f.add(f.one, f(a2))
    _nonzero(f, d, "1 + alpha2")
    return Matrix.from_rows(f, [[1, 0, 0], [a2, d, 0], [a3, b3, d]])


def t_matrix(field: Field, a3, b3) -> Matrix:
    return Matrix.from_rows(field, [[1, 0, 0], [0, 1, 0], [a3, b3, 1]])


def j_matrix(field: Field, lam) -> Matrix:
    f = field
    d = f.add(f.one, f(lam))
    _nonzero(f, d, "1 + lambda")
    return Matrix.from_rows(f, [[1, 0, 0], [lam, d, 0], [0, 0, d]])


def d_matrix(field: Field, sigma) -> Matrix:
    f = field
    sigma = f(sigma)
    _nonzero(f, sigma, "sigma")
    return Matrix.diag(f, [sigma, sigma, f.mul(sigma, sigma)])


def make_v(field: Field, lam, mu, nu) -> Matrix:
    """The map ``x1 a1 + (x1 lam + x2 + x2 lam) a2 + (x1 mu + x2 nu + x3 (1 + lam)) a3``."""
    f = field
    lam, mu, nu = f(lam), f(mu), f(nu)
    _nonzero(f, f.add(f.one, lam), "1 + lambda")

    def v(x):
        x1, x2, x3 = x
        return (x1,
                f.reduce(x1 * lam + x2 + x2 * lam),
                f.reduce(x1 * mu + x2 * nu + x3 * (1 + lam)))

    return Matrix.from_columns(f, [v(f.basis_vector(3, i)) for i in (1, 2, 3)])


def make_z(field: Field, lam, mu) -> Matrix:
    """The map ``x1 a1 + x2 a2 + (x1 lam + x2 mu + x3) a3``."""
    f = field
    lam, mu = f(lam), f(mu)

    def z(x):
        x1, x2, x3 = x
        return (x1, x2, f.reduce(x1 * lam + x2 * mu + x3))

    return Matrix.from_columns(f, [z(f.basis_vector(3, i)) for i in (1, 2, 3)])


# -- reading parameters back off a matrix -------------------------------------


def aut_params(g: Matrix) -> AutParams:
    """Parameters of a matrix in the general family; NotInFamily otherwise."""
    if g.shape != (3, 3):
        raise NotInFamily(f"expected a 3x3 matrix, got {g.shape}")
    f = g.field
    a1, a2, a3, b3 = g[0, 0], g[1, 0], g[2, 0], g[2, 1]
    if any(g[i, j] != 0 for i, j in ((0, 1), (0, 2), (1, 2))):
        raise NotInFamily("nonzero entry above the diagonal")
    try:
        p = AutParams(f, a1, a2, a3, b3)
    except InadmissibleParams as exc:
        raise NotInFamily(str(exc)) from None
    if g[1, 1] != p.b2:
        raise NotInFamily("entry (2,2) differs from alpha1 + alpha2")
    if g[2, 2] != p.top:
        raise NotInFamily("entry (3,3) differs from alpha1^2 + alpha1 alpha2")
    return p


def s_params(s: Matrix) -> tuple[Scalar, Scalar, Scalar]:
    """``(alpha2, alpha3, beta3)`` of a matrix in the S family."""
    p = aut_params(s)
    if p.a1 != 1:
        raise NotInFamily("entry (1,1) of an S matrix must be 1")
    return p.a2, p.a3, p.b3


def factor_sd(g: Matrix) -> tuple[Matrix, Matrix]:
    """Split ``g = s @ d`` with ``d = d_matrix(alpha1)``."""
    p = aut_params(g)
    f = p.field
    inv = f.inv(p.a1)
    s = s_matrix(f, f.mul(p.a2, inv), f.mul(p.a3, inv), f.mul(p.b3, inv))
    return s, d_matrix(f, p.a1)


def factor_tj(s: Matrix) -> tuple[Matrix, Matrix]:
    """Split ``s = t @ j``.

    Solving ``t_matrix(x, y) @ j_matrix(z) = s_matrix(a2, a3, b3)`` entrywise
    gives ``z = a2``, ``y = b3 / (1 + a2)`` and ``x = a3 - y a2``.
    """
    a2, a3, b3 = s_params(s)
    f = s.field
    z = a2
    y = f.div(b3, f.add(f.one, a2))
    x = f.sub(a3, f.mul(y, a2))
    return t_matrix(f, x, y), j_matrix(f, z)
