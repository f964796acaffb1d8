"""Algebras given by structure constants, and their Leibniz invariants.

Basis elements are named 1-based (``e_1 .. e_n``) wherever an index is part
of the public surface, matching ``a_1, a_2, a_3`` in the usual notation.
Vectors themselves are plain tuples of canonical scalars.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import DimensionMismatch, FieldMismatch, NotLeibniz
from .linalg import Field, Matrix, Subspace, Vector, invert, solve_right_kernel


@dataclass(frozen=True)
class Algebra:
    """Finite-dimensional algebra; ``table[i][j]`` is the vector ``[e_{i+1}, e_{j+1}]``."""

    field: Field
    dim: int
    table: tuple  # tuple[tuple[Vector, ...], ...]

    @classmethod
    def from_brackets(cls, field: Field, dim: int,
                      brackets: Mapping[tuple[int, int], Mapping[int, object]] | None = None) -> Algebra:
        """Build from ``{(i, j): {k: c}}`` meaning ``[e_i, e_j] = sum c e_k`` (1-based)."""
        if dim < 1:
            raise ValueError("dimension must be at least 1")
        rows = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in (brackets or {}).items():
            for k, c in terms.items():
                if not all(1 <= x <= dim for x in (i, j, k)):
                    raise IndexError(f"bracket index ({i},{j},{k}) outside 1..{dim}")
                rows[i - 1][j - 1][k - 1] = field(c)
        return cls(field, dim, tuple(tuple(tuple(v) for v in r) for r in rows))

    @classmethod
    def abelian(cls, field: Field, dim: int) -> Algebra:
        return cls.from_brackets(field, dim)

    def structure_constant(self, i: int, j: int, k: int):
        """Coefficient of e_k in [e_i, e_j], 1-based."""
        return self.table[i - 1][j - 1][k - 1]

    def basis_vector(self, i: int) -> Vector:
        return self.field.basis_vector(self.dim, i)

    def nonzero_brackets(self) -> dict[tuple[int, int], dict[int, object]]:
        out: dict[tuple[int, int], dict[int, object]] = {}
        for i in range(self.dim):
            for j in range(self.dim):
                terms = {k + 1: c for k, c in enumerate(self.table[i][j]) if c != 0}
                if terms:
                    out[i + 1, j + 1] = terms
        return out

    def full(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def span(self, *vectors: Sequence) -> Subspace:
        return Subspace.span(self.field, self.dim, vectors)

    def transport(self, g: Matrix) -> Algebra:
        """The isomorphic algebra whose bracket is ``g^-1 [g x, g y]``."""
        ginv = invert(g)
        cols = g.columns()
        return Algebra(self.field, self.dim, tuple(
            tuple(ginv @ bracket(self, cols[i], cols[j]) for j in range(self.dim))
            for i in range(self.dim)))


def _vec(alg: Algebra, x: Sequence) -> Vector:
    v = alg.field.vector(x)
    if len(v) != alg.dim:
        raise DimensionMismatch(f"vector of length {len(v)} in a {alg.dim}-dimensional algebra")
    return v


def _check_subspace(alg: Algebra, s: Subspace) -> None:
    if s.field != alg.field:
        raise FieldMismatch(f"{s.field} subspace in an algebra over {alg.field}")
    if s.ambient_dim != alg.dim:
        raise DimensionMismatch(f"subspace of F^{s.ambient_dim} in a {alg.dim}-dimensional algebra")


def bracket(alg: Algebra, x: Sequence, y: Sequence) -> Vector:
    """Bilinear extension of the structure constants."""
    x, y = _vec(alg, x), _vec(alg, y)
    acc = [0] * alg.dim
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        row = alg.table[i]
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            coeff = xi * yj
            for k, c in enumerate(row[j]):
                if c != 0:
                    acc[k] += coeff * c
    return alg.field.vector(acc)


def _sub(alg: Algebra, u: Vector, v: Vector) -> Vector:
    return tuple(alg.field.sub(a, b) for a, b in zip(u, v))


def _add(alg: Algebra, u: Vector, v: Vector) -> Vector:
    return tuple(alg.field.add(a, b) for a, b in zip(u, v))


def leibniz_violation(alg: Algebra):
    """First basis triple breaking the left Leibniz identity, or None.

    Returns ``((i, j, k), lhs, rhs)`` with 1-based indices, where
    ``lhs = [[e_i,e_j],e_k]`` and ``rhs = [e_i,[e_j,e_k]] - [e_j,[e_i,e_k]]``.
    """
    e = [alg.basis_vector(i + 1) for i in range(alg.dim)]
    for i in range(alg.dim):
        for j in range(alg.dim):
            ij = alg.table[i][j]
            for k in range(alg.dim):
                lhs = bracket(alg, ij, e[k])
                rhs = _sub(alg, bracket(alg, e[i], alg.table[j][k]), bracket(alg, e[j], alg.table[i][k]))
                if lhs != rhs:
                    return (i + 1, j + 1, k + 1), lhs, rhs
    return None


def is_left_leibniz(alg: Algebra) -> bool:
    """``[[a,b],c] = [a,[b,c]] - [b,[a,c]]`` on all basis triples (enough by trilinearity)."""
    return leibniz_violation(alg) is None


def is_anticommutative(alg: Algebra) -> bool:
    n = alg.dim
    zero = alg.field.vector([0] * n)
    for i in range(n):
        if alg.table[i][i] != zero:
            return False
        for j in range(i + 1, n):
            if _add(alg, alg.table[i][j], alg.table[j][i]) != zero:
                return False
    return True


def is_lie(alg: Algebra) -> bool:
    """A Leibniz algebra with ``[a,a] = 0`` for every ``a``."""
    return is_anticommutative(alg) and is_left_leibniz(alg)


def leibniz_kernel(alg: Algebra) -> Subspace:
    """Span of all squares ``[a,a]``.

    Polarization: ``[e_i+e_j, e_i+e_j] - [e_i,e_i] - [e_j,e_j] = [e_i,e_j] + [e_j,e_i]``,
    so the diagonal squares and symmetrized brackets span the same space in
    every characteristic.
    """
    if not is_left_leibniz(alg):
        raise NotLeibniz("Leibniz kernel requested for an algebra that is not left Leibniz")
    gens = [alg.table[i][i] for i in range(alg.dim)]
    gens += [_add(alg, alg.table[i][j], alg.table[j][i])
             for i in range(alg.dim) for j in range(i + 1, alg.dim)]
    return alg.span(*gens)


def right_multiplication(alg: Algebra, v: Sequence) -> Matrix:
    """Matrix of ``x -> [x, v]``."""
    v = _vec(alg, v)
    return Matrix.from_columns(alg.field, [bracket(alg, alg.basis_vector(i + 1), v) for i in range(alg.dim)])


def left_multiplication(alg: Algebra, v: Sequence) -> Matrix:
    """Matrix of ``x -> [v, x]``."""
    v = _vec(alg, v)
    return Matrix.from_columns(alg.field, [bracket(alg, v, alg.basis_vector(i + 1)) for i in range(alg.dim)])


def _stacked_kernel(alg: Algebra, blocks: list[Matrix]) -> Subspace:
    if not blocks:
        return alg.full()
    m = blocks[0]
    for b in blocks[1:]:
        m = m.vstack(b)
    return solve_right_kernel(m)


def annihilator_left(alg: Algebra, m: Subspace, h: Subspace | None = None) -> Subspace:
    """``{a in h : [a, m] = 0}``; ``h`` defaults to the whole algebra."""
    h = alg.full() if h is None else h
    _check_subspace(alg, m)
    _check_subspace(alg, h)
    return _stacked_kernel(alg, [right_multiplication(alg, v) for v in m.basis]) & h


def annihilator_right(alg: Algebra, m: Subspace, h: Subspace | None = None) -> Subspace:
    """``{a in h : [m, a] = 0}``."""
    h = alg.full() if h is None else h
    _check_subspace(alg, m)
    _check_subspace(alg, h)
    return _stacked_kernel(alg, [left_multiplication(alg, v) for v in m.basis]) & h


def annihilator(alg: Algebra, m: Subspace, h: Subspace | None = None) -> Subspace:
    return annihilator_left(alg, m, h) & annihilator_right(alg, m, h)


def left_center(alg: Algebra) -> Subspace:
    return annihilator_left(alg, alg.full())


def right_center(alg: Algebra) -> Subspace:
    return annihilator_right(alg, alg.full())


def center(alg: Algebra) -> Subspace:
    return left_center(alg) & right_center(alg)


def product_subspace(alg: Algebra, a: Subspace, b: Subspace) -> Subspace:
    """``[A, B]``: span of brackets of basis vectors (enough by bilinearity)."""
    _check_subspace(alg, a)
    _check_subspace(alg, b)
    return alg.span(*(bracket(alg, u, v) for u in a.basis for v in b.basis))


def derived_subalgebra(alg: Algebra) -> Subspace:
    return product_subspace(alg, alg.full(), alg.full())


def lower_central_series(alg: Algebra) -> list[Subspace]:
    """``gamma_1 = L``, ``gamma_{k+1} = [L, gamma_k]``, stopping once a term repeats."""
    series = [alg.full()]
    while True:
        nxt = product_subspace(alg, alg.full(), series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def _next_center(alg: Algebra, z: Subspace) -> Subspace:
    # x is central modulo z iff every [x, e_j] and [e_j, x] dies under a
    # matrix whose kernel is exactly z.
    if z.dim == alg.dim:
        return z
    proj = z.annihilator().basis_matrix()
    blocks = []
    for j in range(alg.dim):
        e = alg.basis_vector(j + 1)
        blocks.append(proj @ right_multiplication(alg, e))
        blocks.append(proj @ left_multiplication(alg, e))
    return _stacked_kernel(alg, blocks)


def upper_central_series(alg: Algebra) -> list[Subspace]:
    """``zeta_0 = 0`` and ``zeta_{k+1}/zeta_k = center(L/zeta_k)``, until it repeats."""
    series = [alg.zero()]
    while True:
        nxt = _next_center(alg, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def nilpotency_class(alg: Algebra) -> int | None:
    """Least ``c`` with ``gamma_{c+1} = 0``; ``None`` when the algebra is not nilpotent."""
    series = lower_central_series(alg)
    if series[-1].dim != 0:
        return None
    return len(series) - 1


def is_subalgebra(alg: Algebra, a: Subspace) -> bool:
    _check_subspace(alg, a)
    return all(a.contains(bracket(alg, u, v)) for u in a.basis for v in a.basis)


def is_left_ideal(alg: Algebra, a: Subspace) -> bool:
    """Subalgebra with ``[b, a]`` in ``a`` for all ``b``."""
    return is_subalgebra(alg, a) and all(
        a.contains(bracket(alg, alg.basis_vector(i + 1), u)) for i in range(alg.dim) for u in a.basis)


def is_right_ideal(alg: Algebra, a: Subspace) -> bool:
    """Subalgebra with ``[a, b]`` in ``a`` for all ``b``."""
    return is_subalgebra(alg, a) and all(
        a.contains(bracket(alg, u, alg.basis_vector(i + 1))) for i in range(alg.dim) for u in a.basis)


def is_ideal(alg: Algebra, a: Subspace) -> bool:
    return is_left_ideal(alg, a) and is_right_ideal(alg, a)
