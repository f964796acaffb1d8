"""Endomorphism tests, brute-force automorphism groups, and finite matrix groups.

A linear map is identified with its matrix (column ``j`` = image of
``e_j``), so :data:`LinearMap` is just :class:`~leibniz_aut.linalg.Matrix`.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

import numpy as np

from .algebra import Algebra, bracket
from .catalog import d_matrix, j_matrix, t_matrix
from .errors import (BudgetExceeded, DimensionMismatch, FieldMismatch, NotFiniteField,
                     NotInvariant)
from .linalg import Field, Matrix, Subspace, invert

LinearMap = Matrix

DEFAULT_BUDGET = 2_000_000
_CHUNK = 1 << 16


def _check_map(alg: Algebra, f: Matrix) -> None:
    if f.field != alg.field:
        raise FieldMismatch(f"map over {f.field}, algebra over {alg.field}")
    if f.shape != (alg.dim, alg.dim):
        raise DimensionMismatch(f"{f.shape} map on a {alg.dim}-dimensional algebra")


def is_endomorphism(alg: Algebra, f: Matrix) -> bool:
    """``f([e_i, e_j]) == [f(e_i), f(e_j)]`` for every basis pair."""
    _check_map(alg, f)
    cols = f.columns()
    for i in range(alg.dim):
        for j in range(alg.dim):
            if f @ alg.table[i][j] != bracket(alg, cols[i], cols[j]):
                return False
    return True


def is_automorphism(alg: Algebra, f: Matrix) -> bool:
    return is_endomorphism(alg, f) and f.det() != 0


# -- finite matrix groups -----------------------------------------------------


@dataclass(frozen=True)
class MatrixGroup:
    """A finite set of n x n matrices, meant to be a group.

    Construction does not validate; use :func:`is_group`.  Families and
    enumerations returned by this package are validated before return.
    """

    field: Field
    n: int
    elements: frozenset

    @classmethod
    def of(cls, field: Field, n: int, elements: Iterable[Matrix]) -> MatrixGroup:
        elements = frozenset(elements)
        for m in elements:
            if m.field != field:
                raise FieldMismatch(f"{m.field} matrix in a group over {field}")
            if m.shape != (n, n):
                raise DimensionMismatch(f"{m.shape} matrix in a group of degree {n}")
        return cls(field, n, elements)

    @classmethod
    def trivial(cls, field: Field, n: int) -> MatrixGroup:
        return cls(field, n, frozenset([Matrix.identity(field, n)]))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Matrix:
        return Matrix.identity(self.field, self.n)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Matrix]:
        return iter(self.elements)

    def __contains__(self, m: Matrix) -> bool:
        return m in self.elements

    def sorted(self) -> list[Matrix]:
        return sorted(self.elements, key=lambda m: m.entries)

    def intersection(self, other: MatrixGroup) -> MatrixGroup:
        _check_groups(self, other)
        return MatrixGroup(self.field, self.n, self.elements & other.elements)

    def filter(self, pred: Callable[[Matrix], bool]) -> MatrixGroup:
        return MatrixGroup(self.field, self.n, frozenset(m for m in self.elements if pred(m)))


def _check_groups(a: MatrixGroup, b: MatrixGroup) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"groups over {a.field} and {b.field}")
    if a.n != b.n:
        raise DimensionMismatch(f"groups of degree {a.n} and {b.n}")


def is_group(g: MatrixGroup) -> bool:
    """Identity present, closed under products and inverses."""
    if g.identity not in g.elements:
        return False
    for x in g.elements:
        if x.det() == 0 or invert(x) not in g.elements:
            return False
    return all(x @ y in g.elements for x in g.elements for y in g.elements)


def is_subgroup(h: MatrixGroup, g: MatrixGroup) -> bool:
    _check_groups(h, g)
    return h.elements <= g.elements and is_group(h)


def is_normal(n: MatrixGroup, g: MatrixGroup) -> bool:
    """Subgroup with ``x^-1 n x`` inside ``n`` for every ``x`` in ``g``."""
    if not is_subgroup(n, g):
        return False
    for x in g.elements:
        xinv = invert(x)
        if any(xinv @ y @ x not in n.elements for y in n.elements):
            return False
    return True


def is_internal_semidirect(g: MatrixGroup, n: MatrixGroup, h: MatrixGroup) -> bool:
    """``g = n h`` with ``n`` normal, ``h`` a subgroup, and ``n`` meeting ``h`` trivially."""
    _check_groups(g, n)
    _check_groups(g, h)
    if not (is_normal(n, g) and is_subgroup(h, g)):
        return False
    if n.elements & h.elements != {g.identity}:
        return False
    return {x @ y for x in n.elements for y in h.elements} == g.elements


def centralizer_of_subalgebra(g: MatrixGroup, a: Subspace) -> MatrixGroup:
    """``C_G(A)``: elements fixing every vector of ``a``."""
    if a.ambient_dim != g.n:
        raise DimensionMismatch(f"subspace of F^{a.ambient_dim} for a group of degree {g.n}")
    return g.filter(lambda m: all(m @ v == v for v in a.basis))


def centralizer_of_quotient(g: MatrixGroup, a: Subspace) -> MatrixGroup:
    """``C_G(L/A)``: elements with ``m(e_i) - e_i`` in ``a`` for every ``i``."""
    if a.ambient_dim != g.n:
        raise DimensionMismatch(f"subspace of F^{a.ambient_dim} for a group of degree {g.n}")
    for m in g.elements:
        if a.image(m) != a:
            raise NotInvariant("subspace is not invariant under the group")
    ident = g.identity
    return g.filter(lambda m: all(a.contains(c) for c in (m - ident).columns()))


class Invariance(enum.Enum):
    EQUAL = "equal"
    MAPPED_INTO = "mapped_into"
    NEITHER = "neither"


def invariance_check(alg: Algebra, f: Matrix, s: Subspace) -> Invariance:
    """Whether ``f(s) == s``, ``f(s)`` is a proper subspace of ``s``, or neither."""
    _check_map(alg, f)
    if s.ambient_dim != alg.dim:
        raise DimensionMismatch(f"subspace of F^{s.ambient_dim} in a {alg.dim}-dimensional algebra")
    img = s.image(f)
    if img == s:
        return Invariance.EQUAL
    if img <= s:
        return Invariance.MAPPED_INTO
    return Invariance.NEITHER


# -- isomorphism witnesses ----------------------------------------------------


def is_isomorphism(domain: list, op: Callable, phi: Callable[[object], Matrix], g: MatrixGroup) -> bool:
    """Exhaustively check that ``phi`` is a bijective homomorphism ``domain -> g``."""
    images = {x: phi(x) for x in domain}
    if len(set(images.values())) != len(domain) or set(images.values()) != g.elements:
        return False
    return all(images[op(x, y)] == images[x] @ images[y] for x in domain for y in domain)


def _require_finite(field: Field) -> None:
    if not field.is_finite:
        raise NotFiniteField(f"{field} is not a finite field")


def witness_iso_to_additive_pairs(t: MatrixGroup) -> bool:
    """``(a3, b3) -> t_matrix(a3, b3)`` is an isomorphism ``(F,+)^2 -> t``."""
    f = t.field
    _require_finite(f)
    if t.n != 3:
        return False
    pairs = list(itertools.product(f.elements(), repeat=2))
    return is_isomorphism(
        pairs,
        lambda x, y: (f.add(x[0], y[0]), f.add(x[1], y[1])),
        lambda x: t_matrix(f, *x),
        t,
    )


def witness_iso_to_multiplicative(h: MatrixGroup, kind: str) -> bool:
    """``F^x -> h`` via ``s -> j_matrix(s - 1)`` (kind ``"J"``) or ``s -> d_matrix(s)`` (``"D"``)."""
    f = h.field
    _require_finite(f)
    if h.n != 3:
        return False
    if kind == "J":
        phi = lambda s: j_matrix(f, f.sub(s, f.one))  # noqa: E731
    elif kind == "D":
        phi = lambda s: d_matrix(f, s)  # noqa: E731
    else:
        raise ValueError(f"kind must be 'J' or 'D', not {kind!r}")
    return is_isomorphism(f.units(), f.mul, phi, h)


# -- brute-force enumeration --------------------------------------------------


def _batch_det_mod(m: np.ndarray, p: int) -> np.ndarray:
    """Determinants mod p of a stack of n x n integer matrices (permutation expansion)."""
    n = m.shape[1]
    total = np.zeros(m.shape[0], dtype=np.int64)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        term = np.ones(m.shape[0], dtype=np.int64)
        for i, j in enumerate(perm):
            term = term * m[:, i, j] % p
        total = (total - term) % p if inversions % 2 else (total + term) % p
    return total


def enumerate_automorphisms(alg: Algebra, budget: int = DEFAULT_BUDGET) -> MatrixGroup:
    """All automorphisms of ``alg`` over F_p, by scanning every n x n matrix.

    Candidates are processed in vectorized chunks: singular matrices are
    dropped by determinant, then the bracket condition is tested on all
    basis pairs at once.
    """
    f = alg.field
    if not f.is_finite:
        raise NotFiniteField(f"cannot enumerate automorphisms over {f}")
    p, n = f.p, alg.dim
    total = p ** (n * n)
    if total > budget:
        raise BudgetExceeded(f"{p}^{n * n} = {total} candidate matrices exceeds budget {budget}")

    c = np.array(alg.table, dtype=np.int64)  # c[i, j, k]
    powers = p ** np.arange(n * n, dtype=np.int64)
    found: list[Matrix] = []
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        m = (idx[:, None] // powers % p).reshape(-1, n, n)
        m = m[_batch_det_mod(m, p) != 0]
        if not len(m):
            continue
        # f([e_i, e_j])_k = sum_l m[k, l] c[i, j, l]
        lhs = np.einsum("bkl,ijl->bijk", m, c) % p
        # [f e_i, f e_j]_k = sum_{a, d} m[a, i] m[d, j] c[a, d, k]
        half = np.einsum("bai,adk->bidk", m, c) % p
        rhs = np.einsum("bidk,bdj->bijk", half, m) % p
        ok = (lhs == rhs).reshape(len(m), -1).all(axis=1)
        for mat in m[ok]:
            found.append(Matrix(f, n, n, tuple(int(x) for x in mat.ravel())))
    group = MatrixGroup(f, n, frozenset(found))
    if not is_group(group):
        raise AssertionError("enumerated automorphisms do not form a group")
    return group
