"""Exact scalars over Q and F_p, dense matrices, and canonical subspaces.

Scalars are plain Python values: an ``int`` in ``[0, p)`` for a prime field
and a reduced :class:`fractions.Fraction` for the rationals.  The owning
:class:`Field` does all arithmetic and keeps values canonical, so scalar
equality is ordinary ``==``.

Matrices follow the column convention: column ``j`` of a linear map holds
the coordinates of the image of basis vector ``e_j``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .errors import BadField, DimensionMismatch, FieldMismatch, SingularMatrix

Scalar = Union[int, Fraction]
Vector = tuple  # tuple[Scalar, ...]

_MAX_MODULUS = 2**31
_FIELD_RE = re.compile(r"^\s*(?:(Q)|F(\d+))\s*$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (``p is None``) or the prime field F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or not 2 <= self.p < _MAX_MODULUS:
                raise BadField(f"modulus {self.p!r} outside [2, 2^31)")
            if not _is_prime(self.p):
                raise BadField(f"{self.p} is not prime")

    @classmethod
    def rationals(cls) -> Field:
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> Field:
        return cls(p)

    @classmethod
    def parse(cls, spec: str) -> Field:
        """Read ``Q`` or ``F<p>``."""
        m = _FIELD_RE.match(spec)
        if m is None:
            raise BadField(f"bad field spec {spec!r} (expected Q or F<p>)")
        if m.group(1):
            return cls(None)
        return cls(int(m.group(2)))

    def __str__(self) -> str:
        return "Q" if self.p is None else f"F{self.p}"

    def __repr__(self) -> str:
        return f"Field({self})"

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def order(self) -> int | None:
        return self.p

    # -- scalar arithmetic -------------------------------------------------

    @property
    def zero(self) -> Scalar:
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.p is not None else Fraction(1)

    def __call__(self, x) -> Scalar:
        """Coerce an int, Fraction or numeric string into this field."""
        if isinstance(x, str):
            return self.parse_scalar(x)
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in {self}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def reduce(self, x: Scalar) -> Scalar:
        """Canonicalize the result of raw ``+ - *`` on canonical scalars."""
        return x % self.p if self.p is not None else x

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return self.reduce(a + b)

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return self.reduce(a - b)

    def neg(self, a: Scalar) -> Scalar:
        return self.reduce(-a)

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return self.reduce(a * b)

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise ZeroDivisionError(f"division by zero in {self}")
        if self.p is None:
            return 1 / Fraction(a)
        return pow(a, -1, self.p)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def elements(self) -> list[Scalar]:
        if self.p is None:
            raise ValueError("Q is infinite")
        return list(range(self.p))

    def units(self) -> list[Scalar]:
        return [x for x in self.elements() if x != 0]

    def render(self, x: Scalar) -> str:
        return str(x)

    def parse_scalar(self, text: str) -> Scalar:
        """Parse ``num`` or ``num/den``; over F_p the quotient is num * den^-1."""
        try:
            value = Fraction(text.strip())
        except ValueError:
            raise ValueError(f"bad scalar {text!r}") from None
        if "." in text or "e" in text.lower():
            raise ValueError(f"bad scalar {text!r}")
        return self(value)

    def vector(self, values: Iterable) -> Vector:
        return tuple(self(v) for v in values)

    def basis_vector(self, n: int, i: int) -> Vector:
        """The 1-based standard basis vector e_i of F^n."""
        return tuple(self.one if k == i - 1 else self.zero for k in range(n))


def _check_field(a: Field, b: Field) -> None:
    if a != b:
        raise FieldMismatch(f"{a} vs {b}")


# -- matrices -----------------------------------------------------------------


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix, entries stored row-major in a flat tuple."""

    field: Field
    nrows: int
    ncols: int
    entries: tuple

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(field, len(rows), ncols, tuple(field(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, field: Field, cols: Sequence[Sequence]) -> Matrix:
        n = len(cols[0])
        return cls.from_rows(field, [[c[i] for c in cols] for i in range(n)], len(cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        return cls(field, n, n, tuple(field.one if i == j else field.zero
                                      for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> Matrix:
        return cls(field, nrows, ncols, (field.zero,) * (nrows * ncols))

    @classmethod
    def diag(cls, field: Field, values: Sequence) -> Matrix:
        n = len(values)
        return cls.from_rows(field, [[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.ncols:(i + 1) * self.ncols]

    def rows(self) -> list[Vector]:
        return [self.row(i) for i in range(self.nrows)]

    def column(self, j: int) -> Vector:
        return self.entries[j::self.ncols]

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> Matrix:
        return Matrix(self.field, self.ncols, self.nrows,
                      tuple(x for j in range(self.ncols) for x in self.column(j)))

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            _check_field(self.field, other.field)
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"{self.shape} @ {other.shape}")
            n, m, k = self.nrows, self.ncols, other.ncols
            a, b, red = self.entries, other.entries, self.field.reduce
            out = tuple(
                red(sum(a[i * m + t] * b[t * k + j] for t in range(m)))
                for i in range(n) for j in range(k)
            )
            return Matrix(self.field, n, k, out)
        v = tuple(other)
        if len(v) != self.ncols:
            raise DimensionMismatch(f"{self.shape} @ vector of length {len(v)}")
        m, a, red = self.ncols, self.entries, self.field.reduce
        return tuple(red(sum(a[i * m + t] * v[t] for t in range(m))) for i in range(self.nrows))

    def __add__(self, other: Matrix) -> Matrix:
        _check_field(self.field, other.field)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        red = self.field.reduce
        return Matrix(self.field, self.nrows, self.ncols,
                      tuple(red(x + y) for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: Matrix) -> Matrix:
        _check_field(self.field, other.field)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        red = self.field.reduce
        return Matrix(self.field, self.nrows, self.ncols,
                      tuple(red(x - y) for x, y in zip(self.entries, other.entries)))

    def vstack(self, other: Matrix) -> Matrix:
        _check_field(self.field, other.field)
        if self.ncols != other.ncols:
            raise DimensionMismatch("column counts differ")
        return Matrix(self.field, self.nrows + other.nrows, self.ncols, self.entries + other.entries)

    def rank(self) -> int:
        return rref(self)[1]

    def det(self) -> Scalar:
        if not self.is_square:
            raise DimensionMismatch("determinant of a non-square matrix")
        f = self.field
        rows = [list(r) for r in self.rows()]
        n = self.nrows
        d = f.one
        for c in range(n):
            piv = next((r for r in range(c, n) if rows[r][c] != 0), None)
            if piv is None:
                return f.zero
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                d = f.neg(d)
            d = f.mul(d, rows[c][c])
            inv = f.inv(rows[c][c])
            for r in range(c + 1, n):
                if rows[r][c] != 0:
                    factor = f.mul(rows[r][c], inv)
                    rows[r] = [f.reduce(x - factor * y) for x, y in zip(rows[r], rows[c])]
        return d

    def render(self) -> str:
        return " ".join(self.field.render(x) for x in self.entries)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows())
        return f"Matrix[{self.field}]({body})"


def _rref_rows(field: Field, rows: list[list]) -> tuple[list[list], list[int]]:
    """Gauss-Jordan on a list of row lists (mutated); returns rows and pivot columns."""
    red = field.reduce
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [red(x * inv) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [red(x - factor * y) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form (zero rows kept at the bottom) and rank."""
    rows, pivots = _rref_rows(m.field, [list(r) for r in m.rows()])
    return Matrix(m.field, m.nrows, m.ncols, tuple(x for r in rows for x in r)), len(pivots)


def solve_right_kernel(m: Matrix) -> Subspace:
    """The subspace ``{x : m x = 0}``."""
    f = m.field
    rows, pivots = _rref_rows(f, [list(r) for r in m.rows()])
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [f.zero] * m.ncols
        v[fc] = f.one
        for r, pc in enumerate(pivots):
            v[pc] = f.neg(rows[r][fc])
        basis.append(v)
    return Subspace.span(f, m.ncols, basis)


def invert(m: Matrix) -> Matrix:
    if not m.is_square:
        raise DimensionMismatch(f"cannot invert a {m.nrows}x{m.ncols} matrix")
    f, n = m.field, m.nrows
    rows = [list(r) + [f.one if i == j else f.zero for j in range(n)] for i, r in enumerate(m.rows())]
    rows, pivots = _rref_rows(f, rows) if n else (rows, [])
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return Matrix(f, n, n, tuple(x for r in rows for x in r[n:]))


# -- subspaces ----------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """Subspace of F^n held by its reduced row-echelon basis (no zero rows).

    Build instances with :meth:`span`; the canonical basis makes ``==``
    coincide with equality of subspaces.
    """

    field: Field
    ambient_dim: int
    basis: tuple  # tuple[Vector, ...]

    @classmethod
    def span(cls, field: Field, n: int, vectors: Iterable[Sequence]) -> Subspace:
        rows = [list(field.vector(v)) for v in vectors]
        if any(len(r) != n for r in rows):
            raise DimensionMismatch(f"vector length differs from ambient dimension {n}")
        if not rows:
            return cls(field, n, ())
        rows, pivots = _rref_rows(field, rows)
        return cls(field, n, tuple(tuple(r) for r in rows[:len(pivots)]))

    @classmethod
    def zero(cls, field: Field, n: int) -> Subspace:
        return cls(field, n, ())

    @classmethod
    def full(cls, field: Field, n: int) -> Subspace:
        return cls.span(field, n, Matrix.identity(field, n).rows())

    @property
    def dim(self) -> int:
        return len(self.basis)

    rank = dim

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.basis)

    def _check(self, other: Subspace) -> None:
        _check_field(self.field, other.field)
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(f"ambient dimensions {self.ambient_dim} vs {other.ambient_dim}")

    def basis_matrix(self) -> Matrix:
        return Matrix(self.field, self.dim, self.ambient_dim, tuple(x for v in self.basis for x in v))

    def contains(self, v: Sequence) -> bool:
        v = self.field.vector(v)
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in F^{self.ambient_dim}")
        return Subspace.span(self.field, self.ambient_dim, [*self.basis, v]).dim == self.dim

    __contains__ = contains

    def sum(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace.span(self.field, self.ambient_dim, [*self.basis, *other.basis])

    __add__ = sum

    def annihilator(self) -> Subspace:
        """``{x : v . x = 0 for all v}`` under the standard dot product."""
        if self.dim == 0:
            return Subspace.full(self.field, self.ambient_dim)
        return solve_right_kernel(self.basis_matrix())

    def intersect(self, other: Subspace) -> Subspace:
        self._check(other)
        return self.annihilator().sum(other.annihilator()).annihilator()

    __and__ = intersect

    def equals(self, other: Subspace) -> bool:
        self._check(other)
        return self == other

    def issubspace(self, other: Subspace) -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.basis)

    __le__ = issubspace

    def image(self, m: Matrix) -> Subspace:
        """``m(self)`` for a square matrix acting on column vectors."""
        _check_field(self.field, m.field)
        if m.shape != (self.ambient_dim, self.ambient_dim):
            raise DimensionMismatch(f"{m.shape} map on F^{self.ambient_dim}")
        return Subspace.span(self.field, self.ambient_dim, [m @ v for v in self.basis])

    def render(self) -> str:
        if not self.basis:
            return "(empty)"
        return ";".join("[" + ",".join(self.field.render(x) for x in v) + "]" for v in self.basis)

    def __repr__(self) -> str:
        return f"Subspace[{self.field}^{self.ambient_dim}]({self.render()})"


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a.sum(b)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)
