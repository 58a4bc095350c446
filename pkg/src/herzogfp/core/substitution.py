"""Invertible linear changes of variables."""

from __future__ import annotations

from typing import Sequence

from ..errors import AlgebraError, DimensionMismatch, FieldMismatch
from .fields import QQ, GF, RationalField
from .polynomial import Polynomial


def _invert(matrix, field):
    n = len(matrix)
    aug = [list(row) + [field.one if i == j else field.zero for j in range(n)] for i, row in enumerate(matrix)]
    red = field.reduce
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = field.inv(aug[col][col])
        aug[col] = [red(x * inv) for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [red(x - factor * y) for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


class LinearSubstitution:
    """The ring automorphism sending ``X_i`` to ``sum_j matrix[i][j] * X_j``.

    Construction rejects singular matrices, so every instance carries its exact
    inverse.  Applying ``s`` and then ``t`` is the substitution with matrix
    ``s.matrix @ t.matrix`` (see :meth:`then`).
    """

    __slots__ = ("matrix", "inverse_matrix", "field")

    def __init__(self, matrix: Sequence[Sequence], field=QQ, _inverse=None):
        n = len(matrix)
        if any(len(row) != n for row in matrix):
            raise DimensionMismatch("substitution matrix must be square")
        self.field = field
        self.matrix = tuple(tuple(field.convert(x) for x in row) for row in matrix)
        inverse = _inverse if _inverse is not None else _invert(self.matrix, field)
        if inverse is None:
            raise AlgebraError("substitution matrix is singular")
        self.inverse_matrix = inverse

    @classmethod
    def identity(cls, n: int, field=QQ) -> "LinearSubstitution":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def from_images(cls, images: Sequence[Polynomial]) -> "LinearSubstitution":
        """Build from the images of the variables, each a linear form."""
        n = len(images)
        field = images[0].field if images else QQ
        rows = []
        for img in images:
            if img.nvars != n:
                raise DimensionMismatch("image polynomials must live in the same ring")
            if any(sum(m) != 1 for m in img.terms):
                raise AlgebraError(f"image {img} is not a linear form")
            row = [field.zero] * n
            for m, c in img.terms.items():
                row[m.index(1)] = c
            rows.append(row)
        return cls(rows, field)

    @property
    def nvars(self) -> int:
        return len(self.matrix)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearSubstitution) and self.field == other.field and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((self.field, self.matrix))

    def __repr__(self) -> str:
        return f"LinearSubstitution({[list(map(str, r)) for r in self.matrix]}, field={self.field!r})"

    def images(self) -> list[Polynomial]:
        n = self.nvars
        out = []
        for row in self.matrix:
            terms = {tuple(1 if k == j else 0 for k in range(n)): c for j, c in enumerate(row) if c}
            out.append(Polynomial(n, terms, self.field))
        return out

    def inverse(self) -> "LinearSubstitution":
        return LinearSubstitution(self.inverse_matrix, self.field, _inverse=self.matrix)

    def then(self, other: "LinearSubstitution") -> "LinearSubstitution":
        """The substitution ``f -> other(self(f))``."""
        if other.field != self.field:
            raise FieldMismatch("substitutions over different fields")
        n = self.nvars
        red = self.field.reduce
        prod = [
            [red(sum(self.matrix[i][k] * other.matrix[k][j] for k in range(n))) for j in range(n)]
            for i in range(n)
        ]
        return LinearSubstitution(prod, self.field)

    def reduce_mod(self, p: int) -> "LinearSubstitution":
        if not isinstance(self.field, RationalField):
            raise FieldMismatch("reduce_mod needs a rational substitution")
        return LinearSubstitution([[GF(p).convert(x) for x in row] for row in self.matrix], GF(p))

    def apply(self, f: Polynomial) -> Polynomial:
        """Replace every variable of ``f`` by its image linear form and expand."""
        if f.nvars != self.nvars:
            raise DimensionMismatch(f"substitution on {self.nvars} variables, polynomial on {f.nvars}")
        if f.field != self.field:
            raise FieldMismatch(f"substitution over {self.field!r} applied to polynomial over {f.field!r}")
        images = self.images()
        powers: list[dict[int, Polynomial]] = [{0: Polynomial.constant(self.nvars, 1, self.field)} for _ in images]

        def power(i: int, e: int) -> Polynomial:
            cache = powers[i]
            if e not in cache:
                k = max(k for k in cache if k < e)
                acc = cache[k]
                for j in range(k + 1, e + 1):
                    acc = acc * images[i]
                    cache[j] = acc
            return cache[e]

        result = Polynomial.zero(self.nvars, self.field)
        for m, c in f.terms.items():
            term = Polynomial.constant(self.nvars, c, self.field)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    __call__ = apply


def apply_substitution(f: Polynomial, s: LinearSubstitution) -> Polynomial:
    return s.apply(f)
