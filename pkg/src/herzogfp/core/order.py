"""Monomial orders given by integer weight matrices.

An order compares the images ``M @ a`` and ``M @ b`` lexicographically.  The
named presets (lex, degrevlex and block combinations of them) all produce a
matrix, so every comparison in the package goes through one kernel.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from ..errors import DimensionMismatch, InvalidOrder
from .monomial import Monomial


def _rank(rows: Sequence[Sequence[int]]) -> int:
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                factor = mat[r][col] / mat[rank][col]
                mat[r] = [x - factor * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def _compile_key(rows: tuple[tuple[int, ...], ...]) -> Callable[[Monomial], tuple]:
    # Generated straight-line code; key() sits in the innermost Groebner loops.
    exprs = []
    for row in rows:
        terms = []
        for i, w in enumerate(row):
            if w == 1:
                terms.append(f"m[{i}]")
            elif w == -1:
                terms.append(f"-m[{i}]")
            elif w != 0:
                terms.append(f"{w}*m[{i}]")
        exprs.append("+".join(terms) if terms else "0")
    src = "lambda m: (" + ", ".join(exprs) + ",)"
    return eval(src, {})


@dataclass(frozen=True)
class MonomialOrder:
    """A global monomial order defined by a full-rank integer weight matrix.

    ``tag`` records how the order was built (for printing and reports); two
    orders with the same matrix compare equal whatever their tags.
    """

    rows: tuple[tuple[int, ...], ...]
    tag: tuple = field(default=("matrix",), compare=False)

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise InvalidOrder("empty weight matrix")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise InvalidOrder("ragged weight matrix")
        if _rank(rows) != n:
            raise InvalidOrder("weight matrix is rank deficient; it does not define a total order")
        for i in range(n):
            first = next((r[i] for r in rows if r[i] != 0), 0)
            if first <= 0:
                raise InvalidOrder(f"variable {i} is not larger than 1 under this matrix")
        object.__setattr__(self, "_key", _compile_key(rows))

    def __reduce__(self):
        return (MonomialOrder, (self.rows, self.tag))

    @property
    def nvars(self) -> int:
        return len(self.rows[0])

    def key(self, m: Monomial) -> tuple:
        """Sort key: larger key means larger monomial."""
        return self._key(m)

    def compare(self, a: Monomial, b: Monomial) -> int:
        """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
        if len(a) != self.nvars or len(b) != self.nvars:
            raise DimensionMismatch(
                f"monomials of length {len(a)}, {len(b)} against an order on {self.nvars} variables"
            )
        ka, kb = self._key(a), self._key(b)
        return (ka > kb) - (ka < kb)

    def describe(self, names: Sequence[str] | None = None) -> str:
        """Render the order in the textual order-spec grammar."""
        names = list(names) if names is not None else [f"x{i}" for i in range(self.nvars)]

        def part(kind, group):
            return f"{kind}({'>'.join(names[i] for i in group)})"

        kind = self.tag[0]
        if kind in ("lex", "degrevlex"):
            return part(kind, self.tag[1])
        if kind == "block":
            return "block(" + "; ".join(part(k, g) for k, g in self.tag[1]) + ")"
        return "matrix(" + str([list(r) for r in self.rows]).replace(" ", "") + ")"

    def __str__(self) -> str:
        return self.describe()


def _identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def _unit(n: int, i: int, w: int = 1) -> tuple[int, ...]:
    return tuple(w if j == i else 0 for j in range(n))


def _check_group(n: int, group: Sequence[int]) -> tuple[int, ...]:
    group = tuple(int(i) for i in group)
    if len(set(group)) != len(group) or any(not 0 <= i < n for i in group):
        raise InvalidOrder(f"invalid variable group {group} for {n} variables")
    return group


def _lex_rows(n: int, group: Sequence[int]) -> list[tuple[int, ...]]:
    return [_unit(n, i) for i in group]


def _degrevlex_rows(n: int, group: Sequence[int]) -> list[tuple[int, ...]]:
    # Total degree over all variables, then smaller exponent of the last group
    # variable wins, and so on backwards.  On the full variable set the final
    # row is implied by the others and is dropped.
    rows = [(1,) * n]
    tail = group[1:] if len(group) == n else group
    rows.extend(_unit(n, i, -1) for i in reversed(tail))
    return rows


def lex(n: int, perm: Sequence[int] | None = None) -> MonomialOrder:
    """Lexicographic order with ``perm[0] > perm[1] > ...``."""
    perm = _check_group(n, _identity(n) if perm is None else perm)
    if len(perm) != n:
        raise InvalidOrder("lex needs a permutation of all variables")
    return MonomialOrder(tuple(_lex_rows(n, perm)), ("lex", perm))


def degrevlex(n: int, perm: Sequence[int] | None = None) -> MonomialOrder:
    """Graded reverse lexicographic order with ``perm[0] > perm[1] > ...``."""
    perm = _check_group(n, _identity(n) if perm is None else perm)
    if len(perm) != n:
        raise InvalidOrder("degrevlex needs a permutation of all variables")
    return MonomialOrder(tuple(_degrevlex_rows(n, perm)), ("degrevlex", perm))


def block(n: int, parts: Sequence[tuple[str, Sequence[int]]]) -> MonomialOrder:
    """Stack the weight rows of several preset parts.

    Each part is ``("lex", group)`` or ``("degrevlex", group)``.  A lex part
    contributes one unit row per group variable, largest first.  A degrevlex
    part contributes the ambient total degree followed by negated unit rows
    for its group, last variable first, so ``[("degrevlex", [3]), ("lex",
    [0, 1, 2])]`` grades by degree, prefers a smaller power of ``x3`` and then
    breaks ties lexicographically in ``x0 > x1 > x2``.
    """
    rows: list[tuple[int, ...]] = []
    tag_parts = []
    for kind, group in parts:
        group = _check_group(n, group)
        if kind == "lex":
            rows.extend(_lex_rows(n, group))
        elif kind == "degrevlex":
            rows.extend(_degrevlex_rows(n, group))
        else:
            raise InvalidOrder(f"unknown block part {kind!r}")
        tag_parts.append((kind, group))
    return MonomialOrder(tuple(rows), ("block", tuple(tag_parts)))


def matrix(rows: Sequence[Sequence[int]]) -> MonomialOrder:
    return MonomialOrder(tuple(tuple(r) for r in rows), ("matrix",))


def weighted(weights: Sequence[int], tiebreak: MonomialOrder) -> MonomialOrder:
    """Positive weight vector refined by ``tiebreak``."""
    if len(weights) != tiebreak.nvars or any(w <= 0 for w in weights):
        raise InvalidOrder("weights must be positive and match the variable count")
    return MonomialOrder((tuple(weights),) + tiebreak.rows, ("matrix",))


def elimination(k: int, base: MonomialOrder) -> MonomialOrder:
    """Order on ``k`` auxiliary variables followed by ``base``'s variables.

    Any monomial involving an auxiliary variable beats every monomial free of
    them; ties fall through to degrevlex on the auxiliaries, then ``base``.
    """
    n = base.nvars
    total = k + n
    rows = [tuple([1] * k + [0] * n)]
    if k > 1:
        rows.extend(tuple(-1 if j == i else 0 for j in range(total)) for i in reversed(range(1, k)))
    rows.extend(tuple([0] * k) + row for row in base.rows)
    return MonomialOrder(tuple(rows), ("matrix",))
