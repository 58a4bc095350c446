"""Worked instances: rational normal curves, Fermat cubics, singular cubic surfaces
and the small ideals used in the F-purity and compatibility examples."""

from __future__ import annotations

from .core.fields import GF, QQ
from .core.order import MonomialOrder, block, degrevlex
from .core.polynomial import Polynomial, variables
from .core.substitution import LinearSubstitution
from .groebner import Ideal


def rational_normal_curve(d: int, field=QQ) -> Ideal:
    """2-minors of the 2 x d Hankel matrix with rows ``x_0..x_{d-1}`` and ``x_1..x_d``."""
    x = variables(d + 1, field)
    gens = [x[i] * x[j + 1] - x[i + 1] * x[j] for i in range(d) for j in range(i + 1, d)]
    return Ideal(gens, d + 1, field)


def rational_normal_curve_initial(d: int) -> list[tuple[int, ...]]:
    """Expected lex initial ideal: ``x_i x_j`` with ``i + 1 < j``."""
    n = d + 1
    return [tuple(1 if k in (i, j) else 0 for k in range(n)) for i in range(n) for j in range(i + 2, n)]


def fermat(nvars: int, degree: int = 3, field=QQ) -> Polynomial:
    return sum((v**degree for v in variables(nvars, field)), Polynomial.zero(nvars, field))


def fermat_change_of_variables() -> LinearSubstitution:
    """X -> X+Y+Z, Y -> -(X+Y), Z -> -(X+Z), W -> X+W."""
    return LinearSubstitution([[1, 1, 1, 0], [-1, -1, 0, 0], [-1, 0, -1, 0], [1, 0, 0, 1]])


def fermat_transformed() -> Polynomial:
    X, Y, Z, W = variables(4)
    return 6 * X * Y * Z + 3 * Y**2 * Z + 3 * Y * Z**2 + 3 * X**2 * W + 3 * X * W**2 + W**3


def cubic_surface_case1() -> Polynomial:
    x0, x1, x2, x3 = variables(4)
    return x3 * x0**2 + x1**3 + x2**3


def case1_change_of_variables() -> LinearSubstitution:
    """X0 -> X0+X1, X1 -> -(X1+X3), X2 -> X1+X2, X3 -> 3 X3."""
    return LinearSubstitution([[1, 1, 0, 0], [0, -1, 0, -1], [0, 1, 1, 0], [0, 0, 0, 3]])


def case1_transformed() -> Polynomial:
    x0, x1, x2, x3 = variables(4)
    return (6 * x0 * x1 * x3 + 3 * x0**2 * x3 - 3 * x1 * x3**2 - x3**3
            + 3 * x1**2 * x2 + 3 * x1 * x2**2 + x2**3)


def case1_order() -> MonomialOrder:
    return degrevlex(4, (1, 0, 3, 2))


def cubic_surface_d5() -> Polynomial:
    x0, x1, x2, x3 = variables(4)
    return x3 * x0**2 + x0 * x2**2 + x1**2 * x2 + x0 * x1 * x2


def cubic_surface_e6() -> Polynomial:
    x0, x1, x2, x3 = variables(4)
    return x3 * x0**2 + x0 * x2**2 + x1**3 + x0 * x1 * x2


def e6_order() -> MonomialOrder:
    """Degree, then a smaller power of x3, then lex x0 > x1 > x2."""
    return block(4, [("degrevlex", (3,)), ("lex", (0, 1, 2))])


def nonpure_surface(field=QQ) -> Ideal:
    """(XY, XZ, Y(ZU - W^2)) in variables X, Y, Z, U, W."""
    X, Y, Z, U, W = variables(5, field)
    return Ideal([X * Y, X * Z, Y * (Z * U - W**2)], 5, field)


NONPURE_SURFACE_NAMES = ["X", "Y", "Z", "U", "W"]


def square_of_maximal(p: int = 2) -> Ideal:
    """(x, y)^2 over GF(p)."""
    x, y = variables(2, GF(p))
    return Ideal([x**2, x * y, y**2], 2, GF(p))
