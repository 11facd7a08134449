"""The half-twist operator X and the factorisation of the braiding through it.

X acts on V_n by ``X v_{n-2j} = (-1)^(n-j) q^(n^2/4 + n/2) v_{-n+2j}``; the
variant X' uses ``i^n`` in place of ``(-1)^(n-j)`` and therefore needs
Gaussian-integer coefficients.  Its coproduct on V (x) V is realised through
the decomposition V (x) V = V_2 + V_0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import GaussianInt, LaurentQ, ONE, quantum_integer
from .linalg import Matrix, V, sign_index
from .qrep import braiding, coproduct_action, ribbon_data, rep

__all__ = [
    "VARIANTS",
    "half_twist",
    "half_twist_inverse",
    "verify_ribbon_square",
    "CGDecomposition",
    "clebsch_gordan",
    "coproduct_half_twist",
    "kr_factorization_check",
]

VARIANTS = ("X", "X_prime")

_I_POW = [GaussianInt(1, 0), GaussianInt(0, 1), GaussianInt(-1, 0), GaussianInt(0, -1)]


def _coefficient(variant: str, n: int, j: int):
    if variant == "X":
        return -1 if (n - j) % 2 else 1
    if variant == "X_prime":
        return _I_POW[n % 4]
    raise ValueError(f"unknown half-twist variant {variant!r}; expected one of {VARIANTS}")


def half_twist(variant: str, n: int, gaussian: bool | None = None) -> Matrix:
    """Antidiagonal action of X (or X') on V_n.

    X' is only available with Gaussian coefficients; asking for it with
    ``gaussian=False`` raises ValueError.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if variant == "X_prime" and gaussian is False:
        raise ValueError("X_prime needs the Gaussian-integer coefficient ring")
    gaussian = bool(gaussian) or variant == "X_prime"
    e = n * n + 2 * n  # quarters of n^2/4 + n/2
    entries = {}
    for j in range(n + 1):
        # v_{n-2j} has index j; v_{-n+2j} has index n - j
        entries[(n - j, j)] = LaurentQ({e: _coefficient(variant, n, j)}, gaussian=gaussian)
    return Matrix((n + 1, n + 1), entries)


def half_twist_inverse(variant: str, n: int, gaussian: bool | None = None) -> Matrix:
    x = half_twist(variant, n, gaussian)
    return Matrix(x.shape, {(j, i): v.unit_inverse() for (i, j), v in x.entries.items()})


def verify_ribbon_square(variant: str, n_max: int = 8) -> list[tuple[int, bool]]:
    """For n <= n_max: does X^2 = (-1)^n q^(n^2/2+n) Id, i.e. X^-2 = Q_t, on V_n?"""
    if n_max > 8:
        raise ValueError("n_max is limited to 8")
    out = []
    qt = ribbon_data("half_twist")
    for n in range(n_max + 1):
        x = half_twist(variant, n)
        x_inv = half_twist_inverse(variant, n)
        expected = LaurentQ({2 * n * n + 4 * n: -1 if n % 2 else 1})
        ok = x @ x == Matrix.identity(n + 1).scale(expected)
        ok = ok and x_inv @ x_inv == Matrix.identity(n + 1).scale(qt.ribbon_scalar(n))
        ok = ok and x @ x_inv == Matrix.identity(n + 1)
        out.append((n, ok))
    return out


@dataclass(frozen=True)
class CGDecomposition:
    """Change of basis from V (x) V to V_2 + V_0.

    Columns of ``basis`` are w_2, w_0, w_-2 (a standard ladder basis of V_2)
    and the singlet s.  ``det`` is a unit times [2], which is not invertible
    in the Laurent ring, so the inverse is kept as ``adjugate / det``.
    """

    basis: Matrix
    adjugate: Matrix
    det: LaurentQ

    def block(self, gen: str) -> Matrix:
        """The generator acting on V_2 + V_0 in the w basis."""
        v2 = rep(2).generator(gen)
        v0 = rep(0).generator(gen)
        entries = dict(v2.entries)
        if (0, 0) in v0.entries:
            entries[(3, 3)] = v0[(0, 0)]
        return Matrix((4, 4), entries)

    def conjugate_scaled(self, m: Matrix) -> Matrix:
        """det * basis^-1 @ m @ basis, computed without leaving the ring."""
        return self.adjugate @ m @ self.basis


def _column(vec: dict) -> Matrix:
    return Matrix((4, 1), {(i, 0): v for i, v in vec.items()})


def _kernel_vector(rows: list[list[LaurentQ]]) -> list[LaurentQ]:
    """A kernel vector of a rank-one 2-column system, pivoting on a unit entry."""
    for r in rows:
        for j in (0, 1):
            if r[j].is_unit():
                other = 1 - j
                vec = [None, None]
                vec[other] = ONE
                vec[j] = -(r[other] * r[j].unit_inverse())
                if all(row[0] * vec[0] + row[1] * vec[1] == 0 for row in rows):
                    return vec
                raise ArithmeticError("system has rank two; no kernel")
    raise ArithmeticError("no unit pivot available")


def clebsch_gordan() -> CGDecomposition:
    E = coproduct_action("E", (V, V)).matrix
    F = coproduct_action("F", (V, V)).matrix
    hw = _column({sign_index((1, 1)): ONE})
    w0 = F @ hw
    w_m2_scaled = F @ w0
    two = quantum_integer(2)
    w_m2 = w_m2_scaled.map(lambda v: v.divexact(two))
    # weight-0 space: v-1 v1 and v1 v-1; E and F each map it to a line
    i, j = sign_index((-1, 1)), sign_index((1, -1))
    top, bottom = sign_index((1, 1)), sign_index((-1, -1))
    rows = [[E[(top, i)], E[(top, j)]], [F[(bottom, i)], F[(bottom, j)]]]
    a, b = _kernel_vector(rows)
    singlet = _column({i: a, j: b})
    cols = [hw, w0, w_m2, singlet]
    basis = Matrix((4, 4), {(r, c): v for c, col in enumerate(cols) for (r, _), v in col.entries.items()})
    return CGDecomposition(basis, basis.adjugate(), basis.det())


def coproduct_half_twist(variant: str = "X", cg: CGDecomposition | None = None) -> Matrix:
    """Delta(X) on V (x) V: X acting on each irreducible summand."""
    cg = cg or clebsch_gordan()
    x2 = half_twist(variant, 2)
    x0 = half_twist(variant, 0)
    entries = dict(x2.entries)
    entries[(3, 3)] = x0[(0, 0)]
    block = Matrix((4, 4), entries)
    scaled = cg.basis @ block @ cg.adjugate
    return scaled.map(lambda v: v.divexact(cg.det))


def _flip_vv() -> Matrix:
    entries = {}
    for a in (1, -1):
        for b in (1, -1):
            entries[(sign_index((b, a)), sign_index((a, b)))] = ONE
    return Matrix((4, 4), entries)


def kr_factorization_check(variant: str = "X") -> bool:
    """Does sigma = (X^-1 (x) X^-1) o Flip o Delta(X) hold exactly on V (x) V?"""
    x_inv = half_twist_inverse(variant, 1)
    rhs = x_inv.kron(x_inv) @ _flip_vv() @ coproduct_half_twist(variant)
    return braiding().matrix == rhs
