"""Sparse matrices over LaurentQ and tensor morphisms between words in V, V*."""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .laurent import LaurentQ, ONE

__all__ = ["Matrix", "TensorMorphism", "basis", "sign_index", "index_signs", "tensor_all", "V", "VD"]

V = "V"
VD = "V*"


class Matrix:
    """Sparse ``rows x cols`` matrix; ``entries`` maps (i, j) to a nonzero LaurentQ."""

    __slots__ = ("shape", "entries")

    def __init__(self, shape: tuple[int, int], entries: dict | None = None):
        self.shape = (int(shape[0]), int(shape[1]))
        self.entries = {}
        for (i, j), v in (entries or {}).items():
            v = LaurentQ.coerce(v)
            if v:
                self.entries[(i, j)] = v

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls((n, n), {(i, i): ONE for i in range(n)})

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls((rows, cols))

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        return cls((len(values), len(values)), {(i, i): v for i, v in enumerate(values)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        n = len(rows)
        m = len(rows[0]) if n else 0
        return cls((n, m), {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r)})

    def to_rows(self) -> list[list[LaurentQ]]:
        zero = LaurentQ()
        return [[self.entries.get((i, j), zero) for j in range(self.shape[1])] for i in range(self.shape[0])]

    def __getitem__(self, ij) -> LaurentQ:
        return self.entries.get(ij, LaurentQ())

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        by_row: dict = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                s = out.get((i, j))
                out[(i, j)] = a * b if s is None else s + a * b
        return Matrix((self.shape[0], other.shape[1]), out)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        out = dict(self.entries)
        for ij, v in other.entries.items():
            out[ij] = out[ij] + v if ij in out else v
        return Matrix(self.shape, out)

    def __neg__(self):
        return Matrix(self.shape, {ij: -v for ij, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = LaurentQ.coerce(c)
        return Matrix(self.shape, {ij: c * v for ij, v in self.entries.items()})

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def transpose(self) -> "Matrix":
        return Matrix(self.shape[::-1], {(j, i): v for (i, j), v in self.entries.items()})

    @property
    def T(self):
        return self.transpose()

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product with ``self``'s index varying slowest (numpy convention)."""
        r2, c2 = other.shape
        out = {}
        for (i, j), a in self.entries.items():
            for (k, l), b in other.entries.items():
                out[(i * r2 + k, j * c2 + l)] = a * b
        return Matrix((self.shape[0] * r2, self.shape[1] * c2), out)

    def map(self, fn: Callable[[LaurentQ], LaurentQ]) -> "Matrix":
        return Matrix(self.shape, {ij: fn(v) for ij, v in self.entries.items()})

    def minor(self, i: int, j: int) -> "Matrix":
        """Drop row i and column j."""
        out = {}
        for (r, c), v in self.entries.items():
            if r != i and c != j:
                out[(r - (r > i), c - (c > j))] = v
        return Matrix((self.shape[0] - 1, self.shape[1] - 1), out)

    def det(self) -> LaurentQ:
        """Determinant by cofactor expansion (small matrices only)."""
        n = self.shape[0]
        if self.shape != (n, n):
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return ONE
        if n == 1:
            return self[(0, 0)]
        total = LaurentQ()
        for j in range(n):
            a = self.entries.get((0, j))
            if a:
                term = a * self.minor(0, j).det()
                total = total - term if j % 2 else total + term
        return total

    def adjugate(self) -> "Matrix":
        """Transpose of the cofactor matrix, so that M @ adj(M) = det(M) I."""
        n = self.shape[0]
        out = {}
        for i in range(n):
            for j in range(n):
                c = self.minor(i, j).det()
                out[(j, i)] = -c if (i + j) % 2 else c
        return Matrix((n, n), out)

    def is_diagonal(self) -> bool:
        return all(i == j for i, j in self.entries)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        rows = "; ".join(", ".join(str(v) for v in r) for r in self.to_rows())
        return f"Matrix({self.shape}, [{rows}])"


def sign_index(signs: Sequence[int]) -> int:
    """Basis index of a sign string; the leftmost factor varies fastest."""
    return sum(1 << i for i, s in enumerate(signs) if s < 0)


def index_signs(index: int, length: int) -> tuple:
    return tuple(-1 if (index >> i) & 1 else 1 for i in range(length))


def basis(length: int) -> list[tuple]:
    """Sign strings of a tensor word, in basis-index order."""
    return [index_signs(i, length) for i in range(1 << length)]


class TensorMorphism:
    """Linear map between tensor words over ``{V, V*}``.

    Basis vectors are sign strings (one +1/-1 per factor, +1 meaning v_1 or
    its dual v^_1).  In matrix form the leftmost factor varies fastest, which
    for ``V (x) V`` gives the ordering v1v1, v-1v1, v1v-1, v-1v-1.
    """

    __slots__ = ("domain", "codomain", "matrix")

    def __init__(self, domain: Sequence[str], codomain: Sequence[str], matrix: Matrix):
        self.domain = tuple(domain)
        self.codomain = tuple(codomain)
        if matrix.shape != (1 << len(self.codomain), 1 << len(self.domain)):
            raise ValueError(f"matrix shape {matrix.shape} does not fit {self.domain} -> {self.codomain}")
        self.matrix = matrix

    @classmethod
    def from_signs(cls, domain, codomain, table: dict) -> "TensorMorphism":
        """Build from ``{(out_signs, in_signs): coefficient}``."""
        m = Matrix(
            (1 << len(codomain), 1 << len(domain)),
            {(sign_index(o), sign_index(i)): c for (o, i), c in table.items()},
        )
        return cls(domain, codomain, m)

    @classmethod
    def from_function(cls, domain, codomain, fn: Callable[[tuple], Iterable]) -> "TensorMorphism":
        """``fn(in_signs)`` yields ``(out_signs, coefficient)`` pairs."""
        table: dict = {}
        for s in basis(len(domain)):
            for o, c in fn(s):
                key = (tuple(o), s)
                table[key] = table[key] + c if key in table else LaurentQ.coerce(c)
        return cls.from_signs(domain, codomain, table)

    @classmethod
    def identity(cls, word: Sequence[str]) -> "TensorMorphism":
        return cls(word, word, Matrix.identity(1 << len(word)))

    @classmethod
    def scalar(cls, c) -> "TensorMorphism":
        return cls((), (), Matrix((1, 1), {(0, 0): c}))

    def signs_table(self) -> dict:
        """Sparse form ``{in_signs: [(out_signs, coefficient), ...]}``."""
        nd, nc = len(self.domain), len(self.codomain)
        out: dict = {}
        for (i, j), v in self.matrix.entries.items():
            out.setdefault(index_signs(j, nd), []).append((index_signs(i, nc), v))
        return out

    def __matmul__(self, other: "TensorMorphism") -> "TensorMorphism":
        """Composition ``self o other``."""
        if self.domain != other.codomain:
            raise ValueError(f"cannot compose: {other.codomain} -> {self.domain}")
        return TensorMorphism(other.domain, self.codomain, self.matrix @ other.matrix)

    def tensor(self, other: "TensorMorphism") -> "TensorMorphism":
        # leftmost factor varies fastest, so the right factor is the slow index
        return TensorMorphism(
            self.domain + other.domain, self.codomain + other.codomain, other.matrix.kron(self.matrix)
        )

    def __add__(self, other):
        self._same_type(other)
        return TensorMorphism(self.domain, self.codomain, self.matrix + other.matrix)

    def __sub__(self, other):
        self._same_type(other)
        return TensorMorphism(self.domain, self.codomain, self.matrix - other.matrix)

    def __neg__(self):
        return TensorMorphism(self.domain, self.codomain, -self.matrix)

    def __mul__(self, c):
        if isinstance(c, TensorMorphism):
            return NotImplemented
        return TensorMorphism(self.domain, self.codomain, self.matrix.scale(c))

    __rmul__ = __mul__

    def _same_type(self, other):
        if (self.domain, self.codomain) != (other.domain, other.codomain):
            raise ValueError("morphisms have different types")

    def __eq__(self, other):
        if not isinstance(other, TensorMorphism):
            return NotImplemented
        return (self.domain, self.codomain) == (other.domain, other.codomain) and self.matrix == other.matrix

    __hash__ = None

    def apply(self, signs: Sequence[int]) -> dict:
        """Image of one basis vector as ``{out_signs: coefficient}``."""
        j = sign_index(signs)
        nc = len(self.codomain)
        return {index_signs(i, nc): v for (i, jj), v in self.matrix.entries.items() if jj == j}

    def __repr__(self):
        dom = "(x)".join(self.domain) or "1"
        cod = "(x)".join(self.codomain) or "1"
        return f"TensorMorphism({dom} -> {cod}, {self.matrix!r})"


def tensor_all(maps: Iterable[TensorMorphism]) -> TensorMorphism:
    out = TensorMorphism.scalar(ONE)
    for m in maps:
        out = out.tensor(m)
    return out
