"""Matrix Lie algebras: gl_m/sl_m bases, commutators, coordinates, structure constants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, InvalidRank, NotALieAlgebra, NotInSpan
from .exact import DenseMatrix, as_rational, format_rational, inverse, parse_rational, pivot_columns, rank

__all__ = [
    "SquareMatrix",
    "AlgebraPresentation",
    "AlgElem",
    "E",
    "commutator",
    "sl_basis",
    "gl_basis",
    "coords",
    "bracket_map",
    "apply_bracket",
    "derived_algebra_is_full",
]

Sparse = dict  # index -> Fraction, no zero values stored


class SquareMatrix:
    """Immutable sparse m x m matrix over the rationals (0-indexed entries)."""

    __slots__ = ("size", "_entries", "_hash")

    def __init__(self, size: int, entries: Mapping[tuple[int, int], object] | None = None):
        self.size = size
        clean = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < size and 0 <= j < size):
                raise DimensionMismatch(f"entry ({i}, {j}) outside a {size}x{size} matrix")
            v = as_rational(v)
            if v:
                clean[(i, j)] = v
        self._entries = clean
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> SquareMatrix:
        m = len(rows)
        if any(len(r) != m for r in rows):
            raise DimensionMismatch("rows do not form a square matrix")
        return cls(m, {(i, j): rows[i][j] for i in range(m) for j in range(m)})

    @classmethod
    def zeros(cls, m: int) -> SquareMatrix:
        return cls(m)

    @classmethod
    def identity(cls, m: int) -> SquareMatrix:
        return cls(m, {(i, i): 1 for i in range(m)})

    @classmethod
    def diagonal(cls, values: Sequence) -> SquareMatrix:
        return cls(len(values), {(i, i): v for i, v in enumerate(values)})

    @property
    def entries(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._entries)

    def items(self):
        return self._entries.items()

    def __getitem__(self, ij) -> Fraction:
        return self._entries.get(ij, Fraction(0))

    def to_rows(self) -> list[list[Fraction]]:
        return [[self[i, j] for j in range(self.size)] for i in range(self.size)]

    def to_dense(self) -> DenseMatrix:
        return DenseMatrix.from_rows(self.to_rows())

    def flat(self) -> list[Fraction]:
        return [self[i, j] for i in range(self.size) for j in range(self.size)]

    def _same(self, other: SquareMatrix) -> None:
        if not isinstance(other, SquareMatrix):
            raise TypeError(f"expected SquareMatrix, got {type(other).__name__}")
        if other.size != self.size:
            raise DimensionMismatch(f"size mismatch {self.size} vs {other.size}")

    def __add__(self, other: SquareMatrix) -> SquareMatrix:
        self._same(other)
        out = dict(self._entries)
        for k, v in other._entries.items():
            out[k] = out.get(k, 0) + v
        return SquareMatrix(self.size, out)

    def __sub__(self, other: SquareMatrix) -> SquareMatrix:
        self._same(other)
        out = dict(self._entries)
        for k, v in other._entries.items():
            out[k] = out.get(k, 0) - v
        return SquareMatrix(self.size, out)

    def __neg__(self) -> SquareMatrix:
        return SquareMatrix(self.size, {k: -v for k, v in self._entries.items()})

    def scale(self, c) -> SquareMatrix:
        c = as_rational(c)
        return SquareMatrix(self.size, {k: c * v for k, v in self._entries.items()})

    def __rmul__(self, c) -> SquareMatrix:
        return self.scale(c)

    def __matmul__(self, other: SquareMatrix) -> SquareMatrix:
        self._same(other)
        by_row: dict[int, list] = {}
        for (k, j), v in other._entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict[tuple[int, int], Fraction] = {}
        for (i, k), a in self._entries.items():
            for j, b in by_row.get(k, ()):
                out[(i, j)] = out.get((i, j), 0) + a * b
        return SquareMatrix(self.size, out)

    def transpose(self) -> SquareMatrix:
        return SquareMatrix(self.size, {(j, i): v for (i, j), v in self._entries.items()})

    def trace(self) -> Fraction:
        return sum((v for (i, j), v in self._entries.items() if i == j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._entries

    def is_diagonal(self) -> bool:
        return all(i == j for i, j in self._entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, SquareMatrix) and self.size == other.size and self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.size, frozenset(self._entries.items())))
        return self._hash

    def __repr__(self) -> str:
        terms = ", ".join(f"({i + 1},{j + 1}): {format_rational(v)}" for (i, j), v in sorted(self._entries.items()))
        return f"SquareMatrix({self.size}, {{{terms}}})"

    def to_json(self) -> dict:
        return {"size": self.size, "entries": [[format_rational(x) for x in row] for row in self.to_rows()]}

    @classmethod
    def from_json(cls, obj: dict) -> SquareMatrix:
        m = obj["size"]
        rows = [[parse_rational(x) for x in row] for row in obj["entries"]]
        if len(rows) != m:
            raise DimensionMismatch(f"'size' is {m} but {len(rows)} rows were given")
        return cls.from_rows(rows)


def E(m: int, i: int, j: int) -> SquareMatrix:
    """Elementary matrix with a single 1 at 1-indexed position (i, j)."""
    return SquareMatrix(m, {(i - 1, j - 1): 1})


def commutator(A: SquareMatrix, B: SquareMatrix) -> SquareMatrix:
    if A.size != B.size:
        raise DimensionMismatch(f"cannot bracket a {A.size}x{A.size} with a {B.size}x{B.size} matrix")
    return A @ B - B @ A


def _combine(vectors: Iterable[tuple[Fraction, Mapping[int, Fraction]]]) -> Sparse:
    out: dict[int, Fraction] = {}
    for c, vec in vectors:
        for k, v in vec.items():
            out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


class AlgebraPresentation:
    """A finite-dimensional Lie algebra with an ordered basis.

    Usually built from matrices with :meth:`from_matrices`, which checks
    linear independence, closure, antisymmetry and the Jacobi identity once.
    ``structure_constants[(a, b)]`` is the sparse coordinate vector of
    ``[b_a, b_b]``; pairs whose bracket is zero are absent.

    Presentations with ``basis=None`` carry structure constants only; they
    arise as duals of matrix algebras and are not a public entry point.
    """

    def __init__(self, dim, structure_constants, *, ambient=None, basis=None, labels=None, _coord_rows=None):
        self.dim = dim
        self.ambient = ambient
        self.basis = tuple(basis) if basis is not None else None
        self.labels = tuple(labels) if labels is not None else tuple(f"b{a}" for a in range(dim))
        self.structure_constants: dict[tuple[int, int], Sparse] = structure_constants
        self._coord_rows = _coord_rows
        self._ad_cache: dict[int, DenseMatrix] = {}

    @classmethod
    def from_matrices(cls, basis: Sequence[SquareMatrix], labels: Sequence[str] | None = None, *, check_jacobi=True):
        basis = list(basis)
        if not basis:
            raise NotALieAlgebra("empty basis")
        m = basis[0].size
        if any(b.size != m for b in basis):
            raise DimensionMismatch("basis matrices have different sizes")
        dim = len(basis)
        flat = DenseMatrix(dim, m * m, (x for b in basis for x in b.flat()))
        piv = pivot_columns(flat)
        if len(piv) != dim:
            raise NotALieAlgebra(f"basis is linearly dependent (rank {len(piv)} < {dim})")
        # Coordinates are read off the pivot entries: x[piv] = St c.
        St = DenseMatrix(dim, dim, (basis[a][divmod(p, m)] for p in piv for a in range(dim)))
        inv = inverse(St)
        coord_rows = []
        for a in range(dim):
            coord_rows.append({divmod(p, m): inv[a, k] for k, p in enumerate(piv) if inv[a, k]})
        alg = cls(dim, {}, ambient=m, basis=basis, labels=labels, _coord_rows=coord_rows)
        sc: dict[tuple[int, int], Sparse] = {}
        for a, b in combinations(range(dim), 2):
            br = commutator(basis[a], basis[b])
            if br.is_zero():
                continue
            try:
                c = alg.coordinates(br)
            except NotInSpan as exc:
                raise NotALieAlgebra(
                    f"not closed under the bracket: [{alg.labels[a]}, {alg.labels[b]}] leaves the span"
                ) from exc
            sc[(a, b)] = c
            sc[(b, a)] = {k: -v for k, v in c.items()}
        alg.structure_constants = sc
        if check_jacobi:
            bad = alg.jacobi_witness()
            if bad is not None:
                raise NotALieAlgebra(f"Jacobi identity fails on basis triple {bad}")
        return alg

    @classmethod
    def _from_structure_constants(cls, dim: int, table: Mapping[tuple[int, int], Mapping[int, Fraction]], labels=None):
        sc = {}
        for (a, b), vec in table.items():
            vec = {k: as_rational(v) for k, v in vec.items() if v}
            if vec:
                sc[(a, b)] = vec
        return cls(dim, sc, labels=labels)

    # -- structure ---------------------------------------------------------

    def bracket_basis(self, a: int, b: int) -> Sparse:
        return self.structure_constants.get((a, b), {})

    def bracket(self, u: Sequence, v: Sequence) -> tuple:
        """Bracket of two coordinate vectors."""
        out = [Fraction(0)] * self.dim
        for a, ua in enumerate(u):
            if not ua:
                continue
            for b, vb in enumerate(v):
                if not vb:
                    continue
                for k, c in self.structure_constants.get((a, b), {}).items():
                    out[k] += ua * vb * c
        return tuple(out)

    def bracket_sparse(self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> Sparse:
        return _combine(
            (ua * vb, self.structure_constants.get((a, b), {}))
            for a, ua in u.items()
            for b, vb in v.items()
        )

    def antisymmetry_witness(self):
        for (a, b), vec in self.structure_constants.items():
            if a == b or self.structure_constants.get((b, a), {}) != {k: -v for k, v in vec.items()}:
                return (a, b)
        return None

    def jacobi_witness(self):
        """First triple a < b < c whose Jacobi residual is nonzero, or None."""
        if self.antisymmetry_witness() is not None:
            return self.antisymmetry_witness()
        sc = self.structure_constants
        for a, b, c in combinations(range(self.dim), 3):
            res = _combine(
                [(Fraction(1), self.bracket_sparse({a: Fraction(1)}, sc.get((b, c), {}))),
                 (Fraction(1), self.bracket_sparse({b: Fraction(1)}, sc.get((c, a), {}))),
                 (Fraction(1), self.bracket_sparse({c: Fraction(1)}, sc.get((a, b), {})))]
            )
            if res:
                return (a, b, c)
        return None

    def ad_matrix(self, a: int) -> DenseMatrix:
        """Matrix of ad(b_a): column b holds the coordinates of [b_a, b_b]."""
        if a not in self._ad_cache:
            d = self.dim
            entries = [Fraction(0)] * (d * d)
            for b in range(d):
                for k, v in self.structure_constants.get((a, b), {}).items():
                    entries[k * d + b] = v
            self._ad_cache[a] = DenseMatrix(d, d, entries)
        return self._ad_cache[a]

    def ad_of(self, x: Sequence) -> DenseMatrix:
        d = self.dim
        entries = [Fraction(0)] * (d * d)
        for a, xa in enumerate(x):
            if not xa:
                continue
            for b in range(d):
                for k, v in self.structure_constants.get((a, b), {}).items():
                    entries[k * d + b] += xa * v
        return DenseMatrix(d, d, entries)

    # -- matrices <-> coordinates -------------------------------------------

    @property
    def is_matrix_algebra(self) -> bool:
        return self.basis is not None

    def coordinates_sparse(self, x: SquareMatrix) -> Sparse:
        if self.basis is None:
            raise TypeError("algebra has no matrix realization")
        if x.size != self.ambient:
            raise DimensionMismatch(f"expected a {self.ambient}x{self.ambient} matrix, got size {x.size}")
        out = {}
        for a, row in enumerate(self._coord_rows):
            s = sum((v * x[p] for p, v in row.items()), Fraction(0))
            if s:
                out[a] = s
        if self.element(out) != x:
            raise NotInSpan(f"matrix is not in the span of the {self.dim}-element basis")
        return out

    def coordinates(self, x: SquareMatrix) -> Sparse:
        return self.coordinates_sparse(x)

    def coordinate_vector(self, x: SquareMatrix) -> tuple:
        c = self.coordinates_sparse(x)
        return tuple(c.get(a, Fraction(0)) for a in range(self.dim))

    def element(self, c) -> SquareMatrix:
        """Matrix Σ c_a b_a from a coordinate vector (sequence or sparse dict)."""
        if self.basis is None:
            raise TypeError("algebra has no matrix realization")
        items = c.items() if isinstance(c, Mapping) else enumerate(c)
        out: dict[tuple[int, int], Fraction] = {}
        for a, ca in items:
            if not ca:
                continue
            for p, v in self.basis[a].items():
                out[p] = out.get(p, 0) + ca * v
        return SquareMatrix(self.ambient, out)

    def to_json(self) -> dict:
        if self.basis is None:
            raise TypeError("algebra has no matrix realization")
        return {"ambient": self.ambient, "basis": [b.to_json() for b in self.basis]}

    @classmethod
    def from_json(cls, obj: dict) -> AlgebraPresentation:
        basis = [SquareMatrix.from_json(b) for b in obj["basis"]]
        if any(b.size != obj["ambient"] for b in basis):
            raise DimensionMismatch("basis matrix size differs from 'ambient'")
        return cls.from_matrices(basis)

    def __repr__(self) -> str:
        kind = f"ambient={self.ambient}" if self.basis is not None else "abstract"
        return f"AlgebraPresentation(dim={self.dim}, {kind})"


@dataclass(frozen=True)
class AlgElem:
    owner: AlgebraPresentation
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.owner.dim:
            raise DimensionMismatch(f"{len(self.coords)} coordinates for a {self.owner.dim}-dimensional algebra")

    def matrix(self) -> SquareMatrix:
        return self.owner.element(self.coords)


def coords(x: SquareMatrix, alg: AlgebraPresentation) -> AlgElem:
    """Coordinates of ``x`` in ``alg``'s basis; raises NotInSpan outside the span."""
    return AlgElem(alg, alg.coordinate_vector(x))


def gl_basis(m: int) -> AlgebraPresentation:
    if m < 1:
        raise InvalidRank(f"gl_m needs m >= 1, got {m}")
    basis, labels = [], []
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            basis.append(E(m, i, j))
            labels.append(f"E{i},{j}")
    return AlgebraPresentation.from_matrices(basis, labels)


_SL_CACHE: dict[int, AlgebraPresentation] = {}


def sl_basis(m: int) -> AlgebraPresentation:
    """sl_m with basis E_{i,j} (i != j, lexicographic), then h_i = E_{i,i} - E_{i+1,i+1}."""
    if not isinstance(m, int) or m < 2:
        raise InvalidRank(f"sl_m needs m >= 2, got {m!r}")
    if m not in _SL_CACHE:
        basis, labels = [], []
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                if i != j:
                    basis.append(E(m, i, j))
                    labels.append(f"E{i},{j}")
        for i in range(1, m):
            basis.append(E(m, i, i) - E(m, i + 1, i + 1))
            labels.append(f"h{i}")
        _SL_CACHE[m] = AlgebraPresentation.from_matrices(basis, labels)
    return _SL_CACHE[m]


def apply_bracket(alg: AlgebraPresentation, t) -> Sparse:
    """Image of a Tensor2 under [,] : L (x) L -> L, as sparse coordinates."""
    return _combine((c, alg.structure_constants.get(ab, {})) for ab, c in t.items())


def bracket_map(alg: AlgebraPresentation) -> DenseMatrix:
    """Matrix of [,] : L (x) L -> L; column a*dim + b is the image of b_a (x) b_b."""
    d = alg.dim
    entries = [Fraction(0)] * (d * d * d)
    for (a, b), vec in alg.structure_constants.items():
        col = a * d + b
        for k, v in vec.items():
            entries[k * d * d + col] = v
    return DenseMatrix(d, d * d, entries)


def derived_algebra_is_full(alg: AlgebraPresentation) -> bool:
    """True iff [L, L] = L."""
    d = alg.dim
    vecs = [vec for (a, b), vec in alg.structure_constants.items() if a < b]
    if len(vecs) < d:
        return False
    M = DenseMatrix(len(vecs), d, (v.get(k, Fraction(0)) for v in vecs for k in range(d)))
    return rank(M) == d
