"""Restricting the sl_m cobracket to classical subalgebras in their defining representation.

so_m and sp_m are realized in split form: they preserve a bilinear form
whose Gram matrix is anti-diagonal, so the diagonal matrices in the algebra
form a Cartan subalgebra and every root vector has rational entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .coalgebra import Cobracket, composite_matrix
from .errors import (
    DegenerateForm,
    InvalidRank,
    NotInSpan,
    NotScalar,
    UnsupportedRealization,
)
from .exact import DenseMatrix, format_rational, inverse, kernel_basis, rank, solve_linear
from .lie_matrix import AlgebraPresentation, SquareMatrix, commutator, sl_basis
from .tensor_space import Tensor2

__all__ = [
    "Embedding",
    "RootDatum",
    "ScalarReport",
    "DeltaRes",
    "classical_form",
    "classical_basis",
    "embed_classical",
    "embed_identity",
    "embed_subalgebra",
    "orthogonal_complement",
    "delta_res",
    "cosplit_scalar_direct",
    "root_datum",
    "cosplit_scalar_formula",
    "scalar_report",
    "adjoint_factorization_res_check",
    "complement_is_submodule",
]


def _check_family(family: str, l: int) -> int:
    if not isinstance(l, int) or isinstance(l, bool):
        raise InvalidRank(f"rank must be an integer, got {l!r}")
    if family == "B":
        if l < 1:
            raise InvalidRank(f"B_l needs l >= 1, got {l}")
        return 2 * l + 1
    if family == "C":
        if l < 1:
            raise InvalidRank(f"C_l needs l >= 1, got {l}")
        return 2 * l
    if family == "D":
        if l < 3:
            raise InvalidRank(f"D_l needs l >= 3 (D_2 is not simple), got {l}")
        return 2 * l
    raise InvalidRank(f"unknown family {family!r}; expected 'B', 'C' or 'D'")


def classical_form(family: str, l: int) -> SquareMatrix:
    """Anti-diagonal Gram matrix of the preserved form (symplectic for C)."""
    m = _check_family(family, l)
    if family == "C":
        return SquareMatrix(m, {(i, m - 1 - i): (1 if i < l else -1) for i in range(m)})
    return SquareMatrix(m, {(i, m - 1 - i): 1 for i in range(m)})


def classical_basis(family: str, l: int) -> list[SquareMatrix]:
    """Basis of {X : X^T J + J X = 0} from a kernel computation over gl_m."""
    J = classical_form(family, l)
    m = J.size
    n = m * m
    rows = []
    # (X^T J + J X)_{ij} = sum_k X_{ki} J_{kj} + J_{ik} X_{kj}
    for i in range(m):
        for j in range(m):
            r = [Fraction(0)] * n
            for k in range(m):
                if J[k, j]:
                    r[k * m + i] += J[k, j]
                if J[i, k]:
                    r[k * m + j] += J[i, k]
            rows.append(r)
    ker = kernel_basis(DenseMatrix(n, n, (x for r in rows for x in r)))
    return [SquareMatrix(m, {divmod(p, m): v for p, v in enumerate(vec) if v}) for vec in ker]


def _label(X: SquareMatrix) -> str:
    return "x[" + ",".join(f"{i + 1}{j + 1}" for (i, j), _ in sorted(X.items())) + "]"


@dataclass
class Embedding:
    """rho(L) inside sl_m together with its (,)_B-orthogonal complement M.

    ``projector`` maps sl_m coordinates to rho(L) coordinates and kills M;
    ``comp_projector`` maps sl_m coordinates to M coordinates and kills rho(L).
    """

    family: str
    rank: int
    ambient: AlgebraPresentation
    sub: AlgebraPresentation
    comp_basis: list[SquareMatrix]
    projector: DenseMatrix
    comp_projector: DenseMatrix
    sub_in_ambient: list[dict] = field(repr=False)

    @property
    def size(self) -> int:
        return self.ambient.ambient

    @property
    def sub_basis(self) -> tuple[SquareMatrix, ...]:
        return self.sub.basis

    @property
    def dim(self) -> int:
        return self.sub.dim

    @property
    def complement_dim(self) -> int:
        return len(self.comp_basis)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "ambient": self.size,
            "dim": self.dim,
            "complement_dim": self.complement_dim,
        }


def _trace_pairing(xs: Sequence[SquareMatrix], ys: Sequence[SquareMatrix]) -> DenseMatrix:
    return DenseMatrix(len(xs), len(ys), ((x @ y).trace() for x in xs for y in ys))


def orthogonal_complement(ambient: AlgebraPresentation, sub_basis: Sequence[SquareMatrix]) -> list[SquareMatrix]:
    """Basis of M = {y in sl_m : (y, rho(L))_B = 0}; requires (,)_B non-degenerate on rho(L)."""
    G = _trace_pairing(sub_basis, sub_basis)
    if rank(G) != len(sub_basis):
        raise DegenerateForm("(,)_B is degenerate on the subalgebra")
    pairing = _trace_pairing(sub_basis, ambient.basis)
    comp = [ambient.element(v) for v in kernel_basis(pairing)]
    stacked = [ambient.coordinate_vector(x) for x in list(sub_basis) + comp]
    if len(stacked) != ambient.dim or rank(DenseMatrix.from_rows(stacked)) != ambient.dim:
        raise DegenerateForm("subalgebra and complement do not span sl_m")
    return comp


def _module_is_irreducible(sub: AlgebraPresentation) -> bool:
    """Whether the natural module is absolutely irreducible (commutant = scalars)."""
    m = sub.ambient
    n = m * m
    # Progressively intersect centralizers; K holds a basis of the current commutant.
    K = [SquareMatrix(m, {divmod(p, m): 1}) for p in range(n)]
    for s in sub.basis:
        if len(K) <= 1:
            break
        imgs = [commutator(k, s) for k in K]
        A = DenseMatrix(n, len(K), (imgs[c][divmod(p, m)] for p in range(n) for c in range(len(K))))
        ker = kernel_basis(A)
        new = []
        for v in ker:
            acc: dict = {}
            for c, vc in enumerate(v):
                if vc:
                    for pos, x in K[c].items():
                        acc[pos] = acc.get(pos, 0) + vc * x
            new.append(SquareMatrix(m, acc))
        K = new
    return len(K) == 1


def _build_embedding(family: str, l: int, ambient: AlgebraPresentation, sub: AlgebraPresentation) -> Embedding:
    try:
        sub_in_ambient = [ambient.coordinates(x) for x in sub.basis]
    except NotInSpan as exc:
        raise UnsupportedRealization("subalgebra is not contained in sl_m") from exc
    comp = orthogonal_complement(ambient, sub.basis)
    d = ambient.dim
    cols = [dict(c) for c in sub_in_ambient] + [ambient.coordinates(x) for x in comp]
    S = DenseMatrix(d, d, (cols[c].get(r, Fraction(0)) for r in range(d) for c in range(d)))
    R = inverse(S)
    k = sub.dim
    P = DenseMatrix(k, d, (R[i, j] for i in range(k) for j in range(d)))
    Q = DenseMatrix(d - k, d, (R[i, j] for i in range(k, d) for j in range(d)))
    return Embedding(family, l, ambient, sub, comp, P, Q, sub_in_ambient)


def embed_classical(family: str, l: int) -> Embedding:
    """so_{2l+1} (B), sp_{2l} (C) or so_{2l} (D, l >= 3) inside sl_m in split form."""
    m = _check_family(family, l)
    basis = classical_basis(family, l)
    sub = AlgebraPresentation.from_matrices(basis, [_label(x) for x in basis])
    return _build_embedding(family, l, sl_basis(m), sub)


def embed_identity(m: int) -> Embedding:
    """sl_m as a subalgebra of itself (complement M = 0)."""
    amb = sl_basis(m)
    return _build_embedding("A", m - 1, amb, amb)


def embed_subalgebra(matrices: Sequence[SquareMatrix]) -> Embedding:
    """Embedding of a user-supplied simple subalgebra of sl_m.

    The natural module must be irreducible and the algebra simple; anything
    else (block-diagonal re-embeddings, semisimple sums) is rejected.
    """
    matrices = list(matrices)
    if not matrices:
        raise UnsupportedRealization("empty subalgebra")
    m = matrices[0].size
    if m < 2:
        raise UnsupportedRealization("need matrices of size at least 2")
    ambient = sl_basis(m)
    sub = AlgebraPresentation.from_matrices(matrices, [_label(x) for x in matrices])
    if sub.dim == ambient.dim:
        return _build_embedding("A", m - 1, ambient, sub)
    if not _module_is_irreducible(sub):
        raise UnsupportedRealization("the natural module of the subalgebra is reducible")
    emb = _build_embedding("user", 0, ambient, sub)
    root_datum(emb)  # raises for non-split Cartans and for non-simple algebras
    return emb


# -- delta_res ---------------------------------------------------------------


@dataclass(frozen=True)
class DeltaRes:
    cobracket: Cobracket
    containment: bool
    witness: int | None = None


def _columns(M: DenseMatrix) -> list[list[tuple[int, Fraction]]]:
    return [[(i, M[i, j]) for i in range(M.rows) if M[i, j]] for j in range(M.cols)]


def _transform2(t: Tensor2, left, right) -> dict:
    """(L (x) R) t for column-sparse L, R."""
    stage: dict = {}
    for (i, j), c in t.items():
        for p, v in left[i]:
            stage[(p, j)] = stage.get((p, j), 0) + c * v
    out: dict = {}
    for (p, j), c in stage.items():
        if not c:
            continue
        for q, v in right[j]:
            out[(p, q)] = out.get((p, q), 0) + c * v
    return {k: v for k, v in out.items() if v}


def delta_res(emb: Embedding) -> DeltaRes:
    """Project delta(x) onto rho(L) (x) rho(L) for every sub-basis element x.

    Also tests the containment delta(rho(L)) in rho(L)(x)rho(L) + M(x)M by
    checking that both mixed components vanish.
    """
    from .coalgebra import delta_sl

    delta = delta_sl(emb.size)
    P = _columns(emb.projector)
    Q = _columns(emb.comp_projector)
    images = []
    contained, witness = True, None
    for a, u in enumerate(emb.sub_in_ambient):
        T = delta(u)
        images.append(Tensor2(emb.sub, _transform2(T, P, P)))
        if contained and (_transform2(T, P, Q) or _transform2(T, Q, P)):
            contained, witness = False, a
    return DeltaRes(Cobracket(emb.sub, images), contained, witness)


def cosplit_scalar_direct(emb: Embedding, dres: DeltaRes | None = None) -> Fraction:
    """The c > 0 with [,] o delta_res = c id on rho(L)."""
    if dres is None:
        dres = delta_res(emb)
    C = composite_matrix(emb.sub, dres.cobracket)
    c = C[0, 0]
    for b in range(C.cols):
        col = C.column(b)
        if col[b] != c or any(v for k, v in enumerate(col) if k != b):
            raise NotScalar(f"[,] o delta_res is not a scalar matrix (column {b})", witness=b)
    if c <= 0:
        raise NotScalar(f"scalar {format_rational(c)} is not positive")
    return c


# -- roots -------------------------------------------------------------------


@dataclass
class RootDatum:
    cartan_basis: list[SquareMatrix]
    cartan_gram: DenseMatrix
    roots: list[tuple]
    root_vectors: list[SquareMatrix]
    positive: list[int]
    highest: int

    def negative_of(self, i: int) -> int:
        return self.roots.index(tuple(-x for x in self.roots[i]))

    def pairing(self, i: int, j: int) -> Fraction:
        """(alpha_i, alpha_j) induced by (,)_B on the Cartan."""
        G = self.cartan_gram
        ti = solve_linear(G, self.roots[i])
        return sum((a * b for a, b in zip(ti, self.roots[j])), Fraction(0))


def _is_positive(w: Sequence[Fraction]) -> bool:
    for x in w:
        if x:
            return x > 0
    return False


def root_datum(emb: Embedding) -> RootDatum:
    """Cartan, roots and root vectors of rho(L) from simultaneous eigenspaces.

    The Cartan is the diagonal part of rho(L). Positive roots are those whose
    value vector on the Cartan basis is lexicographically positive.
    """
    sub = emb.sub
    m, d = emb.size, sub.dim
    off = [(i, j) for i in range(m) for j in range(m) if i != j]
    A = DenseMatrix(len(off), d, (sub.basis[a][p] for p in off for a in range(d)))
    cartan_coords = kernel_basis(A)
    if not cartan_coords:
        raise UnsupportedRealization("subalgebra has no diagonal elements")
    H = [sub.element(c) for c in cartan_coords]
    r = len(H)
    ads = [sub.ad_of(c) for c in cartan_coords]
    candidates = sorted(
        {tuple(h[(i, i)] - h[(j, j)] for h in H) for i in range(m) for j in range(m) if i != j} - {(0,) * r},
        reverse=True,
    )
    roots, vectors = [], []
    for w in candidates:
        rows = []
        for k in range(r):
            ad = ads[k]
            rows.extend([ad[i, j] - (w[k] if i == j else 0) for j in range(d)] for i in range(d))
        ker = kernel_basis(DenseMatrix.from_rows(rows))
        if not ker:
            continue
        if len(ker) != 1:
            raise UnsupportedRealization(f"root space for weight {w} has dimension {len(ker)}")
        roots.append(tuple(Fraction(x) for x in w))
        vectors.append(sub.element(ker[0]))
    if r + len(roots) != d:
        raise UnsupportedRealization("diagonal part is not a split Cartan subalgebra")
    root_set = set(roots)
    if any(tuple(-x for x in a) not in root_set for a in roots):
        raise UnsupportedRealization("roots do not come in +/- pairs")
    G = _trace_pairing(H, H)
    if rank(G) != r:
        raise DegenerateForm("(,)_B is degenerate on the Cartan subalgebra")
    if not _roots_connected(G, roots):
        raise UnsupportedRealization("subalgebra is semisimple but not simple (reducible root system)")
    positive = [i for i, a in enumerate(roots) if _is_positive(a)]
    highest = [
        i for i in positive
        if all(commutator(vectors[i], vectors[j]).is_zero() for j in positive)
    ]
    if len(highest) != 1:
        raise UnsupportedRealization(f"expected a unique highest root, found {len(highest)}")
    return RootDatum(H, G, roots, vectors, positive, highest[0])


def _roots_connected(G: DenseMatrix, roots: list[tuple]) -> bool:
    """Whether the roots admit no split into two mutually orthogonal sets."""
    Ginv = inverse(G)
    duals = [Ginv @ a for a in roots]
    n = len(roots)
    seen, stack = {0}, [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j not in seen and sum((x * y for x, y in zip(duals[i], roots[j])), Fraction(0)):
                seen.add(j)
                stack.append(j)
    return len(seen) == n


def _eigenvalue(h: SquareMatrix, X: SquareMatrix) -> Fraction:
    """lambda with [h, X] = lambda X."""
    Y = commutator(h, X)
    pos, x = next(iter(sorted(X.items())))
    lam = Y[pos] / x
    if Y != X.scale(lam):
        raise UnsupportedRealization("root vector is not an eigenvector")
    return lam


def cosplit_scalar_formula(emb: Embedding, rd: RootDatum | None = None) -> Fraction:
    """(1/2m) [ (t_gamma, t_gamma)_B + sum over positive alpha of gamma(h_alpha) ].

    t_gamma is the Cartan element with (t_gamma, h)_B = gamma(h) and
    h_alpha = [X_alpha, X_-alpha] / (X_alpha, X_-alpha)_B.
    """
    if rd is None:
        rd = root_datum(emb)
    g = rd.roots[rd.highest]
    t = solve_linear(rd.cartan_gram, g)
    if t is None:
        raise DegenerateForm("(,)_B is degenerate on the Cartan subalgebra")
    total = sum((a * b for a, b in zip(t, g)), Fraction(0))
    Xg = rd.root_vectors[rd.highest]
    for i in rd.positive:
        Xa = rd.root_vectors[i]
        Xn = rd.root_vectors[rd.negative_of(i)]
        pair = (Xa @ Xn).trace()
        if not pair:
            raise DegenerateForm("(X_alpha, X_-alpha)_B = 0")
        h_alpha = commutator(Xa, Xn).scale(1 / pair)
        total += _eigenvalue(h_alpha, Xg)
    return total / (2 * emb.size)


@dataclass(frozen=True)
class ScalarReport:
    c_direct: Fraction
    c_formula: Fraction

    @property
    def agree(self) -> bool:
        return self.c_direct == self.c_formula

    def to_json(self) -> dict:
        return {
            "c_direct": format_rational(self.c_direct),
            "c_formula": format_rational(self.c_formula),
            "agree": self.agree,
        }


def scalar_report(emb: Embedding, dres: DeltaRes | None = None, rd: RootDatum | None = None) -> ScalarReport:
    return ScalarReport(cosplit_scalar_direct(emb, dres), cosplit_scalar_formula(emb, rd))


# -- factorization and submodule checks ----------------------------------------


def adjoint_factorization_res_check(emb: Embedding, dres: DeltaRes | None = None) -> bool:
    """2m eta((id (x) B^{-1}) delta_res(x)) equals ad(x) on rho(L) and vanishes on M."""
    if dres is None:
        dres = delta_res(emb)
    sub = emb.sub
    d = sub.dim
    G = _trace_pairing(sub.basis, sub.basis)
    Gm = _trace_pairing(sub.basis, emb.comp_basis)
    two_m = 2 * emb.size
    for x, t in enumerate(dres.cobracket.images):
        for y in range(d):
            val: dict[int, Fraction] = {}
            for (a, b), c in t.items():
                if G[b, y]:
                    val[a] = val.get(a, 0) + two_m * c * G[b, y]
            val = {k: v for k, v in val.items() if v}
            if val != sub.bracket_basis(x, y):
                return False
        for y in range(len(emb.comp_basis)):
            val = {}
            for (a, b), c in t.items():
                if Gm[b, y]:
                    val[a] = val.get(a, 0) + c * Gm[b, y]
            if any(val.values()):
                return False
    return True


def complement_is_submodule(emb: Embedding) -> bool:
    """[x, m'] stays in M for every sub-basis x and complement basis m'."""
    amb = emb.ambient
    for x in emb.sub_basis:
        for mm in emb.comp_basis:
            u = amb.coordinate_vector(commutator(x, mm))
            if any(emb.projector @ u):
                return False
    return True
