"""Dual Lie algebra on (sl_m)*, the pairing B, trace and Killing forms, adjoint factorization.

The dual space is always expressed in the dual of the canonical sl_m basis
({f_a} with f_a(b_c) = [a == c]). Functionals defined on gl_m, such as the
matrix-entry functionals f_{i,j}(E_{k,l}) = [i == k][j == l], are restricted
to sl_m before use.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

from .coalgebra import Cobracket, CosplitKind, CosplitVerdict, classify_cosplit, composite_matrix
from .errors import DegenerateForm, NotCoSplitError, OwnerMismatch
from .exact import DenseMatrix, as_rational, inverse
from .lie_matrix import AlgebraPresentation, E, SquareMatrix, sl_basis
from .tensor_space import Tensor2

__all__ = [
    "BilinearForm",
    "DualElem",
    "DualResult",
    "restrict_to_sl",
    "dual_bracket_constants",
    "dual_algebra",
    "dual_jacobi_holds",
    "B_map",
    "B_inverse",
    "iso_B_check",
    "form_B",
    "trace_form",
    "killing_form",
    "proportionality",
    "adjoint_factorization_check",
    "dualize",
]


@dataclass(frozen=True)
class DualElem:
    owner: AlgebraPresentation
    coords: tuple

    def __call__(self, x) -> Fraction:
        """Evaluate on a coordinate vector of the owner algebra."""
        return sum((a * b for a, b in zip(self.coords, x)), Fraction(0))


@dataclass(frozen=True)
class BilinearForm:
    owner: AlgebraPresentation
    gram: DenseMatrix

    def __call__(self, x, y) -> Fraction:
        return sum((xa * self.gram[a, b] * y[b] for a, xa in enumerate(x) if xa for b in range(len(y)) if y[b]),
                   Fraction(0))

    def is_symmetric(self) -> bool:
        return self.gram == self.gram.transpose()

    def is_invariant(self) -> bool:
        """([x, y], z) = (x, [y, z]) on all basis triples."""
        alg, g = self.owner, self.gram
        d = alg.dim
        for a in range(d):
            for b in range(d):
                ab = alg.bracket_basis(a, b)
                for c in range(d):
                    lhs = sum((v * g[k, c] for k, v in ab.items()), Fraction(0))
                    rhs = sum((v * g[a, k] for k, v in alg.bracket_basis(b, c).items()), Fraction(0))
                    if lhs != rhs:
                        return False
        return True

    def is_nondegenerate(self) -> bool:
        from .exact import rank
        return rank(self.gram) == self.gram.rows


def restrict_to_sl(i: int, j: int, m: int) -> DualElem:
    """The gl-level functional f_{i,j} (1-indexed) restricted to sl_m."""
    alg = sl_basis(m)
    return DualElem(alg, tuple(b[(i - 1, j - 1)] for b in alg.basis))


def dual_bracket_constants(m: int, scale=None) -> dict[tuple[int, int], dict[int, Fraction]]:
    """Structure constants of the bracket -2m delta* on (sl_m)*.

    [f_a, f_b](x) = (f_a (x) f_b)(delta(x)), so [f_a, f_b] = sum_c delta(b_c)[a, b] f_c,
    then multiplied by ``scale`` (default -2m).
    """
    from .coalgebra import delta_sl

    s = as_rational(-2 * m if scale is None else scale)
    delta = delta_sl(m)
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for c, t in enumerate(delta.images):
        for ab, v in t.items():
            table.setdefault(ab, {})[c] = s * v
    return table


def dual_algebra(m: int) -> AlgebraPresentation:
    d = sl_basis(m)
    return AlgebraPresentation._from_structure_constants(
        d.dim, dual_bracket_constants(m), labels=[f"f[{lab}]" for lab in d.labels]
    )


def dual_jacobi_holds(m: int) -> bool:
    """Antisymmetry and Jacobi of the dual bracket on all basis triples."""
    return dual_algebra(m).jacobi_witness() is None


def _trace_gram(alg: AlgebraPresentation) -> DenseMatrix:
    d = alg.dim
    g = [Fraction(0)] * (d * d)
    for a in range(d):
        for b in range(a, d):
            v = (alg.basis[a] @ alg.basis[b]).trace()
            g[a * d + b] = g[b * d + a] = v
    return DenseMatrix(d, d, g)


def B_inverse(x: SquareMatrix, m: int) -> DualElem:
    """B^{-1}(x) = sum_{i,j} x_{j,i} f_{i,j}, restricted to sl_m (so E_{j,i} -> f_{i,j})."""
    alg = sl_basis(m)
    out = [Fraction(0)] * alg.dim
    for (j, i), v in x.items():
        f = restrict_to_sl(i + 1, j + 1, m)
        for a, fa in enumerate(f.coords):
            if fa:
                out[a] += v * fa
    return DualElem(alg, tuple(out))


def B_map(f: DualElem, *, transpose: bool = True) -> tuple:
    """B : (sl_m)* -> sl_m in sl coordinates.

    With ``transpose=True`` this is f_{i,j} -> E_{j,i}; otherwise the
    untransposed assignment f_{i,j} -> E_{i,j}. Both are well defined on
    restrictions since the kernel of gl* -> sl* (the trace) maps to the
    identity matrix, which is discarded by taking traceless parts.
    """
    alg = f.owner
    g = _trace_gram(alg)
    # B^{-1}(x) pairs as tr(x .), so B(f) solves G c = f.
    c = inverse(g) @ f.coords
    if transpose:
        return c
    return alg.coordinate_vector(alg.element(c).transpose())


def iso_B_check(m: int, *, transpose: bool = True) -> bool:
    """B([f, g]) = [B f, B g] for all dual basis pairs."""
    alg = sl_basis(m)
    dual = dual_algebra(m)
    d = alg.dim
    # B applied to each dual basis vector, and the gl-level definition cross-check.
    images = []
    for a in range(d):
        e = tuple(Fraction(int(a == k)) for k in range(d))
        images.append(B_map(DualElem(alg, e), transpose=transpose))
    if transpose:
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                target = E(m, j, i) - SquareMatrix.identity(m).scale(Fraction(int(i == j), m))
                if alg.element(B_map(restrict_to_sl(i, j, m))) != target:
                    return False
    for a, b in combinations(range(d), 2):
        lhs_dual = dual.bracket_basis(a, b)
        lhs = [Fraction(0)] * d
        for k, v in lhs_dual.items():
            for t, x in enumerate(images[k]):
                lhs[t] += v * x
        rhs = alg.bracket(images[a], images[b])
        if tuple(lhs) != rhs:
            return False
    return True


def form_B(m: int) -> BilinearForm:
    """Gram matrix of (x, y)_B = B^{-1}(x)(y) on the sl_m basis."""
    alg = sl_basis(m)
    d = alg.dim
    cols = [tuple(Fraction(int(a == k)) for k in range(d)) for a in range(d)]
    rows = [B_inverse(x, m) for x in alg.basis]
    return BilinearForm(alg, DenseMatrix(d, d, (rows[a](cols[b]) for a in range(d) for b in range(d))))


def trace_form(alg: AlgebraPresentation) -> BilinearForm:
    """(x, y) = tr(xy) in the matrix realization."""
    return BilinearForm(alg, _trace_gram(alg))


def killing_form(alg: AlgebraPresentation) -> BilinearForm:
    """kappa(x, y) = tr(ad x ad y)."""
    d = alg.dim
    ads = [alg.ad_matrix(a) for a in range(d)]
    g = [Fraction(0)] * (d * d)
    for a in range(d):
        for b in range(a, d):
            A, B = ads[a], ads[b]
            # tr(AB) = sum_ij A_ij B_ji
            v = sum((A[i, j] * B[j, i] for i in range(d) for j in range(d) if A[i, j]), Fraction(0))
            g[a * d + b] = g[b * d + a] = v
    return BilinearForm(alg, DenseMatrix(d, d, g))


def proportionality(F: BilinearForm, G: BilinearForm) -> Fraction | None:
    """The nonzero c with F = c G entrywise, or None."""
    if F.owner is not G.owner:
        raise OwnerMismatch("forms live on different algebras")
    if F.gram.is_zero() and G.gram.is_zero():
        raise DegenerateForm("both forms are zero")
    c = None
    for f, g in zip(F.gram.entries, G.gram.entries):
        if not g:
            if f:
                return None
            continue
        r = f / g
        if c is None:
            c = r
        elif r != c:
            return None
    if c is None or c == 0:
        return None
    return c


def adjoint_factorization_check(m: int, delta: Cobracket | None = None) -> bool:
    """2m eta((id (x) B^{-1})(delta(x))) == ad(x) for every basis x.

    eta(u (x) f)(y) = f(y) u, so delta(x) = sum t[a, b] b_a (x) b_b gives the
    endomorphism y -> 2m sum t[a, b] (b_b, y)_B b_a.
    """
    from .coalgebra import delta_sl

    if delta is None:
        delta = delta_sl(m)
    alg = delta.owner
    g = form_B(m).gram
    d = alg.dim
    two_m = 2 * m
    for x, t in enumerate(delta.images):
        ad = alg.ad_matrix(x)
        M = [Fraction(0)] * (d * d)
        for (a, b), v in t.items():
            for c in range(d):
                gbc = g[b, c]
                if gbc:
                    M[a * d + c] += two_m * v * gbc
        if tuple(M) != ad.entries:
            return False
    return True


class DualResult(NamedTuple):
    algebra: AlgebraPresentation
    cobracket: Cobracket
    verdict: CosplitVerdict


def dualize(alg: AlgebraPresentation, delta: Cobracket) -> DualResult:
    """(L*, delta*, [,]*) with both pairing constants equal to 1, reclassified.

    Bracket on L*: [f_a, f_b] = sum_c delta(b_c)[a, b] f_c.
    Cobracket on L*: [,]*(f_c) = sum_{a,b} c_{ab}^c f_a (x) f_b.
    """
    verdict = classify_cosplit(alg, delta)
    if verdict.kind is CosplitKind.NOT:
        raise NotCoSplitError(f"input is not (weak) co-split; composite fails at basis index {verdict.witness}")
    d = alg.dim
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for c, t in enumerate(delta.images):
        for ab, v in t.items():
            table.setdefault(ab, {})[c] = v
    labels = [f"f[{lab}]" for lab in alg.labels]
    dual = AlgebraPresentation._from_structure_constants(d, table, labels=labels)
    images: list[dict] = [{} for _ in range(d)]
    for ab, vec in alg.structure_constants.items():
        for c, v in vec.items():
            images[c][ab] = v
    co = Cobracket(dual, [Tensor2(dual, im) for im in images])
    return DualResult(dual, co, classify_cosplit(dual, co))


def double_dual_composite(alg: AlgebraPresentation, delta: Cobracket) -> DenseMatrix:
    once = dualize(alg, delta)
    twice = dualize(once.algebra, once.cobracket)
    return composite_matrix(twice.algebra, twice.cobracket)
