"""The cobracket on sl_m, Lie coalgebra axiom checks and co-split classification."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping, NamedTuple, Sequence

from .errors import DimensionMismatch, NotALieCoalgebra, NotInSpan, OwnerMismatch
from .exact import DenseMatrix, as_rational, format_rational, rank
from .lie_matrix import AlgebraPresentation, apply_bracket, sl_basis
from .tensor_space import Tensor2, act_on_tensor2, apply_one_tensor_delta, cyclic_sum, tau

__all__ = [
    "Cobracket",
    "CosplitKind",
    "CosplitVerdict",
    "Check",
    "EquivarianceResult",
    "delta_sl",
    "delta_matrix",
    "check_anticocommutativity",
    "check_cojacobi",
    "composite_matrix",
    "classify_cosplit",
    "cobracket_equivariance_residual",
]


class Check(NamedTuple):
    ok: bool
    witness: int | None = None

    def __bool__(self) -> bool:
        return self.ok


class Cobracket:
    """A linear map L -> L (x) L, stored by its values on the basis."""

    __slots__ = ("owner", "images")

    def __init__(self, owner: AlgebraPresentation, images: Sequence[Tensor2]):
        images = tuple(images)
        if len(images) != owner.dim:
            raise DimensionMismatch(f"{len(images)} images for a {owner.dim}-dimensional algebra")
        if any(t.owner is not owner for t in images):
            raise OwnerMismatch("cobracket image over a different algebra")
        self.owner = owner
        self.images = images

    @classmethod
    def zero(cls, owner: AlgebraPresentation) -> Cobracket:
        return cls(owner, [Tensor2(owner) for _ in range(owner.dim)])

    def __call__(self, x: Mapping[int, Fraction] | Sequence) -> Tensor2:
        items = x.items() if isinstance(x, Mapping) else enumerate(x)
        out = Tensor2(self.owner)
        for a, c in items:
            if c:
                out = out + self.images[a].scale(c)
        return out

    def scale(self, c) -> Cobracket:
        c = as_rational(c)
        return Cobracket(self.owner, [t.scale(c) for t in self.images])

    def __rmul__(self, c) -> Cobracket:
        return self.scale(c)

    def __eq__(self, other) -> bool:
        return isinstance(other, Cobracket) and other.owner is self.owner and other.images == self.images

    __hash__ = None

    def to_json(self) -> dict:
        return {"dim": self.owner.dim, "images": [t.to_json() for t in self.images]}


def _matrix_pairs_to_tensor(alg: AlgebraPresentation, pairs: Mapping) -> Tensor2:
    """Express sum c * E_p (x) E_q (gl-level matrix units) in alg's basis.

    ``pairs`` maps ((i, j), (k, l)) -> coefficient. Raises NotInSpan if the
    element is not in alg (x) alg.
    """
    # functional[pos] = sparse coordinate vector of the matrix unit at pos,
    # valid on elements of the span.
    functional: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a, row in enumerate(alg._coord_rows):
        for pos, v in row.items():
            functional.setdefault(pos, {})[a] = v
    out: dict[tuple[int, int], Fraction] = {}
    for (p, q), c in pairs.items():
        for a, u in functional.get(p, {}).items():
            for b, v in functional.get(q, {}).items():
                out[(a, b)] = out.get((a, b), 0) + c * u * v
    t = Tensor2(alg, out)
    back: dict = {}
    for (a, b), c in t.items():
        for p, u in alg.basis[a].items():
            for q, v in alg.basis[b].items():
                back[(p, q)] = back.get((p, q), 0) + c * u * v
    back = {k: v for k, v in back.items() if v}
    target = {k: as_rational(v) for k, v in pairs.items() if v}
    if back != target:
        raise NotInSpan("tensor is not in L (x) L for this basis")
    return t


def delta_matrix(x, m: int) -> dict:
    """The cobracket of an m x m matrix as a gl-level tensor.

    Returns ((p, k), (k, q)) style pairs of 0-indexed matrix-unit positions
    mapped to coefficients, from
    delta(E_pq) = 1/(2m) sum_k (E_pk (x) E_kq - E_kq (x) E_pk).
    """
    c = Fraction(1, 2 * m)
    out: dict = {}
    for (p, q), v in x.items():
        for k in range(m):
            a = ((p, k), (k, q))
            b = ((k, q), (p, k))
            out[a] = out.get(a, 0) + c * v
            out[b] = out.get(b, 0) - c * v
    return {k: v for k, v in out.items() if v}


_DELTA_CACHE: dict[int, Cobracket] = {}


def delta_sl(m: int) -> Cobracket:
    """The cobracket on sl_m with coefficient 1/(2m).

    Each image is computed inside gl_m (x) gl_m and then verified to lie in
    sl_m (x) sl_m before being expressed in the sl_m basis.
    """
    if m not in _DELTA_CACHE:
        alg = sl_basis(m)
        images = [_matrix_pairs_to_tensor(alg, delta_matrix(b, m)) for b in alg.basis]
        _DELTA_CACHE[m] = Cobracket(alg, images)
    return _DELTA_CACHE[m]


def check_anticocommutativity(delta: Cobracket) -> Check:
    """(1 + tau) delta = 0 on every basis element; witness = first failing index."""
    for a, t in enumerate(delta.images):
        if not (t + tau(t)).is_zero():
            return Check(False, a)
    return Check(True)


def check_cojacobi(delta: Cobracket) -> Check:
    """(1 + xi + xi^2)(1 (x) delta) delta = 0 on every basis element."""
    for a, t in enumerate(delta.images):
        if not cyclic_sum(apply_one_tensor_delta(delta, t)).is_zero():
            return Check(False, a)
    return Check(True)


class CosplitKind(str, Enum):
    COSPLIT = "cosplit"
    WEAK = "weak"
    NOT = "no"


@dataclass(frozen=True)
class CosplitVerdict:
    kind: CosplitKind
    diagonal: tuple | None = None
    witness: int | None = None

    def __post_init__(self):
        if (self.diagonal is not None) != (self.kind is CosplitKind.WEAK):
            raise ValueError("diagonal is present exactly for WeakCoSplit verdicts")
        if self.diagonal is not None and not all(self.diagonal):
            raise ValueError("weak co-split diagonal must be non-degenerate")

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind.value}
        if self.diagonal is not None:
            out["diagonal"] = [format_rational(x) for x in self.diagonal]
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def composite_matrix(alg: AlgebraPresentation, delta: Cobracket) -> DenseMatrix:
    """Matrix of [,] o delta in the basis of alg; column b is the image of b_b."""
    if delta.owner is not alg:
        raise OwnerMismatch("cobracket belongs to a different algebra")
    d = alg.dim
    entries = [Fraction(0)] * (d * d)
    for b, t in enumerate(delta.images):
        for k, v in apply_bracket(alg, t).items():
            entries[k * d + b] = v
    return DenseMatrix(d, d, entries)


def verdict_from_composite(C: DenseMatrix) -> CosplitVerdict:
    d = C.rows
    for b in range(d):
        col = C.column(b)
        if not col[b] or any(v for k, v in enumerate(col) if k != b):
            return CosplitVerdict(CosplitKind.NOT, witness=b)
    diag = tuple(C[a, a] for a in range(d))
    if all(x == 1 for x in diag):
        return CosplitVerdict(CosplitKind.COSPLIT)
    return CosplitVerdict(CosplitKind.WEAK, diagonal=diag)


def classify_cosplit(alg: AlgebraPresentation, delta: Cobracket) -> CosplitVerdict:
    """Classify (alg, delta) as co-split, weak co-split, or neither.

    The composite [,] o delta is inspected as a full matrix in the given
    basis; "diagonal" means every off-diagonal entry is exactly zero.
    """
    if delta.owner is not alg:
        raise OwnerMismatch("cobracket belongs to a different algebra")
    chk = check_anticocommutativity(delta)
    if not chk:
        raise NotALieCoalgebra("(1 + tau) delta != 0", witness=chk.witness)
    chk = check_cojacobi(delta)
    if not chk:
        raise NotALieCoalgebra("co-Jacobi identity fails", witness=chk.witness)
    return verdict_from_composite(composite_matrix(alg, delta))


class EquivarianceResult(NamedTuple):
    equivariant: bool
    witness: tuple[int, int] | None
    injective: bool


def cobracket_equivariance_residual(alg: AlgebraPresentation, delta: Cobracket) -> EquivarianceResult:
    """Check delta([b_a, b_b]) = b_a . delta(b_b) for all pairs, and injectivity of delta."""
    if delta.owner is not alg:
        raise OwnerMismatch("cobracket belongs to a different algebra")
    witness = None
    for a in range(alg.dim):
        xa = {a: Fraction(1)}
        for b in range(alg.dim):
            lhs = delta(alg.bracket_basis(a, b))
            rhs = act_on_tensor2(alg, xa, delta.images[b])
            if lhs != rhs:
                witness = (a, b)
                break
        if witness is not None:
            break
    support = sorted({k for t in delta.images for k, _ in t.items()})
    if support:
        col = {k: i for i, k in enumerate(support)}
        entries = [Fraction(0)] * (alg.dim * len(support))
        for a, t in enumerate(delta.images):
            for k, v in t.items():
                entries[a * len(support) + col[k]] = v
        injective = rank(DenseMatrix(alg.dim, len(support), entries)) == alg.dim
    else:
        injective = False
    return EquivarianceResult(witness is None, witness, injective)
