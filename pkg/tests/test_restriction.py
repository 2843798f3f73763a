from fractions import Fraction

import pytest

from cosplit.coalgebra import (
    CosplitKind,
    check_anticocommutativity,
    check_cojacobi,
    classify_cosplit,
    cobracket_equivariance_residual,
    delta_sl,
)
from cosplit.duality import killing_form, proportionality, trace_form
from cosplit.errors import InvalidRank, UnsupportedRealization
from cosplit.lie_matrix import E, SquareMatrix, commutator, sl_basis
from cosplit.restriction import (
    DeltaRes,
    RootDatum,
    _eigenvalue,
    adjoint_factorization_res_check,
    classical_basis,
    classical_form,
    complement_is_submodule,
    cosplit_scalar_direct,
    cosplit_scalar_formula,
    delta_res,
    embed_classical,
    embed_identity,
    embed_subalgebra,
    orthogonal_complement,
    root_datum,
    scalar_report,
)

F = Fraction

TARGETS = [("B", 1), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 3), ("D", 4)]

# Each value was produced by both the direct composite and the root formula,
# and matches a third route: (Killing / trace form ratio on rho(L)) / 2m.
SCALARS = {
    ("B", 1): F(1, 6),
    ("B", 2): F(3, 10),
    ("B", 3): F(5, 14),
    ("C", 1): F(1),
    ("C", 2): F(3, 4),
    ("C", 3): F(2, 3),
    ("D", 3): F(1, 3),
    ("D", 4): F(3, 8),
}

_EMB: dict = {}
_DRES: dict = {}


def emb(family, l):
    if (family, l) not in _EMB:
        _EMB[(family, l)] = embed_classical(family, l)
    return _EMB[(family, l)]


def dres(family, l):
    if (family, l) not in _DRES:
        _DRES[(family, l)] = delta_res(emb(family, l))
    return _DRES[(family, l)]


class TestEmbedding:
    @pytest.mark.parametrize(
        "family, l, m, dim, comp",
        [("B", 1, 3, 3, 5), ("C", 2, 4, 10, 5), ("B", 2, 5, 10, 14), ("D", 3, 6, 15, 20), ("C", 1, 2, 3, 0)],
    )
    def test_dimensions(self, family, l, m, dim, comp):
        e = emb(family, l)
        assert (e.size, e.dim, e.complement_dim) == (m, dim, comp)
        assert e.to_json() == {"family": family, "rank": l, "ambient": m, "dim": dim, "complement_dim": comp}

    @pytest.mark.parametrize("family, l", [("B", 2), ("C", 2), ("D", 3)])
    def test_preserves_form(self, family, l):
        J = classical_form(family, l)
        for X in classical_basis(family, l):
            assert (X.transpose() @ J + J @ X).is_zero()

    @pytest.mark.parametrize("family, l", [("D", 2), ("D", 1), ("B", 0), ("C", 0), ("G", 2)])
    def test_invalid(self, family, l):
        with pytest.raises(InvalidRank):
            embed_classical(family, l)

    def test_identity_embedding(self):
        e = embed_identity(3)
        assert e.complement_dim == 0
        assert orthogonal_complement(e.ambient, e.sub_basis) == []

    @pytest.mark.parametrize("family, l", TARGETS)
    def test_complement_orthogonal_and_submodule(self, family, l):
        e = emb(family, l)
        assert all((x @ y).trace() == 0 for x in e.sub_basis for y in e.comp_basis)
        assert e.dim + e.complement_dim == e.size ** 2 - 1
        assert complement_is_submodule(e)


class TestDeltaRes:
    def test_identity_is_unchanged(self):
        e = embed_identity(3)
        assert list(delta_res(e).cobracket.images) == list(delta_sl(3).images)

    @pytest.mark.parametrize("family, l", TARGETS)
    def test_coalgebra_and_containment(self, family, l):
        d = dres(family, l)
        assert d.containment
        assert check_anticocommutativity(d.cobracket)
        assert check_cojacobi(d.cobracket)

    @pytest.mark.parametrize("family, l", [("B", 1), ("C", 2), ("B", 2)])
    def test_equivariant(self, family, l):
        r = cobracket_equivariance_residual(emb(family, l).sub, dres(family, l).cobracket)
        assert r.equivariant and r.injective


class TestRootDatum:
    @pytest.mark.parametrize("family, l, nroots", [("B", 1, 2), ("C", 2, 8), ("B", 2, 8), ("D", 4, 24)])
    def test_counts(self, family, l, nroots):
        rd = root_datum(emb(family, l))
        assert len(rd.roots) == nroots
        assert len(rd.positive) == nroots // 2

    @pytest.mark.parametrize("family, l", [("B", 2), ("C", 3)])
    def test_eigen_and_highest(self, family, l):
        rd = root_datum(emb(family, l))
        for h_idx, h in enumerate(rd.cartan_basis):
            for a, X in zip(rd.roots, rd.root_vectors):
                assert commutator(h, X) == X.scale(a[h_idx])
        g = rd.root_vectors[rd.highest]
        assert all(commutator(g, rd.root_vectors[i]).is_zero() for i in rd.positive)

    def test_so3_single_positive_root(self):
        rd = root_datum(emb("B", 1))
        assert rd.positive == [rd.highest]


class TestScalar:
    @pytest.mark.parametrize("family, l", TARGETS + [("C", 1)])
    def test_direct_formula_agree(self, family, l):
        e = emb(family, l)
        rep = scalar_report(e, dres(family, l))
        assert rep.agree and rep.c_direct > 0
        assert rep.c_direct == SCALARS[(family, l)]

    @pytest.mark.parametrize("family, l", TARGETS)
    def test_killing_ratio_oracle(self, family, l):
        e = emb(family, l)
        ratio = proportionality(killing_form(e.sub), trace_form(e.sub))
        assert ratio / (2 * e.size) == SCALARS[(family, l)]

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_sl_identity(self, m):
        e = embed_identity(m)
        assert cosplit_scalar_direct(e) == cosplit_scalar_formula(e) == 1

    def test_normalization_invariance(self):
        e = emb("C", 2)
        rd = root_datum(e)
        scaled = RootDatum(
            rd.cartan_basis, rd.cartan_gram, rd.roots,
            [X.scale(F(k + 2, 3)) for k, X in enumerate(rd.root_vectors)],
            rd.positive, rd.highest,
        )
        assert cosplit_scalar_formula(e, scaled) == cosplit_scalar_formula(e, rd)

    @pytest.mark.parametrize("family, l, coroot_value", [("B", 1, F(5, 12)), ("B", 2, F(7, 10)), ("C", 2, F(1))])
    def test_coroot_pairing_is_not_the_composite(self, family, l, coroot_value):
        # Using gamma(2 alpha / (alpha, alpha)) in place of gamma(h_alpha) gives these
        # values, which the direct composite does not reproduce outside type A.
        e = emb(family, l)
        rd = root_datum(e)
        total = F(0) + _pair(rd, rd.highest, rd.highest)
        for i in rd.positive:
            total += 2 * _pair(rd, rd.highest, i) / _pair(rd, i, i)
        assert total / (2 * e.size) == coroot_value
        assert cosplit_scalar_direct(e, dres(family, l)) != coroot_value

    @pytest.mark.parametrize("family, l", TARGETS)
    def test_rescaled_is_cosplit(self, family, l):
        d = dres(family, l)
        c = SCALARS[(family, l)]
        assert classify_cosplit(emb(family, l).sub, d.cobracket.scale(1 / c)).kind is CosplitKind.COSPLIT


def _pair(rd, i, j):
    return rd.pairing(i, j)


class TestAdjointRes:
    def test_identity_sl3(self):
        assert adjoint_factorization_res_check(embed_identity(3))

    @pytest.mark.parametrize("family, l", [("B", 2), ("C", 3)])
    def test_classical(self, family, l):
        assert adjoint_factorization_res_check(emb(family, l), dres(family, l))

    def test_scaled_fails(self):
        e = emb("B", 2)
        d = dres("B", 2)
        bad = DeltaRes(d.cobracket.scale(2), d.containment)
        assert not adjoint_factorization_res_check(e, bad)


def _kron(A: SquareMatrix, B: SquareMatrix) -> SquareMatrix:
    n = B.size
    return SquareMatrix(A.size * n, {(i * n + k, j * n + l): a * b for (i, j), a in A.items() for (k, l), b in B.items()})


class TestUserSubalgebra:
    def test_so5_accepted(self):
        e = embed_subalgebra(classical_basis("B", 2))
        assert cosplit_scalar_direct(e) == SCALARS[("B", 2)]

    def test_full_sl_accepted(self):
        e = embed_subalgebra(sl_basis(3).basis)
        assert e.complement_dim == 0 and cosplit_scalar_direct(e) == 1

    def test_block_sl2_rejected(self):
        # sl_2 in the top-left corner of sl_3: the natural module is reducible
        gens = [E(3, 1, 2), E(3, 2, 1), E(3, 1, 1) - E(3, 2, 2)]
        with pytest.raises(UnsupportedRealization, match="reducible"):
            embed_subalgebra(gens)

    def test_sl2_plus_sl2_rejected(self):
        # sl_2 + sl_2 acting on C^2 (x) C^2: irreducible module, but not simple
        I2 = SquareMatrix.identity(2)
        sl2 = sl_basis(2).basis
        gens = [_kron(x, I2) for x in sl2] + [_kron(I2, x) for x in sl2]
        with pytest.raises(UnsupportedRealization, match="not simple"):
            embed_subalgebra(gens)


def test_eigenvalue_helper():
    h = SquareMatrix.diagonal([1, 0, -1])
    assert _eigenvalue(h, E(3, 1, 3)) == 2
