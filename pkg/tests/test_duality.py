from fractions import Fraction
from itertools import product

import pytest

from cosplit.coalgebra import CosplitKind, composite_matrix, delta_sl
from cosplit.duality import (
    B_inverse,
    BilinearForm,
    DualElem,
    adjoint_factorization_check,
    double_dual_composite,
    dual_algebra,
    dual_bracket_constants,
    dual_jacobi_holds,
    dualize,
    form_B,
    iso_B_check,
    killing_form,
    proportionality,
    restrict_to_sl,
    trace_form,
)
from cosplit.errors import DegenerateForm, NotCoSplitError
from cosplit.exact import DenseMatrix, solve_linear
from cosplit.lie_matrix import E, commutator, sl_basis
from cosplit.coalgebra import Cobracket

F = Fraction


def _as_dual(f: DualElem, m):
    return {a: v for a, v in enumerate(f.coords) if v}


class TestDualBracket:
    def test_f12_f21(self):
        # [f12, f21] = -(f11 - f22), restricted to sl_2
        alg = sl_basis(2)
        br = dual_algebra(2).bracket_basis(0, 1)
        rhs = tuple(-(a - b) for a, b in zip(restrict_to_sl(1, 1, 2).coords, restrict_to_sl(2, 2, 2).coords))
        assert tuple(br.get(k, 0) for k in range(alg.dim)) == rhs

    @pytest.mark.parametrize("m", [2, 3])
    def test_gl_level_formula(self, m):
        # -2m delta*(f_ij (x) f_kl) = -(d_jk f_il - d_il f_kj) after restriction to sl_m
        alg = sl_basis(m)
        d = alg.dim
        delta = delta_sl(m)
        for i, j, k, l in product(range(1, m + 1), repeat=4):
            f, g = restrict_to_sl(i, j, m).coords, restrict_to_sl(k, l, m).coords
            lhs = []
            for c in range(d):
                t = delta.images[c]
                lhs.append(-2 * m * sum((f[a] * g[b] * v for (a, b), v in t.items()), F(0)))
            rhs = [F(0)] * d
            if j == k:
                rhs = [r - x for r, x in zip(rhs, restrict_to_sl(i, l, m).coords)]
            if i == l:
                rhs = [r + x for r, x in zip(rhs, restrict_to_sl(k, j, m).coords)]
            assert lhs == rhs

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_antisymmetry_and_jacobi(self, m):
        table = dual_bracket_constants(m)
        d = m * m - 1
        for a in range(d):
            assert not table.get((a, a))
        assert dual_jacobi_holds(m)


class TestIsoB:
    @pytest.mark.parametrize("m", [2, 3])
    def test_transpose(self, m):
        assert iso_B_check(m)

    def test_untransposed_fails_hand_expansion(self):
        # Without transpose: B'(f12) = E12, B'(f21) = E21, B'(f11 - f22) = h.
        # B'([f12, f21]) = B'(-(f11 - f22)) = -h, while [E12, E21] = h.
        h = E(2, 1, 1) - E(2, 2, 2)
        assert commutator(E(2, 1, 2), E(2, 2, 1)) == h
        assert h != h.scale(-1)

    @pytest.mark.parametrize("m", [2, 3])
    def test_untransposed(self, m):
        assert not iso_B_check(m, transpose=False)


class TestFormB:
    def test_values_sl2(self):
        g = form_B(2).gram
        assert g[0, 1] == 1  # (E12, E21)_B
        assert g[0, 0] == 0  # (E12, E12)_B
        assert g[2, 2] == 2  # (h, h)_B

    def test_pairing_oracle(self):
        # B^{-1}(E12) = f21, evaluated on E21 directly
        f21 = restrict_to_sl(2, 1, 2)
        assert B_inverse(E(2, 1, 2), 2) == f21
        assert f21(sl_basis(2).coordinate_vector(E(2, 2, 1))) == 1

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_equals_trace_form(self, m):
        alg = sl_basis(m)
        brute = DenseMatrix(alg.dim, alg.dim, ((x @ y).trace() for x in alg.basis for y in alg.basis))
        assert form_B(m).gram == brute == trace_form(alg).gram

    @pytest.mark.parametrize("m", [2, 3])
    def test_symmetric_invariant(self, m):
        f = form_B(m)
        assert f.is_symmetric() and f.is_invariant()


def _brute_killing(alg):
    """tr(ad x ad y) with ad matrices assembled from commutators via independent solves."""
    d, m = alg.dim, alg.ambient
    A = DenseMatrix(m * m, d, (alg.basis[a].flat()[p] for p in range(m * m) for a in range(d)))

    def ad(x):
        cols = [solve_linear(A, commutator(x, b).flat()) for b in alg.basis]
        return DenseMatrix(d, d, (cols[j][i] for i in range(d) for j in range(d)))

    ads = [ad(x) for x in alg.basis]
    return DenseMatrix(d, d, (sum((ads[a] @ ads[b]).column(k)[k] for k in range(d)) for a in range(d) for b in range(d)))


class TestKilling:
    def test_sl2_values(self):
        k = killing_form(sl_basis(2)).gram
        brute = _brute_killing(sl_basis(2))
        assert k == brute
        assert k[0, 1] == 4 and k[2, 2] == 8

    def test_sl3_brute(self):
        assert killing_form(sl_basis(3)).gram == _brute_killing(sl_basis(3))

    @pytest.mark.parametrize("m", [2, 3])
    def test_invariant(self, m):
        assert killing_form(sl_basis(m)).is_invariant()


class TestProportionality:
    @pytest.mark.parametrize("m, expected", [(2, F(1, 4)), (3, F(1, 6))])
    def test_trace_vs_killing(self, m, expected):
        # ratio oracle from a single nonzero entry of the brute-force Killing matrix
        alg = sl_basis(m)
        brute = _brute_killing(alg)
        tr = trace_form(alg).gram
        a, b = next((a, b) for a in range(alg.dim) for b in range(alg.dim) if brute[a, b])
        assert tr[a, b] / brute[a, b] == expected
        assert proportionality(form_B(m), killing_form(alg)) == expected

    def test_scalar_multiple(self):
        f = form_B(2)
        assert proportionality(f, BilinearForm(f.owner, f.gram.scale(2))) == F(1, 2)

    def test_not_proportional(self):
        f = form_B(2)
        g = BilinearForm(f.owner, DenseMatrix.identity(3))
        assert proportionality(f, g) is None

    def test_degenerate(self):
        alg = sl_basis(2)
        z = BilinearForm(alg, DenseMatrix.zeros(3, 3))
        with pytest.raises(DegenerateForm):
            proportionality(z, z)


class TestAdjointFactorization:
    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_holds(self, m):
        assert adjoint_factorization_check(m)

    def test_half_delta_fails(self):
        assert not adjoint_factorization_check(2, delta_sl(2).scale(F(1, 2)))


class TestDualize:
    @pytest.mark.parametrize("m", [2, 3])
    def test_cosplit_dual(self, m):
        res = dualize(sl_basis(m), delta_sl(m))
        assert res.verdict.kind in (CosplitKind.COSPLIT, CosplitKind.WEAK)
        assert res.algebra.jacobi_witness() is None

    def test_weak_dual(self):
        res = dualize(sl_basis(2), delta_sl(2).scale(3))
        assert res.verdict.kind is CosplitKind.WEAK
        assert set(res.verdict.diagonal) == {3}

    @pytest.mark.parametrize("c", [1, 2, F(-1, 3)])
    def test_double_dual(self, c):
        alg, delta = sl_basis(3), delta_sl(3).scale(c)
        assert double_dual_composite(alg, delta) == composite_matrix(alg, delta)

    def test_not_cosplit_rejected(self):
        with pytest.raises(NotCoSplitError):
            dualize(sl_basis(2), Cobracket.zero(sl_basis(2)))
