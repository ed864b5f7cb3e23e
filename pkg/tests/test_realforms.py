import numpy as np
import pytest

from realflag.core import (InputError, UnsupportedOperation, cartan_decomposition,
                           validate_algebra)
from realflag.linalg import in_span, span_residual, stack_span
from realflag.realforms import (build_classical, diagonal_embed, direct_sum,
                                embed_division, factor_embed, get_algebra,
                                matrix_involution, restricted_roots)


class TestConstructors:
    @pytest.mark.parametrize("family,p,q,dim", [
        ("so", 1, 4, 10), ("su", 1, 2, 8), ("sp", 1, 2, 21),
        ("so", 0, 3, 3), ("su", 0, 2, 3), ("sp", 0, 1, 3),
    ])
    def test_dimensions(self, family, p, q, dim):
        L = build_classical(family, p, q)
        assert L.dim == dim
        validate_algebra(L)

    def test_sp12_flag_dimension(self, parabolic_of):
        assert parabolic_of("sp(1,2)").dim_flag == 7

    def test_bad_signature(self):
        with pytest.raises(InputError):
            build_classical("so", 1, 0)
        with pytest.raises(InputError):
            build_classical("u", 1, 1)

    def test_k_s_dimensions_and_signs(self):
        for name in ["so(1,4)", "su(1,3)", "sp(1,2)", "sl3"]:
            L = get_algebra(name)
            k, s = cartan_decomposition(L)
            assert k.dim + s.shape[0] == L.dim
            B = L.killing
            from realflag.linalg import signature_of
            assert signature_of(k.basis @ B @ k.basis.T) == (0, k.dim)
            assert signature_of(s @ B @ s.T) == (s.shape[0], 0)

    def test_registry_shorthand(self):
        assert get_algebra("so13").dim == get_algebra("so(1,3)").dim
        assert get_algebra("sl2^2").dim == 6
        assert get_algebra("sp(1,3)").dim == 36
        assert get_algebra("g2").dim == 14
        assert get_algebra("f4").dim == 52
        with pytest.raises(InputError):
            get_algebra("e8")


class TestSums:
    def test_direct_sum_dims(self):
        L = direct_sum(get_algebra("so(3)"), get_algebra("so(3)"))
        assert L.dim == 6
        validate_algebra(L)

    def test_cross_brackets_vanish(self):
        L1, L2 = get_algebra("so(1,2)"), get_algebra("so(3)")
        L = direct_sum(L1, L2)
        X = np.zeros(6); X[0] = 1.0
        Y = np.zeros(6); Y[4] = 1.0
        assert np.linalg.norm(L.bracket(X, Y)) < 1e-12

    def test_killing_block_diagonal(self):
        L1, L2 = get_algebra("so(1,2)"), get_algebra("so(3)")
        L = direct_sum(L1, L2)
        B = L.killing
        assert np.abs(B[:3, 3:]).max() < 1e-10
        assert np.allclose(B[:3, :3], L1.killing, atol=1e-10)
        assert np.allclose(B[3:, 3:], L2.killing, atol=1e-10)

    def test_diagonal_embed(self):
        sub = diagonal_embed(get_algebra("sl2"), 3)
        assert sub.dim == 3 and sub.ambient.dim == 9
        sub.validate()

    def test_diagonal_embed_so3(self):
        sub = diagonal_embed(get_algebra("so(3)"), 2)
        assert sub.dim == 3
        sub.validate()

    def test_factor_embed(self):
        sub = factor_embed(get_algebra("sl2"), 3, (0, 0, 1))
        assert sub.dim == 6
        sub.validate()


class TestEmbedDivision:
    def test_su2_in_so4(self):
        sub = embed_division("complex", (0, 2), "so")
        assert sub.dim == 3
        sub.validate()

    def test_sp1_in_so4(self):
        sub = embed_division("quaternion", (0, 1), "so")
        assert sub.dim == 3 and sub.ambient.dim == 6
        sub.validate()

    def test_sp2_in_so8(self):
        sub = embed_division("quaternion", (0, 2), "so")
        assert sub.dim == 10 and sub.ambient.dim == 28
        sub.validate()

    def test_so13_in_su13(self):
        sub = embed_division("real", (1, 3), "su")
        assert sub.dim == 6
        sub.validate()

    def test_u11_in_sp11(self):
        sub = embed_division("complex", (1, 1), "sp")
        assert sub.dim == 4
        sub.validate()

    def test_unsupported(self):
        with pytest.raises(InputError):
            embed_division("real", (1, 1), "sp")


class TestRestrictedRoots:
    @pytest.mark.parametrize("name,mult", [
        ("so(1,2)", (1, 0)), ("so(1,3)", (2, 0)), ("so(1,4)", (3, 0)), ("so(1,5)", (4, 0)),
        ("su(1,2)", (2, 1)), ("su(1,3)", (4, 1)),
        ("sp(1,2)", (4, 3)), ("sp(1,3)", (8, 3)),
    ])
    def test_multiplicities(self, name, mult):
        rr = restricted_roots(get_algebra(name))
        assert rr.multiplicities == mult

    def test_compact_raises(self):
        with pytest.raises(UnsupportedOperation):
            restricted_roots(get_algebra("so(4)"))

    def test_multiplicities_seed_independent(self):
        for name in ("su(1,3)", "sp(1,2)"):
            L = get_algebra(name)
            mults = {restricted_roots(L, seed=s).multiplicities for s in (0, 1, 2)}
            assert len(mults) == 1

    def test_decomposition_fills(self, so14):
        rr = restricted_roots(so14)
        total = rr.m.shape[0] + rr.a.shape[0] + sum(s.shape[0] for s in rr.root_spaces)
        assert total == so14.dim

    def test_eigenvalue_action(self, sp12):
        rr = restricted_roots(sp12)
        Z = rr.a[0]
        for j in (1, 2, -1, -2):
            space = rr.space_of([float(j)])
            if space.shape[0] == 0:
                continue
            img = space @ sp12.ad(Z).T
            assert np.abs(img - j * space).max() < 1e-8

    def test_m_centralizes_a(self, sp12):
        rr = restricted_roots(sp12)
        br = np.einsum("ai,bj,ijk->abk", rr.m, rr.a, sp12.bracket_tensor)
        assert np.abs(br).max() < 1e-9

    def test_m_dim_identity(self, sp12):
        rr = restricted_roots(sp12)
        k, _ = cartan_decomposition(sp12)
        ma, m2a = rr.multiplicities
        assert rr.m.shape[0] == k.dim - ma - m2a

    def test_root_space_brackets(self, su12):
        rr = restricted_roots(su12)
        ga = rr.space_of([1.0])
        g2a = rr.space_of([2.0])
        gma = rr.space_of([-1.0])
        br = np.einsum("ai,bj,ijk->abk", ga, ga, su12.bracket_tensor).reshape(-1, su12.dim)
        if np.linalg.norm(br) > 1e-9:
            assert span_residual(br, g2a) < 1e-8
        br = np.einsum("ai,bj,ijk->abk", ga, gma, su12.bracket_tensor).reshape(-1, su12.dim)
        assert span_residual(br, stack_span(rr.m, rr.a)) < 1e-8

    def test_prescribed_a_validation(self, so14):
        k, s = cartan_decomposition(so14)
        with pytest.raises(InputError):
            restricted_roots(so14, a_basis=k.basis[:1])   # not inside s


class TestMinimalParabolic:
    @pytest.mark.parametrize("name,dgp", [
        ("sl2", 1), ("so(1,2)", 1), ("so(1,4)", 3), ("su(1,2)", 3), ("sp(1,2)", 7),
    ])
    def test_flag_dimension(self, name, dgp, parabolic_of):
        assert parabolic_of(name).dim_flag == dgp

    def test_p_is_subalgebra_n_nilpotent_ideal(self, parabolic_of):
        P = parabolic_of("sp(1,2)")
        g = P.algebra
        P.p.validate()
        # [p, n] inside n
        br = np.einsum("ai,bj,ijk->abk", P.p.basis, P.n.basis, g.bracket_tensor)
        assert span_residual(br.reshape(-1, g.dim), P.n.basis) < 1e-8
        # nilpotency: [n, [n, n]] = 0 in rank one
        nn = np.einsum("ai,bj,ijk->abk", P.n.basis, P.n.basis, g.bracket_tensor).reshape(-1, g.dim)
        nnn = np.einsum("ai,bj,ijk->abk", P.n.basis, nn, g.bracket_tensor)
        assert np.abs(nnn).max() < 1e-8

    def test_weyl_swaps_root_spaces(self, parabolic_of):
        P = parabolic_of("su(1,2)")
        ad = P.weyl_ad
        for j in (1.0, 2.0):
            sp = P.roots.space_of([j])
            target = P.roots.space_of([-j])
            if sp.shape[0]:
                assert in_span(sp @ ad.T, target, 1e-7)

    def test_weyl_isometry_of_killing(self, parabolic_of):
        P = parabolic_of("so(1,4)")
        B = P.algebra.killing
        ad = P.weyl_ad
        assert np.abs(ad.T @ B @ ad - B).max() < 1e-8 * max(1.0, np.abs(B).max())

    def test_weyl_fixes_a(self, parabolic_of):
        P = parabolic_of("sp(1,2)")
        assert in_span(P.roots.a @ P.weyl_ad.T, P.roots.a, 1e-7)

    def test_dim_p_plus_flag(self, parabolic_of):
        for name in ["so(1,4)", "su(1,2)", "sp(1,2)"]:
            P = parabolic_of(name)
            assert P.p.dim + P.dim_flag == P.algebra.dim
            assert P.dim_flag == sum(P.roots.multiplicities)


class TestMatrixInvolution:
    def test_block_involution(self, so14):
        sigma = matrix_involution(so14, np.diag([1.0, 1, -1, -1, -1]))
        assert np.linalg.norm(sigma @ sigma - np.eye(so14.dim)) < 1e-9
        # it is an automorphism
        c = so14.bracket_tensor
        lhs = np.einsum("ijm,km->ijk", c, sigma)
        rhs = np.einsum("ai,bj,abk->ijk", sigma, sigma, c)
        assert np.abs(lhs - rhs).max() < 1e-8
