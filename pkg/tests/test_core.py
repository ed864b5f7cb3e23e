import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from realflag.core import (ConstructionError, InputError, UnsupportedOperation,
                           as_algebra, cartan_decomposition, jacobi_residual,
                           killing_form, load_algebra, noncompact_ideal, save_algebra,
                           subalgebra, subalgebra_closure, validate_algebra)
from realflag.linalg import numeric_rank, signature_of
from realflag.realforms import direct_sum, get_algebra

from oracles import commutator_coefficients


def _unit(L, label):
    v = np.zeros(L.dim)
    v[L.labels.index(label)] = 1.0
    return v


class TestBracket:
    def test_antisymmetry_on_any_vector(self, sl2):
        rng = np.random.default_rng(0)
        X = rng.standard_normal(3)
        assert np.linalg.norm(sl2.bracket(X, X)) < 1e-12

    def test_sl2_EF_is_H(self, sl2):
        # oracle: 2x2 matrix commutator
        E, F = _unit(sl2, "E01"), _unit(sl2, "E10")
        expected = commutator_coefficients(list(sl2.matrices),
                                           sl2.labels.index("E01"), sl2.labels.index("E10"))
        got = sl2.bracket(E, F)
        assert np.allclose(got, expected, atol=1e-12)
        assert np.allclose(got, _unit(sl2, "H0"), atol=1e-12)

    def test_so3_cyclic(self):
        so3 = get_algebra("so(3)")
        # standard cyclic basis, checked against matrix commutators
        Lx = np.array([[0.0, 0, 0], [0, 0, -1], [0, 1, 0]])
        Ly = np.array([[0.0, 0, 1], [0, 0, 0], [-1, 0, 0]])
        Lz = np.array([[0.0, -1, 0], [1, 0, 0], [0, 0, 0]])
        sub = np.array([so3.coefficients_of(M) for M in (Lx, Ly, Lz)])
        rest = as_algebra(subalgebra(so3, sub, name="so3"))
        e = np.eye(3)
        # [e1, e2] = e3 cyclically, oracle = commutators of Lx, Ly, Lz
        for i, j, k in [(0, 1, 2), (1, 2, 0), (2, 0, 1)]:
            oracle = commutator_coefficients([Lx, Ly, Lz], i, j)
            assert np.allclose(oracle, e[k], atol=1e-12)
            assert np.allclose(rest.bracket(e[i], e[j]), e[k], atol=1e-10)

    def test_dimension_mismatch(self, sl2):
        with pytest.raises(InputError):
            sl2.bracket(np.zeros(4), np.zeros(3))

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 2**31))
    def test_bilinear(self, seed):
        L = get_algebra("sl2")
        rng = np.random.default_rng(seed)
        X, Y, Z = rng.standard_normal((3, 3))
        a, b = rng.standard_normal(2)
        lhs = L.bracket(a * X + b * Y, Z)
        rhs = a * L.bracket(X, Z) + b * L.bracket(Y, Z)
        assert np.allclose(lhs, rhs, atol=1e-10)


class TestKilling:
    def test_sl2_BHH(self, sl2):
        B = killing_form(sl2)
        H = _unit(sl2, "H0")
        assert abs(B(H, H) - 8.0) < 1e-10

    def test_so3_signature(self):
        assert killing_form(get_algebra("so(3)")).signature == (0, 3)

    def test_so12_signature(self):
        assert killing_form(get_algebra("so(1,2)")).signature == (2, 1)

    def test_ad_invariance(self, so14):
        rng = np.random.default_rng(3)
        B = so14.killing
        c = so14.bracket_tensor
        X = rng.standard_normal((1000, so14.dim))
        Y = rng.standard_normal((1000, so14.dim))
        Z = rng.standard_normal((1000, so14.dim))
        bzx = np.einsum("ti,tj,ijk->tk", Z, X, c)
        bzy = np.einsum("ti,tj,ijk->tk", Z, Y, c)
        resid = np.einsum("tk,kl,tl->t", bzx, B, Y) + np.einsum("tk,kl,tl->t", X, B, bzy)
        scale = max(1.0, np.abs(np.einsum("tk,kl,tl->t", bzx, B, Y)).max())
        assert np.abs(resid).max() / scale < 1e-8


class TestAdjoint:
    def test_zero(self, sl2):
        assert np.linalg.norm(sl2.ad(np.zeros(3))) == 0.0

    def test_sl2_H_eigenvalues(self, sl2):
        ev = np.sort(np.linalg.eigvals(sl2.ad(_unit(sl2, "H0"))).real)
        assert np.allclose(ev, [-2.0, 0.0, 2.0], atol=1e-10)

    def test_ad_matches_bracket(self, so14):
        rng = np.random.default_rng(4)
        for _ in range(10):
            X, Y = rng.standard_normal((2, so14.dim))
            assert np.allclose(so14.ad(X) @ Y, so14.bracket(X, Y), atol=1e-10)


class TestClosure:
    def test_nilpotent_line(self, sl2):
        sub = subalgebra_closure(sl2, _unit(sl2, "E01").reshape(1, -1))
        assert sub.dim == 1

    def test_EF_generate(self, sl2):
        gens = np.vstack([_unit(sl2, "E01"), _unit(sl2, "E10")])
        assert subalgebra_closure(sl2, gens).dim == 3

    def test_so3_inside_so13(self):
        so13 = get_algebra("so(1,3)")
        rows = [so13.coefficients_of(M) for M in so13.matrices
                if np.abs(M[0]).max() == 0.0]  # rotations fixing the time axis
        sub = subalgebra_closure(so13, np.array(rows))
        assert sub.dim == 3

    def test_idempotent(self, so14):
        rng = np.random.default_rng(5)
        gens = rng.standard_normal((2, so14.dim))
        once = subalgebra_closure(so14, gens)
        twice = subalgebra_closure(so14, once.basis)
        assert numeric_rank(once.basis) == numeric_rank(twice.basis)

    def test_empty_generators(self, sl2):
        with pytest.raises(InputError):
            subalgebra_closure(sl2, np.zeros((0, 3)))


class TestCartan:
    def test_so14(self, so14):
        k, s = cartan_decomposition(so14)
        assert (k.dim, s.shape[0]) == (6, 4)

    def test_su12(self, su12):
        k, s = cartan_decomposition(su12)
        assert (k.dim, s.shape[0]) == (4, 4)

    def test_compact(self):
        k, s = cartan_decomposition(get_algebra("so(3)"))
        assert s.shape[0] == 0

    def test_bracket_relations(self, so14):
        k, s = cartan_decomposition(so14)
        ks = np.einsum("ai,bj,ijk->abk", k.basis, s, so14.bracket_tensor).reshape(-1, so14.dim)
        ss = np.einsum("ai,bj,ijk->abk", s, s, so14.bracket_tensor).reshape(-1, so14.dim)
        from realflag.linalg import span_residual
        assert span_residual(ks, s) < 1e-8
        assert span_residual(ss, k.basis) < 1e-8

    def test_killing_signs(self, so14):
        k, s = cartan_decomposition(so14)
        B = so14.killing
        assert signature_of(k.basis @ B @ k.basis.T) == (0, k.dim)
        assert signature_of(s @ B @ s.T) == (s.shape[0], 0)

    def test_requires_theta(self, sl2):
        from realflag.core import LieAlgebra
        bare = LieAlgebra(labels=sl2.labels, matrices=sl2.matrices, theta=None)
        with pytest.raises(UnsupportedOperation):
            cartan_decomposition(bare)


class TestNoncompactIdeal:
    def test_mixed_sum(self):
        L = direct_sum(get_algebra("so(1,2)"), get_algebra("so(3)"))
        nc, comp = noncompact_ideal(L)
        assert nc.dim == 3 and comp.dim == 3
        # the noncompact ideal is the first factor
        assert np.abs(nc.basis[:, 3:]).max() < 1e-9

    def test_compact(self):
        nc, comp = noncompact_ideal(get_algebra("so(4)"))
        assert nc.dim == 0 and comp.dim == 6

    def test_all_noncompact(self):
        L = get_algebra("sl2^3")
        nc, _ = noncompact_ideal(L)
        assert nc.dim == 9

    def test_nonreductive_rejected(self, sl2):
        from realflag.core import LieAlgebra
        # 2-dim affine algebra [X, Y] = Y is not reductive
        c = np.zeros((2, 2, 2))
        c[0, 1, 1], c[1, 0, 1] = 1.0, -1.0
        aff = LieAlgebra(labels=("X", "Y"), structure=c, theta=np.eye(2))
        with pytest.raises(UnsupportedOperation):
            noncompact_ideal(aff)


class TestProperties:
    @pytest.mark.parametrize("name", ["sl2", "so(1,3)", "so(1,4)", "su(1,2)", "sp(1,2)", "sl3"])
    def test_jacobi_sampled(self, name):
        assert jacobi_residual(get_algebra(name), 1000, seed=0) < 1e-8

    @pytest.mark.parametrize("name", ["sl2", "so(1,4)", "su(1,2)", "sp(1,2)", "sl2^3"])
    def test_b_theta_positive_definite(self, name):
        L = get_algebra(name)
        ev = np.linalg.eigvalsh(L.b_theta)
        assert ev.min() > 0

    @pytest.mark.parametrize("name", ["sl2", "so(1,4)", "su(1,2)"])
    def test_validate(self, name):
        validate_algebra(get_algebra(name))


class TestJSON:
    def test_roundtrip(self, tmp_path, so14):
        path = tmp_path / "so14.json"
        save_algebra(so14, path)
        back = load_algebra(path)
        assert back.dim == so14.dim
        assert np.allclose(back.bracket_tensor, so14.bracket_tensor, atol=1e-12)
        assert np.allclose(back.theta, so14.theta, atol=1e-12)
        assert back.labels == so14.labels

    def test_loader_validates_jacobi(self, tmp_path):
        doc = {"dim": 2, "labels": ["x", "y"],
               "bracket": [[0, 1, 0, 1.0], [0, 1, 1, 1.0]]}
        # [x,y] = x + y fails Jacobi? it does satisfy Jacobi (2-dim); corrupt antisymmetry instead
        import json
        path = tmp_path / "bad.json"
        doc = {"dim": 3, "labels": ["a", "b", "c"],
               "bracket": [[0, 1, 2, 1.0], [1, 2, 0, 1.0], [2, 0, 1, 1.0],
                           [0, 2, 0, 0.5]]}  # perturbed so(3): Jacobi fails
        path.write_text(json.dumps(doc))
        with pytest.raises(ConstructionError):
            load_algebra(path)

    def test_loader_rejects_malformed(self, tmp_path):
        path = tmp_path / "junk.json"
        path.write_text('{"dim": 3}')
        with pytest.raises(InputError):
            load_algebra(path)


class TestAsAlgebra:
    def test_restriction_consistent(self, so14):
        k, _ = cartan_decomposition(so14)
        sub = as_algebra(k, name="k")
        assert sub.dim == 6
        validate_algebra(sub)
        assert killing_form(sub).signature == (0, 6)
