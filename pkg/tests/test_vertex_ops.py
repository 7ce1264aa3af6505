import pytest
from hypothesis import given
from hypothesis import strategies as st

from symvertex.partitions import partitions_up_to, weight
from symvertex.schurring import SymFunc
from symvertex.vertexops import (ChargedState, FactorChain, LaurentMap,
                                 ZeroModeNormalForm, _embed_chain,
                                 annihilation_zero_word, anticommutator,
                                 apply_chain, build_dual_vertex,
                                 build_vertex, creation_zero_word,
                                 make_factor, mode,
                                 multiply_one_minus_monomial,
                                 normal_ordered_pair, normal_ordered_string,
                                 normalize_window, string_chain,
                                 vertex_string, zero_mode_normal_form)

S = SymFunc.schur
ONE = SymFunc.one()


def chain_summary(chain):
    return [(f.action, f.family, dict(f.shape.c), f.exps)
            for f in chain.factors]


class TestChainBuilders:
    def test_creation_row_three(self):
        got = chain_summary(build_vertex((3,)))
        assert got == [
            ("multiply", "M", {(1,): 1}, (1,)),
            ("skew", "L", {(1,): 1}, (-1,)),
            ("skew", "L", {(2,): 1}, (1,)),
            ("skew", "L", {(1,): 1}, (2,)),
            ("skew", "L", {(): 1}, (3,)),
        ]

    def test_creation_empty_shape_is_classical(self):
        got = chain_summary(build_vertex(()))
        assert got == [("multiply", "M", {(1,): 1}, (1,)),
                       ("skew", "L", {(1,): 1}, (-1,))]

    def test_creation_hook(self):
        got = chain_summary(build_vertex((2, 1)))
        assert got == [
            ("multiply", "M", {(1,): 1}, (1,)),
            ("skew", "L", {(1,): 1}, (-1,)),
            ("skew", "L", {(2,): 1, (1, 1): 1}, (1,)),
            ("skew", "L", {(1,): 1}, (2,)),
        ]

    def test_annihilation_row_three(self):
        got = chain_summary(build_dual_vertex((3,)))
        assert got == [
            ("multiply", "L", {(1,): 1}, (1,)),
            ("skew", "M", {(1,): 1}, (-1,)),
            ("skew", "M", {(2,): 1}, (1,)),
        ]

    def test_annihilation_empty_shape(self):
        got = chain_summary(build_dual_vertex(()))
        assert got == [("multiply", "L", {(1,): 1}, (1,)),
                       ("skew", "M", {(1,): 1}, (-1,))]

    def test_annihilation_column_two(self):
        got = chain_summary(build_dual_vertex((1, 1)))
        assert got == [
            ("multiply", "L", {(1,): 1}, (1,)),
            ("skew", "M", {(1,): 1}, (-1,)),
            ("skew", "M", {(1,): 1}, (1,)),
            ("skew", "L", {(): 1}, (2,)),
        ]


class TestApplyChain:
    def test_row_series_on_vacuum(self):
        got = apply_chain(build_vertex(()), ONE, {"z": (0, 3)})
        for a in range(4):
            assert got.get((a,)) == S((a,) if a else ())

    def test_identity_chain(self):
        chain = FactorChain(("z",), [])
        got = apply_chain(chain, S((2, 1)), {"z": (-2, 2)})
        assert got.get((0,)) == S((2, 1))
        assert all(e == (0,) for e, _ in got.items())

    def test_row_three_cube_coefficient(self):
        got = apply_chain(build_vertex((3,)), ONE, {"z": (3, 3)})
        assert got.get((3,)) == S((3,)) - ONE

    def test_window_enlargement_is_invisible(self):
        for chain in (build_vertex((2,)), build_dual_vertex((2, 1)),
                      string_chain((2,), 2)):
            nv = len(chain.vars)
            small = {v: (-2, 2) for v in chain.vars}
            big = {v: (-4, 4) for v in chain.vars}
            f = S((2, 1))
            a = apply_chain(chain, f, small)
            b = apply_chain(chain, f, big).restrict(
                normalize_window(small, chain.vars))
            assert a == b

    @given(st.sampled_from(partitions_up_to(4)))
    def test_classical_pair_annihilates_positive_modes(self, lam):
        got = apply_chain(build_vertex(()), S(lam), {"z": (-6, -1)})
        # coefficients below degree -|lam| must vanish
        for (a,), v in got.items():
            assert a >= -weight(lam)


class TestModes:
    def test_zero_mode_on_vacuum(self):
        got = mode((), "X", 0, ChargedState.vacuum(0, ONE))
        assert got == ChargedState({1: ONE})

    def test_negative_mode_creates_row(self):
        got = mode((), "X", -2, ChargedState.vacuum(0, ONE))
        assert got == ChargedState({1: S((2,))})

    def test_positive_mode_kills_vacuum(self):
        got = mode((), "X", 1, ChargedState.vacuum(0, ONE))
        assert got == ChargedState()

    def test_kind_spellings(self):
        st0 = ChargedState.vacuum(0, S((1,)))
        assert mode((2,), "Xstar", 0, st0) == mode((2,), "X*", 0, st0)

    def test_linearity_over_sectors(self):
        st0 = ChargedState({0: ONE, 1: S((1,))})
        got = mode((), "X", 0, st0)
        a = mode((), "X", 0, ChargedState.vacuum(0, ONE))
        b = mode((), "X", 0, ChargedState.vacuum(1, S((1,))))
        assert got == a + b


class TestAnticommutator:
    def test_delta_pairing(self):
        st0 = ChargedState.vacuum(0, S((1,)))
        got = anticommutator((3,), "X", 1, "Xstar", -1, st0)
        assert got == st0

    def test_like_kinds_vanish(self):
        st0 = ChargedState.vacuum(0, S((2, 1)))
        assert anticommutator((2,), "X", -1, "X", 2, st0) == ChargedState()

    def test_mixed_kinds_off_diagonal_vanish(self):
        st0 = ChargedState.vacuum(0, S((2,)))
        got = anticommutator((2,), "X", 2, "Xstar", -1, st0)
        assert got == ChargedState()

    def test_mismatched_shapes_rejected(self):
        st0 = ChargedState.vacuum(0, ONE)
        with pytest.raises(ValueError):
            anticommutator((2,), "X", 0, "Xstar", 0, st0, pi_b=(1, 1))
        got = anticommutator((2,), "X", 0, "Xstar", 0, st0, pi_b=(2,))
        assert got == st0


class TestVertexString:
    def test_too_tall_to_fit(self):
        assert vertex_string((3,), (2, 1)) == S((2, 1))

    @given(st.sampled_from(partitions_up_to(3)[1:]))
    def test_empty_label(self, pi):
        assert vertex_string(pi, ()) == ONE
        assert vertex_string(pi, (), dual=True) == ONE

    def test_dual_column_two(self):
        assert vertex_string((2,), (1, 1), dual=True) == S((2,)) - ONE

    def test_vertex_budget(self):
        with pytest.raises(ValueError):
            vertex_string((2,), (1, 1, 1, 1, 1))


class TestZeroModes:
    def test_two_creations(self):
        got = zero_mode_normal_form(creation_zero_word("z")
                                    + creation_zero_word("w"))
        assert got == ZeroModeNormalForm(prefactor=(("w", -2), ("z", -1)),
                                         alpha=(("w", 1), ("z", 1)),
                                         shift=2)

    def test_two_annihilations(self):
        got = zero_mode_normal_form(annihilation_zero_word("z")
                                    + annihilation_zero_word("w"))
        assert got == ZeroModeNormalForm(prefactor=(("w", -1),),
                                         alpha=(("w", -1), ("z", -1)),
                                         shift=-2)

    def test_empty_word(self):
        assert zero_mode_normal_form([]) == ZeroModeNormalForm((), (), 0)

    def test_concrete_charge_action(self):
        nf = zero_mode_normal_form(creation_zero_word("z")
                                   + creation_zero_word("w"))
        # on charge c the pair reads w^c z^(c+1) and lands at charge c+2
        assert nf.exponents_at(0) == ({"z": 1}, 2)
        assert nf.exponents_at(2) == ({"w": 2, "z": 3}, 4)
        assert nf.exponents_at(-1) == ({"w": -1}, 1)


class TestNormalOrdering:
    def test_like_kinds_route_through_string_form(self):
        npd = normal_ordered_pair((2, 1), ("X", "X"), ("z", "w"))
        direct = normal_ordered_string((2, 1), 2, varnames=("z", "w"))
        assert tuple(npd.prefactors) == tuple(direct.prefactors)
        assert chain_summary(npd.chain) == chain_summary(direct.chain)

    def test_like_kind_prefactor(self):
        npd = normal_ordered_string((2,), 2, varnames=("z", "w"))
        assert tuple(npd.prefactors) == (((-1, 1), 1),)

    def test_mixed_pair_has_symbolic_inverse(self):
        npd = normal_ordered_pair((2,), ("X", "Xstar"))
        assert tuple(npd.prefactors) == (((-1, 1), -1),)
        with pytest.raises(ValueError):
            npd.apply(ONE, {"z": (-1, 1), "w": (-1, 1)})

    def test_like_kind_product_matches_direct_chain(self):
        for pi in ((), (2,), (1, 1)):
            for dual in (False, True):
                win = {"z1": (-2, 2), "z2": (-2, 2)}
                lhs = apply_chain(string_chain(pi, 2, dual=dual), S((1,)),
                                  win)
                rhs = normal_ordered_string(pi, 2, dual=dual).apply(
                    S((1,)), win)
                assert lhs == rhs, (pi, dual)

    def test_mixed_pair_cross_multiplied(self):
        for pi, kinds in (((2,), ("X", "Xstar")), ((2,), ("Xstar", "X")),
                          ((2, 1), ("X", "Xstar"))):
            vs = ("z", "w")
            first = build_dual_vertex(pi) if kinds[0] == "Xstar" \
                else build_vertex(pi)
            second = build_dual_vertex(pi) if kinds[1] == "Xstar" \
                else build_vertex(pi)
            lhs_chain = FactorChain(vs, _embed_chain(first, 0, vs)
                                    + _embed_chain(second, 1, vs))
            win = normalize_window({"z": (-2, 2), "w": (-2, 2)}, vs)
            pad = {"z": (-3, 3), "w": (-3, 3)}
            f = S((1,))
            lhs = apply_chain(lhs_chain, f, pad)
            lhs = multiply_one_minus_monomial(lhs, (-1, 1)).restrict(win)
            npd = normal_ordered_pair(pi, kinds, vs)
            rhs = apply_chain(npd.chain, f, win)
            assert lhs == rhs, (pi, kinds)


class TestLaurentAndStates:
    def test_normalize_window_forms(self):
        vs = ("z", "w")
        assert normalize_window(2, vs) == {"z": (-2, 2), "w": (-2, 2)}
        assert normalize_window((0, 3), vs) == {"z": (0, 3), "w": (0, 3)}
        assert normalize_window({"z": (1, 2), "w": (-1, 0)}, vs) == \
            {"z": (1, 2), "w": (-1, 0)}

    def test_one_minus_monomial(self):
        m = LaurentMap(("z",))
        m.data[(0,)] = ONE
        m.data[(1,)] = S((1,))
        got = multiply_one_minus_monomial(m, (1,))
        assert got.get((0,)) == ONE
        assert got.get((1,)) == S((1,)) - ONE
        assert got.get((2,)) == -S((1,))

    def test_charged_state_algebra(self):
        a = ChargedState({0: ONE, 2: S((1,))})
        b = ChargedState({0: -ONE})
        assert (a + b) == ChargedState({2: S((1,))})
        assert a.scale(0) == ChargedState()
        assert a.shift_charge(3) == ChargedState({3: ONE, 5: S((1,))})
        assert not ChargedState()
        assert a.degree() == 1

    def test_state_ring_action(self):
        a = ChargedState({1: S((2, 1))})
        assert a.skew_by(S((1,))) == ChargedState({1: S((2,)) + S((1, 1))})
        assert a * S((1,)) == ChargedState({1: S((2, 1)) * S((1,))})

    def test_factor_term_grading(self):
        vs = ("z", "w")
        f = make_factor("multiply", "M", S((2,)), (1, 0), vs)
        for r in range(4):
            val = f.term(r)
            assert val.is_homogeneous() and val.degree() == 2 * r
        g = make_factor("skew", "L", S((1, 1)), (0, 2), vs)
        assert g.term(3).degree() == 6
