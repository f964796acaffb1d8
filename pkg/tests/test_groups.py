import pytest

from leibniz_aut import algebra as A
from leibniz_aut.algebra import Algebra
from leibniz_aut.catalog import AutParams, general_aut_matrix, make_lei3
from leibniz_aut.errors import (BudgetExceeded, DimensionMismatch, FieldMismatch, NotFiniteField,
                                NotInvariant)
from leibniz_aut.groups import (Invariance, MatrixGroup, centralizer_of_quotient,
                                centralizer_of_subalgebra, enumerate_automorphisms,
                                invariance_check, is_automorphism, is_endomorphism, is_group,
                                is_internal_semidirect, is_normal, is_subgroup,
                                witness_iso_to_additive_pairs, witness_iso_to_multiplicative)
from leibniz_aut.linalg import Matrix, Subspace, invert
from leibniz_aut.theorem import family

from conftest import F2, F3, F5, MAKERS, Q, all_matrices, random_endomorphisms


def brute_force_aut(alg):
    """Independent oracle: scalar-by-scalar test of every matrix."""
    return {m for m in all_matrices(alg.field, alg.dim) if is_automorphism(alg, m)}


class TestEndomorphisms:
    def test_identity_and_zero(self):
        alg = make_lei3(Q)
        assert is_endomorphism(alg, Matrix.identity(Q, 3))
        assert is_endomorphism(alg, Matrix.zeros(Q, 3, 3))
        assert not is_automorphism(alg, Matrix.zeros(Q, 3, 3))
        assert is_automorphism(alg, Matrix.identity(Q, 3))

    def test_swap_is_not_endomorphism(self):
        # f([a1,a1]) = a3 but [f a1, f a1] = [a2, a2] = 0
        swap = Matrix.from_columns(Q, [(0, 1, 0), (1, 0, 0), (0, 0, 1)])
        assert not is_endomorphism(make_lei3(Q), swap)

    def test_f5_example(self):
        f = Matrix.from_columns(F5, [(2, 1, 3), (0, 3, 4), (0, 0, 1)])
        assert is_automorphism(make_lei3(F5), f)

    def test_mismatches(self):
        with pytest.raises(FieldMismatch):
            is_endomorphism(make_lei3(F5), Matrix.identity(F3, 3))
        with pytest.raises(DimensionMismatch):
            is_endomorphism(make_lei3(F5), Matrix.identity(F5, 2))


class TestEnumeration:
    def test_abelian_plane_f2_is_gl2(self):
        g = enumerate_automorphisms(Algebra.abelian(F2, 2))
        assert g.order == 6
        assert g.elements == {m for m in all_matrices(F2, 2) if m.det() != 0}

    @pytest.mark.parametrize("field, order", [(F2, 4), (F3, 36)])
    def test_lei3_against_scalar_oracle(self, field, order):
        g = enumerate_automorphisms(make_lei3(field))
        assert g.order == order
        assert g.elements == brute_force_aut(make_lei3(field))
        assert is_group(g)

    @pytest.mark.parametrize("name", ["lei1", "lei2"])
    def test_other_catalog_against_oracle(self, name):
        alg = MAKERS[name](F3)
        g = enumerate_automorphisms(alg)
        assert g.elements == brute_force_aut(alg)
        assert is_group(g)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            enumerate_automorphisms(make_lei3(F5), budget=1000)

    def test_rationals_rejected(self):
        with pytest.raises(NotFiniteField):
            enumerate_automorphisms(make_lei3(Q))


class TestGroupPredicates:
    def test_trivial(self):
        assert is_group(MatrixGroup.trivial(F5, 3))

    def test_empty(self):
        assert not is_group(MatrixGroup(F5, 3, frozenset()))

    def test_not_closed(self):
        d = Matrix.diag(F5, [2, 2, 4])
        assert d @ d == Matrix.diag(F5, [4, 4, 1])
        assert not is_group(MatrixGroup.of(F5, 3, [Matrix.identity(F5, 3), d]))

    def test_enumerated_is_group(self, aut_cache):
        assert is_group(aut_cache("lei3", F2))

    def test_trivial_is_normal(self, aut_cache):
        g = aut_cache("lei3", F3)
        assert is_normal(MatrixGroup.trivial(F3, 3), g)

    def test_t_normal_d_not(self, aut_cache):
        g = aut_cache("lei3", F3)
        assert is_normal(family("T", F3), g)
        d = family("D", F3)
        assert not is_normal(d, g)
        # oracle: an explicit conjugate escaping D
        escapes = [(x, y) for x in g for y in d if invert(x) @ y @ x not in d.elements]
        assert escapes

    def test_subgroup_requires_containment(self):
        assert not is_subgroup(family("D", F3), family("S", F3))
        assert is_subgroup(family("T", F3), family("S", F3))

    def test_semidirect(self, aut_cache):
        triv = MatrixGroup.trivial(F3, 3)
        assert is_internal_semidirect(triv, triv, triv)
        g = aut_cache("lei3", F3)
        s, t, j, d = (family(k, F3) for k in "STJD")
        assert is_internal_semidirect(g, s, d)
        assert is_internal_semidirect(s, t, j)
        assert not is_internal_semidirect(g, d, s)
        assert not is_internal_semidirect(g, t, d)  # |T||D| = 18 < 36

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatch):
            is_subgroup(MatrixGroup.trivial(F3, 3), MatrixGroup.trivial(F5, 3))


class TestCentralizers:
    def test_subalgebra_edge_cases(self, aut_cache):
        g = aut_cache("lei3", F3)
        assert centralizer_of_subalgebra(g, Subspace.zero(F3, 3)).elements == g.elements
        assert centralizer_of_subalgebra(g, Subspace.full(F3, 3)).elements == {g.identity}

    def test_a3_fixed_over_f2(self, aut_cache):
        # over F2 alpha1 = 1 and alpha2 = 0 are forced, so every element fixes a3
        g = aut_cache("lei3", F2)
        c = centralizer_of_subalgebra(g, Subspace.span(F2, 3, [(0, 0, 1)]))
        assert c.order == 4 == g.order

    def test_quotient_edge_cases(self, aut_cache):
        g = aut_cache("lei3", F3)
        assert centralizer_of_quotient(g, Subspace.full(F3, 3)).elements == g.elements
        assert centralizer_of_quotient(g, Subspace.zero(F3, 3)).elements == {g.identity}

    def test_quotient_by_left_center_is_s(self, aut_cache):
        g = aut_cache("lei3", F3)
        c = centralizer_of_quotient(g, A.left_center(make_lei3(F3)))
        assert c.order == 18
        assert c.elements == {m for m in g if m[0, 0] == 1}
        assert c.elements == family("S", F3).elements

    def test_quotient_by_derived_is_t(self, aut_cache):
        g = aut_cache("lei3", F3)
        c = centralizer_of_quotient(g, A.derived_subalgebra(make_lei3(F3)))
        assert c.elements == family("T", F3).elements

    def test_not_invariant(self, aut_cache):
        g = aut_cache("lei3", F3)
        with pytest.raises(NotInvariant):
            centralizer_of_quotient(g, Subspace.span(F3, 3, [(1, 0, 0)]))

    def test_dimension_mismatch(self, aut_cache):
        with pytest.raises(DimensionMismatch):
            centralizer_of_subalgebra(aut_cache("lei3", F3), Subspace.zero(F3, 2))


class TestInvariance:
    def test_identity(self):
        alg = make_lei3(Q)
        for s in (alg.zero(), A.center(alg), alg.span((1, 2, 3)), alg.full()):
            assert invariance_check(alg, Matrix.identity(Q, 3), s) is Invariance.EQUAL

    def test_center_under_automorphisms(self, aut_cache):
        alg = make_lei3(F3)
        for f in aut_cache("lei3", F3):
            assert invariance_check(alg, f, A.center(alg)) is Invariance.EQUAL

    def test_listed_collapsing_map(self):
        # a1 -> a1, a2 -> -a1, a3 -> 0 kills gamma_2 = span(a3); it is not an
        # endomorphism of Lei3 though: [f a1, f a1] = a3 while f([a1, a1]) = 0
        alg = make_lei3(Q)
        f = Matrix.from_columns(Q, [(1, 0, 0), (-1, 0, 0), (0, 0, 0)])
        gamma2 = A.lower_central_series(alg)[1]
        assert invariance_check(alg, f, gamma2) is Invariance.MAPPED_INTO
        assert not is_endomorphism(alg, f)

    def test_singular_endomorphism_maps_into(self):
        alg = make_lei3(Q)
        f = Matrix.from_columns(Q, [(1, -1, 0), (0, 0, 0), (0, 0, 0)])
        assert is_endomorphism(alg, f) and not is_automorphism(alg, f)
        assert invariance_check(alg, f, A.lower_central_series(alg)[1]) is Invariance.MAPPED_INTO

    def test_neither(self):
        alg = make_lei3(Q)
        swap = Matrix.from_columns(Q, [(0, 1, 0), (1, 0, 0), (0, 0, 1)])
        assert invariance_check(alg, swap, alg.span((1, 0, 0))) is Invariance.NEITHER


class TestWitnesses:
    @pytest.mark.parametrize("field, order", [(F2, 4), (F5, 25)])
    def test_additive(self, field, order):
        t = family("T", field)
        assert t.order == order and witness_iso_to_additive_pairs(t)

    def test_additive_order_mismatch(self):
        assert not witness_iso_to_additive_pairs(MatrixGroup.trivial(F2, 3))

    def test_d_f5(self):
        d = family("D", F5)
        assert d.order == 4 and witness_iso_to_multiplicative(d, "D")

    def test_j_f3(self):
        j = family("J", F3)
        assert j.order == 2 and witness_iso_to_multiplicative(j, "J")

    def test_j_f2_trivial(self):
        j = family("J", F2)
        assert j.elements == {Matrix.identity(F2, 3)}
        assert witness_iso_to_multiplicative(j, "J")

    def test_wrong_kind(self):
        assert not witness_iso_to_multiplicative(family("D", F5), "J")

    def test_infinite_field(self):
        with pytest.raises(NotFiniteField):
            witness_iso_to_multiplicative(MatrixGroup.trivial(Q, 3), "D")


# -- the four lemma suites ------------------------------------------------------


def characteristic_subspaces(alg):
    return [A.left_center(alg), A.right_center(alg), A.center(alg), A.derived_subalgebra(alg)]


@pytest.mark.parametrize("field", [F2, F3])
@pytest.mark.parametrize("name", sorted(MAKERS))
def test_automorphisms_preserve_centers(name, field, aut_cache):
    alg = MAKERS[name](field)
    subs = characteristic_subspaces(alg)
    for f in aut_cache(name, field):
        for s in subs:
            assert invariance_check(alg, f, s) is Invariance.EQUAL


@pytest.mark.parametrize("field", [F2, F3])
@pytest.mark.parametrize("name", sorted(MAKERS))
def test_automorphisms_preserve_series(name, field, aut_cache):
    alg = MAKERS[name](field)
    terms = A.lower_central_series(alg) + A.upper_central_series(alg)
    for f in aut_cache(name, field):
        for s in terms:
            assert s.image(f) == s


@pytest.mark.parametrize("name", sorted(MAKERS))
def test_endomorphisms_map_lower_series_into_itself(name):
    alg = MAKERS[name](F3)
    endos = random_endomorphisms(alg, 50)
    assert any(m.det() == 0 for m in endos)
    for f in endos:
        for s in A.lower_central_series(alg):
            assert invariance_check(alg, f, s) in (Invariance.EQUAL, Invariance.MAPPED_INTO)


@pytest.mark.parametrize("field", [F2, F3])
def test_centralizers_are_normal(field, aut_cache):
    alg = make_lei3(field)
    g = aut_cache("lei3", field)
    for a in (A.leibniz_kernel(alg), A.left_center(alg), A.center(alg), A.derived_subalgebra(alg)):
        assert is_normal(centralizer_of_subalgebra(g, a), g)
        assert is_normal(centralizer_of_quotient(g, a), g)


def test_general_matrix_inside_enumeration(aut_cache):
    g = aut_cache("lei3", F3)
    assert general_aut_matrix(AutParams(F3, 2, 0, 1, 2)) in g
