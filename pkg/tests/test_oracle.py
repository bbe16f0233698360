"""F_p linear algebra, realized modules and the homological oracle."""

import numpy as np
import pytest

from src.gp import GpIndec, gp_indecomposables, stable_classes, syzygy_step
from src.oracle import (
    CERTIFIED,
    NOT_GP,
    certify_gorenstein_projective,
    default_ext_bound,
    direct_sum,
    ext_dimensions,
    ext_vanishing,
    hom_dimension,
    hom_space,
    is_isomorphic,
    projective_cover_and_syzygy,
    radical_of_projective,
    realize_indec,
    realize_module,
    realize_morphism,
    regular_module,
    socle_dimension,
    split_module,
    verify_exact_sequence,
)
from src.oracle import fp_linalg as fp
from src.repcat import ScalarCover, ScalarEmb, ScalarId, SymbolicModule, SymbolicMorphism
from src.utils.errors import (
    ModuleTooLarge,
    NotEquivariant,
    ShapeMismatch,
    ValidationError,
    ZeroModule,
)

P = 101


def projective(v: str) -> GpIndec:
    return GpIndec.projective(v)


def ideal(a: str) -> GpIndec:
    return GpIndec.arrow_ideal(a)


# ----------------------------------------------------------------------
# fp_linalg
# ----------------------------------------------------------------------

def test_rref_and_rank():
    reduced, pivots = fp.rref([[2, 4], [1, 2]], 5)
    assert pivots == [0]
    assert reduced[0].tolist() == [1, 2]
    assert fp.rank([[1, 0], [0, 1]], 2) == 2
    assert fp.rank(np.zeros((0, 3), dtype=np.int64), 7) == 0


def test_nullspace():
    basis = fp.nullspace([[1, 2]], 5)
    assert basis.tolist() == [[3], [1]]
    assert not fp.matmul(np.array([[1, 2]]), basis, 5).any()


def test_solve_and_inverse():
    x = fp.solve([[1, 1], [0, 1]], [[3], [2]], 7)
    assert x[:, 0].tolist() == [1, 2]
    assert fp.inverse([[1, 1], [0, 1]], 7).tolist() == [[1, 6], [0, 1]]
    with pytest.raises(ValueError):
        fp.solve([[1], [1]], [[0], [1]], 5)
    with pytest.raises(ValueError):
        fp.inverse([[1, 2], [2, 4]], 7)


def test_matmul_large_prime():
    p = 2 ** 31 - 1
    a = np.array([[p - 1]], dtype=np.int64)
    assert fp.matmul(a, a, p).tolist() == [[1]]


def test_matrix_power():
    nilpotent = np.array([[0, 1], [0, 0]], dtype=np.int64)
    assert not fp.matrix_power(nilpotent, 2, 3).any()
    assert fp.matrix_power(nilpotent, 0, 3).tolist() == [[1, 0], [0, 1]]


@pytest.mark.parametrize("n, expected", [(1, False), (2, True), (4, False), (101, True), (2 ** 31 - 1, True)])
def test_is_prime(n, expected):
    assert fp.is_prime(n) is expected


# ----------------------------------------------------------------------
# realization
# ----------------------------------------------------------------------

def test_realize_projective_kx2(kx2):
    module = realize_indec(kx2, projective("1"), P)
    assert module.labels["1"] == ("e_1", "x")
    assert module.maps["x"].tolist() == [[0, 0], [1, 0]]
    assert module.satisfies_relations()


def test_realize_arrow_ideal_support(nakayama):
    a1 = realize_indec(nakayama, ideal("a1"), P)
    a2 = realize_indec(nakayama, ideal("a2"), P)
    assert a1.dimension_vector == (1, 0, 0)
    assert a2.dimension_vector == (0, 1, 0)


def test_projective_dimensions(any_algebra):
    for v in any_algebra.quiver.vertices:
        module = realize_indec(any_algebra, projective(v), P)
        assert module.dimension == len(any_algebra.paths_ending_at(v))
        assert module.satisfies_relations()


def test_radical_is_sum_of_arrow_ideals(any_algebra):
    for v in any_algebra.quiver.vertices:
        expected = sum(
            realize_indec(any_algebra, ideal(a.name), P).dimension
            for a in any_algebra.quiver.arrows_into(v)
        )
        assert radical_of_projective(any_algebra, v, P).dimension == expected


def test_regular_module(triangles):
    assert regular_module(triangles, P).dimension == len(triangles.nonzero_paths)


def test_module_too_large(kx2):
    e1 = realize_indec(kx2, projective("1"), P)
    with pytest.raises(ModuleTooLarge):
        direct_sum(kx2, P, [e1] * 257)


def test_realize_scalar_maps(kx2):
    x, e1 = SymbolicModule((ideal("x"),)), SymbolicModule((projective("1"),))
    mx, me = realize_module(kx2, x, P), realize_module(kx2, e1, P)
    emb = realize_morphism(kx2, SymbolicMorphism.from_rows([[ScalarEmb()]]), mx, me)
    assert emb.matrix.tolist() == [[0], [1]]
    cover = realize_morphism(kx2, SymbolicMorphism.from_rows([[ScalarCover()]]), me, mx)
    assert cover.matrix.tolist() == [[1, 0]]
    ident = realize_morphism(kx2, SymbolicMorphism.from_rows([[ScalarId(3)]]), mx, mx)
    assert ident.matrix.tolist() == [[3]]


def test_realize_rejects_mismatched_entries(kx2):
    x = realize_module(kx2, SymbolicModule((ideal("x"),)), P)
    e1 = realize_module(kx2, SymbolicModule((projective("1"),)), P)
    with pytest.raises(ValidationError):
        realize_morphism(kx2, SymbolicMorphism.from_rows([[ScalarId()]]), x, e1)
    with pytest.raises(ShapeMismatch):
        realize_morphism(kx2, SymbolicMorphism.zero(2, 1), x, e1)


def test_non_equivariant_submodule(kx2):
    from src.oracle import submodule

    e1 = realize_indec(kx2, projective("1"), P)
    with pytest.raises(NotEquivariant):
        submodule(e1, {"1": np.array([[1], [0]], dtype=np.int64)})


# ----------------------------------------------------------------------
# Hom, covers, syzygies, Ext
# ----------------------------------------------------------------------

def test_hom_dimensions(kx2):
    e1 = realize_indec(kx2, projective("1"), P)
    x = realize_indec(kx2, ideal("x"), P)
    assert hom_dimension(e1, e1) == 2
    assert hom_dimension(x, e1) == 1
    assert hom_dimension(e1, x) == 1
    assert len(hom_space(x, e1)) == 1
    assert all(f.is_equivariant() for f in hom_space(e1, e1))


def test_cover_of_arrow_ideal(kx2):
    cover = projective_cover_and_syzygy(kx2, realize_indec(kx2, ideal("x"), P))
    assert cover.tops == ("1",)
    assert cover.cover.dimension == 2
    assert cover.cover_map.is_surjective()
    assert cover.syzygy.dimension == 1
    assert is_isomorphic(cover.syzygy, realize_indec(kx2, ideal("x"), P))


def test_cover_of_projective(kx2):
    cover = projective_cover_and_syzygy(kx2, realize_indec(kx2, projective("1"), P))
    assert cover.syzygy.is_zero


def test_cover_of_zero_module(kx2):
    from src.oracle import zero_module

    with pytest.raises(ZeroModule):
        projective_cover_and_syzygy(kx2, zero_module(kx2, P))


@pytest.mark.parametrize("p", [2, 101])
def test_oracle_syzygy_agrees(gorenstein_algebra, p):
    for g in gp_indecomposables(gorenstein_algebra):
        if g.is_projective:
            continue
        computed = projective_cover_and_syzygy(
            gorenstein_algebra, realize_indec(gorenstein_algebra, g, p)
        ).syzygy
        expected = realize_indec(gorenstein_algebra, syzygy_step(gorenstein_algebra, g), p)
        assert is_isomorphic(computed, expected)


@pytest.mark.parametrize("p", [2, 101])
def test_ext_vanishes_on_perfect_ideals(gorenstein_algebra, p):
    for cls in stable_classes(gorenstein_algebra):
        for g in cls.members:
            module = realize_indec(gorenstein_algebra, g, p)
            assert ext_dimensions(gorenstein_algebra, module, 8) == [0] * 8


@pytest.mark.parametrize("p", [2, 3, 101])
def test_ext_of_non_perfect_ideal(non_gor, p):
    module = realize_indec(non_gor, ideal("b"), p)
    assert ext_dimensions(non_gor, module, 4) == [1, 0, 0, 0]
    assert ext_vanishing(non_gor, module, 2) == [False, True]


def test_ext_of_projective(kx2):
    assert ext_vanishing(kx2, realize_indec(kx2, projective("1"), P), 3) == [True] * 3


def test_ext_bound_must_be_positive(kx2):
    with pytest.raises(ValidationError):
        ext_dimensions(kx2, realize_indec(kx2, ideal("x"), P), 0)


def test_default_ext_bound(kx2, triangles, hereditary):
    assert default_ext_bound(kx2) == 4
    assert default_ext_bound(triangles) == 8
    assert default_ext_bound(hereditary) == 2


# ----------------------------------------------------------------------
# isomorphism, splitting, certification
# ----------------------------------------------------------------------

def test_is_isomorphic(nakayama, triangles):
    a1 = realize_indec(nakayama, ideal("a1"), P)
    assert is_isomorphic(a1, realize_indec(nakayama, ideal("a1"), P))
    assert not is_isomorphic(a1, realize_indec(nakayama, ideal("a2"), P))
    syzygy = projective_cover_and_syzygy(triangles, realize_indec(triangles, ideal("alpha"), P)).syzygy
    assert is_isomorphic(syzygy, realize_indec(triangles, ideal("beta"), P))


def test_is_isomorphic_same_dimension_vector(kx2):
    e1 = realize_indec(kx2, projective("1"), P)
    x = realize_indec(kx2, ideal("x"), P)
    double_x = direct_sum(kx2, P, [x, x])
    assert double_x.dimension_vector == e1.dimension_vector
    assert not is_isomorphic(double_x, e1)


def test_socle_dimension(kx2):
    assert socle_dimension(realize_indec(kx2, projective("1"), P)) == 1
    x = realize_indec(kx2, ideal("x"), P)
    assert socle_dimension(direct_sum(kx2, P, [x, x])) == 2


def test_split_module(kx2):
    e1 = realize_indec(kx2, projective("1"), P)
    x = realize_indec(kx2, ideal("x"), P)
    pieces = split_module(direct_sum(kx2, P, [e1, x]))
    assert sorted(piece.dimension for piece in pieces) == [1, 2]
    assert split_module(e1) == [e1]


def test_certify_direct_sum(triangles):
    module = realize_module(
        triangles, SymbolicModule((projective("3"), ideal("mu"), ideal("delta"))), P
    )
    certificate = certify_gorenstein_projective(triangles, module)
    assert certificate.label == CERTIFIED
    assert certificate.certified
    assert sorted(certificate.summands) == ["deltaΛ", "e_3Λ", "muΛ"]


def test_certify_projective_arrow_ideal(non_gor):
    certificate = certify_gorenstein_projective(non_gor, realize_indec(non_gor, ideal("a"), P))
    assert certificate.label == CERTIFIED
    assert certificate.summands == ["e_1Λ"]


def test_refute_non_perfect_ideal(non_gor):
    certificate = certify_gorenstein_projective(non_gor, realize_indec(non_gor, ideal("b"), P))
    assert certificate.label == NOT_GP
    assert certificate.unmatched == 1
    assert certificate.ext_dimensions[0] == 1


# ----------------------------------------------------------------------
# exact sequences
# ----------------------------------------------------------------------

def test_gprj_sequence_is_exact(kx2):
    x = realize_module(kx2, SymbolicModule((ideal("x"),)), P)
    e1 = realize_module(kx2, SymbolicModule((projective("1"),)), P)
    f = realize_morphism(kx2, SymbolicMorphism.from_rows([[ScalarEmb()]]), x, e1)
    g = realize_morphism(kx2, SymbolicMorphism.from_rows([[ScalarCover()]]), e1, x)
    assert verify_exact_sequence(kx2, [f, g])


def test_zero_map_is_not_exact(kx2):
    f = np.zeros((2, 1), dtype=np.int64)
    g = np.array([[1, 0]], dtype=np.int64)
    assert not verify_exact_sequence(kx2, [f, g], p=P)


def test_split_sequence_of_matrices(kx2):
    f = np.array([[1], [0]], dtype=np.int64)
    g = np.array([[0, 1]], dtype=np.int64)
    assert verify_exact_sequence(kx2, [f, g], p=P)


def test_exact_sequence_shape_mismatch(kx2):
    with pytest.raises(ShapeMismatch):
        verify_exact_sequence(kx2, [np.zeros((2, 1)), np.zeros((1, 3))], p=P)
    with pytest.raises(ValidationError):
        verify_exact_sequence(kx2, [np.zeros((2, 1)), np.zeros((1, 2))])
