import itertools

import numpy as np
import pytest

from src.automaton import (
    HCode,
    SpinConfig,
    generate_codeword,
    generator_matrix,
    light_cone_diff,
    make_lattice,
    neutral,
    propagate_row,
    push_operator_through,
    read_codeword,
    simplex_state,
    simplex_tensor,
    verify_ame,
    write_codeword,
)
from src.errors import InadmissibleTorusError
from src.lattice import PatchLattice, TorusLattice

TORUS = TorusLattice(3, 3)


@pytest.mark.parametrize("triple, ok", [((1, 1, 1), True), ((0, 1, 2), True), ((0, 0, 0), True), ((1, 1, 0), False)])
def test_neutral(triple, ok):
    assert neutral(triple) is ok


def test_propagate_row():
    assert list(propagate_row([1, 0, 0])) == [2, 0, 2]
    assert list(propagate_row([1, 0, 0], periodic=False)) == [2, 0]
    with pytest.raises(ValueError):
        propagate_row([1])


def test_codeword_on_3x3_torus():
    config = generate_codeword((1, 0, 0), TORUS)
    assert [list(r) for r in config.rows()] == [[1, 0, 0], [2, 0, 2], [1, 1, 2]]
    assert config.is_valid()
    assert config.frustrated_triangles() == []


def test_signed_boundary_labels():
    assert generate_codeword((-1, 0, 0), TORUS) == generate_codeword((2, 0, 0), TORUS)


def test_inadmissible_torus_reports_closure():
    lattice = TorusLattice(3, 2)
    with pytest.raises(InadmissibleTorusError) as info:
        generate_codeword((1, 0, 0), lattice)
    assert info.value.closure_row == (1, 1, 2)
    assert info.value.boundary == (1, 0, 0)
    assert generate_codeword((0, 0, 0), lattice).values.sum() == 0


def test_boundary_length_checked():
    with pytest.raises(ValueError):
        generate_codeword((1, 0), TORUS)


def test_patch_codeword():
    config = generate_codeword((1, 0, 0), PatchLattice(3, 3))
    assert [list(r) for r in config.rows()] == [[1, 0, 0], [2, 0], [1]]
    assert config.is_valid()


def test_linearity_on_9x9():
    lattice = TorusLattice(9, 9)
    code = HCode.build(lattice)
    rng = np.random.default_rng(3)
    for _ in range(20):
        a, b = rng.integers(0, 3, size=(2, 9))
        assert code.codeword((a + b) % 3) == code.codeword(a) + code.codeword(b)
        assert code.codeword(a) == generate_codeword(a, lattice)


def test_generator_matrix_columns():
    columns = generator_matrix(TORUS).array.T.tolist()
    assert columns == [
        [1, 0, 0], [0, 1, 0], [0, 0, 1],
        [2, 2, 0], [0, 2, 2], [2, 0, 2],
        [1, 2, 1], [1, 1, 2], [2, 1, 1],
    ]


def test_enumeration_is_injective():
    words = HCode.build(TORUS).all_codewords()
    assert words.shape == (27, 9)
    assert len({w.tobytes() for w in words}) == 27


def test_code_size_on_9x9():
    assert len(HCode.build(TorusLattice(9, 9)).all_codewords()) == 19683


def test_sector_generator_is_charge_free():
    gen = HCode.build(TORUS).sector_generator().array
    assert gen.shape == (2, 9)
    assert not np.any(gen[:, :3].sum(axis=1) % 3)


def test_light_cone():
    cone = light_cone_diff((0, 0, 0), 0, 1, TORUS)
    assert cone.ordered == [0, 3, 5, 6, 7, 8]
    with pytest.raises(ValueError):
        light_cone_diff((0, 0, 0), 0, 3, TORUS)
    with pytest.raises(ValueError):
        light_cone_diff((0, 0, 0), 5, 1, TORUS)


def test_operator_push_follows_the_rule():
    pushed = push_operator_through([1, 0, 0], 3)
    assert list(pushed) == list(generate_codeword((1, 0, 0), TORUS).values)


def test_codeword_text_round_trip():
    config = generate_codeword((1, 2, 0), TORUS)
    text = write_codeword(config)
    assert text.splitlines()[0] == "# torus 3 3"
    assert read_codeword(text) == config
    with pytest.raises(ValueError):
        read_codeword("# torus 3 3\n100\n202\n")
    with pytest.raises(ValueError):
        read_codeword("100\n202\n112\n")


def test_spin_config_validation():
    with pytest.raises(ValueError):
        SpinConfig(TORUS, [0, 1])
    with pytest.raises(ValueError):
        make_lattice("sphere", 3, 3)


def test_simplex_state():
    tensor = simplex_tensor()
    assert tensor.sum() == 9
    assert np.isclose(np.linalg.norm(simplex_state()), 1.0)


def test_ame():
    result = verify_ame()
    assert result["ame"]
    assert len(result["marginals"]) == 4 + 6
    assert all(result["pair_determines_rest"].values())
    for item in result["marginals"]:
        if len(item["sites"]) == 2:
            assert np.allclose(item["spectrum"], [1 / 9] * 9, atol=1e-10)


def test_ame_rejects_product_state():
    product = np.zeros(81, dtype=complex)
    product[0] = 1.0
    assert not verify_ame(product)["ame"]


def test_neutral_on_every_triple():
    for triple in itertools.product(range(3), repeat=3):
        all_equal_or_distinct = len(set(triple)) in (1, 3)
        assert neutral(triple) is all_equal_or_distinct


def test_light_cone_shift_and_undo():
    rng = np.random.default_rng(5)
    for _ in range(10):
        boundary = rng.integers(0, 3, size=3)
        site = int(rng.integers(0, 3))
        moved = boundary.copy()
        moved[site] = (moved[site] + 1) % 3
        forward = light_cone_diff(boundary, site, 1, TORUS)
        back = light_cone_diff(moved, site, 2, TORUS)
        assert forward.ordered == back.ordered
        moved[site] = (moved[site] + 2) % 3
        assert generate_codeword(moved, TORUS) == generate_codeword(boundary, TORUS)


def test_light_cone_size_on_9x9():
    lattice = TorusLattice(9, 9)
    sizes = [len(light_cone_diff((0,) * 9, site, delta, lattice)) for site in range(9) for delta in (1, 2)]
    assert min(sizes) >= 36


@pytest.mark.parametrize("side", [3, 9])
def test_every_codeword_is_neutral(side):
    lattice = TorusLattice(side, side)
    words = HCode.build(lattice).all_codewords().astype(np.int64)
    triangles = np.array(lattice.up_triangles())
    assert not np.any(words[:, triangles].sum(axis=2) % 3)
    if side == 3:
        assert all(SpinConfig(lattice, w).is_valid() for w in words)
