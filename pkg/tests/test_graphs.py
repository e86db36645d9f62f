import itertools
import json

import numpy as np
import pytest

from graphqec.errors import DimensionOverflow, InvalidSubset, TooManyErrors
from graphqec.graphs import (
    GraphCode,
    build_isometry,
    check_subset,
    corrects_f,
    dump_graph,
    find_uncorrectable_subset,
    graph_to_dict,
    load_graph,
    loads_graph,
    max_correctable_f,
    wheel_code,
)
from graphqec.modular import ModMatrix


def test_constructor_rejects_asymmetric_gamma():
    g = np.zeros((2, 2), dtype=int)
    g[0, 1] = 1
    with pytest.raises(ValueError):
        GraphCode(2, 1, 1, ModMatrix(2, g))


def test_constructor_rejects_self_loops():
    g = np.zeros((2, 2), dtype=int)
    g[0, 0] = 1
    with pytest.raises(ValueError):
        GraphCode(2, 1, 1, ModMatrix(2, g))


def test_from_edges_sums_duplicates_mod_d():
    code = GraphCode.from_edges(3, 1, 1, [[0, 1, 2], [1, 0, 2]])
    assert code.gamma.entries[0, 1] == 1


def test_from_edges_rejects_self_loop():
    with pytest.raises(ValueError):
        GraphCode.from_edges(2, 1, 1, [[0, 0, 1]])


def test_check_subset_empty_on_wheel(wheel):
    # the 5x1 all-ones column over Z_2 has trivial kernel
    assert check_subset(wheel, ())


def test_check_subset_all_pairs_on_wheel(wheel):
    for pair in itertools.combinations(range(5), 2):
        assert check_subset(wheel, pair)


def test_check_subset_fails_when_more_columns_than_rows(wheel):
    # |X u Z| = 4 > |Y \ Z| = 2
    assert not check_subset(wheel, (0, 1, 2))


def test_check_subset_rejects_bad_indices(wheel):
    with pytest.raises(InvalidSubset):
        check_subset(wheel, (5,))
    with pytest.raises(InvalidSubset):
        check_subset(wheel, (1, 1))


def test_corrects_f_on_five_qubit_codes(wheel, prism):
    for code in (wheel, prism):
        assert corrects_f(code, 1)
        assert not corrects_f(code, 2)


def test_corrects_f_zero_equals_empty_subset(wheel):
    assert corrects_f(wheel, 0) == check_subset(wheel, ())


def test_corrects_f_rejects_too_many_errors(wheel):
    with pytest.raises(TooManyErrors):
        corrects_f(wheel, 3)


def test_corrects_f_is_monotone_in_f():
    rng = np.random.default_rng(5)
    for _ in range(20):
        size = 8
        g = rng.integers(0, 2, size=(size, size))
        g = np.triu(g, 1)
        g = g + g.T
        code = GraphCode(2, 1, 7, ModMatrix(2, g))
        results = [corrects_f(code, f) for f in range(0, 4)]
        for earlier, later in zip(results, results[1:]):
            if later:
                assert earlier


def test_witness_is_smallest_failing_subset(wheel):
    witness = find_uncorrectable_subset(wheel, 2)
    assert witness is not None
    assert len(witness) == 3
    # every smaller subset passes, and no size-3 subset earlier in lex order fails
    for size in range(0, 3):
        for subset in itertools.combinations(range(5), size):
            assert check_subset(wheel, subset)
    for subset in itertools.combinations(range(5), 3):
        if subset == witness:
            break
        assert check_subset(wheel, subset)


def test_max_correctable_f(wheel, prism):
    assert max_correctable_f(wheel) == 1
    assert max_correctable_f(prism) == 1
    zero = GraphCode(2, 1, 2, ModMatrix(2, np.zeros((3, 3), dtype=int)))
    assert max_correctable_f(zero) == -1
    single = GraphCode.from_edges(2, 1, 1, [[0, 1, 1]])
    assert max_correctable_f(single) == 0


def test_isometry_hand_example_single_edge():
    code = GraphCode.from_edges(2, 1, 1, [[0, 1, 1]])
    v = build_isometry(code)
    expect = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    assert np.allclose(v, expect, atol=1e-12)


def test_isometry_zero_graph_columns_equal():
    code = GraphCode.from_edges(2, 1, 1, [])
    v = build_isometry(code)
    expect = np.full((2, 2), 1 / np.sqrt(2))
    assert np.allclose(v, expect, atol=1e-12)
    assert not np.allclose(v.conj().T @ v, np.eye(2), atol=1e-9)


def test_isometry_wheel_is_isometric(wheel):
    v = build_isometry(wheel)
    assert v.shape == (32, 2)
    assert np.abs(v.conj().T @ v - np.eye(2)).max() < 1e-12


def test_isometry_iff_empty_subset_passes():
    rng = np.random.default_rng(9)
    for _ in range(25):
        d = int(rng.choice([2, 3]))
        m, n = 1, 3
        g = rng.integers(0, d, size=(m + n, m + n))
        g = np.triu(g, 1)
        g = g + g.T
        code = GraphCode(d, m, n, ModMatrix(d, g))
        v = build_isometry(code)
        isometric = np.abs(v.conj().T @ v - np.eye(d**m)).max() < 1e-9
        assert isometric == check_subset(code, ())


def test_isometry_invariant_under_entry_shift_by_d(wheel):
    shifted = wheel.gamma.entries.copy().astype(np.int64)
    shifted[0, 1] += 2
    shifted[1, 0] += 2
    # rebuild via the raw phase formula: entries are reduced mod d on input,
    # and the phase has period 2d in the exponent, so adding d leaves V fixed
    code2 = GraphCode(2, 1, 5, ModMatrix.reduce(2, shifted))
    assert np.allclose(build_isometry(wheel), build_isometry(code2), atol=1e-12)


def test_isometry_dimension_cap():
    code = GraphCode.from_edges(2, 1, 5, [[0, 1, 1]])
    with pytest.raises(DimensionOverflow):
        build_isometry(code, cap=16)


def test_graph_roundtrip_through_file(tmp_path, wheel):
    path = tmp_path / "wheel.json"
    dump_graph(wheel, path)
    loaded = load_graph(path)
    assert np.array_equal(loaded.gamma.entries, wheel.gamma.entries)
    assert (loaded.d, loaded.m, loaded.n) == (2, 1, 5)


def test_graph_dict_fields(wheel):
    obj = graph_to_dict(wheel)
    assert set(obj) == {"d", "m", "n", "edges"}
    assert len(obj["edges"]) == 10


def test_loads_graph_rejects_malformed():
    with pytest.raises(ValueError):
        loads_graph(json.dumps({"d": 2, "m": 1, "n": 1}))
    with pytest.raises(ValueError):
        loads_graph(json.dumps({"d": 2, "m": 1, "n": 1, "edges": [[0, 0, 1]]}))
    with pytest.raises(ValueError):
        loads_graph(json.dumps([1, 2, 3]))
