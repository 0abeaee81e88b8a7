import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import paf_loop
from pergolay.seqcore import (
    as_binary,
    complement,
    compress,
    dft,
    format_block,
    format_sequence,
    is_compressed_sequence,
    make_block,
    paf,
    parse_block,
    parse_sequence,
    psd,
    psd_rows,
    sequence_to_subset,
    subset_to_sequence,
)

TOL = 1e-6

binary = st.integers(1, 60).flatmap(lambda v: st.lists(st.sampled_from([-1, 1]), min_size=v, max_size=v))


def test_subset_roundtrip():
    assert subset_to_sequence((0, 2), 4).tolist() == [-1, 1, -1, 1]
    assert sequence_to_subset([1, -1, -1, 1]) == (1, 2)
    assert complement((0, 2), 5) == (1, 3, 4)


@pytest.mark.parametrize("bad", [[], [1, 0, -1], [[1, -1]]])
def test_as_binary_rejects(bad):
    with pytest.raises(ValueError):
        as_binary(bad)


def test_make_block_rejects():
    with pytest.raises(ValueError):
        make_block([0, 5], 5)
    with pytest.raises(ValueError):
        make_block([1, 1], 5)
    with pytest.raises(ValueError):
        make_block([], 0)


def test_paf_small():
    assert paf([1, 1, 1, -1]).tolist() == [4, 0, 0, 0]
    assert paf([1]).tolist() == [1]


def test_paf_exhaustive_small():
    for v in range(1, 11):
        for code in range(2**v):
            a = [1 - 2 * ((code >> i) & 1) for i in range(v)]
            assert paf(a).tolist() == paf_loop(a)


@settings(max_examples=200, deadline=None)
@given(binary)
def test_paf_properties(a):
    v = len(a)
    p = paf(a)
    assert p[0] == v
    assert all(p[s] == p[(v - s) % v] for s in range(v))
    assert p.sum() == sum(a) ** 2


@settings(max_examples=200, deadline=None)
@given(binary)
def test_parseval_and_wiener_khinchin(a):
    v = len(a)
    P = psd(a)
    assert abs(P.sum() - v * v) <= TOL * v * v
    # PSD is the DFT of the PAF (real, since the PAF is symmetric)
    assert np.allclose(P, dft(paf(a)).real, atol=TOL * v * v)
    assert np.allclose(P, psd_rows(np.array([a]))[0], atol=TOL * v * v)


def test_dft_sign():
    # kernel exp(+2 pi i jk / v): a delta at 1 gives exp(+2 pi i k / v)
    e = dft([0, 1, 0, 0])
    assert np.allclose(e, [1, 1j, -1, -1j])


def test_compress_definition():
    a = np.array([1, -1, 1, 1, 1, -1])
    assert compress(a, 3).tolist() == [2, 0, 0]
    assert compress(a, 2).tolist() == [3, -1]
    with pytest.raises(ValueError):
        compress(a, 4)


@settings(max_examples=200, deadline=None)
@given(binary, st.data())
def test_compression_identities(a, data):
    v = len(a)
    d = data.draw(st.sampled_from([x for x in range(1, v + 1) if v % x == 0]))
    m = v // d
    c = compress(a, d)
    assert is_compressed_sequence(c, m)
    assert np.allclose(psd(c), psd(a)[m * np.arange(d)], atol=TOL * v * v)
    pa = paf(a)
    assert paf(c).tolist() == [int(pa[s::d].sum()) for s in range(d)]


def test_is_compressed_sequence():
    assert is_compressed_sequence([3, 1, -1, -3], 3)
    assert not is_compressed_sequence([2], 3)
    assert not is_compressed_sequence([5], 3)


def test_text_formats():
    s = np.array([1, -1, -1, 1])
    assert format_sequence(s) == "+--+"
    assert parse_sequence(" +--+\n").tolist() == s.tolist()
    with pytest.raises(ValueError):
        parse_sequence("+-x")
    assert format_block((0, 3, 7)) == "{0,3,7}"
    assert parse_block("{ 7,0 ,3}", 8) == (0, 3, 7)
    assert parse_block("{}") == ()
    with pytest.raises(ValueError):
        parse_block("0,1", 4)
