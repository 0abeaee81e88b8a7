import numpy as np
import pytest

from oracles import classes_by_orbit, golay_pairs_brute, golay_pairs_mitm
from pergolay.equiv import are_equivalent
from pergolay.sds import SdsParams, derive_params
from pergolay.search import (
    CompressedCandidate,
    SearchConfig,
    configs_for_length,
    is_least_rotation,
    read_checkpoint,
    search_length,
    search_pg,
    stage1_candidates,
    stage2_lift,
    write_checkpoint,
)
from pergolay.seqcore import compress, subset_to_sequence


def _blocks(sols):
    return {S.blocks for S in sols}


@pytest.fixture(scope="module")
def oracle():
    out = {v: classes_by_orbit(v, golay_pairs_brute(v)) for v in (4, 8, 10)}
    out[16] = classes_by_orbit(16, golay_pairs_mitm(16))
    return out


@pytest.mark.parametrize("v,d", [(4, 2), (8, 2), (8, 4), (10, 2), (10, 5), (16, 2), (16, 4), (16, 8)])
def test_matches_oracle(oracle, v, d):
    assert _blocks(search_length(v, d)) == oracle[v]


@pytest.mark.parametrize("v,d", [(8, 4), (10, 5), (16, 8)])
def test_fix_first_is_lossless(v, d):
    assert search_length(v, d, fix_first=True) == search_length(v, d, fix_first=False)


def test_results_are_sds():
    for S in search_length(16, 4):
        p = derive_params(S)
        assert p.v == 2 * p.n


def test_stage1_necessity():
    # every periodic Golay pair compresses to a stage-1 candidate
    v, d = 10, 5
    m = v // d
    cands = {}
    for cfg in configs_for_length(v, d):
        cands[cfg.params.k] = {(tuple(c.ac), tuple(c.bc)) for c in stage1_candidates(cfg)}
    for X, Y in golay_pairs_brute(v):
        key = (len(X), len(Y))
        if key not in cands:
            continue
        a, b = subset_to_sequence(X, v), subset_to_sequence(Y, v)
        assert (tuple(compress(a, d)), tuple(compress(b, d))) in cands[key]
    assert all(max(map(abs, c[0])) <= m for s in cands.values() for c in s)


def test_stage1_is_lexicographic():
    cfg = configs_for_length(16, 8)[0]
    keys = [tuple(c.ac) + tuple(c.bc) for c in stage1_candidates(cfg)]
    assert keys == sorted(keys) and len(keys) > 0


def test_stage2_recovers_length_34(sds34, pair34):
    cfg = SearchConfig(SdsParams(34, (16, 13), 12), 17, fix_first=False)
    c = CompressedCandidate(compress(pair34.a, 17), compress(pair34.b, 17))
    lifts = list(stage2_lift(c, cfg))
    assert sds34 in lifts
    assert all(derive_params(S).v == 2 * derive_params(S).n for S in lifts)
    pinned = list(stage2_lift(c, SearchConfig(cfg.params, 17)))
    assert any(are_equivalent(S, sds34) for S in pinned)


def test_stage2_rejects_bad_candidate():
    cfg = configs_for_length(8, 4)[0]
    with pytest.raises(ValueError):
        list(stage2_lift(CompressedCandidate(np.array([3, 0, 0, 0]), np.array([0, 0, 0, 0])), cfg))


def test_threads_deterministic():
    cfg1 = configs_for_length(16, 8)
    one = [search_pg(c) for c in cfg1]
    four = [search_pg(SearchConfig(c.params, c.d, threads=4)) for c in cfg1]
    assert one == four


def test_limit():
    cfg = SearchConfig(configs_for_length(16, 4)[0].params, 4, limit=3)
    got = search_pg(cfg)
    assert len(got) == 3
    full = _blocks(search_pg(SearchConfig(cfg.params, 4)))
    assert _blocks(got) <= full


def test_checkpoint(tmp_path):
    cfg = configs_for_length(16, 4)[0]
    ck = tmp_path / "ck.txt"
    full = search_pg(cfg, checkpoint=ck)
    n = len(list(stage1_candidates(cfg)))
    assert read_checkpoint(ck) == n - 1
    assert search_pg(cfg, checkpoint=ck) == []
    # resuming from the middle finds a subset, and together with the first
    # half it gives everything
    write_checkpoint(ck, n // 2)
    tail = search_pg(cfg, checkpoint=ck)
    head = [S for S in full if S not in tail]
    assert set(tail) <= set(full) and set(head) | set(tail) == set(full)
    assert ck.read_text() == f"candidate_index={n - 1}\n"


def test_checkpoint_malformed(tmp_path):
    ck = tmp_path / "ck.txt"
    assert read_checkpoint(ck) is None
    ck.write_text("index=3\n")
    with pytest.raises(ValueError):
        read_checkpoint(ck)


def test_on_solution_callback():
    cfg = configs_for_length(10, 5)[0]
    seen = []
    out = search_pg(cfg, on_solution=seen.append)
    assert sorted(seen, key=lambda S: S.blocks) == sorted(out, key=lambda S: S.blocks)


@pytest.mark.parametrize(
    "kw",
    [dict(v=6, d=3), dict(v=16, d=16), dict(v=16, d=3), dict(v=16, d=4, threads=0), dict(v=16, d=4, limit=0)],
)
def test_bad_configs(kw):
    with pytest.raises(ValueError):
        configs_for_length(**kw)


def test_config_requires_golay_params():
    with pytest.raises(ValueError):
        SearchConfig(SdsParams(7, (3,), 1), 7)


def test_least_rotation():
    assert is_least_rotation([0, 1, 2])
    assert not is_least_rotation([1, 0, 2])
    assert is_least_rotation([1, 1])
