"""Kernel tier selection and cross-tier agreement for the subset table."""

import random

import pytest

import convexdiff as cd
from convexdiff import InvalidInput, TooLarge
from convexdiff.kernels import (
    INT64_SAFE,
    KERNEL_ENV,
    MAX_TABLE,
    available_tiers,
    compute_table,
    resolve_kernel,
)


def _random_scaled(rng, n):
    vals = [rng.randrange(0, 5)]
    for _ in range(n - 1):
        vals.append(vals[-1] + rng.randrange(1, 50))
    return vals


def test_available_tiers_always_has_fallbacks():
    tiers = available_tiers()
    assert "python" in tiers and "numpy" in tiers


def test_compute_table_guards():
    with pytest.raises(InvalidInput):
        compute_table([5])
    with pytest.raises(TooLarge):
        compute_table(list(range(MAX_TABLE + 1)))


def test_force_bad_name_rejected():
    with pytest.raises(InvalidInput):
        compute_table([1, 2, 4], force="turbo")


def test_env_flag_selects_tier(monkeypatch):
    monkeypatch.setenv(KERNEL_ENV, "python")
    _, tier = compute_table([1, 2, 4, 8])
    assert tier == "python"
    monkeypatch.setenv(KERNEL_ENV, "numpy")
    _, tier = compute_table([1, 2, 4, 8])
    assert tier == "numpy"
    monkeypatch.setenv(KERNEL_ENV, "bogus")
    with pytest.raises(InvalidInput):
        compute_table([1, 2, 4, 8])


def test_force_overrides_env(monkeypatch):
    monkeypatch.setenv(KERNEL_ENV, "numpy")
    _, tier = compute_table([1, 2, 4, 8], force="python")
    assert tier == "python"


def test_int64_guard_forces_python_tier():
    big = [0, INT64_SAFE // 2, INT64_SAFE + 7]
    _, tier = compute_table(big, force="numpy")
    assert tier == "python"
    assert resolve_kernel(int64_safe=False, force="numpy") == "python"


def test_tiers_agree_on_random_tables():
    rng = random.Random(99)
    tiers = available_tiers()
    for _ in range(40):
        vals = _random_scaled(rng, rng.randrange(2, 30))
        tables = {}
        for t in tiers:
            table, used = compute_table(vals, force=t)
            assert used == t
            tables[t] = [[int(x) for x in row] for row in table]
        ref = tables["python"]
        for t in tiers:
            assert tables[t] == ref


def test_python_tier_handles_big_integers_exactly():
    # values from the digit construction overflow int64 quickly
    a = cd.thm3_set(13)
    scaled = [int(x) for x in cd.difference_set(a) if x > 0]
    assert max(scaled) > INT64_SAFE
    table, tier = compute_table(scaled)
    assert tier == "python"
    assert max(max(row) for row in table) >= 13


def test_table_entries_are_suffix_lengths():
    # g[a][t] = longest convex subset of B starting with (B[a], B[t])
    rng = random.Random(5)
    for _ in range(20):
        vals = _random_scaled(rng, rng.randrange(2, 12))
        m = len(vals)
        table, _ = compute_table(vals, force="python")

        def best(a, t):
            out = 2
            for u in range(t + 1, m):
                if vals[u] - vals[t] > vals[t] - vals[a]:
                    out = max(out, 1 + best(t, u))
            return out

        for a in range(m):
            for t in range(a + 1, m):
                assert int(table[a][t]) == best(a, t)
