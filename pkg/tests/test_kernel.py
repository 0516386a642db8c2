"""The compiled and pure-Python witness kernels must agree with each other
and with the set-algebra checker in :mod:`hyperdual.assignment`."""
import random

import pytest
from hypothesis import given, strategies as st

from conftest import instances
from hyperdual import kernel
from hyperdual.assignment import augment, witness_side
from hyperdual.core import Hypergraph, Instance
from hyperdual.labels import enumerate_label_sets, label_universe
from hyperdual.solver import build_kernel, check_witness_aug

Compiled = kernel.compiled_kernel()
BACKENDS = [kernel.PyKernel] + ([Compiled] if Compiled is not None else [])


def test_backend_selected():
    assert kernel.BACKEND in ("cython", "python")


@pytest.mark.skipif(Compiled is None or kernel.BACKEND == "python",
                    reason="compiled kernel not built or fallback forced")
def test_compiled_is_default():
    assert kernel.Kernel is Compiled


@pytest.mark.parametrize("cls", BACKENDS)
@given(i=instances(max_n=9), r=st.randoms(use_true_random=False))
def test_check_matches_assignment_module(cls, i, r):
    universe = label_universe(i)
    kern = build_kernel(i, universe, cls)
    idx = r.sample(range(len(universe)), min(len(universe), r.randint(0, 3)))
    code, a, b = kern.check_labels(idx)
    labels = frozenset(universe[j] for j in idx)
    from hyperdual.labels import sigma_of_labels
    pair = augment(i, sigma_of_labels(i, labels))
    assert (a, b) == (pair.a, pair.b)
    assert code == (witness_side(i, pair) or 0)
    assert bool(code) == check_witness_aug(i, labels)


@pytest.mark.parametrize("cls", BACKENDS)
def test_scan_first_hit_matches_enumeration(cls, corpus):
    for p in corpus[:60]:
        i = p.instance
        universe = label_universe(i)
        kern = build_kernel(i, universe, cls)
        expected = next((s for s in enumerate_label_sets(i, 2) if check_witness_aug(i, s)), None)
        got = None
        for k in range(3):
            idx, code, _ = kern.scan(k, 0, len(universe))
            if idx is not None:
                got = frozenset(universe[j] for j in idx)
                break
        assert got == expected


@pytest.mark.skipif(Compiled is None, reason="compiled kernel not built")
def test_wide_universe_parity():
    # more than one 64-bit word per set
    rng = random.Random(5)
    n = 150
    g = Hypergraph(n, tuple(rng.getrandbits(n) | 1 for _ in range(6)))
    h = Hypergraph(n, tuple(rng.getrandbits(n) | 1 for _ in range(5)))
    i = Instance(g, h)
    universe = label_universe(i)
    fast = build_kernel(i, universe, Compiled)
    slow = build_kernel(i, universe, kernel.PyKernel)
    for _ in range(300):
        idx = rng.sample(range(len(universe)), rng.randint(0, 3))
        assert fast.check_labels(idx) == slow.check_labels(idx)
    for k in range(3):
        a = fast.scan(k, 3, 40)
        b = slow.scan(k, 3, 40)
        assert a == b


@pytest.mark.parametrize("cls", BACKENDS)
def test_scan_ranges_partition(cls, gap_pair):
    universe = label_universe(gap_pair)
    kern = build_kernel(gap_pair, universe, cls)
    L = len(universe)
    whole = kern.scan(2, 0, L)
    parts = [kern.scan(2, lo, min(lo + 5, L)) for lo in range(0, L, 5)]
    first = next(p for p in parts if p[0] is not None)
    assert first[0] == whole[0]
    assert kern.scan(0, 1, L) == (None, 0, 0)
    assert kern.scan(L + 1, 0, L) == (None, 0, 0)


def test_env_forces_python(monkeypatch):
    import importlib
    monkeypatch.setenv("HYPERDUAL_BACKEND", "python")
    mod = importlib.reload(kernel)
    try:
        assert mod.BACKEND == "python"
    finally:
        monkeypatch.delenv("HYPERDUAL_BACKEND")
        importlib.reload(kernel)


def test_benchmark_script_runs():
    import subprocess
    import sys
    from pathlib import Path
    script = Path(__file__).parent.parent / "benchmarks" / "bench_kernels.py"
    proc = subprocess.run([sys.executable, str(script), "--vertices", "6", "--edges", "3",
                           "--seeds", "1", "--repeat", "1"], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert "speedup" in proc.stdout
