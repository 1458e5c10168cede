"""Exit criteria.  Each test records one PASS/FAIL line, shown in the terminal summary."""

import functools
import itertools
import random
import time

from conftest import CRITERIA_RESULTS
from revkara import costs
from revkara.circuit import invert, max_wire_incidence, run_columns, stats
from revkara.gf2linalg import Gf2Matrix, lup_decompose
from revkara.gf2poly import Polynomial, parse_modulus
from revkara.registry import FIELDS, MODMULT_PUBLISHED, default_modulus
from revkara.synth import (
    split_point,
    synth_add,
    synth_constmult,
    synth_kmult,
    synth_modmult,
    synth_modshift,
    synth_mult1xk,
    synth_schoolbook,
)
from revkara.verify import harness, verify_exhaustive, verify_random

P = Polynomial.from_exponents


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                CRITERIA_RESULTS.append(f"FAIL  criterion {number}: {title}")
                print(f"FAIL  criterion {number}: {title}")
                raise
            CRITERIA_RESULTS.append(f"PASS  criterion {number}: {title}")
            print(f"PASS  criterion {number}: {title}")
        return run
    return wrap


@functools.lru_cache(maxsize=None)
def modmult(exponents):
    return synth_modmult(parse_modulus(",".join(map(str, exponents))))


def _roundtrip_ok(c, trials=100, seed=0):
    rng = random.Random(seed)
    cols = [rng.getrandbits(trials) for _ in range(c.qubits)]
    return run_columns(invert(c), run_columns(c, cols)) == cols


@criterion(1, "exhaustive MODMULT over GF(2^4), 256 pairs, inputs restored, < 1 s")
def test_exhaustive_gf16():
    t0 = time.perf_counter()
    h = harness("modmult", m=parse_modulus("4,1,0"))
    v = verify_exhaustive(h)
    elapsed = time.perf_counter() - t0
    assert v.trials == 256 and v.failures == 0, v.counterexample
    assert elapsed < 1.0, elapsed


RANDOM_DEGREES = (16, 127, 163, 233, 283, 571, 1024)


@criterion(2, "randomized MODMULT for every registered modulus of degree 16..1024, < 60 s")
def test_randomized_large_fields():
    t0 = time.perf_counter()
    entries = [e for e in FIELDS if e.degree in RANDOM_DEGREES]
    assert len(entries) == 10
    for e in entries:
        h = harness("modmult", m=e.modulus)
        v = verify_random(h, trials=100, seed=e.degree)
        assert v.ok, (e.key, v.counterexample)
    elapsed = time.perf_counter() - t0
    print(f"  10 moduli x 100 pairs in {elapsed:.1f} s")
    assert elapsed < 60.0


TOF_EXPECTED = {2: 3, 4: 9, 8: 27, 16: 81, 127: 2185, 163: 4387, 233: 6323,
                283: 10273, 571: 31171, 1024: 59049}


@criterion(3, "MODMULT Toffoli counts equal the published values and the recursion")
def test_toffoli_counts():
    for n, want in TOF_EXPECTED.items():
        assert costs.modmult_tof(n) == want
        got = stats(modmult(default_modulus(n).exponents)).tof_count
        assert got == want, (n, got, want)


@criterion(4, "schoolbook Toffoli = n^2, modular schoolbook CNOT = (n-1)(w-2)")
def test_schoolbook_counts():
    for n, want in ((16, 256), (127, 16129)):
        assert stats(synth_schoolbook(n)).tof_count == want
        m = default_modulus(n)
        st = stats(synth_schoolbook(n, m))
        assert st.tof_count == want
        assert st.cnot_count == (n - 1) * (m.weight - 2)
    for spec in ("4,1,0", "8,4,3,1,0", "20,9,5,3,0", "163,7,6,3,0"):
        m = parse_modulus(spec)
        st = stats(synth_schoolbook(m.n, m))
        assert (st.tof_count, st.cnot_count) == (m.n ** 2, (m.n - 1) * (m.weight - 2))


@criterion(5, "MODMULT CNOT counts 9 / 44 / 200 / 678 and structural subtotal")
def test_cnot_counts():
    for n, want in ((2, 9), (4, 44), (8, 200), (16, 678)):
        m = default_modulus(n)
        total = stats(modmult(m.exponents)).cnot_count
        const = stats(synth_constmult(P([split_point(n), 0]), m)).cnot_count
        assert total - 2 * const == costs.modmult_structure_cnot(m)
        assert total == want, (n, total, want)


@criterion(6, "LUP of the 4x4 worked example and its 5-CNOT, depth-4 circuit")
def test_lup_worked_example():
    gamma = Gf2Matrix.from_lists([[1, 0, 1, 0], [0, 1, 1, 1], [1, 0, 1, 1], [0, 1, 0, 1]])
    d = lup_decompose(gamma)
    assert d.L.to_lists() == [[1, 0, 0, 0], [0, 1, 0, 0], [0, 1, 1, 0], [1, 0, 0, 1]]
    assert d.U.to_lists() == [[1, 0, 1, 0], [0, 1, 1, 1], [0, 0, 1, 0], [0, 0, 0, 1]]
    assert d.P_inv == (0, 1, 3, 2)
    st = stats(synth_constmult(P([2, 0]), parse_modulus("4,1,0")))
    assert (st.cnot_count, st.depth_greedy) == (5, 4)


@criterion(7, "field polynomial choice: 1+x^10 costs <= 27 / 55 / 108 within 10%, ordered")
def test_polynomial_choice():
    got = []
    for spec, ref in (("20,3,0", 27), ("20,9,5,3,0", 55), ("20,19,4,3,0", 108)):
        cn = stats(synth_constmult(P([10, 0]), parse_modulus(spec))).cnot_count
        assert cn <= ref and cn >= 0.9 * ref, (spec, cn, ref)
        got.append(cn)
    assert got[0] < got[1] < got[2]


def _property_circuits():
    out = [("modmult", n, modmult(default_modulus(n).exponents)) for n in (2, 4, 8, 16, 32, 127, 163)]
    out += [("kmult", n, synth_kmult(n)[0]) for n in (1, 2, 3, 5, 8, 16, 31)]
    out += [("constmult", e.key, synth_constmult(P([split_point(e.degree), 0]), e.modulus)) for e in FIELDS[:10]]
    out += [("schoolbook", n, synth_schoolbook(n, default_modulus(n))) for n in (4, 8, 16)]
    out += [("modshift", n, synth_modshift(default_modulus(n), 5)) for n in (8, 127)]
    out += [("add", n, synth_add(n)) for n in (0, 9)]
    return out


@criterion(8, "properties: reversibility, 3n qubits, no swaps, block CNOT counts, shift inverse")
def test_property_suite():
    for kind, size, c in _property_circuits():
        assert _roundtrip_ok(c), (kind, size)
        assert all(len(g) in (2, 3) for g in c.gates)
    for exps in ((2, 1, 0), (3, 1, 0), (5, 2, 0), (4, 1, 0), (16, 5, 3, 1, 0), (127, 1, 0), (571, 10, 5, 2, 0)):
        assert modmult(exps).qubits == 3 * exps[0]
    for k, n in itertools.chain(((k, k) for k in range(2, 12)), ((k, k - 1) for k in range(3, 12))):
        ell = max(0, 2 * n - 1 - k)
        block = stats(synth_mult1xk(k, n)[0]).cnot_count
        inner = stats(synth_kmult(n)[0]).cnot_count
        assert block - inner == 2 * k + 2 * ell, (k, n)
    st = stats(synth_kmult(2)[0])
    assert (st.tof_count, st.cnot_count) == (3, 8)
    for e in FIELDS:
        cn = stats(synth_constmult(P([split_point(e.degree), 0]), e.modulus)).cnot_count
        assert cn <= e.degree ** 2 - e.degree
    for spec in ("2,1,0", "3,1,0", "4,1,0", "5,2,0", "6,1,0", "7,1,0", "8,4,3,1,0", "9,4,0", "10,3,0"):
        m = parse_modulus(spec)
        states = range(1 << m.n)
        for k in range(1, m.n + 1):
            c = synth_modshift(m, k).compose(synth_modshift(m, -k))
            cols = [sum(((s >> i) & 1) << s for s in states) for i in range(m.n)]
            assert run_columns(c, cols) == cols, (spec, k)


@criterion(9, "greedy depth between max wire incidence and gate count; published depths reported")
def test_depth_sanity():
    for kind, size, c in _property_circuits():
        st = stats(c)
        assert max_wire_incidence(c) <= st.depth_greedy <= st.total, (kind, size)
    print("  degree  depth  published")
    for n in sorted(MODMULT_PUBLISHED):
        c = modmult(default_modulus(n).exponents)
        st = stats(c)
        assert max_wire_incidence(c) <= st.depth_greedy <= st.total
        print(f"  {n:6d} {st.depth_greedy:7d} {MODMULT_PUBLISHED[n][3]:9d}")

