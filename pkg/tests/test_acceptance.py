"""Acceptance criteria, one test per criterion.

Each test records a single ``ACCEPT Cn PASS|FAIL ...`` line; conftest.py
prints them all in the session summary.  Run with
``pytest tests/test_acceptance.py -v`` or directly as a script.
"""

import csv
import random
import sys
import time
from pathlib import Path

import numpy as np
import pytest

from strongsparse.addcomb import (
    check_condition_i,
    check_condition_ii,
    e3,
    e4,
    family_from_instance,
    total_size,
)
from strongsparse.cli import main as cli_main
from strongsparse.f2 import BitVec, F2Matrix, reduce_mod, rref_ints, solve, span_ints
from strongsparse.generators import gen_subset_family, gen_xor
from strongsparse.instance import as_two_in_three
from strongsparse.locolor import brute_lo2, check_lo, lift_colouring
from strongsparse.oracle import (
    count_solutions,
    literal_solution_masks,
    pair_uniqueness,
    verify_literal_merges,
    verify_merges,
    verify_succ_semantics,
)
from strongsparse.reduction import Status, clause_bound_check, sparsify_nonmonotone
from strongsparse.sparsifier import (
    baseline_pair_merge,
    compute_alpha,
    find_cycles,
    find_twins,
    sparsify,
    succ_relation,
)

sys.path.insert(0, str(Path(__file__).parent))
from corpus import colourable_corpus, monotone_corpus, nonmonotone_corpus  # noqa: E402


REPORT: list[str] = []


def report(cid: str, ok: bool, detail: str):
    line = f"ACCEPT {cid} {'PASS' if ok else 'FAIL'} {detail}"
    REPORT.append(line)
    print(line)


_SPARSIFIED = None


def sparsified_corpus():
    """Criterion-3 corpus with its sparsifier outputs, computed once."""
    global _SPARSIFIED
    if _SPARSIFIED is None:
        _SPARSIFIED = [(inst, *sparsify(inst)) for inst in monotone_corpus(500, 20, 40)]
    return _SPARSIFIED


def test_c1_extremal_family():
    t = time.perf_counter()
    bad = []
    for d in range(1, 11):
        f = gen_subset_family(d)
        if check_condition_i(f) or check_condition_ii(f) or total_size(f) != 3 ** d:
            bad.append(d)
    secs = time.perf_counter() - t
    ok = not bad and secs < 30
    report("C1", ok, f"subset families d=1..10, violations at d={bad}, {secs:.1f}s (limit 30s)")
    assert not bad
    assert secs < 30


def test_c2_xor_counts():
    t = time.perf_counter()
    bad = []
    for k in range(2, 7):
        inst = gen_xor(k)
        brute = sum(
            1
            for a in range(1 << k)
            for b in range(a + 1, 1 << k)
            for c in range(b + 1, 1 << k)
            if a ^ b ^ c == 0
        )
        eq, _ = baseline_pair_merge(inst)
        if not (inst.m == brute == (2 ** k - 1) * (2 ** k - 2) // 6):
            bad.append((k, "count"))
        if pair_uniqueness(inst) is not None:
            bad.append((k, "pairs"))
        if not eq.is_identity():
            bad.append((k, "baseline merged"))
    secs = time.perf_counter() - t
    report("C2", not bad and secs < 10, f"XOR k=2..6, failures {bad}, {secs:.1f}s (limit 10s)")
    assert not bad
    assert secs < 10


def test_c3_soundness():
    t = time.perf_counter()
    failures = 0
    for inst, eq, out, _ in sparsified_corpus():
        if verify_merges(inst, eq) is not None or count_solutions(inst) != count_solutions(out):
            failures += 1
    secs = time.perf_counter() - t
    ok = failures == 0 and secs < 300
    report("C3", ok, f"500 instances, {failures} unsound or count-changing, {secs:.1f}s (limit 300s)")
    assert failures == 0
    assert secs < 300


def test_c4_fixpoint_structure():
    violations = 0
    for _, _, out, _ in sparsified_corpus():
        out2 = as_two_in_three(out)
        alpha = compute_alpha(out2)
        if find_twins(alpha) or find_cycles(succ_relation(out2, alpha)) or pair_uniqueness(out) is not None:
            violations += 1
    report("C4", violations == 0, f"twins/cycles/pair-uniqueness: {violations} violations in 500 outputs")
    assert violations == 0


def test_c4_clause_bound():
    over = [(out.n, out.m) for _, _, out, _ in sparsified_corpus() if out.m > out.n * (out.n - 1) // 2]
    sample = sorted(set(over))[:3]
    report("C4", not over, f"m_out <= n_out(n_out-1)/2: {len(over)} of 500 exceed it, e.g. (n_out, m_out) {sample}")
    assert not over


def test_c5_succ_semantics():
    t = time.perf_counter()
    failures = 0
    corpus = monotone_corpus(200, 16, 40)
    for inst in corpus:
        inst2 = as_two_in_three(inst)
        g = succ_relation(inst2, compute_alpha(inst2))
        if verify_succ_semantics(inst2, g) is not None:
            failures += 1
    secs = time.perf_counter() - t
    ok = failures == 0 and secs < 120
    report("C5", ok, f"200 instances n<=16, {failures} dominance edges refuted, {secs:.1f}s (limit 120s)")
    assert failures == 0
    assert secs < 120


def test_c6_energy_inequalities():
    families = [family_from_instance(out) for _, _, out, _ in sparsified_corpus()]
    families += [gen_subset_family(d) for d in range(1, 11)]
    violations = 0
    for f in families:
        E3, E4 = e3(f.V), e4(f.V)
        if E3 < total_size(f) or f.n * E4 < E3 * E3:
            violations += 1
    report("C6", violations == 0, f"{len(families)} families, {violations} energy violations")
    assert violations == 0


def test_c7_nonmonotone():
    t = time.perf_counter()
    failures = []
    unsat = 0
    for i, li in enumerate(nonmonotone_corpus(200, 12)):
        res = sparsify_nonmonotone(li)
        if verify_literal_merges(li, res.eq) is not None:
            failures.append((i, "unsound"))
        if res.status is Status.UNSAT_DETECTED:
            unsat += 1
            if literal_solution_masks(li).size:
                failures.append((i, "false unsat"))
        if clause_bound_check(li, res.eq, res.eq_y) is not None:
            failures.append((i, "x8 bound"))
    secs = time.perf_counter() - t
    ok = not failures and secs < 180
    report("C7", ok, f"200 literal instances ({unsat} unsat detected), failures {failures[:5]}, {secs:.1f}s (limit 180s)")
    assert not failures
    assert secs < 180


def test_c8_lo_lift():
    failures = 0
    for h in colourable_corpus(200, 12):
        eq, out, _ = sparsify(h)
        c = brute_lo2(out)
        if c is None or check_lo(h, lift_colouring(eq, c)) is not None:
            failures += 1
    report("C8", failures == 0, f"200 colourable hypergraphs n<=12, {failures} failed lifts")
    assert failures == 0


_PARITY = np.array([bin(i).count("1") & 1 for i in range(1 << 12)], dtype=np.uint16)


def test_c9_linear_algebra():
    t = time.perf_counter()
    rng = random.Random(2024)
    failures = 0
    for _ in range(1000):
        ncols = rng.randint(1, 12)
        rows = [rng.getrandbits(ncols) for _ in range(rng.randint(0, 12))]
        r = rref_ints(ncols, rows)
        if span_ints(r.matrix.int_rows()) != span_ints(rows):
            failures += 1
            continue
        v = BitVec(ncols, rng.getrandbits(ncols))
        red = reduce_mod(r, v)
        coset = {v.bits ^ s for s in span_ints(rows)}
        zero_on_pivots = [u for u in coset if all(not (u >> p) & 1 for p in r.pivots)]
        if zero_on_pivots != [red.bits] or reduce_mod(r, red) != red:
            failures += 1
            continue
        m = F2Matrix.from_ints(ncols, rows)
        b = BitVec(m.nrows, rng.getrandbits(m.nrows)) if m.nrows else BitVec(0, 0)
        xs = np.arange(1 << ncols, dtype=np.uint16)
        images = np.zeros(xs.shape, dtype=np.uint16)
        for i, row in enumerate(rows):
            images |= _PARITY[xs & row] << i
        exists = bool((images == b.bits).any())
        x = solve(m, b)
        if exists != (x is not None) or (x is not None and m @ x != b):
            failures += 1
    secs = time.perf_counter() - t
    ok = failures == 0 and secs < 30
    report("C9", ok, f"1000 random systems <=12 columns, {failures} failures, {secs:.1f}s (limit 30s)")
    assert failures == 0
    assert secs < 30


def test_c10_bench(tmp_path):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        assert cli_main(["bench", "--family", "xor", "--k-range", "2..10", "--csv", str(p)]) == 0
    runs = [list(csv.DictReader(p.open())) for p in paths]
    strip = [[{k: v for k, v in row.items() if k != "seconds"} for row in rows] for rows in runs]
    deterministic = strip[0] == strip[1] and [r["k"] for r in runs[0]] == [str(k) for k in range(2, 11)]
    bad_rows = [
        r["k"]
        for r in runs[0]
        if not int(r["m_out_full"]) <= int(r["m_out_baseline"]) <= int(r["m_in"])
    ]
    ok = deterministic and not bad_rows
    curve = ", ".join(f"n={r['n']}:{r['m_out_baseline']}/{r['m_out_full']}" for r in runs[0])
    report("C10", ok, f"deterministic={deterministic}, ordering violations {bad_rows}; m_out baseline/full {curve}")
    assert deterministic
    assert not bad_rows


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
