"""Product-level acceptance gate: ten criteria, one reported line each.

Every test prints a single PASS/FAIL line with its measured runtime and
budget, then asserts. Run with plain pytest; the lines bypass capture.
"""

import functools
import itertools
import json
import subprocess
import sys
import time

from locfields.arith import is_prime
from locfields.cli import main as cli_main
from locfields.config import DEFAULT_CONFIG
from locfields.dedekind import (dedekind_index_test, monogenic_degree_bound,
                                monogenic_index_scan)
from locfields.fields import (cyclotomic_field, intersection, splitting_data,
                              to_document, totally_split)
from locfields.grunwald import CyclicFieldRequest, construct_cyclic
from locfields.intpoly import cyclotomic_polynomial, discriminant, int_poly
from locfields.periods import period_minimal_polynomial
from locfields.realizations import bounded_realization, unbounded_realization

CFG = DEFAULT_CONFIG

LAMBDA_TEN = [2, 3, 7, 11, 23, 31, 43, 47, 59, 67]


def _report(capsys, num, name, ok, elapsed, limit, detail=""):
    status = "PASS" if ok else "FAIL"
    tail = f": {detail}" if detail else ""
    with capsys.disabled():
        print(f"\ncriterion {num:2d} {status} "
              f"({elapsed:.2f}s / {limit:.0f}s) {name}{tail}")


@functools.cache
def _bounded_depth3():
    return bounded_realization(3, None, (2, 3, 5), CFG)


def test_criterion_01_lambda_prefix(capsys):
    t0 = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "locfields.cli", "lambda", "--count", "10"],
        capture_output=True, text=True)
    elapsed = time.perf_counter() - t0
    doc = json.loads(proc.stdout) if proc.returncode == 0 else {}
    ok = proc.returncode == 0 and doc.get("primes") == LAMBDA_TEN
    _report(capsys, 1, "admissible prime prefix", ok and elapsed < 1.0,
            elapsed, 1.0, f"primes={doc.get('primes')}")
    assert ok, proc.stderr
    assert elapsed < 1.0


def test_criterion_02_eisenstein_discriminants(capsys):
    t0 = time.perf_counter()
    checked = []
    for p in (2, 3, 5, 7, 11, 13):
        f = int_poly([p, -2 * p, 0, 1])
        checked.append(discriminant(f) == p * p * (32 * p - 27))
    elapsed = time.perf_counter() - t0
    ok = all(checked)
    _report(capsys, 2, "ramified cubic discriminants", ok and elapsed < 1.0,
            elapsed, 1.0, f"{sum(checked)}/6 match p^2(32p-27)")
    assert ok
    assert elapsed < 1.0


def test_criterion_03_unbounded_growth(capsys):
    probes = (2, 3, 5, 7, 11, 13)
    t0 = time.perf_counter()
    by_depth = []
    for depth in (1, 2, 3, 4):
        report = unbounded_realization(depth, probes, CFG)
        by_depth.append(dict(report.local_degrees))
    elapsed = time.perf_counter() - t0
    at_two = [d[2] for d in by_depth]
    strictly = all(a < b for a, b in zip(at_two, at_two[1:]))
    monotone = all(
        by_depth[k][p] <= by_depth[k + 1][p]
        for k in range(3) for p in probes)
    ok = at_two == [2, 6, 30, 330] and strictly and monotone
    _report(capsys, 3, "unbounded local degree growth",
            ok and elapsed < 30.0, elapsed, 30.0,
            f"ld(2) by depth = {at_two}, nondecreasing at probes <= 13")
    assert ok, (at_two, by_depth)
    assert elapsed < 30.0


def test_criterion_04_bounded_realization(capsys):
    t0 = time.perf_counter()
    report = _bounded_depth3()
    fields = [c.field for c in report.components]
    pairwise = [
        intersection(a, b, CFG).degree == 1
        for a, b in itertools.combinations(fields, 2)]
    elapsed = time.perf_counter() - t0
    ld = dict(report.local_degrees)
    orders = [q - 1 for q in report.group_primes]  # (2, 6, 10)
    bounds_hold = all(
        ld[p] <= functools.reduce(lambda x, y: x * y, orders[:n + 1])
        for n, p in enumerate(report.split_primes))
    ok = (report.degree == 120 and all(pairwise) and bounds_hold
          and ld[2] == 1)
    _report(capsys, 4, "bounded realization at depth 3",
            ok and elapsed < 120.0, elapsed, 120.0,
            f"degree={report.degree}, ld={sorted(ld.items())}, "
            f"{sum(pairwise)}/{len(pairwise)} intersections trivial")
    assert ok, (report.degree, ld, pairwise)
    assert elapsed < 120.0


def test_criterion_05_roots_of_unity_dichotomy(capsys):
    t0 = time.perf_counter()
    bounded = _bounded_depth3().torsion_order
    unbounded = unbounded_realization(3, (2,), CFG).torsion_order
    elapsed = time.perf_counter() - t0
    ok = bounded == 2 and unbounded >= 22
    _report(capsys, 5, "torsion dichotomy", ok and elapsed < 10.0,
            elapsed, 10.0,
            f"bounded tower keeps {bounded} roots of unity, "
            f"unbounded tower holds {unbounded} >= 22")
    assert ok, (bounded, unbounded)
    assert elapsed < 10.0


def test_criterion_06_splitting_bridge(capsys):
    primes = [p for p in range(2, 51) if is_prime(p)]
    t0 = time.perf_counter()
    cases = agree = 0
    first_bad = None
    for m in range(1, 101):
        phi_m = cyclotomic_polynomial(m)
        field = cyclotomic_field(m, CFG)
        for p in primes:
            if m % p == 0:
                continue
            cases += 1
            rep = dedekind_index_test(phi_m, p, seed=0, config=CFG)
            data = splitting_data(field, p, CFG)
            expect = tuple([(1, data.f)] * data.g)
            if (not rep.index_divisible) and rep.splitting == expect:
                agree += 1
            elif first_bad is None:
                first_bad = (m, p, rep.splitting, expect)
    elapsed = time.perf_counter() - t0
    ok = agree == cases
    _report(capsys, 6, "index test agrees with splitting data",
            ok and elapsed < 60.0, elapsed, 60.0,
            f"{agree}/{cases} cyclotomic cases agree")
    assert ok, first_bad
    assert elapsed < 60.0


def test_criterion_07_classical_index_example(capsys):
    t0 = time.perf_counter()
    cubic = dedekind_index_test(int_poly([-8, -2, -1, 1]), 2, config=CFG)
    gauss = dedekind_index_test(int_poly([1, 0, 1]), 2, config=CFG)
    elapsed = time.perf_counter() - t0
    ok = (cubic.index_divisible is True
          and gauss.index_divisible is False
          and gauss.splitting == ((2, 1),))
    _report(capsys, 7, "classical nonmonogenic cubic", ok and elapsed < 1.0,
            elapsed, 1.0,
            f"cubic flagged={cubic.index_divisible}, "
            f"x^2+1 at 2 splits as {gauss.splitting}")
    assert ok, (cubic.index_divisible, gauss.splitting)
    assert elapsed < 1.0


def test_criterion_08_degree_bound_and_scan(capsys):
    t0 = time.perf_counter()
    bounds_ok = (monogenic_degree_bound(2, 1) == 4
                 and monogenic_degree_bound(2, 3) == 9216
                 and monogenic_degree_bound(3, 2) == 972)
    report = _bounded_depth3()
    family = []
    for c in report.components:
        poly = period_minimal_polynomial(c.field, CFG)
        family.append((f"stage{c.stage}-c{c.cyclic_order}", poly))
    # the local degree bound computed at p = 2 in criterion 4 is q_1 - 1
    local_bound = report.group_primes[0] - 1
    scan = monogenic_index_scan(family, 2, local_bound, seed=CFG.seed,
                                config=CFG)
    elapsed = time.perf_counter() - t0
    ok = bounds_ok and scan.witnesses == () and len(scan.entries) == 5
    _report(capsys, 8, "monogenic degree bound and scan",
            ok and elapsed < 60.0, elapsed, 60.0,
            f"bounds=(4,9216,972) ok={bounds_ok}, scan of "
            f"{len(scan.entries)} period polynomials, "
            f"witnesses={list(scan.witnesses)}")
    assert ok, (bounds_ok, scan.witnesses)
    assert elapsed < 60.0


def test_criterion_09_constructor_grid(capsys):
    avoid = cyclotomic_field(105, CFG)
    t0 = time.perf_counter()
    cases = good = 0
    first_bad = None
    for q in (2, 3, 5, 7):
        for size in (0, 1, 2):
            for split in itertools.combinations((2, 3, 5, 7, 11), size):
                cases += 1
                field, _ = construct_cyclic(
                    CyclicFieldRequest(q, split, avoid), CFG)
                passed = (field.degree == q
                          and all(totally_split(field, t, CFG)
                                  for t in split)
                          and intersection(field, avoid, CFG).degree == 1)
                if passed:
                    good += 1
                elif first_bad is None:
                    first_bad = (q, split)
    elapsed = time.perf_counter() - t0
    ok = cases == 64 and good == cases
    _report(capsys, 9, "cyclic constructor grid", ok and elapsed < 120.0,
            elapsed, 120.0, f"{good}/{cases} (q, split set) cases hold")
    assert ok, first_bad
    assert elapsed < 120.0


def test_criterion_10_deterministic_output(capsys):
    avoid_doc = json.dumps(to_document(cyclotomic_field(105, CFG)))
    commands = [
        ["lambda", "--count", "10"],
        ["realize", "--kind", "unbounded", "--depth", "4",
         "--probe", "2,3,5,7,11,13"],
        ["realize", "--kind", "bounded", "--depth", "3",
         "--probe", "2,3,5"],
        ["--seed", "0", "construct-cyclic", "--q", "5", "--split", "2,11",
         "--avoid", avoid_doc],
    ]
    t0 = time.perf_counter()
    identical = []
    for argv in commands:
        runs = []
        for _ in (0, 1):
            code = cli_main(argv)
            out = capsys.readouterr().out
            runs.append((code, out))
        identical.append(runs[0] == runs[1] and runs[0][0] == 0)
    elapsed = time.perf_counter() - t0
    ok = all(identical)
    _report(capsys, 10, "byte-identical reruns", ok, elapsed, 60.0,
            f"{sum(identical)}/{len(identical)} command documents repeat "
            "exactly")
    assert ok, identical
