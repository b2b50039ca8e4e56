"""Acceptance suite: one test per criterion, one printed PASS/FAIL line each.

All arithmetic is exact, so every tolerance below is exact equality.  Run
with `pytest tests/test_acceptance.py -v -s` to see the per-criterion lines.

Two criteria assert fixed D-type constants (uniform square size k = l and
companion-set sizes 2(l-1)) that are mathematically unattainable: D_l
squares come in sizes l-1 and 3, so those sub-assertions fail honestly
while the E-system assertions and the true partition invariants pass.
"""

import random
import time

import numpy as np
import pytest

from adjoint_quadrics import (
    IntegersMod,
    IntegerRing,
    ZeroWeight,
    basis_vector,
    build_root_system,
    enumerate_squares,
    extend_a3_to_d4,
    pi2_form,
    sign_column,
    square_of_pair,
)
from adjoint_quadrics.verify import (
    _class_pattern_ok,
    classify_root_vs_square,
    suite_cases,
    suite_commutator,
    suite_jacobi,
    suite_words,
)

ALL_SYSTEMS = ["D5", "D6", "E6", "E7", "E8"]
EXHAUSTIVE = {"D5", "D6", "E6"}


def _line(num, ok, name, detail=""):
    tail = f" [{detail}]" if detail else ""
    print(f"[criterion {num:02d}] {'PASS' if ok else 'FAIL'}: {name}{tail}")


def _orth_pair_indices(rs):
    ii, jj = np.nonzero(np.triu(rs._gram == 0, k=1))
    return list(zip(ii.tolist(), jj.tolist()))


def test_criterion_01_root_counts_and_ranks(system):
    t0 = time.perf_counter()
    expected = {"D5": (45, 40), "D6": (66, 60), "E6": (78, 72), "E7": (133, 126), "E8": (248, 240)}
    bad = []
    for name in ALL_SYSTEMS:
        rs = build_root_system(name)  # fresh builds, timed
        if (rs.dim_v, rs.n_roots) != expected[name]:
            bad.append((name, rs.dim_v, rs.n_roots))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 1.0
    _line(1, ok, "root counts and module ranks", f"{elapsed:.2f}s")
    assert not bad, bad
    assert elapsed < 1.0, f"construction took {elapsed:.2f}s, stated bound is 1s"


def test_criterion_02_k_and_cardinalities(system):
    t0 = time.perf_counter()
    stated_k = {"D5": 5, "D6": 6, "E6": 4, "E7": 5, "E8": 7}
    stated_sizes = {"D5": 8, "E6": 6, "E7": 8, "E8": 12}  # 2(l-1), 6, 8, 12
    k_bad = []
    for name in ALL_SYSTEMS:
        rs, _ = system(name)
        if rs.k != stated_k[name]:
            k_bad.append(name)

    size_bad = {}
    for name, expected in stated_sizes.items():
        rs, _ = system(name)
        gram = rs._gram
        pairs = _orth_pair_indices(rs)
        if name not in EXHAUSTIVE:
            rng = random.Random(20)
            pairs = [pairs[rng.randrange(len(pairs))] for _ in range(10_000)]
        observed = set()
        mismatches = 0
        for i, j in pairs:
            ga, gb = gram[i], gram[j]
            s23 = int(np.count_nonzero((ga == 1) & (gb == 1)))
            s_pi = int(np.count_nonzero((ga == -1) & (gb == -1)))
            s_pi_p = int(np.count_nonzero((ga == -1) & (gb == 1)))
            assert s_pi == s_pi_p  # the two order-pair families always match
            observed.add(s23)
            if not (s23 == s_pi == expected):
                mismatches += 1
        if mismatches:
            size_bad[name] = (sorted(observed), expected, mismatches)

    elapsed = time.perf_counter() - t0
    ok = not k_bad and not size_bad and elapsed < 30
    _line(2, ok, "k constants and companion-set cardinalities", f"{elapsed:.1f}s")
    assert not k_bad, k_bad
    assert elapsed < 30
    assert not size_bad, (
        f"companion-set sizes differ from the stated constants: {size_bad}; "
        "D_l squares have l-1 or 3 orthogonal pairs, so |S| = 2k'-2 is 2l-4 "
        "or 4 there, never 2(l-1); the per-square law is covered by the "
        "combinatorics suite"
    )


def test_criterion_03_structure_constant_identities(system):
    t0 = time.perf_counter()
    bad = []
    sampled_attempted = {}
    for name in ALL_SYSTEMS:
        rs, signs = system(name)
        rep = suite_jacobi(rs, signs, seed=30)
        if not rep.ok:
            bad.append((name, [c for c in rep.checks if c["passed"] != c["attempted"]]))
        sampled_attempted[name] = rep.attempted
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60 and all(sampled_attempted[n] >= 100_000 for n in ("E7", "E8"))
    _line(3, ok, "structure-constant identity suite", f"{elapsed:.1f}s")
    assert not bad, bad
    assert sampled_attempted["E7"] >= 100_000 and sampled_attempted["E8"] >= 100_000
    assert elapsed < 60


def test_criterion_04_square_census(system):
    t0 = time.perf_counter()
    literal_bad = []
    partition_bad = []
    e8_count = None
    for name in ALL_SYSTEMS:
        rs, _ = system(name)
        squares = enumerate_squares(rs)
        n_pairs = len(_orth_pair_indices(rs))
        if name == "E8":
            e8_count = len(squares)
        if len(squares) * rs.k != n_pairs:
            literal_bad.append((name, len(squares), rs.k, n_pairs))
        if sum(sq.k for sq in squares) != n_pairs:
            partition_bad.append(name)
    elapsed = time.perf_counter() - t0
    ok = not literal_bad and not partition_bad and e8_count == 2160 and elapsed < 30
    _line(4, ok, "maximal-square census", f"E8={e8_count}, {elapsed:.1f}s")
    assert not partition_bad, partition_bad
    assert e8_count == 2160
    assert elapsed < 30
    assert not literal_bad, (
        f"#squares * k != #orthogonal pairs for {literal_bad}; D_l squares "
        "are not uniform (sizes l-1 and 3), though they do partition the "
        "pairs: sum of per-square sizes equals the pair count for all five "
        "systems"
    )


def test_criterion_05_sign_column_lemma(system):
    t0 = time.perf_counter()
    failures = 0
    attempted = 0

    def check_square(rs, signs, sq):
        nonlocal failures, attempted
        idxs = sq.signed_indices()
        cols = {j: sign_column(rs, signs, sq, j) for j in idxs}
        for j in idxs:
            for h in idxs:
                attempted += 1
                if any(cols[h][i] != cols[h][j] * cols[j][i] for i in idxs):
                    failures += 1
        # Equivalent statement: rooting the pi/2 form at pair j rescales it
        # by the global sign c(1)_j.
        base = pi2_form(rs, signs, sq.member(1), sq.member(-1))
        for j in idxs:
            attempted += 1
            other = pi2_form(rs, signs, sq.member(j), sq.member(-j))
            sign = cols[1][j]
            if tuple(sorted((a, b, sign * c) for a, b, c in other.monomials)) != base.monomials:
                failures += 1

    rs, signs = system("E6")
    squares = enumerate_squares(rs)
    assert len(squares) == 270
    for sq in squares:
        check_square(rs, signs, sq)

    rs, signs = system("E8")
    squares = enumerate_squares(rs)
    rng = random.Random(50)
    for _ in range(1000):
        check_square(rs, signs, squares[rng.randrange(len(squares))])

    elapsed = time.perf_counter() - t0
    ok = failures == 0
    _line(5, ok, "sign-column lemma and pair-choice independence",
          f"{attempted} checks, {elapsed:.1f}s")
    assert failures == 0


def test_criterion_06_position_classification(system):
    t0 = time.perf_counter()
    failures = 0
    rs, signs = system("E6")
    squares = enumerate_squares(rs)
    attempted = 0
    for rho in rs.roots:
        for sq in squares:
            attempted += 1
            cls = classify_root_vs_square(rs, rho, sq)
            if not _class_pattern_ok(rs, rho, sq, cls):
                failures += 1
    assert attempted == 72 * 270

    rs, signs = system("E8")
    squares = enumerate_squares(rs)
    rng = random.Random(60)
    for _ in range(10_000):
        rho = rs.roots[rng.randrange(rs.n_roots)]
        sq = squares[rng.randrange(len(squares))]
        attempted += 1
        cls = classify_root_vs_square(rs, rho, sq)
        if not _class_pattern_ok(rs, rho, sq, cls):
            failures += 1
    elapsed = time.perf_counter() - t0
    ok = failures == 0
    _line(6, ok, "five-class position lemma", f"{attempted} checks, {elapsed:.1f}s")
    assert failures == 0


def _a3_triples_exhaustive(rs):
    gram = rs._gram
    for a in rs.roots:
        ai = rs.root_index(a)
        for bi in np.nonzero(gram[ai] == -1)[0].tolist():
            b = rs.roots[bi]
            for ci in np.nonzero((gram[ai] == 0) & (gram[bi] == -1))[0].tolist():
                yield a, b, rs.roots[ci]


def test_criterion_07_a3_extension(system):
    t0 = time.perf_counter()
    failures = 0
    attempted = 0

    def check(rs, a, b, g):
        nonlocal failures, attempted
        attempted += 1
        d = extend_a3_to_d4(rs, a, b, g)
        if (
            rs.doubled_inner(d, a) != 0
            or rs.doubled_inner(d, g) != 0
            or rs.doubled_inner(d, b) != -1
        ):
            failures += 1

    for name in ["D5", "E6"]:
        rs, _ = system(name)
        for a, b, g in _a3_triples_exhaustive(rs):
            check(rs, a, b, g)

    for name in ["E7", "E8"]:
        rs, _ = system(name)
        rng = random.Random(70)
        gram = rs._gram
        done = 0
        while done < 10_000:
            ai = rng.randrange(rs.n_roots)
            bs = np.nonzero(gram[ai] == -1)[0]
            bi = int(bs[rng.randrange(len(bs))])
            cs = np.nonzero((gram[ai] == 0) & (gram[bi] == -1))[0]
            if len(cs) == 0:
                continue
            ci = int(cs[rng.randrange(len(cs))])
            check(rs, rs.roots[ai], rs.roots[bi], rs.roots[ci])
            done += 1

    # The explicit fundamental witnesses are themselves valid extensions.
    witness_ok = True
    for name in ["E6", "E7", "E8"]:
        rs, _ = system(name)
        a, b, g = rs.simple_root(2), rs.simple_root(4), rs.simple_root(3)
        d = rs.simple_root(5)
        witness_ok &= (
            rs.doubled_inner(d, a) == 0
            and rs.doubled_inner(d, g) == 0
            and rs.doubled_inner(d, b) == -1
        )
    for name in ["D5", "D6"]:
        rs, _ = system(name)
        l = rs.rank
        a, b, g = rs.simple_root(l - 1), rs.simple_root(l - 2), rs.simple_root(l)
        d = rs.simple_root(l - 3)
        witness_ok &= (
            rs.doubled_inner(d, a) == 0
            and rs.doubled_inner(d, g) == 0
            and rs.doubled_inner(d, b) == -1
        )

    elapsed = time.perf_counter() - t0
    ok = failures == 0 and witness_ok
    _line(7, ok, "A3-to-D4 extension lemma", f"{attempted} triples, {elapsed:.1f}s")
    assert failures == 0
    assert witness_ok


def test_criterion_08_case_identity_ledger(system):
    t0 = time.perf_counter()
    bad = []
    e8_time = None
    for name in ALL_SYSTEMS:
        rs, signs = system(name)
        t1 = time.perf_counter()
        rep = suite_cases(rs, signs, seed=80, samples=100)
        if name == "E8":
            e8_time = time.perf_counter() - t1
        if not rep.ok:
            bad.append((name, [c for c in rep.checks if c["passed"] != c["attempted"]]))
    elapsed = time.perf_counter() - t0
    ok = not bad and e8_time < 180
    _line(8, ok, "symbolic case-identity ledger",
          f"19 entries x 100 samples x 5 systems, E8 {e8_time:.0f}s, total {elapsed:.0f}s")
    assert not bad, bad
    assert e8_time < 180, f"E8 ledger took {e8_time:.0f}s, stated bound is 180s"


def test_criterion_09_commutator_reduction(system):
    t0 = time.perf_counter()
    bad = []
    for name in ALL_SYSTEMS:
        rs, signs = system(name)
        rep = suite_commutator(rs, signs, seed=90, samples=100)
        if not rep.ok:
            bad.append((name, [c for c in rep.checks if c["passed"] != c["attempted"]]))
        # At least 100 configurations carrying the named decomposition per
        # class; roots orthogonal to the whole square (D6/E7 only) are
        # verified separately by the fixes-square route and come on top.
        for c in rep.checks:
            if c["reductions"] < 100:
                bad.append((name, c["name"], "fewer than 100 verified reductions"))
    elapsed = time.perf_counter() - t0
    ok = not bad
    _line(9, ok, "commutator reduction for classes pi/2 and pi/3",
          f"100 per class per system, {elapsed:.0f}s")
    assert not bad, bad


def test_criterion_10_theorem_end_to_end(system, eqset_for):
    t0 = time.perf_counter()
    # Timed single-vector full-set evaluation for E8.
    rs, signs = system("E8")
    eqset = eqset_for("E8")
    assert len(eqset.forms) == 47520
    rng = random.Random(100)
    from adjoint_quadrics import Elementary, Word, apply_word

    word = Word(
        tuple(
            Elementary(rs.roots[rng.randrange(rs.n_roots)], rng.randint(-2, 2))
            for _ in range(12)
        )
    )
    v = apply_word(rs, signs, word, basis_vector(rs, IntegerRing(), rs.roots[0]))
    t1 = time.perf_counter()
    ok_e8, _ = eqset.check_vector(v)
    single_eval = time.perf_counter() - t1
    assert ok_e8

    bad = []
    for name in ALL_SYSTEMS:
        rs, signs = system(name)
        rep = suite_words(rs, signs, eqset_for(name), seed=100, samples=100)
        if not rep.ok:
            bad.append((name, [c for c in rep.checks if c["passed"] != c["attempted"]]))
    elapsed = time.perf_counter() - t0
    ok = not bad and single_eval < 30 and elapsed < 600
    _line(10, ok, "random-word invariance over int, zmod:4, zmod:7",
          f"E8 single full-set eval {single_eval * 1000:.0f}ms, total {elapsed:.0f}s")
    assert not bad, bad
    assert single_eval < 30
    assert elapsed < 600


def test_criterion_11_negative_control(system, eqset_for):
    t0 = time.perf_counter()
    bad = []
    for name in ALL_SYSTEMS:
        rs, _ = system(name)
        eqset = eqset_for(name)
        ok, witness = eqset.check_vector(basis_vector(rs, IntegerRing(), ZeroWeight(1)))
        if ok or witness is None:
            bad.append(name)
        # Base-case counterpart: every root basis vector satisfies every form
        # (exhaustive over rho for all five systems).
        for rho in rs.roots:
            ok_rho, _ = eqset.check_vector(basis_vector(rs, IntegerRing(), rho))
            if not ok_rho:
                bad.append((name, rho))
    elapsed = time.perf_counter() - t0
    ok = not bad
    _line(11, ok, "zero-weight basis vector violates some form; root vectors never do",
          f"{elapsed:.1f}s")
    assert not bad, bad
