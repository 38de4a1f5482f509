"""The acceptance table: executable desk-scale checks of every headline claim.

Each criterion pairs the implementation under test with an independent
brute-force oracle (sub-cube scans, exhaustive model lists, subset
enumeration) and reports pass/fail with a short account of what was covered.
:func:`run_all` powers both the ``reproduce`` CLI subcommand and the
acceptance test suite, so both exercise identical checks.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from random import Random
from typing import Callable

from . import analysis, compilers, families, transforms
from .core import (
    BnnRep,
    BoolVec,
    FunctionTable,
    _classify,
    negate,
    to_truth_table,
    validate_semantic,
)
from .queries import Clause, QueryStats, Term, ce, ct_enumerate, eq, im, me


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float


# ---------------------------------------------------------------------------
# samplers and oracles


def _parity_table(n: int) -> FunctionTable:
    return FunctionTable.from_masks(n, (m for m in range(1 << n) if m.bit_count() % 2 == 1))


def _majority_table(n: int) -> FunctionTable:
    t = (n + 1) // 2
    return FunctionTable.from_masks(n, (m for m in range(1 << n) if m.bit_count() >= t))


def random_table(rng: Random, n: int, *, allow_empty: bool = False) -> FunctionTable:
    size = rng.randint(0 if allow_empty else 1, 1 << n)
    return FunctionTable.from_masks(n, rng.sample(range(1 << n), size))


def random_valid_rep(rng: Random, max_n: int, max_size: int | None = None) -> BnnRep:
    """One semantically valid representation from a mixed family.

    Mixes constants, single-prototype pairs at odd distance (odd distance
    parity rules out ties), rejection-sampled small pairs, the parity and
    majority families, and models-plus-boundary compilations of small random
    model sets; half the draws are then complemented.
    """
    while True:
        n = rng.randint(1, max_n)
        style = rng.randrange(6)
        rep: BnnRep | None = None
        if style == 0:
            v = BoolVec(n, rng.randrange(1 << n))
            rep = BnnRep(n, (v,), ()) if rng.random() < 0.5 else BnnRep(n, (), (v,))
        elif style == 1 and n >= 1:
            a = rng.randrange(1 << n)
            while True:
                b = rng.randrange(1 << n)
                if (a ^ b).bit_count() % 2 == 1:
                    break
            rep = BnnRep(n, (BoolVec(n, a),), (BoolVec(n, b),))
        elif style == 2 and n <= 6:
            for _ in range(40):
                pos = {rng.randrange(1 << n) for _ in range(rng.randint(1, 3))}
                neg = {rng.randrange(1 << n) for _ in range(rng.randint(1, 3))} - pos
                if not neg:
                    continue
                candidate = BnnRep(
                    n,
                    tuple(BoolVec(n, m) for m in pos),
                    tuple(BoolVec(n, m) for m in neg),
                )
                if validate_semantic(candidate) is None:
                    rep = candidate
                    break
        elif style == 3 and n <= 4:
            rep = families.gen_parity(n)
        elif style == 4:
            rep = families.gen_majority(n)
        else:
            m = rng.randint(1, min(4, 1 << n))
            rep = compilers.mods_to_bnn(FunctionTable.from_masks(n, rng.sample(range(1 << n), m)))
        if rep is None:
            continue
        if rng.random() < 0.5:
            rep = negate(rep)
        if max_size is not None and rep.size > max_size:
            continue
        return rep


def random_term(rng: Random, n: int) -> Term:
    count = rng.randint(0, n)
    variables = rng.sample(range(1, n + 1), count)
    return Term(frozenset(v if rng.random() < 0.5 else -v for v in variables))


def random_clause(rng: Random, n: int) -> Clause:
    count = rng.randint(0, n)
    variables = rng.sample(range(1, n + 1), count)
    return Clause(frozenset(v if rng.random() < 0.5 else -v for v in variables))


def _all_terms(n: int):
    for signs in product((0, 1, -1), repeat=n):
        yield Term(frozenset(s * v for v, s in zip(range(1, n + 1), signs) if s))


def subcube_scan_im(rep: BnnRep, t: Term) -> bool:
    """Oracle: every vector agreeing with the term is a model (direct scan)."""
    fixed, value = t.masks(rep.n)
    free = [b for b in range(rep.n) if not (fixed >> b) & 1]
    pos, neg = rep._pos_masks, rep._neg_masks
    for combo in range(1 << len(free)):
        x = value
        for j, b in enumerate(free):
            if (combo >> j) & 1:
                x |= 1 << b
        if _classify(pos, neg, x, rep.n) == 0:
            return False
    return True


def clause_scan_ce(rep: BnnRep, c: Clause) -> bool:
    """Oracle: every model satisfies the clause (direct scan)."""
    fixed, value = c.masks(rep.n)
    pos, neg = rep._pos_masks, rep._neg_masks
    for m in range(1 << rep.n):
        if _classify(pos, neg, m, rep.n) == 1 and ((m ^ value) & fixed) == fixed:
            return False
    return True


def brute_models(rep: BnnRep) -> list[BoolVec]:
    """Oracle: the sorted model list by direct evaluation of every vector."""
    pos, neg = rep._pos_masks, rep._neg_masks
    return [BoolVec(rep.n, m) for m in range(1 << rep.n) if _classify(pos, neg, m, rep.n) == 1]


def fixture_graphs_6() -> dict[str, families.Graph]:
    """The eight named 6-vertex graphs used by the hardness-reduction checks."""
    ring = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)]
    return {
        "cycle": families.Graph(6, frozenset(ring)),
        "path": families.Graph(6, frozenset(ring[:5])),
        "complete": families.Graph(6, frozenset((u, v) for u in range(1, 7) for v in range(u + 1, 7))),
        "empty": families.Graph(6),
        "star": families.Graph(6, frozenset((1, v) for v in range(2, 7))),
        "matching": families.Graph(6, frozenset([(1, 2), (3, 4), (5, 6)])),
        "two-triangles": families.Graph(6, frozenset([(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)])),
        "wheel-minus-hub": families.Graph(6, frozenset([(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])),
    }


def _cnf3_satisfiable(phi: families.Cnf3) -> bool:
    for assignment in range(1 << phi.num_vars):
        ok = True
        for clause in phi.clauses:
            if not any(
                ((assignment >> (abs(l) - 1)) & 1) == (1 if l > 0 else 0) for l in clause
            ):
                ok = False
                break
        if ok:
            return True
    return False


def _all_small_cnfs(num_vars: int = 3, max_clauses: int = 2):
    clauses = []
    for size in (1, 2, 3):
        for variables in combinations(range(1, num_vars + 1), size):
            for signs in product((1, -1), repeat=size):
                clauses.append(tuple(s * v for v, s in zip(variables, signs)))
    for c in clauses:
        yield families.Cnf3(num_vars, (c,))
    if max_clauses >= 2:
        for i, a in enumerate(clauses):
            for b in clauses[i:]:
                yield families.Cnf3(num_vars, (a, b))


# ---------------------------------------------------------------------------
# criteria


def _criterion_1() -> tuple[bool, str]:
    start = time.perf_counter()
    bad = []
    for n in (1, 2, 3):
        size = analysis.min_bnn(_parity_table(n)).size
        if size != 2**n:
            bad.append(f"min size {size} != {2**n} at n={n}")
    for n in range(1, 9):
        lb = analysis.bnn_lower_bound(_parity_table(n))
        if lb != 2**n:
            bad.append(f"lower bound {lb} != {2**n} at n={n}")
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        bad.append(f"runtime {elapsed:.1f}s exceeds 60s")
    detail = "; ".join(bad) if bad else f"parity minimum 2^n at n<=3, lower bound 2^n at n<=8 ({elapsed:.1f}s)"
    return not bad, detail


def _criterion_2() -> tuple[bool, str]:
    bad = []
    size = analysis.min_bnn(_majority_table(3)).size
    if size != 2:
        bad.append(f"majority-3 minimum {size} != 2")
    for n in range(1, 11):
        rep = families.gen_majority(n)
        expected_size = 2 if n % 2 else n // 2 + 2
        if rep.size != expected_size:
            bad.append(f"size {rep.size} != {expected_size} at n={n}")
        if to_truth_table(rep) != _majority_table(n):
            bad.append(f"table mismatch at n={n}")
    detail = "; ".join(bad) if bad else "majority-3 minimum is 2; generator exact for n<=10 at stated sizes"
    return not bad, detail


def _check_im_pairs(pairs) -> list[str]:
    bad = []
    for rep, t in pairs:
        stats = QueryStats()
        got = im(rep, t, stats)
        want = subcube_scan_im(rep, t)
        if got != want:
            bad.append(f"im {got} != oracle {want} on n={rep.n} term {t.sorted_literals}")
        bound = rep.n * len(rep.pos) * len(rep.neg)
        if stats.distance_evals > bound:
            bad.append(f"{stats.distance_evals} distance evals > n|P||N| = {bound}")
    return bad


def _criterion_3() -> tuple[bool, str]:
    rng = Random(20250803)
    pairs = []
    for _ in range(250):
        rep = random_valid_rep(rng, 10)
        pairs.extend((rep, random_term(rng, rep.n)) for _ in range(4))
    bad = _check_im_pairs(pairs)
    small = [random_valid_rep(rng, 4) for _ in range(12)]
    exhaustive = 0
    for rep in small:
        terms = list(_all_terms(rep.n))
        exhaustive += len(terms)
        bad.extend(_check_im_pairs((rep, t) for t in terms))
    detail = (
        "; ".join(bad[:4])
        if bad
        else f"1000 randomized pairs plus {exhaustive} exhaustive terms agree within the work bound"
    )
    return not bad, detail


def _criterion_4() -> tuple[bool, str]:
    rng = Random(20250804)
    bad = []
    checked = 0
    for _ in range(250):
        rep = random_valid_rep(rng, 10)
        for _ in range(4):
            c = random_clause(rng, rep.n)
            got = ce(rep, c)
            want = clause_scan_ce(rep, c)
            swapped = BnnRep(rep.n, rep.neg, rep.pos)
            identity = im(swapped, Term(frozenset(-l for l in c.literals)))
            if got != want:
                bad.append(f"ce {got} != oracle {want} on n={rep.n}")
            if got != identity:
                bad.append("ce differs from the implicant check on the swapped pair")
            checked += 1
    small = [random_valid_rep(rng, 4) for _ in range(12)]
    for rep in small:
        for signs in product((0, 1, -1), repeat=rep.n):
            c = Clause(frozenset(s * v for v, s in zip(range(1, rep.n + 1), signs) if s))
            if ce(rep, c) != clause_scan_ce(rep, c):
                bad.append(f"exhaustive ce mismatch on n={rep.n}")
            checked += 1
    detail = "; ".join(bad[:4]) if bad else f"{checked} clause entailments agree with the model scan"
    return not bad, detail


def _criterion_5() -> tuple[bool, str]:
    rng = Random(20250805)
    bad = []
    for _ in range(500):
        rep = random_valid_rep(rng, 10)
        stats = QueryStats()
        got = me(rep, stats=stats)
        want = brute_models(rep)
        if got != want:
            bad.append(f"model list mismatch on n={rep.n} size={rep.size}")
        bound = 4 * (rep.n + 1) * (len(got) + 1)
        if stats.im_calls > bound:
            bad.append(f"{stats.im_calls} implicant calls > 4(n+1)(m+1) = {bound}")
    detail = "; ".join(bad[:4]) if bad else "500 enumerations match the brute-force lists within the call bound"
    return not bad, detail


def _criterion_6() -> tuple[bool, str]:
    rng = Random(20250806)
    bad = []
    for _ in range(500):
        n = rng.randint(1, 8)
        table = random_table(rng, n)
        rep = compilers.mods_to_bnn(table)
        if to_truth_table(rep) != table:
            bad.append(f"round trip failed at n={n}")
        bound = len(table.models) * (n + 1)
        if rep.size > bound:
            bad.append(f"{rep.size} prototypes > |M|(n+1) = {bound}")
        if validate_semantic(rep) is not None:
            bad.append(f"tie in compiled pair at n={n}")
    detail = "; ".join(bad[:4]) if bad else "500 model sets round-trip, within m+nm prototypes, all tie-free"
    return not bad, detail


def _criterion_7() -> tuple[bool, str]:
    rng = Random(20250807)
    bad = []
    for _ in range(200):
        rep = random_valid_rep(rng, 8, max_size=8)
        diagram = compilers.bnn_to_bdd(rep)
        k, n = rep.size, rep.n
        bound = k * (k - 1) // 2 * ((n + 1) ** 2 - 1)
        if compilers.bdd_node_count(diagram) > bound:
            bad.append(f"{compilers.bdd_node_count(diagram)} nodes > bound {bound} (n={n}, k={k})")
        pos, neg = rep._pos_masks, rep._neg_masks
        for m in range(1 << n):
            x = BoolVec(n, m)
            if compilers.bdd_eval(diagram, x) != _classify(pos, neg, m, n):
                bad.append(f"diagram disagrees at {x} (n={n}, k={k})")
                break
    detail = "; ".join(bad[:4]) if bad else "200 compiled diagrams agree on every input within the size bound"
    return not bad, detail


def _criterion_8() -> tuple[bool, str]:
    bad = []
    sanity = ct_enumerate(families.gen_majority(4))
    if sanity != 11:
        bad.append(f"majority-4 count {sanity} != 11")
    for k in (3, 4):
        pair = families.gen_hsis_pair(families.Graph(2 * k))
        count = ct_enumerate(pair.f)
        formula = 2 ** (2 * k - 1) + comb(2 * k, k) // 2
        frozen = {3: 42, 4: 163}[k]
        if count != formula or count != frozen:
            bad.append(f"count {count} != formula {formula} / frozen {frozen} at 2k={2 * k}")
    detail = "; ".join(bad) if bad else "majority counts 11 / 42 / 163 match the half-plus-middle formula"
    return not bad, detail


def _criterion_9() -> tuple[bool, str]:
    start = time.perf_counter()
    bad = []
    for name, g in fixture_graphs_6().items():
        pair = families.gen_hsis_pair(g)
        count = families.count_half_is(g)
        witness = eq(pair.f, pair.h)
        if (witness is None) != (count == 0):
            bad.append(f"{name}: equivalence says {witness is None}, count says {count}")
        if witness is not None and witness.mask.bit_count() != 3:
            bad.append(f"{name}: counterexample {witness} not of weight 3")
        diff = ct_enumerate(pair.f) - ct_enumerate(pair.h)
        if diff != count:
            bad.append(f"{name}: count difference {diff} != {count} independent sets")
    elapsed = time.perf_counter() - start
    if elapsed >= 30:
        bad.append(f"runtime {elapsed:.1f}s exceeds 30s")
    detail = "; ".join(bad) if bad else f"8 fixture graphs: equivalence and count difference track half-size independent sets ({elapsed:.1f}s)"
    return not bad, detail


def _criterion_10() -> tuple[bool, str]:
    bad = []
    cases = 0
    for n in range(2, 9):
        for t in range(1, n + 1):
            rep = compilers.mods_to_bnn(families.gen_threshold(n, t))
            for i in range(1, n + 1):
                conditioned = transforms.condition(rep, Term(frozenset({i}))).rep
                forgotten = transforms.forget(rep, (i,)).rep
                if eq(conditioned, forgotten) is not None:
                    bad.append(f"mismatch at threshold ({n},{t}), variable {i}")
                cases += 1
    detail = "; ".join(bad[:4]) if bad else f"{cases} threshold cases: conditioning equals forgetting"
    return not bad, detail


def _criterion_11() -> tuple[bool, str]:
    bad = []
    for n in range(1, 5):
        half = analysis.components(families.gen_exact_half(n))
        if len(half.isolated_positive) != comb(2 * n, n):
            bad.append(f"exact-half isolated {len(half.isolated_positive)} != C({2*n},{n})")
        xor = analysis.components(families.gen_xor_match(n))
        if len(xor.isolated_positive) != 2**n:
            bad.append(f"xor-match isolated {len(xor.isolated_positive)} != 2^{n}")
    detail = "; ".join(bad) if bad else "exact-half and xor-match report C(2n,n) and 2^n isolated models for n<=4"
    return not bad, detail


def _criterion_12() -> tuple[bool, str]:
    rng = Random(20250812)
    bad = []
    for _ in range(500):
        rep = random_valid_rep(rng, 10)
        flipped = negate(rep)
        if negate(flipped) != rep:
            bad.append(f"double negation changed the pair at n={rep.n}")
        pos, neg = rep._pos_masks, rep._neg_masks
        fpos, fneg = flipped._pos_masks, flipped._neg_masks
        for m in range(1 << rep.n):
            if _classify(fpos, fneg, m, rep.n) != 1 - _classify(pos, neg, m, rep.n):
                bad.append(f"complement mismatch at {BoolVec(rep.n, m)}")
                break
    detail = "; ".join(bad[:4]) if bad else "500 pairs: negation complements pointwise and is an involution"
    return not bad, detail


def _criterion_13() -> tuple[bool, str]:
    bad = []
    formulas = 0
    for phi in _all_small_cnfs():
        formulas += 1
        g = families.gen_hsis_from_3sat(phi)
        if g.vertices != 4 * len(phi.clauses):
            bad.append(f"graph has {g.vertices} vertices, expected {4 * len(phi.clauses)}")
        sat = _cnf3_satisfiable(phi)
        has_half = families.count_half_is(g) > 0
        if sat != has_half:
            bad.append(f"satisfiable={sat} but half-size set exists={has_half} for {phi.clauses}")
    detail = "; ".join(bad[:4]) if bad else f"{formulas} formulas: satisfiability tracks half-size independent sets"
    return not bad, detail


CRITERIA: tuple[tuple[int, str, Callable[[], tuple[bool, str]]], ...] = (
    (1, "parity needs 2^n prototypes", _criterion_1),
    (2, "majority needs 2 (odd) or n/2+2 (even)", _criterion_2),
    (3, "implicant check matches the sub-cube scan", _criterion_3),
    (4, "clausal entailment via the swapped pair", _criterion_4),
    (5, "model enumeration is output-polynomial", _criterion_5),
    (6, "model sets compile to m+nm prototypes", _criterion_6),
    (7, "pairs compile to quadratic decision diagrams", _criterion_7),
    (8, "majority model count is half plus half the middle", _criterion_8),
    (9, "equivalence tracks half-size independent sets", _criterion_9),
    (10, "conditioning a threshold equals forgetting", _criterion_10),
    (11, "exact-half and xor-match models are isolated", _criterion_11),
    (12, "negation swaps the prototype sets", _criterion_12),
    (13, "3-SAT reduces to half-size independent set", _criterion_13),
)


def run_criterion(number: int) -> CriterionResult:
    for num, title, fn in CRITERIA:
        if num == number:
            start = time.perf_counter()
            passed, detail = fn()
            return CriterionResult(num, title, passed, detail, time.perf_counter() - start)
    raise ValueError(f"no criterion {number}")


def run_all() -> list[CriterionResult]:
    return [run_criterion(num) for num, _, _ in CRITERIA]
