"""Randomized self-checks run by ``matchsign verify``.

Each suite draws instances from one seeded ``random.Random`` and returns
pass/fail counts. ``fault=True`` swaps in a deliberately broken component
so the harness itself can be shown to detect errors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Dict, List

from .embedding import stembridge_profile
from .engine import (
    determinant,
    matching_sign,
    pfaffian_expand,
    pfaffian_of_graph,
    signed_sum,
    skew_from_graph,
)
from .errors import MatchsignError
from .graph import symbolic_weights
from .moves import Ledger, SignModification, apply_move, apply_script, ledger_to_modification
from .randomized import (
    random_int_weights,
    random_matchable_graph,
    random_order,
    random_profile,
    random_script,
    random_simple_graph,
    random_skew_matrix,
    random_valid_move,
)
from .solver import build_system, equalize

RNG_NAME = "random.Random (MT19937)"


@dataclass
class SuiteResult:
    name: str
    passed: int
    failed: int

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0


def inversion_sign(seq) -> int:
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return -1 if inv % 2 else 1


def stembridge_sign_by_inversions(g, matching, order) -> int:
    """Permutation sign of the position sequence (u1, v1, u2, v2, ...)."""
    pos = {v: k for k, v in enumerate(order, start=1)}
    arcs = sorted(tuple(sorted((pos[g.edge(e).u], pos[g.edge(e).v]))) for e in matching)
    return inversion_sign([x for arc in arcs for x in arc])


def _suite_move_invariance(rng: random.Random, trials: int, fault: bool) -> SuiteResult:
    ok = bad = 0
    for _ in range(trials):
        g = random_simple_graph(rng, rng.choice([2, 4, 6]), density=0.6)
        if not g.edges:
            g = random_matchable_graph(rng, 4)[0]
        w = symbolic_weights(g)
        p = random_profile(rng, g)
        led = Ledger.of({e: rng.randint(0, 1) for e in g.edge_ids})
        mv = random_valid_move(rng, g, p)
        p2, led2 = apply_move(g, p, led, mv)
        if fault:
            led2 = led
        before = signed_sum(g, ledger_to_modification(led).apply(w), p)
        after = signed_sum(g, ledger_to_modification(led2).apply(w), p2)
        if before == after:
            ok += 1
        else:
            bad += 1
    return SuiteResult("move-invariance", ok, bad)


def _suite_pf_squared_det(rng: random.Random, trials: int, fault: bool) -> SuiteResult:
    ok = bad = 0
    for _ in range(trials):
        a = random_skew_matrix(rng, rng.randint(2, 10))
        pf = pfaffian_expand(a)
        if fault:
            pf = pf + 1
        if pf * pf == determinant(a):
            ok += 1
        else:
            bad += 1
    return SuiteResult("pf-squared-det", ok, bad)


def _suite_parity_oracle(rng: random.Random, trials: int, fault: bool) -> SuiteResult:
    ok = bad = 0
    for _ in range(trials):
        n = rng.choice([2, 4, 6, 8])
        g, m = random_matchable_graph(rng, n)
        order = random_order(rng, n)
        s = matching_sign(m, stembridge_profile(g, order))
        if fault:
            s = -s
        if s == stembridge_sign_by_inversions(g, m, order):
            ok += 1
        else:
            bad += 1
    return SuiteResult("parity-oracle", ok, bad)


def _suite_pfaffian_oracle(rng: random.Random, trials: int, fault: bool) -> SuiteResult:
    ok = bad = 0
    for _ in range(trials):
        n = rng.choice([2, 4, 6, 8])
        g = random_simple_graph(rng, n, density=rng.uniform(0.3, 0.9))
        w = random_int_weights(rng, g)
        order = random_order(rng, n)
        lhs = pfaffian_of_graph(g, w, order)
        if fault:
            lhs = -lhs if lhs else lhs + 1
        if lhs == pfaffian_expand(skew_from_graph(g, w, order)):
            ok += 1
        else:
            bad += 1
    return SuiteResult("pfaffian-oracle", ok, bad)


def _suite_solver_soundness(rng: random.Random, trials: int, fault: bool) -> SuiteResult:
    ok = bad = 0
    for _ in range(trials):
        n = rng.choice([4, 6])
        g, _ = random_matchable_graph(rng, n, density=0.5)
        w = symbolic_weights(g)
        pa = stembridge_profile(g, random_order(rng, n))
        pb, led = apply_script(g, pa, random_script(rng, g, pa, rng.randint(1, 8)))
        try:
            mod = equalize(g, w, pa, pb)
        except MatchsignError:
            bad += 1
            continue
        if fault:
            mod = mod.compose(SignModification(frozenset([g.edge_ids[0]])))
        sys = build_system(g, pa, pb)
        sound = signed_sum(g, w, pa) == signed_sum(g, mod.apply(w), pb)
        if sound and sys.satisfied_by(ledger_to_modification(led)):
            ok += 1
        else:
            bad += 1
    return SuiteResult("solver-soundness", ok, bad)


SUITES: Dict[str, Callable[[random.Random, int, bool], SuiteResult]] = {
    "move-invariance": _suite_move_invariance,
    "pf-squared-det": _suite_pf_squared_det,
    "parity-oracle": _suite_parity_oracle,
    "pfaffian-oracle": _suite_pfaffian_oracle,
    "solver-soundness": _suite_solver_soundness,
}


def run_all(seed: int, trials: int, fault: bool = False) -> List[SuiteResult]:
    rng = random.Random(seed)
    return [suite(rng, trials, fault) for suite in SUITES.values()]


def format_report(seed: int, trials: int, results: List[SuiteResult]) -> str:
    lines = [f"seed = {seed}", f"rng = {RNG_NAME}", f"trials = {trials}"]
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        lines.append(f"{status} {r.name}: {r.passed} passed, {r.failed} failed")
    overall = "PASS" if all(r.ok for r in results) else "FAIL"
    lines.append(f"overall = {overall}")
    return "\n".join(lines) + "\n"
