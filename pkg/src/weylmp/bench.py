"""Timing comparison of the two normalization strategies.

Runs the brute-force word-sum workload once per (m, n) cell with the
production rook-number path and once with the single-step rewriting
baseline, and reports best-of-reps wall-clock times.  Timings are the only
nondeterministic output in the package.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .identities import DEFAULT_WORD_CAP, tmn_bruteforce
from .scalars import binomial


@dataclass(frozen=True)
class BenchRow:
    m: int
    n: int
    words: int
    closed_ms: float
    rewrite_ms: float
    speedup: float

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "words": self.words,
            "closed_ms": self.closed_ms,
            "rewrite_ms": self.rewrite_ms,
            "speedup": self.speedup,
        }


def _best_of(reps: int, thunk) -> float:
    best = None
    for _ in range(reps):
        start = time.perf_counter()
        thunk()
        elapsed = (time.perf_counter() - start) * 1000.0
        if best is None or elapsed < best:
            best = elapsed
    return best


def run_bench(
    max_total: int, reps: int, cap: int = DEFAULT_WORD_CAP
) -> list[BenchRow]:
    """Benchmark every cell with m + n <= max_total; results cross-checked.

    Both strategies must produce the same canonical form for the row to be
    emitted; a mismatch raises, since it would mean the production path and
    the oracle disagree.
    """
    if max_total < 0:
        raise ValueError("max_total must be non-negative")
    if reps < 1:
        raise ValueError("reps must be positive")
    rows: list[BenchRow] = []
    for total in range(max_total + 1):
        for m in range(total + 1):
            n = total - m
            closed = tmn_bruteforce(m, n, cap, strategy="closed")
            rewritten = tmn_bruteforce(m, n, cap, strategy="rewrite")
            if closed != rewritten:
                raise AssertionError(
                    f"strategies disagree at m={m}, n={n}: {closed} vs {rewritten}"
                )
            closed_ms = _best_of(reps, lambda: tmn_bruteforce(m, n, cap, strategy="closed"))
            rewrite_ms = _best_of(reps, lambda: tmn_bruteforce(m, n, cap, strategy="rewrite"))
            speedup = rewrite_ms / closed_ms if closed_ms > 0 else float("inf")
            rows.append(
                BenchRow(m, n, binomial(m + n, m), closed_ms, rewrite_ms, round(speedup, 2))
            )
    return rows
