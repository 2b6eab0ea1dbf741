"""Exact counting functions for the diagonal and tower sequences.

count_diag(x) certifies its answer by locating the first diagonal element
strictly above x, so one element PAST x is always computed; that bracketing
element is the dominant cost.  The same holds for count_tower.  Neither
function ever estimates.
"""

import csv
from dataclasses import dataclass

from mpmath import mp

from .errors import BudgetExceededError, DomainError, InvalidRangeError
from .hpreal import DEFAULT_PREC, format_hp
from .iterated import DEFAULT_BUDGET, _level_value, _value_certainly_above


@dataclass
class CountRecord:
    """One ratio-table row: counts at x plus the asymptotic comparator."""

    x: int
    diag_count: int
    tower_counts: dict
    comparator: object  # mpf, or None when x < 16


def _tower_final_exceeds(n, depth, x, cache):
    """True iff p_n^(depth) > x, aborting as soon as any level exceeds x."""
    idx = n
    for level in range(1, depth + 1):
        cached = cache.get(n, level) if cache is not None else None
        if cached is None and _value_certainly_above(idx, x):
            return True  # monotone in level, so the final value exceeds too
        value = cached if cached is not None else _level_value(n, level, idx, cache)
        if value > x:
            return True
        idx = value
    return False


def count_diag(x, budget=DEFAULT_BUDGET, cache=None):
    """Number of k with p_k^(k) <= x."""
    x = int(x)
    if x < 1:
        raise InvalidRangeError("count_diag requires x >= 1")
    if x > budget:
        raise BudgetExceededError(
            f"x={x} above budget {budget}: bracketing element not computable"
        )
    k = 0
    while True:
        k += 1
        if _tower_final_exceeds(k, k, x, cache):
            return k - 1


def count_tower(n, x, budget=DEFAULT_BUDGET, cache=None):
    """Number of k with p_n^(k) <= x."""
    n, x = int(n), int(x)
    if n < 1 or x < 1:
        raise InvalidRangeError("count_tower requires n >= 1 and x >= 1")
    if x > budget:
        raise BudgetExceededError(
            f"x={x} above budget {budget}: bracketing element not computable"
        )
    idx = n
    count = 0
    level = 0
    while True:
        level += 1
        cached = cache.get(n, level) if cache is not None else None
        if cached is None and _value_certainly_above(idx, x):
            return count
        value = cached if cached is not None else _level_value(n, level, idx, cache)
        if value > x:
            return count
        count += 1
        idx = value


def comparator(x, prec=DEFAULT_PREC):
    """log x / log log x, the common asymptotic target of both counts."""
    x = int(x)
    if x < 16:
        raise DomainError("comparator requires x >= 16 (safely above e^e)")
    with mp.workdps(prec):
        lx = mp.log(x)
        return +(lx / mp.log(lx))


def ratio_series(xs, ns, budget=DEFAULT_BUDGET, prec=DEFAULT_PREC, cache=None):
    """One CountRecord per x; tabulates only, never asserts convergence."""
    xs = [int(x) for x in xs]
    ns = [int(n) for n in ns]
    if any(a > b for a, b in zip(xs, xs[1:])):
        raise InvalidRangeError("xs must be sorted ascending")
    records = []
    for x in xs:
        records.append(
            CountRecord(
                x=x,
                diag_count=count_diag(x, budget=budget, cache=cache),
                tower_counts={
                    n: count_tower(n, x, budget=budget, cache=cache) for n in ns
                },
                comparator=comparator(x, prec=prec) if x >= 16 else None,
            )
        )
    return records


def write_count_csv(records, fh, digits=15):
    """CSV form: one row per (x, n) pair; header always present."""
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["x", "diag_count", "tower_n", "tower_count", "comparator"])
    for rec in records:
        comp = format_hp(rec.comparator, digits) if rec.comparator is not None else ""
        if rec.tower_counts:
            for n in sorted(rec.tower_counts):
                writer.writerow([rec.x, rec.diag_count, n, rec.tower_counts[n], comp])
        else:
            writer.writerow([rec.x, rec.diag_count, "", "", comp])
