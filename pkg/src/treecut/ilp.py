"""Exact minimisation of small integer programs over a bounded box.

Depth-first branch and bound.  At every level the admissible interval of the
next variable is derived from each constraint using the extreme values the
still-unassigned variables can contribute, and the objective is bounded by the
best completion obtainable from the variable bounds alone.  All arithmetic is
on Python integers, so there is no rounding and no overflow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

RELATIONS = ("<=", "=", ">=")


@dataclass(frozen=True)
class IlpInstance:
    variables: tuple  # (name, lower, upper)
    constraints: tuple = ()  # (row, relation, rhs)
    objective: tuple = ()
    big_penalty: Optional[int] = None

    def __post_init__(self):
        p = len(self.variables)
        variables = tuple((name, lb, ub) for name, lb, ub in self.variables)
        for name, lb, ub in variables:
            if not (_is_int(lb) and _is_int(ub)):
                raise ValueError(f"variable {name!r} needs integer bounds")
        objective = tuple(self.objective) if self.objective else (0,) * p
        if len(objective) != p or not all(_is_int(c) for c in objective):
            raise ValueError("objective must have one integer coefficient per variable")
        rows = []
        for row, rel, rhs in self.constraints:
            row = tuple(row)
            if len(row) != p:
                raise ValueError(f"constraint row has {len(row)} entries, expected {p}")
            if rel not in RELATIONS:
                raise ValueError(f"unknown relation {rel!r}")
            if not (all(_is_int(a) for a in row) and _is_int(rhs)):
                raise ValueError("constraint coefficients must be integers")
            rows.append((row, rel, rhs))
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "objective", objective)
        object.__setattr__(self, "constraints", tuple(rows))

    @property
    def num_vars(self) -> int:
        return len(self.variables)

    def feasible(self, x: Sequence[int]) -> bool:
        for (_, lb, ub), v in zip(self.variables, x):
            if not lb <= v <= ub:
                return False
        for row, rel, rhs in self.constraints:
            s = sum(a * v for a, v in zip(row, x))
            if (rel == "<=" and s > rhs) or (rel == ">=" and s < rhs) or (rel == "=" and s != rhs):
                return False
        return True

    def value(self, x: Sequence[int]) -> int:
        return sum(c * v for c, v in zip(self.objective, x))


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def solve_min(inst: IlpInstance):
    """Return (assignment, value) of a minimum-objective feasible point, or None."""
    p = inst.num_vars
    lbs = [lb for _, lb, _ in inst.variables]
    ubs = [ub for _, _, ub in inst.variables]
    if any(lb > ub for lb, ub in zip(lbs, ubs)):
        return None
    if p == 0:
        for row, rel, rhs in inst.constraints:
            if (rel == "<=" and 0 > rhs) or (rel == ">=" and 0 < rhs) or (rel == "=" and rhs != 0):
                return None
        return (), 0

    cons = inst.constraints
    # suffix extremes: rest_min[k][i] = min contribution of variables i.. to constraint k
    rest_min, rest_max = [], []
    for row, _, _ in cons:
        mn, mx = [0] * (p + 1), [0] * (p + 1)
        for i in range(p - 1, -1, -1):
            a = row[i]
            lo, hi = a * lbs[i], a * ubs[i]
            mn[i] = mn[i + 1] + min(lo, hi)
            mx[i] = mx[i + 1] + max(lo, hi)
        rest_min.append(mn)
        rest_max.append(mx)
    c = inst.objective
    obj_rest = [0] * (p + 1)
    for i in range(p - 1, -1, -1):
        obj_rest[i] = obj_rest[i + 1] + min(c[i] * lbs[i], c[i] * ubs[i])

    best_val = None
    best_x = None
    x = [0] * p
    partial = [0] * len(cons)

    def interval(i):
        lo, hi = lbs[i], ubs[i]
        for k, (row, rel, rhs) in enumerate(cons):
            a = row[i]
            s = partial[k]
            if a == 0:
                # still need feasibility of the remainder
                if rel in ("<=", "=") and s + rest_min[k][i + 1] > rhs:
                    return 1, 0
                if rel in (">=", "=") and s + rest_max[k][i + 1] < rhs:
                    return 1, 0
                continue
            if rel in ("<=", "="):
                bound = rhs - s - rest_min[k][i + 1]  # a*x <= bound
                if a > 0:
                    hi = min(hi, bound // a)
                else:
                    lo = max(lo, _ceil_div(bound, a))
            if rel in (">=", "="):
                bound = rhs - s - rest_max[k][i + 1]  # a*x >= bound
                if a > 0:
                    lo = max(lo, _ceil_div(bound, a))
                else:
                    hi = min(hi, bound // a)
            if lo > hi:
                return lo, hi
        return lo, hi

    def dfs(i, obj):
        nonlocal best_val, best_x
        if i == p:
            if best_val is None or obj < best_val:
                best_val, best_x = obj, tuple(x)
            return
        lo, hi = interval(i)
        if lo > hi:
            return
        ci = c[i]
        values = range(lo, hi + 1) if ci >= 0 else range(hi, lo - 1, -1)
        for v in values:
            val = obj + ci * v
            if best_val is not None and val + obj_rest[i + 1] >= best_val:
                break  # later values are no better
            x[i] = v
            for k, (row, _, _) in enumerate(cons):
                partial[k] += row[i] * v
            dfs(i + 1, val)
            for k, (row, _, _) in enumerate(cons):
                partial[k] -= row[i] * v

    dfs(0, 0)
    if best_x is None:
        return None
    return best_x, best_val
