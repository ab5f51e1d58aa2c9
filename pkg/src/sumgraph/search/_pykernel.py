"""Pure-Python search kernel.

Labels are assigned in non-decreasing order of value. Placing value ``x``
on a vertex turns every pair with an already labeled vertex into either a
required value (edge) or a forbidden value (non-edge); since later labels
are never smaller, every required value below the next label is lost for
good. Isolated vertices are placed only when their value is an edge-number;
the rest are completed at the end (they can never be needed by an edge).

The compiled kernel in ``_ckernel.pyx`` implements the same procedure and
must return identical results.
"""

from __future__ import annotations

import time
from typing import Callable, Sequence

EXHAUSTED = 0
STOPPED = 1
BUDGET = 2

CHECK_EVERY = 4096


class _Abort(Exception):
    pass


def run(
    n: int,
    adj: Sequence[int],
    loops: bool,
    cls: Sequence[int],
    prev_in_class: Sequence[int],
    priority: Sequence[int],
    nbr_classes: Sequence[int],
    max_label: int,
    require_one: bool,
    injective: bool,
    emit: Callable[[list[int]], bool],
    time_limit: float,
    node_limit: int,
) -> tuple[int, int]:
    """Enumerate labelings; returns ``(status, nodes)``.

    ``adj`` is the row-major ``n*n`` adjacency (diagonal = loops).
    ``emit(labels)`` is called for every complete labeling and returns True
    to stop. ``time_limit`` is in seconds (``<= 0`` for none) and
    ``node_limit`` counts DFS nodes (``<= 0`` for none).
    """
    B = max_label
    size = 2 * B + 2
    label = [0] * n
    need = [0] * size
    forb = [0] * size
    inM = [0] * size
    iso = [1 if not any(adj[v * n + u] for u in range(n)) else 0 for v in range(n)]
    n_noniso = n - sum(iso)
    n_iso_total = sum(iso)
    state = {"nodes": 0, "placed": 0, "noniso_placed": 0, "iso_unlabeled": sum(iso)}
    placed_order: list[int] = []
    deadline = time.monotonic() + time_limit if time_limit > 0 else 0.0

    def tick() -> None:
        state["nodes"] += 1
        k = state["nodes"]
        if node_limit > 0 and k > node_limit:
            raise _Abort
        if deadline and k % CHECK_EVERY == 0 and time.monotonic() > deadline:
            raise _Abort

    def place(w: int, x: int) -> tuple[bool, list[tuple[int, int]], int]:
        """Label ``w`` with ``x``; returns (ok, touched sums, new pending count)."""
        touched: list[tuple[int, int]] = []
        new_pend = 0
        ok = True
        row = w * n
        for u in placed_order:
            s = x + label[u]
            if adj[row + u]:
                if need[s] == 0:
                    new_pend += 1
                need[s] += 1
                touched.append((s, 1))
                if s > B or forb[s]:
                    ok = False
            else:
                forb[s] += 1
                touched.append((s, 0))
                if need[s]:
                    ok = False
        if loops:
            s = 2 * x
            if adj[row + w]:
                if need[s] == 0:
                    new_pend += 1
                need[s] += 1
                touched.append((s, 1))
                if s > B or forb[s]:
                    ok = False
            else:
                forb[s] += 1
                touched.append((s, 0))
                if need[s]:
                    ok = False
        label[w] = x
        inM[x] += 1
        placed_order.append(w)
        return ok, touched, new_pend

    def unplace(w: int, x: int, touched: list[tuple[int, int]]) -> None:
        for s, kind in touched:
            if kind:
                need[s] -= 1
            else:
                forb[s] -= 1
        inM[x] -= 1
        label[w] = 0
        placed_order.pop()

    def counts_ok(remaining: int) -> bool:
        # every unlabeled vertex needs nbr_classes[w] distinct larger labels,
        # all of which belong to other unlabeled vertices
        cs = sorted((nbr_classes[w] for w in range(n) if label[w] == 0), reverse=True)
        for i, c in enumerate(cs):
            if c > remaining - 1 - i:
                return False
        return True

    def room_ok(x: int) -> bool:
        # every unlabeled vertex gets a label >= lo, and each of its edges
        # still needs an edge-number <= B
        lo = x + 1 if injective else x
        for u in range(n):
            if label[u] or iso[u]:
                continue
            row = u * n
            top = 0
            for v in range(n):
                if adj[row + v]:
                    if label[v]:
                        if label[v] > top:
                            top = label[v]
                    elif lo > top:
                        top = lo
            if lo + top > B:
                return False
        return True

    def fit_ok(w: int, x: int, remaining: int, npend: int) -> bool:
        # the remaining vertices carry every pending value; an unlabeled u with
        # label y also needs y and y + (its labeled neighbours' labels), so
        # when few free slots are left y must line up with pending values
        slack = remaining - npend
        lo = x + 1 if injective else x
        pend: list[int] | None = None
        for u in range(n):
            if label[u] or iso[u]:
                continue
            row = u * n
            looped = loops and adj[row + u]
            nb = sorted({label[v] for v in range(n) if label[v] and adj[row + v]})
            # unlabeled neighbours of distinct classes add distinct unknown sums
            unk = len({cls[v] for v in range(n) if not label[v] and v != u and adj[row + v]})
            if x in nb and unk:
                unk -= 1
            if looped and unk:
                unk -= 1
            if 1 + len(nb) + (1 if looped else 0) + unk <= slack:
                continue
            if pend is None:
                pend = sorted({
                    label[a] + label[b]
                    for i, a in enumerate(placed_order) for b in placed_order[i:]
                    if adj[a * n + b] and label[a] + label[b] > x and not inM[label[a] + label[b]]
                })
            pset = set(pend)
            top = nb[-1] if nb else 0
            if 1 + len(nb) + (1 if looped else 0) + max(0, unk - len(pend)) <= slack:
                continue
            ok = False
            for y in sorted({p - a for p in pend for a in [0, *nb]}):
                if y < lo or y + top > B or (looped and 2 * y > B) or forb[y]:
                    continue
                if y == x and cls[u] != cls[w]:
                    continue
                if any(forb[y + a] for a in nb):
                    continue
                if any(label[z] and not adj[row + z] and need[y + label[z]] for z in range(n)):
                    continue
                if loops and not looped and need[2 * y]:
                    continue
                vals = {y, *(y + a for a in nb)}
                if looped:
                    vals.add(2 * y)
                if len(vals - pset) + max(0, unk - len(pset - vals)) <= slack:
                    ok = True
                    break
            if not ok:
                return False
        return True

    def top_ok() -> bool:
        # the largest non-isolated label L has all its edge-numbers above L,
        # so they are labels of isolated vertices; vertices of different
        # classes carry different labels, so such a vertex must remain
        if state["noniso_placed"] + 1 >= n_noniso:
            return True
        for u in range(n):
            if label[u] or iso[u]:
                continue
            seen: dict[int, set[int]] = {}
            for v in range(n):
                if adj[u * n + v]:
                    vals = seen.setdefault(cls[v], set())
                    if label[v]:
                        vals.add(label[v])
            if sum(max(1, len(vals)) for vals in seen.values()) <= n_iso_total:
                return True
        return False

    def spares(pos: int, lo: int, pool: list[int]) -> bool:
        if pos == len(pool):
            return emit(list(label))
        w = pool[pos]
        start = lo + 1 if (injective and pos > 0) else lo
        distinct = sorted({label[v] for v in range(n) if label[v]})
        for y in range(max(start, 1), B + 1):
            tick()
            if forb[y] or (injective and inM[y]):
                continue
            if loops and inM[2 * y]:
                continue
            if any(inM[y + m] for m in distinct):
                continue
            touched = []
            for m in distinct:
                forb[y + m] += 1
                touched.append((y + m, 1))
            if loops:
                forb[2 * y] += 1
                touched.append((2 * y, 1))
            label[w] = y
            inM[y] += 1
            stop = spares(pos + 1, y, pool)
            inM[y] -= 1
            label[w] = 0
            for s, c in touched:
                forb[s] -= c
            if stop:
                return True
        return False

    def dfs(cur: int, npend: int, last: int) -> bool:
        tick()
        placed = state["placed"]
        remaining = n - placed
        if remaining == 0:
            return npend == 0 and emit(list(label))
        if npend == 0 and state["noniso_placed"] == n_noniso:
            pool = [w for w in range(n) if label[w] == 0]
            return spares(0, 1, pool)
        pmin = 0
        if npend:
            pmin = cur + 1
            while not need[pmin]:
                pmin += 1
        if placed == 0:
            lo, hi = 1, (1 if require_one else B)
        else:
            lo = cur + 1 if injective else cur
            hi = min(pmin, B) if npend else B
        # x + (largest labeled neighbour) must stay <= B for whichever
        # unlabeled vertices remain, so at most one of them may break it
        top = [0] * n
        for u in range(n):
            if not label[u] and not iso[u]:
                top[u] = max((label[v] for v in range(n) if label[v] and adj[u * n + v]), default=0)
        caps = sorted(B - top[u] for u in range(n) if not label[u] and not iso[u])
        if len(caps) >= 2:
            hi = min(hi, caps[1])
        cnt_state: dict[int, bool] = {}
        dead: set[int] = set()
        for x in range(lo, hi + 1):
            if forb[x]:
                continue
            for w in priority:
                if label[w] or (prev_in_class[w] >= 0 and label[prev_in_class[w]] == 0):
                    continue
                if x + top[w] > B or w in dead:
                    continue
                if x == cur and placed and cls[w] != cls[last]:
                    continue
                if iso[w] and not (need[x] or (placed == 0 and require_one)):
                    continue
                # the count check depends only on which vertex is placed
                if w not in cnt_state:
                    label[w] = -1
                    cnt_state[w] = counts_ok(remaining - 1)
                    label[w] = 0
                if not cnt_state[w]:
                    continue
                ok, touched, new_pend = place(w, x)
                if ok:
                    np2 = npend - (1 if (x > cur and need[x]) else 0) + new_pend
                    rem2 = remaining - 1
                    if np2 > rem2:
                        ok = False
                    elif rem2 > 0 and state["iso_unlabeled"] - iso[w] == 0:
                        ok = False
                    elif not iso[w] and not top_ok():
                        ok = False
                    else:
                        # the room check only gets harder as x grows
                        if not room_ok(x):
                            dead.add(w)
                            ok = False
                        elif not fit_ok(w, x, rem2, np2):
                            ok = False
                    if ok:
                        state["placed"] += 1
                        state["noniso_placed"] += 1 - iso[w]
                        state["iso_unlabeled"] -= iso[w]
                        stop = dfs(x, np2, w)
                        state["placed"] -= 1
                        state["noniso_placed"] -= 1 - iso[w]
                        state["iso_unlabeled"] += iso[w]
                        if stop:
                            unplace(w, x, touched)
                            return True
                unplace(w, x, touched)
        return False

    try:
        stopped = dfs(0, 0, -1)
    except _Abort:
        return BUDGET, state["nodes"]
    return (STOPPED if stopped else EXHAUSTED), state["nodes"]
