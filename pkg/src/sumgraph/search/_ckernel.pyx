# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled search kernel; same procedure and results as ``_pykernel``."""

from libc.stdlib cimport malloc, calloc, free
import time

cdef long long CHECK_EVERY = 4096

cdef int EXHAUSTED = 0
cdef int STOPPED = 1
cdef int BUDGET = 2


class _Abort(Exception):
    pass


cdef class _Kernel:
    cdef int n, B, loops, require_one, injective
    cdef int n_noniso, placed, noniso_placed, iso_unlabeled, n_iso_total
    cdef long long nodes, node_limit
    cdef double deadline
    cdef unsigned char* adj
    cdef int* cls
    cdef int* prev_in_class
    cdef int* priority
    cdef int* nbr_classes
    cdef int* iso
    cdef int* label
    cdef int* need
    cdef int* forb
    cdef int* inM
    cdef int* order
    cdef int* touched_s
    cdef int* touched_k
    cdef int* cbuf
    # per-depth snapshot of each unlabeled vertex's neighbourhood
    cdef int* ntop
    cdef int* nunl
    cdef int* nnbc
    cdef int* nbl
    cdef int* nzl
    cdef int* nnz
    cdef int* slots
    cdef int* unk0
    cdef int* ccnt
    cdef int* deg
    cdef int* nbr_sorted
    cdef int fit_first
    cdef object emit

    def __cinit__(self, int n, int B):
        cdef int size = 2 * B + 2
        self.adj = <unsigned char*> calloc(max(n * n, 1), sizeof(unsigned char))
        self.cls = <int*> calloc(max(n, 1), sizeof(int))
        self.prev_in_class = <int*> calloc(max(n, 1), sizeof(int))
        self.priority = <int*> calloc(max(n, 1), sizeof(int))
        self.nbr_classes = <int*> calloc(max(n, 1), sizeof(int))
        self.iso = <int*> calloc(max(n, 1), sizeof(int))
        self.label = <int*> calloc(max(n, 1), sizeof(int))
        self.order = <int*> calloc(max(n, 1), sizeof(int))
        self.cbuf = <int*> calloc(max(n, 1), sizeof(int))
        self.need = <int*> calloc(size, sizeof(int))
        self.forb = <int*> calloc(size, sizeof(int))
        self.inM = <int*> calloc(size, sizeof(int))
        self.touched_s = <int*> calloc(max((n + 1) * (n + 1), 1), sizeof(int))
        self.touched_k = <int*> calloc(max((n + 1) * (n + 1), 1), sizeof(int))
        self.ntop = <int*> calloc(max((n + 1) * n, 1), sizeof(int))
        self.nunl = <int*> calloc(max((n + 1) * n, 1), sizeof(int))
        self.nnbc = <int*> calloc(max((n + 1) * n, 1), sizeof(int))
        self.unk0 = <int*> calloc(max((n + 1) * n, 1), sizeof(int))
        self.nbl = <int*> calloc(max((n + 1) * n * n, 1), sizeof(int))
        self.nzl = <int*> calloc(max((n + 1) * n * n, 1), sizeof(int))
        self.nnz = <int*> calloc(max((n + 1) * n, 1), sizeof(int))
        self.slots = <int*> calloc(max(n, 1), sizeof(int))
        self.ccnt = <int*> calloc(max((n + 1) * n * n, 1), sizeof(int))
        self.deg = <int*> calloc(max(n, 1), sizeof(int))
        self.nbr_sorted = <int*> calloc(max(n * n, 1), sizeof(int))
        if self.deg == NULL or self.nbr_sorted == NULL:
            raise MemoryError()
        if (self.ntop == NULL or self.nunl == NULL or self.nnbc == NULL or self.unk0 == NULL
                or self.nbl == NULL or self.ccnt == NULL or self.nzl == NULL or self.nnz == NULL or self.slots == NULL):
            raise MemoryError()
        if (self.adj == NULL or self.cls == NULL or self.prev_in_class == NULL or self.priority == NULL
                or self.nbr_classes == NULL or self.iso == NULL or self.label == NULL or self.order == NULL
                or self.cbuf == NULL or self.need == NULL or self.forb == NULL or self.inM == NULL
                or self.touched_s == NULL or self.touched_k == NULL):
            raise MemoryError()

    def __dealloc__(self):
        free(self.adj); free(self.cls); free(self.prev_in_class); free(self.priority)
        free(self.nbr_classes); free(self.iso); free(self.label); free(self.order); free(self.cbuf)
        free(self.need); free(self.forb); free(self.inM); free(self.touched_s); free(self.touched_k)
        free(self.ntop); free(self.nunl); free(self.nnbc); free(self.unk0); free(self.nbl); free(self.ccnt); free(self.nzl); free(self.nnz); free(self.slots)
        free(self.deg); free(self.nbr_sorted)

    cdef int tick(self) except -1:
        self.nodes += 1
        if self.node_limit > 0 and self.nodes > self.node_limit:
            raise _Abort()
        if self.deadline > 0 and self.nodes % CHECK_EVERY == 0 and time.monotonic() > self.deadline:
            raise _Abort()
        return 0

    cdef int place(self, int w, int x, int depth, int* ntouched, int* new_pend):
        """Returns 1 if consistent. Always records what it touched."""
        cdef int ok = 1, i, u, s, t = 0, np = 0
        cdef int base = depth * (self.n + 1)
        cdef int row = w * self.n
        cdef int B = self.B
        for i in range(self.placed):
            u = self.order[i]
            s = x + self.label[u]
            if self.adj[row + u]:
                if self.need[s] == 0:
                    np += 1
                self.need[s] += 1
                self.touched_s[base + t] = s
                self.touched_k[base + t] = 1
                t += 1
                if s > B or self.forb[s]:
                    ok = 0
            else:
                self.forb[s] += 1
                self.touched_s[base + t] = s
                self.touched_k[base + t] = 0
                t += 1
                if self.need[s]:
                    ok = 0
        if self.loops:
            s = 2 * x
            if self.adj[row + w]:
                if self.need[s] == 0:
                    np += 1
                self.need[s] += 1
                self.touched_s[base + t] = s
                self.touched_k[base + t] = 1
                t += 1
                if s > B or self.forb[s]:
                    ok = 0
            else:
                self.forb[s] += 1
                self.touched_s[base + t] = s
                self.touched_k[base + t] = 0
                t += 1
                if self.need[s]:
                    ok = 0
        if self._bump(w, x):
            for i in range(self.n):
                if self.adj[row + i]:
                    self.slots[i] += 1
        self.label[w] = x
        self.inM[x] += 1
        self.order[self.placed] = w
        ntouched[0] = t
        new_pend[0] = np
        return ok

    cdef void unplace(self, int w, int x, int depth, int ntouched):
        cdef int i, base = depth * (self.n + 1)
        for i in range(ntouched):
            if self.touched_k[base + i]:
                self.need[self.touched_s[base + i]] -= 1
            else:
                self.forb[self.touched_s[base + i]] -= 1
        self.inM[x] -= 1
        self.label[w] = 0
        if self._bump(w, x):
            for i in range(self.n):
                if self.adj[w * self.n + i]:
                    self.slots[i] -= 1

    cdef int counts_ok(self, int remaining):
        cdef int m = 0, i, j, c, w
        for w in range(self.n):
            if self.label[w] == 0:
                c = self.nbr_classes[w]
                j = m
                while j > 0 and self.cbuf[j - 1] < c:
                    self.cbuf[j] = self.cbuf[j - 1]
                    j -= 1
                self.cbuf[j] = c
                m += 1
        for i in range(m):
            if self.cbuf[i] > remaining - 1 - i:
                return 0
        return 1

    cdef void snapshot(self, int depth):
        """Record top label, unlabeled count, labels and classes around each open vertex,
        and the labels of its labeled non-neighbours."""
        cdef int n = self.n, u, v, row, D, c, i, seen, t
        for u in range(n):
            D = depth * n + u
            self.ntop[D] = 0
            if self.label[u] or self.iso[u]:
                continue
            row = u * n
            self.nunl[D] = 0
            self.nnbc[D] = 0
            self.unk0[D] = 0
            self.nnz[D] = 0
            for c in range(n):
                self.ccnt[D * n + c] = 0
            for v in range(n):
                if not self.adj[row + v]:
                    t = self.label[v]
                    if t and (self.nnz[D] == 0 or self.nzl[D * n + self.nnz[D] - 1] != t):
                        self.nzl[D * n + self.nnz[D]] = t
                        self.nnz[D] += 1
                    continue
                t = self.label[v]
                if t:
                    if t > self.ntop[D]:
                        self.ntop[D] = t
                    seen = 0
                    for i in range(self.nnbc[D]):
                        if self.nbl[D * n + i] == t:
                            seen = 1
                            break
                    if not seen:
                        self.nbl[D * n + self.nnbc[D]] = t
                        self.nnbc[D] += 1
                else:
                    self.nunl[D] += 1
                    if v != u:
                        c = self.cls[v]
                        if self.ccnt[D * n + c] == 0:
                            self.unk0[D] += 1
                        self.ccnt[D * n + c] += 1

    cdef int room_ok(self, int w, int x, int depth):
        cdef int lo = x + 1 if self.injective else x
        cdef int n = self.n, u, D, top, aw
        for u in range(n):
            if self.label[u] or self.iso[u]:
                continue
            D = depth * n + u
            aw = self.adj[u * n + w]
            top = self.ntop[D]
            if aw and x > top:
                top = x
            if self.nunl[D] - aw > 0 and lo > top:
                top = lo
            if lo + top > self.B:
                return 0
        return 1

    cdef int fit_ok(self, int w, int x, int remaining, int npend, int* npl, int nnpl, int depth):
        cdef int slack = remaining - npend
        cdef int lo = x + 1 if self.injective else x
        cdef int B = self.B, n = self.n
        cdef int npset = -1, u, v, z, row, looped, nnb, top, i, j, k, y, ok, bad, fresh, c, s, unk, D, aw
        cdef int pend[130]
        cdef int nb[64]
        cdef int step
        for step in range(n):
            u = self.fit_first + step
            if u >= n:
                u -= n
            if self.label[u] or self.iso[u]:
                continue
            row = u * n
            looped = 1 if (self.loops and self.adj[row + u]) else 0
            D = depth * n + u
            aw = self.adj[row + w]
            nnb = self.nnbc[D]
            bad = 0
            for i in range(nnb):
                nb[i] = self.nbl[D * n + i]
                if nb[i] == x:
                    bad = 1
            if aw and not bad:
                nb[nnb] = x
                nnb += 1
            # unlabeled neighbours of distinct classes add distinct unknown sums
            unk = self.unk0[D]
            if aw and self.ccnt[D * n + self.cls[w]] == 1:
                unk -= 1
            if unk:
                for i in range(nnb):
                    if nb[i] == x:
                        unk -= 1
                        break
            if looped and unk:
                unk -= 1
            if 1 + nnb + looped + unk <= slack:
                continue
            if npset < 0:
                # pending after placing x on w: the node's pending values
                # other than x, plus the new edge-numbers of w
                npset = 0
                for i in range(nnpl):
                    if npl[i] != x:
                        pend[npset] = npl[i]
                        npset += 1
                for i in range(self.placed + 1):
                    v = self.order[i]
                    if not self.adj[w * n + v]:
                        continue
                    s = x + self.label[v]
                    bad = 0
                    for k in range(npset):
                        if pend[k] == s:
                            bad = 1
                            break
                    if not bad:
                        pend[npset] = s
                        npset += 1
            top = 0
            for i in range(nnb):
                if nb[i] > top:
                    top = nb[i]
            if 1 + nnb + looped + (unk - npset if unk > npset else 0) <= slack:
                continue
            ok = 0
            for i in range(npset):
                for j in range(nnb + 1):
                    y = pend[i] - (nb[j - 1] if j else 0)
                    if y < lo or y + top > B or (looped and 2 * y > B) or self.forb[y]:
                        continue
                    if y == x and self.cls[u] != self.cls[w]:
                        continue
                    bad = 0
                    for k in range(nnb):
                        if self.forb[y + nb[k]]:
                            bad = 1
                            break
                    if bad:
                        continue
                    for k in range(self.nnz[D]):
                        if self.need[y + self.nzl[D * n + k]]:
                            bad = 1
                            break
                    if bad or (not aw and self.need[y + x]):
                        continue
                    if self.loops and not looped and self.need[2 * y]:
                        continue
                    # count the values y, y + nb[k] (and 2y) that are not
                    # pending labels still to be placed; stop once over slack
                    fresh = 0 if (y > x and y <= B and self.need[y] and not self.inM[y]) else 1
                    c = 1
                    for k in range(nnb):
                        s = y + nb[k]
                        if not (s <= B and self.need[s] and not self.inM[s]):
                            fresh += 1
                            if fresh > slack:
                                break
                        c += 1
                    if fresh > slack:
                        continue
                    if looped:
                        s = 2 * y
                        bad = 0
                        for k in range(nnb):
                            if nb[k] == y:
                                bad = 1
                                break
                        if not bad:
                            if not (s <= B and self.need[s] and not self.inM[s]):
                                fresh += 1
                            c += 1
                    # pending values not taken by these can absorb unknown sums
                    if unk > npset - (c - fresh):
                        fresh += unk - (npset - (c - fresh))
                    if fresh <= slack:
                        ok = 1
                        break
                if ok:
                    break
            if not ok:
                self.fit_first = u
                return 0
        return 1

    cdef int class_slots(self, int u):
        """Distinct labels around ``u``, counting each neighbour class as max(1, its distinct labels)."""
        # neighbours come grouped by class; labels inside a class are
        # assigned in vertex order and never decrease, so counting label
        # changes counts distinct labels
        cdef int n = self.n, i, v, t, c, lb = 0, d = 0, last = 0, prev_c = -1
        for i in range(self.deg[u]):
            v = self.nbr_sorted[u * n + i]
            c = self.cls[v]
            if c != prev_c:
                if prev_c >= 0:
                    lb += d if d > 1 else 1
                d = 0
                last = 0
                prev_c = c
            t = self.label[v]
            if t and t != last:
                d += 1
                last = t
        return lb + (d if d > 1 else 1)

    cdef inline int _bump(self, int w, int x):
        # labeling w adds a slot next to each neighbour of w exactly when
        # w's previous twin already carries a different label
        cdef int p = self.prev_in_class[w]
        return 1 if (p >= 0 and self.label[p] and self.label[p] != x) else 0

    cdef int _top_cached(self, int w, int x, int depth, int* top_state):
        # the largest non-isolated label L has all its edge-numbers above L,
        # so they are labels of isolated vertices; vertices of different
        # classes carry different labels, so such a vertex must remain.
        # The answer only depends on whether placing x on w added a slot.
        cdef int n = self.n, u, k
        if self.noniso_placed + 1 >= self.n_noniso:
            return 1
        k = 2 * w + self._bump(w, x)
        if top_state[k] < 0:
            top_state[k] = 0
            for u in range(n):
                if u == w or self.label[u] or self.iso[u]:
                    continue
                if self.slots[u] <= self.n_iso_total:
                    top_state[k] = 1
                    break
        return top_state[k]

    cdef int spares(self, int pos, int lo, int* pool, int npool, int* distinct, int ndistinct) except -1:
        cdef int w, y, start, i, m, bad, stop
        cdef int B = self.B
        if pos == npool:
            return 1 if self.emit([self.label[i] for i in range(self.n)]) else 0
        w = pool[pos]
        start = lo + 1 if (self.injective and pos > 0) else lo
        if start < 1:
            start = 1
        for y in range(start, B + 1):
            self.tick()
            if self.forb[y] or (self.injective and self.inM[y]):
                continue
            if self.loops and self.inM[2 * y]:
                continue
            bad = 0
            for i in range(ndistinct):
                if self.inM[y + distinct[i]]:
                    bad = 1
                    break
            if bad:
                continue
            for i in range(ndistinct):
                self.forb[y + distinct[i]] += 1
            if self.loops:
                self.forb[2 * y] += 1
            self.label[w] = y
            self.inM[y] += 1
            m = ndistinct
            if self.inM[y] == 1:
                distinct[ndistinct] = y
                m = ndistinct + 1
            stop = self.spares(pos + 1, y, pool, npool, distinct, m)
            self.inM[y] -= 1
            self.label[w] = 0
            for i in range(ndistinct):
                self.forb[y + distinct[i]] -= 1
            if self.loops:
                self.forb[2 * y] -= 1
            if stop:
                return 1
        return 0

    cdef int dfs(self, int cur, int npend, int last, int depth) except -1:
        cdef int remaining, pmin, lo, hi, x, k, w, ok, np2, rem2, stop
        cdef int ntouched = 0, new_pend = 0, npool, nd, i, v, seen
        cdef int pool[64]
        cdef int distinct[64]
        cdef int top[64]
        cdef int npl[64]
        cdef int cnt_state[64]
        cdef int top_state[128]
        cdef int dead[64]
        cdef int cap1, cap2, u, c, j, nnpl
        self.tick()
        remaining = self.n - self.placed
        if remaining == 0:
            if npend == 0:
                return 1 if self.emit([self.label[i] for i in range(self.n)]) else 0
            return 0
        if npend == 0 and self.noniso_placed == self.n_noniso:
            npool = 0
            for w in range(self.n):
                if self.label[w] == 0:
                    pool[npool] = w
                    npool += 1
            nd = 0
            for i in range(self.placed):
                v = self.label[self.order[i]]
                seen = 0
                for k in range(nd):
                    if distinct[k] == v:
                        seen = 1
                        break
                if not seen:
                    distinct[nd] = v
                    nd += 1
            return self.spares(0, 1, pool, npool, distinct, nd)
        pmin = 0
        if npend:
            pmin = cur + 1
            while not self.need[pmin]:
                pmin += 1
        if self.placed == 0:
            lo = 1
            hi = 1 if self.require_one else self.B
        else:
            lo = cur + 1 if self.injective else cur
            hi = pmin if (npend and pmin < self.B) else self.B
        self.snapshot(depth)
        cap1 = self.B + 1
        cap2 = self.B + 1
        for u in range(self.n):
            top[u] = self.ntop[depth * self.n + u]
            if self.label[u] or self.iso[u]:
                continue
            c = self.B - top[u]
            if c < cap1:
                cap2 = cap1
                cap1 = c
            elif c < cap2:
                cap2 = c
        if cap2 < hi:
            hi = cap2
        nnpl = 0
        if npend:
            for i in range(self.placed):
                u = self.order[i]
                for j in range(i, self.placed):
                    v = self.order[j]
                    if not self.adj[u * self.n + v]:
                        continue
                    c = self.label[u] + self.label[v]
                    if c <= cur or self.inM[c]:
                        continue
                    seen = 0
                    for k in range(nnpl):
                        if npl[k] == c:
                            seen = 1
                            break
                    if not seen:
                        npl[nnpl] = c
                        nnpl += 1
        for u in range(self.n):
            cnt_state[u] = -1
            top_state[2 * u] = -1
            top_state[2 * u + 1] = -1
            dead[u] = 0
        for x in range(lo, hi + 1):
            if self.forb[x]:
                continue
            for k in range(self.n):
                w = self.priority[k]
                if self.label[w]:
                    continue
                if x + top[w] > self.B or dead[w]:
                    continue
                if self.prev_in_class[w] >= 0 and self.label[self.prev_in_class[w]] == 0:
                    continue
                if x == cur and self.placed and self.cls[w] != self.cls[last]:
                    continue
                if self.iso[w] and not (self.need[x] or (self.placed == 0 and self.require_one)):
                    continue
                # the count check depends only on which vertex is placed
                if cnt_state[w] < 0:
                    self.label[w] = -1
                    cnt_state[w] = self.counts_ok(remaining - 1)
                    self.label[w] = 0
                if not cnt_state[w]:
                    continue
                ok = self.place(w, x, depth, &ntouched, &new_pend)
                if ok:
                    np2 = npend - (1 if (x > cur and self.need[x]) else 0) + new_pend
                    rem2 = remaining - 1
                    if np2 > rem2:
                        ok = 0
                    elif rem2 > 0 and self.iso_unlabeled - self.iso[w] == 0:
                        ok = 0
                    elif not self.iso[w] and not self._top_cached(w, x, depth, top_state):
                        ok = 0
                    else:
                        # the room check only gets harder as x grows
                        if not self.room_ok(w, x, depth):
                            dead[w] = 1
                            ok = 0
                        elif not self.fit_ok(w, x, rem2, np2, npl, nnpl, depth):
                            ok = 0
                    if ok:
                        self.placed += 1
                        self.noniso_placed += 1 - self.iso[w]
                        self.iso_unlabeled -= self.iso[w]
                        try:
                            stop = self.dfs(x, np2, w, depth + 1)
                        finally:
                            self.placed -= 1
                            self.noniso_placed -= 1 - self.iso[w]
                            self.iso_unlabeled += self.iso[w]
                        if stop:
                            self.unplace(w, x, depth, ntouched)
                            return 1
                self.unplace(w, x, depth, ntouched)
        return 0


def run(int n, adj, bint loops, cls, prev_in_class, priority, nbr_classes,
        int max_label, bint require_one, bint injective, emit,
        double time_limit, long long node_limit):
    """See ``_pykernel.run``."""
    if n > 64:
        raise ValueError("the compiled kernel supports at most 64 vertices")
    cdef _Kernel k = _Kernel(n, max_label)
    cdef int v, u, i, any_nbr
    k.n = n
    k.B = max_label
    k.loops = loops
    k.require_one = require_one
    k.injective = injective
    k.emit = emit
    k.nodes = 0
    k.node_limit = node_limit
    k.deadline = time.monotonic() + time_limit if time_limit > 0 else 0.0
    k.n_noniso = 0
    k.iso_unlabeled = 0
    for v in range(n):
        k.cls[v] = cls[v]
        k.prev_in_class[v] = prev_in_class[v]
        k.priority[v] = priority[v]
        k.nbr_classes[v] = nbr_classes[v]
        any_nbr = 0
        for u in range(n):
            k.adj[v * n + u] = 1 if adj[v * n + u] else 0
            if k.adj[v * n + u]:
                any_nbr = 1
        k.iso[v] = 0 if any_nbr else 1
        if any_nbr:
            k.n_noniso += 1
        else:
            k.iso_unlabeled += 1
    k.n_iso_total = k.iso_unlabeled
    for v in range(n):
        order = sorted((cls[u], u) for u in range(n) if k.adj[v * n + u])
        k.deg[v] = len(order)
        for i, (_, u) in enumerate(order):
            k.nbr_sorted[v * n + i] = u
    for v in range(n):
        k.slots[v] = k.class_slots(v)
    try:
        stopped = k.dfs(0, 0, -1, 0)
    except _Abort:
        return BUDGET, k.nodes
    return (STOPPED if stopped else EXHAUSTED), k.nodes
