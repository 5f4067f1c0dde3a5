# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled mirror of the pure-Python search kernel.

Same traversal order, same pruning decisions, same counters as
`_search_py.run_labeling_search`; the test suite asserts outcome
equality between the two engines.
"""

from libc.stdlib cimport calloc, free

ENGINE_NAME = "cy"

MODE_FIRST = 0
MODE_ALL = 1
MODE_COUNT = 2


cdef class _State:
    cdef int n
    cdef int mode
    cdef bint prune
    cdef int* labels
    cdef unsigned char* used
    cdef long long* pre
    cdef int* in_start
    cdef int* in_flat
    cdef int* out_start
    cdef int* out_flat
    cdef int* order
    cdef long long count
    cdef long long nodes
    cdef long long leaves
    cdef list solutions

    def __cinit__(self, int n):
        cdef int cap = n + 1
        self.n = n
        self.labels = <int*> calloc(cap, sizeof(int))
        self.used = <unsigned char*> calloc(cap + 1, sizeof(unsigned char))
        self.pre = <long long*> calloc(cap + 1, sizeof(long long))
        self.in_start = <int*> calloc(cap + 1, sizeof(int))
        self.out_start = <int*> calloc(cap + 1, sizeof(int))
        self.in_flat = NULL
        self.out_flat = NULL
        self.order = <int*> calloc(cap, sizeof(int))
        self.solutions = []
        self.count = 0
        self.nodes = 0
        self.leaves = 0

    def __dealloc__(self):
        free(self.labels)
        free(self.used)
        free(self.pre)
        free(self.in_start)
        free(self.in_flat)
        free(self.out_start)
        free(self.out_flat)
        free(self.order)


cdef int* _flatten(adj, int n, int* start) except NULL:
    cdef int total = 0
    cdef int i, j
    for i in range(n):
        total += len(adj[i])
    cdef int* flat = <int*> calloc(total if total > 0 else 1, sizeof(int))
    if flat == NULL:
        raise MemoryError()
    total = 0
    for i in range(n):
        start[i] = total
        for j in range(len(adj[i])):
            flat[total] = adj[i][j]
            total += 1
    start[n] = total
    return flat


cdef bint _bounds_ok(_State st):
    cdef int n = st.n
    cdef int k = 0
    cdef long long total = 0
    cdef int lab, w, u, i, p, q
    cdef long long partial, hi, lo
    for lab in range(1, n + 1):
        if not st.used[lab]:
            k += 1
            total += lab
            st.pre[k] = total
    for w in range(n):
        partial = 0
        p = 0
        q = 0
        for i in range(st.in_start[w], st.in_start[w + 1]):
            u = st.in_flat[i]
            if st.labels[u]:
                partial += st.labels[u]
            else:
                p += 1
        for i in range(st.out_start[w], st.out_start[w + 1]):
            u = st.out_flat[i]
            if st.labels[u]:
                partial -= st.labels[u]
            else:
                q += 1
        hi = partial + (st.pre[k] - st.pre[k - p]) - st.pre[q]
        lo = partial + st.pre[p] - (st.pre[k] - st.pre[k - q])
        if lo > 0 or hi < 0:
            return False
    return True


cdef bint _all_weights_zero(_State st):
    cdef int n = st.n
    cdef int w, i
    cdef long long t
    for w in range(n):
        t = 0
        for i in range(st.in_start[w], st.in_start[w + 1]):
            t += st.labels[st.in_flat[i]]
        for i in range(st.out_start[w], st.out_start[w + 1]):
            t -= st.labels[st.out_flat[i]]
        if t != 0:
            return False
    return True


cdef bint _dfs(_State st, int d):
    cdef int n = st.n
    cdef int v, lab, i
    cdef bint stop
    if d == n:
        st.leaves += 1
        if _all_weights_zero(st):
            st.count += 1
            if st.mode != MODE_COUNT:
                st.solutions.append(tuple([st.labels[i] for i in range(n)]))
            if st.mode == MODE_FIRST:
                return True
        return False
    v = st.order[d]
    for lab in range(1, n + 1):
        if st.used[lab]:
            continue
        st.labels[v] = lab
        st.used[lab] = True
        st.nodes += 1
        stop = False
        if not st.prune or _bounds_ok(st):
            stop = _dfs(st, d + 1)
        st.labels[v] = 0
        st.used[lab] = False
        if stop:
            return True
    return False


def run_labeling_search(n, in_adj, out_adj, branch_order, mode, prune_bounds):
    cdef _State st = _State(n)
    cdef int i
    st.mode = mode
    st.prune = bool(prune_bounds)
    st.in_flat = _flatten(in_adj, n, st.in_start)
    st.out_flat = _flatten(out_adj, n, st.out_start)
    for i in range(n):
        st.order[i] = branch_order[i]
    _dfs(st, 0)
    return st.solutions, int(st.count), int(st.nodes), int(st.leaves)
