# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset-minor engine.

Profiles both minors of an edge subset without building intermediate map
objects.  The restriction M\\A^c is a pure deletion minor of M; the
contraction M/A is obtained as the dual of the deletion minor M*\\A, so a
single deletion routine (skip-walk plus union-find component statistics)
serves both sides.
"""

from libc.stdlib cimport free, malloc


cdef class SubsetEngine:
    cdef int m, n, v_m, v_dual
    cdef int* tau
    cdef int* tau_d
    cdef int* tau2
    cdef int* uf
    cdef int* uf2
    cdef int* mark
    cdef int* comp_v
    cdef int* comp_e
    cdef int* comp_f
    cdef int* comp_orb

    backend = "c"

    def __cinit__(self, int m, tau, tau_d, int v_m, int v_dual):
        cdef int i
        self.m = m
        self.n = 4 * m
        self.v_m = v_m
        self.v_dual = v_dual
        cdef int size = self.n if self.n else 1
        self.tau = <int*> malloc(size * sizeof(int))
        self.tau_d = <int*> malloc(size * sizeof(int))
        self.tau2 = <int*> malloc(size * sizeof(int))
        self.uf = <int*> malloc(size * sizeof(int))
        self.uf2 = <int*> malloc(size * sizeof(int))
        self.mark = <int*> malloc(size * sizeof(int))
        self.comp_v = <int*> malloc(size * sizeof(int))
        self.comp_e = <int*> malloc(size * sizeof(int))
        self.comp_f = <int*> malloc(size * sizeof(int))
        self.comp_orb = <int*> malloc(size * sizeof(int))
        if (self.tau is NULL or self.tau_d is NULL or self.tau2 is NULL
                or self.uf is NULL or self.uf2 is NULL or self.mark is NULL
                or self.comp_v is NULL or self.comp_e is NULL
                or self.comp_f is NULL or self.comp_orb is NULL):
            raise MemoryError()
        for i in range(self.n):
            self.tau[i] = tau[i]
            self.tau_d[i] = tau_d[i]

    def __dealloc__(self):
        free(self.tau)
        free(self.tau_d)
        free(self.tau2)
        free(self.uf)
        free(self.uf2)
        free(self.mark)
        free(self.comp_v)
        free(self.comp_e)
        free(self.comp_f)
        free(self.comp_orb)

    cdef int _find(self, int* uf, int x) nogil:
        cdef int root = x
        cdef int nxt
        while uf[root] != root:
            root = uf[root]
        while uf[x] != root:
            nxt = uf[x]
            uf[x] = root
            x = nxt
        return root

    cdef void _union(self, int* uf, int x, int y) nogil:
        cdef int rx = self._find(uf, x)
        cdef int ry = self._find(uf, y)
        if rx < ry:
            uf[ry] = rx
        elif ry < rx:
            uf[rx] = ry

    cdef object _del_stats(self, int* tau, int v_total, unsigned long long keep):
        """Statistics of the deletion minor keeping the edges in ``keep``."""
        cdef int n = self.n
        cdef int x, d, root, cycles, v_c, e_c, f_c, s, gbar
        cdef int e_total = 0
        cdef int nonempty_v = 0
        cdef int f_sum = 0
        for x in range(self.m):
            if keep >> x & 1:
                e_total += 1
        for x in range(n):
            if not keep >> (x >> 2) & 1:
                continue
            d = tau[x]
            while not keep >> (d >> 2) & 1:
                d = tau[d]
            self.tau2[x] = d
        for x in range(n):
            self.uf[x] = x
            self.uf2[x] = x
            self.mark[x] = 0
            self.comp_v[x] = 0
            self.comp_e[x] = 0
            self.comp_f[x] = 0
            self.comp_orb[x] = 0
        for x in range(n):
            if not keep >> (x >> 2) & 1:
                continue
            self._union(self.uf, x, x ^ 1)
            self._union(self.uf, x, x ^ 2)
            self._union(self.uf, x, self.tau2[x])
            self._union(self.uf2, x, x ^ 3)
            self._union(self.uf2, x, self.tau2[x])
        # tau2 cycles per component (mark value 1)
        for x in range(n):
            if not keep >> (x >> 2) & 1 or self.mark[x] == 1:
                continue
            d = x
            while self.mark[d] != 1:
                self.mark[d] = 1
                d = self.tau2[d]
            self.comp_v[self._find(self.uf, x)] += 1
        # phi2 = tau2 . theta sigma cycles (mark value 2)
        for x in range(n):
            if not keep >> (x >> 2) & 1 or self.mark[x] == 2:
                continue
            d = x
            while self.mark[d] != 2:
                self.mark[d] = 2
                d = self.tau2[d ^ 3]
            self.comp_f[self._find(self.uf, x)] += 1
        for x in range(n):
            if not keep >> (x >> 2) & 1:
                continue
            self.comp_e[self._find(self.uf, x)] += 1
            if self._find(self.uf2, x) == x:
                self.comp_orb[self._find(self.uf, x)] += 1
        comps = []
        for x in range(n):
            if not keep >> (x >> 2) & 1 or self._find(self.uf, x) != x:
                continue
            v_c = self.comp_v[x] // 2
            e_c = self.comp_e[x] // 4
            f_c = self.comp_f[x] // 2
            nonempty_v += v_c
            f_sum += f_c
            s = 2 - (v_c - e_c + f_c)
            gbar = s // 2 if self.comp_orb[x] == 2 else -s
            comps.append((gbar, v_c, e_c, f_c))
        cdef int isolated = v_total - nonempty_v
        comps.extend([(0, 1, 0, 1)] * isolated)
        comps.sort()
        return (v_total, e_total, f_sum + isolated, tuple(comps))

    def profile(self, mask):
        cdef unsigned long long keep = mask
        cdef unsigned long long full = (1ULL << self.m) - 1 if self.m else 0
        res = self._del_stats(self.tau, self.v_m, keep)
        nd = self._del_stats(self.tau_d, self.v_dual, full ^ keep)
        con = (
            nd[2],
            nd[1],
            nd[0],
            tuple(sorted((g, f_c, e_c, v_c) for (g, v_c, e_c, f_c) in nd[3])),
        )
        return con, res
