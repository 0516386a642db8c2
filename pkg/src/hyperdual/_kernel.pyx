# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled witness kernel; same interface and codes as ``_kernel_py``."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memset

BACKEND = "cython"

cdef uint64_t WORD_MASK = 0xFFFFFFFFFFFFFFFF


cdef void _load(object x, uint64_t* out, int nw):
    cdef int w
    for w in range(nw):
        out[w] = <uint64_t>((x >> (64 * w)) & WORD_MASK)


cdef object _dump(const uint64_t* words, int nw):
    cdef int w
    out = 0
    for w in range(nw - 1, -1, -1):
        out = (out << 64) | <object>words[w]
    return out


cdef uint64_t* _alloc(Py_ssize_t count) except NULL:
    cdef uint64_t* p = <uint64_t*>malloc((count if count > 0 else 1) * sizeof(uint64_t))
    if p == NULL:
        raise MemoryError()
    memset(p, 0, (count if count > 0 else 1) * sizeof(uint64_t))
    return p


cdef class Kernel:
    cdef readonly int n
    cdef int nw, mg, mh, L
    cdef uint64_t* full
    cdef uint64_t* g
    cdef uint64_t* h
    cdef uint64_t* lin
    cdef uint64_t* lex
    cdef int* comp
    # scratch for check
    cdef uint64_t* fr
    cdef uint64_t* fq
    cdef uint64_t* wa
    cdef uint64_t* wb

    def __cinit__(self, int n, g_masks, h_masks, lab_in, lab_ex):
        cdef int j
        lab_in = list(lab_in)
        lab_ex = list(lab_ex)
        if len(lab_in) != len(lab_ex):
            raise ValueError("label mask lists differ in length")
        g_masks = list(g_masks)
        h_masks = list(h_masks)
        self.n = n
        self.nw = (n + 63) // 64 if n > 0 else 1
        self.mg = len(g_masks)
        self.mh = len(h_masks)
        self.L = len(lab_in)
        self.full = _alloc(self.nw)
        self.g = _alloc(self.mg * self.nw)
        self.h = _alloc(self.mh * self.nw)
        self.lin = _alloc(self.L * self.nw)
        self.lex = _alloc(self.L * self.nw)
        self.fr = _alloc(self.nw)
        self.fq = _alloc(self.nw)
        self.wa = _alloc(self.nw)
        self.wb = _alloc(self.nw)
        self.comp = <int*>malloc((self.mh if self.mh > 0 else 1) * sizeof(int))
        if self.comp == NULL:
            raise MemoryError()
        full_mask = (1 << int(n)) - 1  # Python int: n may exceed the C word size
        _load(full_mask, self.full, self.nw)
        for j in range(self.mg):
            _load(g_masks[j], self.g + j * self.nw, self.nw)
        for j in range(self.mh):
            _load(h_masks[j], self.h + j * self.nw, self.nw)
        for j in range(self.L):
            _load(lab_in[j], self.lin + j * self.nw, self.nw)
            _load(lab_ex[j], self.lex + j * self.nw, self.nw)

    def __dealloc__(self):
        free(self.full); free(self.g); free(self.h)
        free(self.lin); free(self.lex); free(self.comp)
        free(self.fr); free(self.fq); free(self.wa); free(self.wb)

    @property
    def num_labels(self):
        return self.L

    cdef int _check(self, const uint64_t* inc, const uint64_t* exc) noexcept nogil:
        cdef int nw = self.nw, w, j, ncomp = 0, thr, count, ok
        cdef uint64_t bits, low
        cdef uint64_t* fr = self.fr
        cdef uint64_t* fq = self.fq
        cdef uint64_t* a = self.wa
        cdef uint64_t* b = self.wb
        cdef const uint64_t* e
        for w in range(nw):
            fr[w] = self.full[w] & ~(inc[w] | exc[w])
        for j in range(self.mh):
            e = self.h + j * nw
            ok = 1
            for w in range(nw):
                if e[w] & exc[w]:
                    ok = 0
                    break
            if ok:
                self.comp[ncomp] = j
                ncomp += 1
        if ncomp == 0:
            for w in range(nw):
                fq[w] = fr[w]
        else:
            thr = (ncomp + 1) // 2
            for w in range(nw):
                fq[w] = 0
                bits = fr[w]
                while bits:
                    low = bits & (~bits + 1)
                    bits ^= low
                    count = 0
                    for j in range(ncomp):
                        if self.h[self.comp[j] * nw + w] & low:
                            count += 1
                    if count >= thr:
                        fq[w] |= low
        for w in range(nw):
            a[w] = inc[w] | fq[w]
            b[w] = exc[w] | (fr[w] & ~fq[w])
        if self._meets_all(self.g, self.mg, a) and not self._some_inside(self.h, self.mh, a):
            return 1
        if self._meets_all(self.h, self.mh, b) and not self._some_inside(self.g, self.mg, b):
            return 2
        return 0

    cdef int _meets_all(self, const uint64_t* edges, int m, const uint64_t* s) noexcept nogil:
        cdef int j, w, nw = self.nw, hit
        for j in range(m):
            hit = 0
            for w in range(nw):
                if edges[j * nw + w] & s[w]:
                    hit = 1
                    break
            if not hit:
                return 0
        return 1

    cdef int _some_inside(self, const uint64_t* edges, int m, const uint64_t* s) noexcept nogil:
        cdef int j, w, nw = self.nw, inside
        for j in range(m):
            inside = 1
            for w in range(nw):
                if edges[j * nw + w] & ~s[w]:
                    inside = 0
                    break
            if inside:
                return 1
        return 0

    def check(self, inc, exc):
        cdef uint64_t* wi = _alloc(self.nw)
        cdef uint64_t* we = _alloc(self.nw)
        cdef int code
        try:
            _load(inc, wi, self.nw)
            _load(exc, we, self.nw)
            code = self._check(wi, we)
            return code, _dump(self.wa, self.nw), _dump(self.wb, self.nw)
        finally:
            free(wi)
            free(we)

    def check_labels(self, indices):
        cdef uint64_t* wi = _alloc(self.nw)
        cdef uint64_t* we = _alloc(self.nw)
        cdef int code, w, j, nw = self.nw
        try:
            for j in indices:
                if j < 0 or j >= self.L:
                    raise IndexError(j)
                for w in range(nw):
                    wi[w] |= self.lin[j * nw + w]
                    we[w] |= self.lex[j * nw + w]
            code = self._check(wi, we)
            return code, _dump(self.wa, nw), _dump(self.wb, nw)
        finally:
            free(wi)
            free(we)

    def scan(self, int k, int lo, int hi):
        cdef int L = self.L, nw = self.nw
        cdef int first, d, e, w, code = 0
        cdef long long tried = 0
        cdef int* idx
        cdef uint64_t* iacc
        cdef uint64_t* eacc
        cdef uint64_t* zero
        if hi > L:
            hi = L
        if k == 0:
            if lo > 0:
                return None, 0, 0
            zero = _alloc(nw)
            code = self._check(zero, zero)
            free(zero)
            return ((), code, 1) if code else (None, 0, 1)
        if k > L:
            return None, 0, 0
        idx = <int*>malloc(k * sizeof(int))
        iacc = _alloc((k + 1) * nw)
        eacc = _alloc((k + 1) * nw)
        try:
            with nogil:
                for first in range(lo, hi):
                    if first + k > L:
                        break
                    idx[0] = first
                    for w in range(nw):
                        iacc[nw + w] = self.lin[first * nw + w]
                        eacc[nw + w] = self.lex[first * nw + w]
                    for d in range(1, k):
                        idx[d] = first + d
                        for w in range(nw):
                            iacc[(d + 1) * nw + w] = iacc[d * nw + w] | self.lin[idx[d] * nw + w]
                            eacc[(d + 1) * nw + w] = eacc[d * nw + w] | self.lex[idx[d] * nw + w]
                    while True:
                        tried += 1
                        code = self._check(iacc + k * nw, eacc + k * nw)
                        if code:
                            break
                        d = k - 1
                        while d >= 1 and idx[d] == L - k + d:
                            d -= 1
                        if d < 1:
                            break
                        idx[d] += 1
                        for w in range(nw):
                            iacc[(d + 1) * nw + w] = iacc[d * nw + w] | self.lin[idx[d] * nw + w]
                            eacc[(d + 1) * nw + w] = eacc[d * nw + w] | self.lex[idx[d] * nw + w]
                        for e in range(d + 1, k):
                            idx[e] = idx[e - 1] + 1
                            for w in range(nw):
                                iacc[(e + 1) * nw + w] = iacc[e * nw + w] | self.lin[idx[e] * nw + w]
                                eacc[(e + 1) * nw + w] = eacc[e * nw + w] | self.lex[idx[e] * nw + w]
                    if code:
                        break
            if code:
                return tuple([idx[d] for d in range(k)]), code, tried
            return None, 0, tried
        finally:
            free(idx)
            free(iacc)
            free(eacc)
