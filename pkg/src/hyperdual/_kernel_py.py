"""Pure-Python witness kernel (fallback for the compiled ``_kernel``).

A :class:`Kernel` is built once per instance from bitmask lists and
answers two questions:

``check(inc, exc)``
    augment the pair ⟨inc, exc⟩ by frequency counting and test both
    disjuncts of the witness condition on the augmented pair.
``scan(k, lo, hi)``
    walk the ``k``-subsets of the label universe whose first label index
    lies in ``[lo, hi)``, in lexicographic order, and stop at the first
    one whose evaluated pair passes ``check``.

Codes: 0 = no witness, 1 = first disjunct (A is a new transversal of
G), 2 = second disjunct (B is a new transversal of H).
"""
from __future__ import annotations

BACKEND = "python"


class Kernel:
    def __init__(self, n, g_masks, h_masks, lab_in, lab_ex):
        self.n = n
        self.full = (1 << n) - 1
        self.g = list(g_masks)
        self.h = list(h_masks)
        self.lab_in = list(lab_in)
        self.lab_ex = list(lab_ex)
        if len(self.lab_in) != len(self.lab_ex):
            raise ValueError("label mask lists differ in length")

    @property
    def num_labels(self):
        return len(self.lab_in)

    def check(self, inc, exc):
        full = self.full
        free = full & ~(inc | exc)
        compatible = [e for e in self.h if not e & exc]
        if compatible:
            threshold = (len(compatible) + 1) // 2
            freq = 0
            rest = free
            while rest:
                low = rest & -rest
                rest ^= low
                count = 0
                for e in compatible:
                    if e & low:
                        count += 1
                if count >= threshold:
                    freq |= low
        else:
            freq = free
        a = inc | freq
        b = exc | (free & ~freq)
        if all(e & a for e in self.g) and not any(e & ~a == 0 for e in self.h):
            return 1, a, b
        if all(e & b for e in self.h) and not any(e & ~b == 0 for e in self.g):
            return 2, a, b
        return 0, a, b

    def check_labels(self, indices):
        inc = exc = 0
        for j in indices:
            inc |= self.lab_in[j]
            exc |= self.lab_ex[j]
        return self.check(inc, exc)

    def scan(self, k, lo, hi):
        """Return ``(indices, code, tried)``; ``indices`` is None when nothing hits."""
        L = len(self.lab_in)
        hi = min(hi, L)
        if k == 0:
            if lo > 0:
                return None, 0, 0
            code = self.check(0, 0)[0]
            return ((), code, 1) if code else (None, 0, 1)
        if k > L:
            return None, 0, 0
        lab_in, lab_ex = self.lab_in, self.lab_ex
        tried = 0
        idx = [0] * k
        inc_acc = [0] * (k + 1)
        exc_acc = [0] * (k + 1)
        for first in range(lo, hi):
            if first + k > L:
                break
            idx[0] = first
            inc_acc[1] = lab_in[first]
            exc_acc[1] = lab_ex[first]
            for d in range(1, k):
                idx[d] = first + d
                inc_acc[d + 1] = inc_acc[d] | lab_in[idx[d]]
                exc_acc[d + 1] = exc_acc[d] | lab_ex[idx[d]]
            while True:
                tried += 1
                code = self.check(inc_acc[k], exc_acc[k])[0]
                if code:
                    return tuple(idx), code, tried
                # advance the tail (positions 1..k-1) lexicographically
                d = k - 1
                while d >= 1 and idx[d] == L - k + d:
                    d -= 1
                if d < 1:
                    break
                idx[d] += 1
                inc_acc[d + 1] = inc_acc[d] | lab_in[idx[d]]
                exc_acc[d + 1] = exc_acc[d] | lab_ex[idx[d]]
                for e in range(d + 1, k):
                    idx[e] = idx[e - 1] + 1
                    inc_acc[e + 1] = inc_acc[e] | lab_in[idx[e]]
                    exc_acc[e + 1] = exc_acc[e] | lab_ex[idx[e]]
        return None, 0, tried
