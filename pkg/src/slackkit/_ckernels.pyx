# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Groebner kernels; same contract as ``_pykernels``.

Packed monomials can exceed 64 bits, so they stay Python ints.  The gain
comes from typed loop counters and direct dict/list/heap calls.
"""

from heapq import heapify, heappop, heappush

IMPLEMENTATION = "cython"
cdef Py_ssize_t CHECK_EVERY = 4096


def reduce_terms(dict f, list lms, list tails, object guard, object tick=None):
    cdef list heap = [-m for m in f]
    cdef list rem = []
    cdef Py_ssize_t nred = len(lms)
    cdef Py_ssize_t k, steps = 0
    cdef list tail
    cdef object m, c, q, nm, v, gm, gc
    heapify(heap)
    while heap:
        m = -heappop(heap)
        c = f.pop(m, None)
        if c is None:
            continue
        for k in range(nred):
            q = m - <object>lms[k]
            if not (q & guard):
                tail = <list>tails[k]
                for gm, gc in tail:
                    nm = gm + q
                    v = f.get(nm)
                    if v is None:
                        f[nm] = -c * gc
                        heappush(heap, -nm)
                    else:
                        v = v - c * gc
                        if v:
                            f[nm] = v
                        else:
                            del f[nm]
                steps += 1
                if tick is not None and steps % CHECK_EVERY == 0:
                    tick()
                break
        else:
            rem.append((m, c))
    return rem


def spoly_terms(list tail_i, object qi, list tail_j, object qj):
    cdef dict f = {}
    cdef object gm, gc, nm, v
    for gm, gc in tail_i:
        f[gm + qi] = gc
    for gm, gc in tail_j:
        nm = gm + qj
        v = f.get(nm)
        if v is None:
            f[nm] = -gc
        else:
            v = v - gc
            if v:
                f[nm] = v
            else:
                del f[nm]
    return f


def reduce_spoly(list tail_i, object qi, list tail_j, object qj, list lms, list tails, object guard, object tick=None):
    return reduce_terms(spoly_terms(tail_i, qi, tail_j, qj), lms, tails, guard, tick)
