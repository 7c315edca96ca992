"""Pure-Python Groebner kernels (fallback for ``_ckernels``).

Monomials are packed ints (see ``groebner.Packer``): monomial product is int
addition, the term order is int comparison, and ``lm | m`` holds iff
``(m - lm) & guard == 0``.  Polynomials are lists of ``(mono, coeff)`` sorted
by decreasing monomial; reducers are monic.
"""

from heapq import heapify, heappop, heappush

IMPLEMENTATION = "python"
CHECK_EVERY = 4096


def reduce_terms(f, lms, tails, guard, tick=None):
    """Fully reduce ``f`` (dict mono -> coeff) by the monic reducers.

    The first reducer whose leading monomial divides the current term is
    used.  Returns the remainder as a descending term list.  ``tick`` is
    called every ``CHECK_EVERY`` reduction steps (budget hook).
    """
    heap = [-m for m in f]
    heapify(heap)
    rem = []
    nred = len(lms)
    steps = 0
    while heap:
        m = -heappop(heap)
        c = f.pop(m, None)
        if c is None:
            continue
        for k in range(nred):
            q = m - lms[k]
            if not (q & guard):
                for gm, gc in tails[k]:
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


def spoly_terms(tail_i, qi, tail_j, qj):
    """Sparse S-polynomial ``qi*tail_i - qj*tail_j`` of two monic polynomials."""
    f = {}
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


def reduce_spoly(tail_i, qi, tail_j, qj, lms, tails, guard, tick=None):
    return reduce_terms(spoly_terms(tail_i, qi, tail_j, qj), lms, tails, guard, tick)
