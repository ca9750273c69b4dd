# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the pure enumeration core.

Same contract as fstchar._enumpure.count_weight_degree; the DFS runs on C
integers, only the histogram keys are Python objects.  cdivision is safe:
every quotient taken below has nonnegative operands.
"""

from libc.stdlib cimport free, malloc

from fstchar._enumpure import _validate

KIND = "compiled"


cdef struct Walk:
    int l
    int level
    int qmax          # -1 means unbounded
    int emax          # -1 means unbounded
    int has_caps
    int has_init
    int* caps         # length l
    int* init_bounds  # length l
    int* dense        # values by position
    int* counts       # per color
    int size


cdef int _rec(Walk* w, dict out, int start, int degree, int energy) except -1:
    cdef int s, tf, vmax, color, v, lo, i, wsum, room
    key = tuple([w.counts[i] for i in range(w.l)]) + (degree,)
    if key in out:
        out[key] = out[key] + 1
    else:
        out[key] = 1
    s = start
    while True:
        tf = s // w.l + 1
        if w.qmax >= 0 and degree + tf > w.qmax:
            break
        if w.emax >= 0 and s >= 1 and energy + s > w.emax:
            break
        if s >= w.size:
            break
        wsum = 0
        lo = s - w.l
        if lo < 0:
            lo = 0
        for i in range(lo, s):
            wsum += w.dense[i]
        vmax = w.level - wsum
        if w.qmax >= 0:
            room = (w.qmax - degree) // tf
            if room < vmax:
                vmax = room
        if w.emax >= 0 and s >= 1:
            room = (w.emax - energy) // s
            if room < vmax:
                vmax = room
        color = s % w.l
        if w.has_caps:
            room = w.caps[color] - w.counts[color]
            if room < vmax:
                vmax = room
        if w.has_init and s < w.l:
            room = w.init_bounds[s]
            for i in range(s):
                room -= w.dense[i]
            if room < vmax:
                vmax = room
        for v in range(1, vmax + 1):
            w.dense[s] = v
            w.counts[color] += v
            _rec(w, out, s + 1, degree + tf * v, energy + s * v)
            w.counts[color] -= v
        w.dense[s] = 0
        s += 1
    return 0


def count_weight_degree(l, level, init_bounds=None, init_prefix=None,
                        q_order=None, caps=None, energy_max=None):
    """Histogram of admissible configurations by (n_1, ..., n_l, degree)."""
    _validate(l, level, init_bounds, init_prefix, q_order, caps, energy_max)

    cdef Walk w
    w.l = l
    w.level = level
    w.qmax = -1 if q_order is None else q_order
    w.emax = -1 if energy_max is None else energy_max
    w.has_caps = caps is not None
    w.has_init = init_bounds is not None

    cdef int horizon = 2
    if w.qmax >= 0:
        horizon = w.l * w.qmax + 2
    if w.emax >= 0 and w.emax + 2 > horizon:
        horizon = w.emax + 2
    w.size = horizon

    cdef int total = 4 * w.l + horizon
    cdef int* block = <int*> malloc(total * sizeof(int))
    if block == NULL:
        raise MemoryError()
    cdef int i
    for i in range(total):
        block[i] = 0
    w.caps = block
    w.init_bounds = block + w.l
    w.counts = block + 2 * w.l
    w.dense = block + 4 * w.l

    cdef int degree = 0
    cdef int energy = 0
    cdef int start = 0
    cdef int a0, b0, ok
    out = {}
    try:
        if w.has_caps:
            for i in range(w.l):
                w.caps[i] = caps[i]
        if w.has_init:
            for i in range(w.l):
                w.init_bounds[i] = init_bounds[i]
        ok = 1
        if init_prefix is not None:
            a0 = init_prefix[0]
            b0 = init_prefix[1]
            if a0 < 0 or b0 < 0:
                raise ValueError("init_prefix entries must be >= 0")
            if a0 + b0 > w.level:
                ok = 0
            w.dense[0] = a0
            w.dense[1] = b0
            w.counts[0] += a0
            w.counts[1 % w.l] += b0
            degree = a0 + (1 // w.l + 1) * b0
            energy = b0
            start = 2
            if w.qmax >= 0 and degree > w.qmax:
                ok = 0
            if w.emax >= 0 and energy > w.emax:
                ok = 0
            if w.has_caps:
                for i in range(w.l):
                    if w.counts[i] > w.caps[i]:
                        ok = 0
        if ok:
            _rec(&w, out, start, degree, energy)
    finally:
        free(block)
    return out
