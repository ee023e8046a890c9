# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Exhaustive finite-model search, compiled implementation.

Same inputs, algorithm and result as ``_modelcheck_py``; see that module
for the encoding.
"""

from libc.stdlib cimport malloc, calloc, free

IMPLEMENTATION = "cython"

cdef enum:
    FUNCTIONAL = 1
    INVERSE_FUNCTIONAL = 2
    TRANSITIVE = 4
    SYMMETRIC = 8
    ASYMMETRIC = 16
    REFLEXIVE = 32
    IRREFLEXIVE = 64
    MAX_PROPS = 8
    MAX_ELEMS = 4


cdef inline bint _lit(unsigned int mask, int cls, int neg) nogil:
    cdef bint v
    if cls < 0:
        v = 1
    else:
        v = (mask >> cls) & 1
    return v != (neg != 0)


cdef unsigned int _transpose(unsigned int mask, int n) nogil:
    cdef unsigned int t = 0
    cdef int i, j
    for i in range(n):
        for j in range(n):
            if (mask >> (i * n + j)) & 1:
                t |= 1u << (j * n + i)
    return t


cdef bint _chars_ok(unsigned int mask, int n, int flags, unsigned int tmask) nogil:
    cdef unsigned int diag = 0, row = (1u << n) - 1, r, ri, succ
    cdef int i, j
    for i in range(n):
        diag |= 1u << (i * n + i)
    if flags & REFLEXIVE and (mask & diag) != diag:
        return 0
    if flags & IRREFLEXIVE and (mask & diag):
        return 0
    if flags & SYMMETRIC and mask != tmask:
        return 0
    if flags & ASYMMETRIC and (mask & tmask):
        return 0
    if flags & FUNCTIONAL:
        for i in range(n):
            r = (mask >> (i * n)) & row
            if r & (r - 1):
                return 0
    if flags & INVERSE_FUNCTIONAL:
        for j in range(n):
            r = (tmask >> (j * n)) & row
            if r & (r - 1):
                return 0
    if flags & TRANSITIVE:
        for i in range(n):
            ri = (mask >> (i * n)) & row
            for j in range(n):
                if (mask >> (i * n + j)) & 1:
                    succ = (mask >> (j * n)) & row
                    if (ri | succ) != ri:
                        return 0
    return 1


def valid_class_masks(int n_cls, implications):
    cdef list out = []
    cdef unsigned int mask
    cdef int k, m = len(implications)
    cdef int *imp = <int *> malloc(sizeof(int) * 4 * (m + 1))
    cdef bint ok
    try:
        for k in range(m):
            c1, n1, c2, n2 = implications[k]
            imp[4 * k] = c1
            imp[4 * k + 1] = n1
            imp[4 * k + 2] = c2
            imp[4 * k + 3] = n2
        for mask in range(1u << n_cls):
            ok = 1
            for k in range(m):
                if _lit(mask, imp[4 * k], imp[4 * k + 1]) and not _lit(mask, imp[4 * k + 2], imp[4 * k + 3]):
                    ok = 0
                    break
            if ok:
                out.append(mask)
    finally:
        free(imp)
    return out


cdef int* _triples(seq):
    cdef int k, m = len(seq)
    cdef int *buf = <int *> malloc(sizeof(int) * 3 * (m + 1))
    for k in range(m):
        a, b, c = seq[k]
        buf[3 * k] = a
        buf[3 * k + 1] = b
        buf[3 * k + 2] = c
    return buf


cdef int* _pairs(seq):
    cdef int k, m = len(seq)
    cdef int *buf = <int *> malloc(sizeof(int) * 2 * (m + 1))
    for k in range(m):
        a, b = seq[k]
        buf[2 * k] = a
        buf[2 * k + 1] = b
    return buf


cdef inline void _require(int cls, int neg, int e, unsigned int *t, unsigned int *f, int *bad) nogil:
    if cls < 0:
        if neg:
            bad[e] = 1
    elif neg:
        f[e] |= 1u << cls
    else:
        t[e] |= 1u << cls


def satisfiable(int n, int n_ind, int n_cls, prop_flags, inverse_pairs, links, distinct,
                memberships, domains, ranges, implications):
    valid_list = valid_class_masks(n_cls, implications)
    cdef int n_valid = len(valid_list)
    if n_valid == 0:
        return False
    cdef int n_prop = len(prop_flags)
    if n_prop > MAX_PROPS or n > MAX_ELEMS:
        raise ValueError("problem too large for the compiled kernel")
    cdef int size = n * n
    cdef int n_masks = 1 << size
    cdef unsigned int row = (1u << n) - 1
    cdef int n_inv = len(inverse_pairs), n_links = len(links), n_dist = len(distinct)
    cdef int n_mem = len(memberships), n_dom = len(domains), n_rng = len(ranges)

    cdef unsigned int *valid = <unsigned int *> malloc(sizeof(unsigned int) * n_valid)
    cdef unsigned int *transpose = <unsigned int *> malloc(sizeof(unsigned int) * n_masks)
    cdef unsigned int *char_ok = <unsigned int *> malloc(sizeof(unsigned int) * n_masks * (n_prop + 1))
    cdef int *n_char_ok = <int *> calloc(n_prop + 1, sizeof(int))
    cdef unsigned int *choices = <unsigned int *> malloc(sizeof(unsigned int) * n_masks * (n_prop + 1))
    cdef int *n_choices = <int *> calloc(n_prop + 1, sizeof(int))
    cdef int *inv = _pairs(inverse_pairs)
    cdef int *lnk = _triples(links)
    cdef int *dist = _pairs(distinct)
    cdef int *mem = _triples(memberships)
    cdef int *dom = _triples(domains)
    cdef int *rng = _triples(ranges)
    cdef int *sigma = <int *> calloc(n_ind + 1, sizeof(int))
    cdef int *odo = <int *> calloc(n_prop + 1, sizeof(int))
    cdef unsigned int forced[MAX_PROPS]
    cdef unsigned int masks[MAX_PROPS]
    cdef unsigned int bt[MAX_ELEMS]
    cdef unsigned int bf[MAX_ELEMS]
    cdef int bbad[MAX_ELEMS]
    cdef unsigned int t[MAX_ELEMS]
    cdef unsigned int f[MAX_ELEMS]
    cdef int bad[MAX_ELEMS]
    cdef int i, j, k, e, a, m, cls, neg, v
    cdef unsigned int pm
    cdef bint ok, found = 0, more
    cdef long long n_sigma = 1

    try:
        for k in range(n_valid):
            valid[k] = valid_list[k]
        for m in range(n_masks):
            transpose[m] = _transpose(m, n)
        for j in range(n_prop):
            fl = prop_flags[j]
            for m in range(n_masks):
                if _chars_ok(m, n, fl, transpose[m]):
                    char_ok[j * n_masks + n_char_ok[j]] = m
                    n_char_ok[j] += 1
        for i in range(n_ind):
            n_sigma *= n

        for _ in range(n_sigma):
            # current sigma is in `sigma`; advance at the end
            ok = 1
            for k in range(n_dist):
                if sigma[dist[2 * k]] == sigma[dist[2 * k + 1]]:
                    ok = 0
                    break
            if ok:
                for j in range(n_prop):
                    forced[j] = 0
                for k in range(n_links):
                    forced[lnk[3 * k]] |= 1u << (sigma[lnk[3 * k + 1]] * n + sigma[lnk[3 * k + 2]])
                for e in range(n):
                    bt[e] = 0
                    bf[e] = 0
                    bbad[e] = 0
                for k in range(n_mem):
                    _require(mem[3 * k + 1], mem[3 * k + 2], sigma[mem[3 * k]], bt, bf, bbad)
                for j in range(n_prop):
                    n_choices[j] = 0
                    for k in range(n_char_ok[j]):
                        pm = char_ok[j * n_masks + k]
                        if (pm & forced[j]) == forced[j]:
                            choices[j * n_masks + n_choices[j]] = pm
                            n_choices[j] += 1
                    if n_choices[j] == 0:
                        ok = 0
            if ok:
                for j in range(n_prop):
                    odo[j] = 0
                more = 1
                while more:
                    for j in range(n_prop):
                        masks[j] = choices[j * n_masks + odo[j]]
                    ok = 1
                    for k in range(n_inv):
                        if masks[inv[2 * k + 1]] != transpose[masks[inv[2 * k]]]:
                            ok = 0
                            break
                    if ok:
                        for e in range(n):
                            t[e] = bt[e]
                            f[e] = bf[e]
                            bad[e] = bbad[e]
                        for k in range(n_dom):
                            pm = masks[dom[3 * k]]
                            for e in range(n):
                                if (pm >> (e * n)) & row:
                                    _require(dom[3 * k + 1], dom[3 * k + 2], e, t, f, bad)
                        for k in range(n_rng):
                            pm = transpose[masks[rng[3 * k]]]
                            for e in range(n):
                                if (pm >> (e * n)) & row:
                                    _require(rng[3 * k + 1], rng[3 * k + 2], e, t, f, bad)
                        for e in range(n):
                            if bad[e] or (t[e] & f[e]):
                                ok = 0
                                break
                            v = 0
                            for k in range(n_valid):
                                if (valid[k] & t[e]) == t[e] and not (valid[k] & f[e]):
                                    v = 1
                                    break
                            if not v:
                                ok = 0
                                break
                        if ok:
                            found = 1
                            break
                    # odometer over the per-property choice lists
                    more = 0
                    for j in range(n_prop):
                        odo[j] += 1
                        if odo[j] < n_choices[j]:
                            more = 1
                            break
                        odo[j] = 0
                if found:
                    break
            for i in range(n_ind):
                sigma[i] += 1
                if sigma[i] < n:
                    break
                sigma[i] = 0
        return bool(found)
    finally:
        free(valid); free(transpose); free(char_ok); free(n_char_ok)
        free(choices); free(n_choices); free(inv); free(lnk); free(dist)
        free(mem); free(dom); free(rng); free(sigma); free(odo)
