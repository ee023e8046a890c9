"""Exhaustive finite-model search, pure-Python implementation.

The problem arrives pre-compiled to small integers by
:mod:`owlet.reasoner.models`:

* individuals, classes and object properties are indices;
* class index ``-1`` is Thing, so a literal ``(-1, 0)`` is always true and
  ``(-1, 1)`` never holds;
* a literal is ``(class, negated)``.

An interpretation over ``n`` elements is a mapping of individuals to
elements, one ``n*n`` bitmask per property (bit ``i*n + j`` is the pair
``(i, j)``) and a class bitmask per element. Class constraints only ever
mention one element, so once the property masks are fixed each element is
checked on its own against the list of class masks satisfying every
implication.

Must stay behaviourally identical to ``_modelcheck.pyx``.
"""

from __future__ import annotations

from itertools import product

FUNCTIONAL = 1
INVERSE_FUNCTIONAL = 2
TRANSITIVE = 4
SYMMETRIC = 8
ASYMMETRIC = 16
REFLEXIVE = 32
IRREFLEXIVE = 64

IMPLEMENTATION = "python"


def _lit(mask: int, cls: int, neg: int) -> bool:
    v = True if cls < 0 else bool((mask >> cls) & 1)
    return v != bool(neg)


def valid_class_masks(n_cls: int, implications) -> list[int]:
    out = []
    for mask in range(1 << n_cls):
        for c1, n1, c2, n2 in implications:
            if _lit(mask, c1, n1) and not _lit(mask, c2, n2):
                break
        else:
            out.append(mask)
    return out


def _transpose(mask: int, n: int) -> int:
    t = 0
    for i in range(n):
        for j in range(n):
            if (mask >> (i * n + j)) & 1:
                t |= 1 << (j * n + i)
    return t


def _chars_ok(mask: int, n: int, flags: int, tmask: int) -> bool:
    diag = 0
    for i in range(n):
        diag |= 1 << (i * n + i)
    if flags & REFLEXIVE and mask & diag != diag:
        return False
    if flags & IRREFLEXIVE and mask & diag:
        return False
    if flags & SYMMETRIC and mask != tmask:
        return False
    if flags & ASYMMETRIC and mask & tmask:
        return False
    row = (1 << n) - 1
    if flags & FUNCTIONAL:
        for i in range(n):
            r = (mask >> (i * n)) & row
            if r & (r - 1):
                return False
    if flags & INVERSE_FUNCTIONAL:
        for j in range(n):
            r = (tmask >> (j * n)) & row
            if r & (r - 1):
                return False
    if flags & TRANSITIVE:
        for i in range(n):
            for j in range(n):
                if not (mask >> (i * n + j)) & 1:
                    continue
                succ = (mask >> (j * n)) & row
                if (((mask >> (i * n)) & row) | succ) != ((mask >> (i * n)) & row):
                    return False
    return True


def satisfiable(n, n_ind, n_cls, prop_flags, inverse_pairs, links, distinct,
                memberships, domains, ranges, implications) -> bool:
    valid = valid_class_masks(n_cls, implications)
    if not valid:
        return False
    n_prop = len(prop_flags)
    size = n * n
    row = (1 << n) - 1
    transpose = [_transpose(m, n) for m in range(1 << size)] if n_prop else []
    char_ok = [
        [m for m in range(1 << size) if _chars_ok(m, n, f, transpose[m])]
        for f in prop_flags
    ]
    memo: dict = {}

    def element_ok(t: int, f: int, impossible: bool) -> bool:
        if impossible or t & f:
            return False
        key = (t, f)
        hit = memo.get(key)
        if hit is None:
            hit = any((b & t) == t and not (b & f) for b in valid)
            memo[key] = hit
        return hit

    for sigma in product(range(n), repeat=n_ind):
        if any(sigma[a] == sigma[b] for a, b in distinct):
            continue
        forced = [0] * n_prop
        for j, a, b in links:
            forced[j] |= 1 << (sigma[a] * n + sigma[b])
        base_t = [0] * n
        base_f = [0] * n
        base_bad = [False] * n
        for a, cls, neg in memberships:
            e = sigma[a]
            if cls < 0:
                base_bad[e] = base_bad[e] or bool(neg)
            elif neg:
                base_f[e] |= 1 << cls
            else:
                base_t[e] |= 1 << cls
        choices = [[m for m in char_ok[j] if m & forced[j] == forced[j]] for j in range(n_prop)]
        if any(not c for c in choices):
            continue
        for masks in product(*choices):
            if any(masks[k] != transpose[masks[j]] for j, k in inverse_pairs):
                continue
            t = list(base_t)
            f = list(base_f)
            bad = list(base_bad)
            for table, outgoing in ((domains, True), (ranges, False)):
                for j, cls, neg in table:
                    m = masks[j] if outgoing else transpose[masks[j]]
                    for e in range(n):
                        if (m >> (e * n)) & row:
                            if cls < 0:
                                bad[e] = bad[e] or bool(neg)
                            elif neg:
                                f[e] |= 1 << cls
                            else:
                                t[e] |= 1 << cls
            if all(element_ok(t[e], f[e], bad[e]) for e in range(n)):
                return True
    return False
