"""Pure-Python implementations of the hot search kernels.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
Graphs are passed as lists of adjacency row masks (bit ``j`` of ``rows[i]``
set iff ``ij`` is an edge).
"""

BACKEND = "python"


def _low_index(mask):
    return (mask & -mask).bit_length() - 1


def _popcount(mask):
    return bin(mask).count("1")


def search_embeddings(prow, hrow, hn, allowed, order, limit, count_only=False):
    """Backtracking search for induced embeddings of a pattern into a host.

    ``allowed[u]`` is the mask of host vertices pattern vertex ``u`` may map
    to. ``order`` fixes the pattern vertex sequence; ``None`` selects the
    vertex with the smallest remaining domain at every step. ``limit <= 0``
    means no limit. Returns a list of tuples indexed by pattern vertex, or the
    number of embeddings when ``count_only`` is set.
    """
    k = len(prow)
    full = (1 << hn) - 1
    if k == 0:
        return 1 if count_only else [()]
    nrow = [~r & full for r in hrow]
    mapping = [-1] * k
    out = []
    count = 0
    dynamic = order is None

    def rec(depth, dom, free):
        nonlocal count
        if depth == k:
            count += 1
            if not count_only:
                out.append(tuple(mapping))
            return 0 < limit <= count
        if dynamic:
            u, best = -1, hn + 1
            rest = free
            while rest:
                v = _low_index(rest)
                rest &= rest - 1
                c = _popcount(dom[v])
                if c < best:
                    u, best = v, c
        else:
            u = order[depth]
        free_after = free & ~(1 << u)
        cands = dom[u]
        urow = prow[u]
        while cands:
            h = _low_index(cands)
            cands &= cands - 1
            bit = ~(1 << h)
            nbr, non = hrow[h], nrow[h]
            new = dom[:]
            ok = True
            rest = free_after
            while rest:
                v = _low_index(rest)
                rest &= rest - 1
                m = dom[v] & bit & (nbr if (urow >> v) & 1 else non)
                if not m:
                    ok = False
                    break
                new[v] = m
            if ok:
                mapping[u] = h
                if rec(depth + 1, new, free_after):
                    return True
        mapping[u] = -1
        return False

    dom0 = [a & full for a in allowed]
    if all(dom0):
        rec(0, dom0, (1 << k) - 1)
    return count if count_only else out


def canonical_order(rows, colour, twin_lower):
    """Vertex ordering with the lexicographically least adjacency encoding.

    Only orderings that list vertices by non-decreasing ``colour`` are
    considered. Row ``i`` of the encoding packs adjacency of the ``i``-th
    vertex to its predecessors, most significant bit first. A vertex is
    skipped while a smaller twin of it (``twin_lower``) is still unplaced.
    """
    n = len(rows)
    pos_colour = sorted(colour)
    order = []
    cur = []
    best = None
    best_order = None

    def rec(i, placed):
        nonlocal best, best_order
        if i == n:
            if best is None or cur < best:
                best = cur[:]
                best_order = order[:]
            return
        c = pos_colour[i]
        for v in range(n):
            if colour[v] != c or (placed >> v) & 1 or twin_lower[v] & ~placed:
                continue
            r = rows[v]
            row = 0
            for u in order:
                row = (row << 1) | ((r >> u) & 1)
            # the current prefix never exceeds the best one, only ties matter
            if best is not None and row > best[i] and cur == best[:i]:
                continue
            order.append(v)
            cur.append(row)
            rec(i + 1, placed | (1 << v))
            order.pop()
            cur.pop()

    rec(0, 0)
    return best_order


def pwh_search(prow, base, hadj):
    """Exact membership of a pattern graph in P(w, H) for periodic ``w``.

    ``base`` is the period as a list of letter indices, ``hadj[a]`` the
    looped adjacency mask of letter ``a`` in H. Positions are placed left to
    right; a gap of one makes the pair consecutive and any larger gap only
    matters through its residue modulo the period, so gaps range over
    ``1 .. len(base) + 1``. Dead states are memoised.
    """
    k = len(prow)
    if k == 0:
        return True
    p = len(base)
    a = len(hadj)
    full = (1 << k) - 1
    by_letter = [0] * a
    failed = set()

    def required(letter, among):
        adj = hadj[letter]
        want = 0
        for b in range(a):
            if (adj >> b) & 1:
                want |= by_letter[b]
        return want & among

    def rec(placed, last_u, last_r):
        if placed == full:
            return True
        key = (tuple(by_letter), last_u, last_r)
        if key in failed:
            return False
        last_letter = base[last_r]
        for gap in range(1, p + 2):
            r = (last_r + gap) % p
            letter = base[r]
            if gap == 1:
                nonc = placed & ~(1 << last_u)
                consec_edge = not (hadj[letter] >> last_letter) & 1
            else:
                nonc = placed
            want = required(letter, nonc)
            free = full & ~placed
            while free:
                u = _low_index(free)
                free &= free - 1
                pu = prow[u]
                if pu & nonc != want:
                    continue
                if gap == 1 and bool((pu >> last_u) & 1) != consec_edge:
                    continue
                by_letter[letter] |= 1 << u
                if rec(placed | (1 << u), u, r):
                    return True
                by_letter[letter] &= ~(1 << u)
        failed.add(key)
        return False

    for r0 in range(p):
        letter = base[r0]
        for u in range(k):
            by_letter[letter] |= 1 << u
            if rec(1 << u, u, r0):
                return True
            by_letter[letter] &= ~(1 << u)
    return False
