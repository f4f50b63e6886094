"""Pure-Python kernels.

Every function here has a twin in ``_kernels.pyx`` with the same signature
and the same results. Tables are passed flat, row-major: ``t[x * n + y]``
is ``x . y``.
"""

from itertools import permutations

UNKNOWN = -1
_OK = -1
_FAIL = -2


def axiom_violations(t, n, cap=16):
    """Return ``[(axiom_id, witness, observed), ...]`` for a complete table.

    Every violated axiom gets at least one entry, at most ``cap`` entries.
    Checks run cheapest first: (3), (4), diagonal, (5), (2), (1).
    """
    found = []
    seen = set()
    counts = dict.fromkeys(range(1, 6), 0)

    def report(axiom, witness, observed):
        key = (axiom, witness)
        if key in seen or counts[axiom] >= cap:
            return
        seen.add(key)
        counts[axiom] += 1
        found.append((axiom, witness, observed))

    for x in range(n):
        if t[x * n] != x:
            report(3, (x,), t[x * n])
    for x in range(n):
        if t[x] != 0:
            report(4, (x,), t[x])
    # x.x != 0 shows up as axiom (2) at (x, 0) or axiom (1) at (x, 0, 0)
    for x in range(n):
        if t[x * n + x] != 0:
            v = t[t[x * n + t[x * n]] * n]
            if v != 0:
                report(2, (x, 0), v)
            v = _ax1(t, n, x, 0, 0)
            if v != 0:
                report(1, (x, 0, 0), v)
    for x in range(n):
        for y in range(x + 1, n):
            if t[x * n + y] == 0 and t[y * n + x] == 0:
                report(5, (x, y), 0)
    for x in range(n):
        for y in range(n):
            v = t[t[x * n + t[x * n + y]] * n + y]
            if v != 0:
                report(2, (x, y), v)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                v = _ax1(t, n, x, y, z)
                if v != 0:
                    report(1, (x, y, z), v)
    return found


def _ax1(t, n, x, y, z):
    return t[t[t[x * n + y] * n + t[z * n + y]] * n + t[x * n + z]]


def is_bck(t, n):
    """Short-circuiting axiom check for a complete table."""
    for x in range(n):
        if t[x * n] != x or t[x] != 0 or t[x * n + x] != 0:
            return False
    for x in range(n):
        for y in range(x + 1, n):
            if t[x * n + y] == 0 and t[y * n + x] == 0:
                return False
    for x in range(n):
        row = x * n
        for y in range(n):
            if t[t[row + t[row + y]] * n + y] != 0:
                return False
    for x in range(n):
        row = x * n
        for y in range(n):
            xy = t[row + y] * n
            for z in range(n):
                if t[t[xy + t[z * n + y]] * n + t[row + z]] != 0:
                    return False
    return True


def canonical(t, n):
    """Lexicographically least row-major relabeling fixing 0."""
    best = list(t)
    size = n * n
    for perm in permutations(range(1, n)):
        p = (0,) + perm
        q = [0] * n
        for new, old in enumerate(p):
            q[old] = new
        cand = None
        for idx in range(size):
            i, j = divmod(idx, n)
            v = q[t[p[i] * n + p[j]]]
            if v != best[idx]:
                if v < best[idx]:
                    cand = idx
                break
        if cand is None:
            continue
        for idx in range(cand, size):
            i, j = divmod(idx, n)
            best[idx] = q[t[p[i] * n + p[j]]]
    return tuple(best)


def pair_terms(t, n, x, y):
    """Return ``(xs, ys, preperiod, period)`` for the recurrences from (x, y).

    Terms run up to index ``preperiod + 2 * period`` so that every link of
    both chains is covered up to the point where the pattern repeats.
    """
    xs = [x, t[y * n + t[y * n + x]]]
    ys = [y, t[x * n + t[x * n + y]]]
    seen = {}
    k = 0
    while True:
        state = (xs[k], xs[k + 1], ys[k], ys[k + 1])
        if state in seen:
            pre = seen[state]
            period = k - pre
            break
        seen[state] = k
        a, b = xs[k], xs[k + 1]
        xs.append(t[a * n + t[a * n + b]])
        a, b = ys[k], ys[k + 1]
        ys.append(t[a * n + t[a * n + b]])
        k += 1
    while len(xs) <= pre + 2 * period:
        a, b = xs[-2], xs[-1]
        xs.append(t[a * n + t[a * n + b]])
        a, b = ys[-2], ys[-1]
        ys.append(t[a * n + t[a * n + b]])
    return xs, ys, pre, period


def pair_depth(t, n, x, y):
    """Return ``None`` if both chains hold forever, else the first failing link.

    The failing link is ``(link, chain, a, b, product)`` where chain 8 is
    x0 >= y1 >= x2 ..., chain 9 is y0 >= x1 >= y2 ..., the link asks
    ``b <= a`` and ``product = b . a`` is nonzero.
    """
    xs, ys, pre, period = pair_terms(t, n, x, y)
    for k in range(pre + 2 * period):
        if k % 2 == 0:
            pairs = ((8, xs[k], ys[k + 1]), (9, ys[k], xs[k + 1]))
        else:
            pairs = ((8, ys[k], xs[k + 1]), (9, xs[k], ys[k + 1]))
        for chain, a, b in pairs:
            prod = t[b * n + a]
            if prod != 0:
                return (k, chain, a, b, prod)
    return None


def first_bounded_pair(t, n):
    """First pair (x, y) in row-major order whose chains cannot be prolonged."""
    for x in range(n):
        for y in range(n):
            if pair_depth(t, n, x, y) is not None:
                return (x, y)
    return None


def free_cells(n):
    """Row-major cells not forced by row 0, column 0 or the diagonal."""
    return [x * n + y for x in range(1, n) for y in range(1, n) if x != y]


def _evaluate(t, n, n3, inst):
    """Evaluate one axiom instance on a partial table.

    Returns the cell the instance waits on (>= 0), ``_OK`` or ``_FAIL``.
    For axiom (1) the three cells fixed by the instance itself come first,
    earliest unknown one in fill order; then the two cells picked by values.
    """
    if inst < n3:
        p, rem = divmod(inst, n * n)
        q, r = divmod(rem, n)
        c1 = p * n + q
        c2 = r * n + q
        c3 = p * n + r
        a = t[c1]
        b = t[c2]
        c = t[c3]
        if a < 0 or b < 0 or c < 0:
            return min(cell for cell in (c1, c2, c3) if t[cell] < 0)
        c4 = a * n + b
        d = t[c4]
        if d < 0:
            return c4
        c5 = d * n + c
        e = t[c5]
        if e < 0:
            return c5
        return _OK if e == 0 else _FAIL
    p, q = divmod(inst - n3, n)
    c1 = p * n + q
    a = t[c1]
    if a < 0:
        return c1
    c2 = p * n + a
    b = t[c2]
    if b < 0:
        return c2
    c3 = b * n + q
    c = t[c3]
    if c < 0:
        return c3
    return _OK if c == 0 else _FAIL


def _allowed(t, n, n3, inst, cell):
    """Bitmask of values for ``cell`` that do not decide ``inst`` as failed."""
    mask = 0
    for v in range(n):
        t[cell] = v
        if _evaluate(t, n, n3, inst) != _FAIL:
            mask |= 1 << v
    t[cell] = UNKNOWN
    return mask


def search(n, prefix=(), stop_depth=-1, monotone=False):
    """Backtracking over the free cells of an order-``n`` table.

    Cells are filled row-major with values ``0..n-1``. Each instance of
    axioms (1) and (2) sits on the watch list of the first unknown cell its
    evaluation hits and is re-evaluated once that cell is assigned. While
    it waits, it narrows that cell's domain to the values that can still
    make the instance come out 0; an empty domain prunes the branch.
    Axiom (5) removes 0 from the transposed cell on every zero assignment.

    The first ``len(prefix)`` cells are forced to the given values. With
    ``stop_depth >= 0`` the search stops after that many cells and emits
    the value tuples of the surviving prefixes instead of full tables.

    With ``monotone`` only labelings that extend the order are produced:
    ``x.y != 0`` whenever ``x > y``. Every algebra has such a labeling (a
    topological sort with 0 first), so this is enough when only
    isomorphism classes are wanted.

    Returns ``(results, nodes)``; ``nodes`` counts accepted assignments
    beyond the forced prefix.
    """
    cells = free_cells(n)
    ncells = len(cells)
    if stop_depth < 0 or stop_depth > ncells:
        stop_depth = ncells
    n3 = n ** 3
    t = [UNKNOWN] * (n * n)
    for x in range(n):
        t[x] = 0
        t[x * n] = x
        t[x * n + x] = 0
    domain = [(1 << n) - 1] * (n * n)
    if monotone:
        for c in cells:
            x, y = divmod(c, n)
            if x > y:
                domain[c] &= ~1
    watch = [[] for _ in range(n * n)]
    for inst in range(n3 + n * n):
        res = _evaluate(t, n, n3, inst)
        if res == _FAIL:
            return [], 0
        if res >= 0:
            watch[res].append(inst)
            domain[res] &= _allowed(t, n, n3, inst, res)
    if any(domain[c] == 0 for c in cells):
        return [], 0

    results = []
    values = [0] * ncells
    nodes = 0
    nfixed = len(prefix)
    # undo log: ("w", cell) pops a watch entry, ("d", cell, old) restores a domain
    trail = []

    def assign(c, v):
        mark = len(trail)
        t[c] = v
        if v == 0:
            x, y = divmod(c, n)
            tc = y * n + x
            if t[tc] == 0:
                t[c] = UNKNOWN
                return None
            if t[tc] < 0 and domain[tc] & 1:
                trail.append(("d", tc, domain[tc]))
                domain[tc] &= ~1
                if not domain[tc]:
                    undo(c, mark)
                    return None
        for inst in watch[c]:
            res = _evaluate(t, n, n3, inst)
            if res >= 0:
                watch[res].append(inst)
                trail.append(("w", res))
                old = domain[res]
                allowed = _allowed(t, n, n3, inst, res)
                if old & allowed != old:
                    trail.append(("d", res, old))
                    domain[res] = old & allowed
                    if not domain[res]:
                        undo(c, mark)
                        return None
            elif res == _FAIL:
                undo(c, mark)
                return None
        return mark

    def undo(c, mark):
        while len(trail) > mark:
            entry = trail.pop()
            if entry[0] == "w":
                watch[entry[1]].pop()
            else:
                domain[entry[1]] = entry[2]
        t[c] = UNKNOWN

    def dfs(depth):
        nonlocal nodes
        if depth == stop_depth:
            results.append(tuple(values[:depth]) if stop_depth < ncells else tuple(t))
            return
        c = cells[depth]
        if depth < nfixed:
            choices = (prefix[depth],) if domain[c] >> prefix[depth] & 1 else ()
        else:
            choices = [v for v in range(n) if domain[c] >> v & 1]
        for v in choices:
            mark = assign(c, v)
            if mark is None:
                continue
            if depth >= nfixed:
                nodes += 1
            values[depth] = v
            dfs(depth + 1)
            undo(c, mark)

    dfs(0)
    return results, nodes


def automorphism_count(t, n):
    """Number of 0-fixing permutations that preserve the table."""
    count = 0
    for perm in permutations(range(1, n)):
        p = (0,) + perm
        if all(p[t[x * n + y]] == t[p[x] * n + p[y]] for x in range(n) for y in range(n)):
            count += 1
    return count
