"""Pure-Python hot kernels.

Everything here works on raw integers so the compiled twin in
``_ckernels.pyx`` can mirror it line for line.

A dyadic rational is a pair ``(n, k)`` meaning ``n / 2**k`` with ``k >= 0``
and either ``k == 0`` or ``n`` odd.  A graph vertex is a 4-tuple
``(xn, xk, yn, yk)``.  A segment slope is stored as its base-2 exponent.
"""

BACKEND = "python"


def normalize(n, k):
    if n == 0:
        return 0, 0
    if k <= 0:
        return n << -k, 0
    tz = (n & -n).bit_length() - 1
    if tz == 0:
        return n, k
    if tz > k:
        tz = k
    return n >> tz, k - tz


def add(an, ak, bn, bk):
    if ak > bk:
        return an + (bn << (ak - bk)), ak
    if bk > ak:
        return (an << (bk - ak)) + bn, bk
    return normalize(an + bn, ak)


def sub(an, ak, bn, bk):
    if ak > bk:
        return an - (bn << (ak - bk)), ak
    if bk > ak:
        return (an << (bk - ak)) - bn, bk
    return normalize(an - bn, ak)


def mul(an, ak, bn, bk):
    return normalize(an * bn, ak + bk)


def mul_pow2(n, k, e):
    if n == 0:
        return 0, 0
    k -= e
    if k <= 0:
        return n << -k, 0
    return normalize(n, k)


def cmp(an, ak, bn, bk):
    if ak > bk:
        bn <<= ak - bk
    elif bk > ak:
        an <<= bk - ak
    return (an > bn) - (an < bn)


def log2_ratio(dyn, dyk, dxn, dxk):
    """Exponent ``s`` with ``dy == dx * 2**s``, or None.  Both must be > 0."""
    if dyn <= 0 or dxn <= 0:
        return None
    ty = (dyn & -dyn).bit_length() - 1
    tx = (dxn & -dxn).bit_length() - 1
    if (dyn >> ty) != (dxn >> tx):
        return None
    return ty - dyk - tx + dxk


def _locate(pts, xn, xk):
    # largest i with pts[i].x <= x; caller guarantees pts[0].x <= x
    lo = 0
    hi = len(pts) - 1
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        p = pts[mid]
        if cmp(p[0], p[1], xn, xk) <= 0:
            lo = mid
        else:
            hi = mid - 1
    return lo


def interp(pts, slopes, xn, xk):
    """Evaluate the polyline ``pts`` at an x inside its span."""
    i = _locate(pts, xn, xk)
    p = pts[i]
    if i == len(pts) - 1:
        return p[2], p[3]
    dn, dk = sub(xn, xk, p[0], p[1])
    if dn == 0:
        return p[2], p[3]
    dn, dk = mul_pow2(dn, dk, slopes[i])
    return add(p[2], p[3], dn, dk)


def eval_f(pts, slopes, l, r, xn, xk):
    """Evaluate an element of F given by vertices and integer tails."""
    if not pts:
        return add(xn, xk, l, 0)
    p = pts[0]
    if cmp(xn, xk, p[0], p[1]) <= 0:
        return add(xn, xk, l, 0)
    p = pts[-1]
    if cmp(xn, xk, p[0], p[1]) >= 0:
        return add(xn, xk, r, 0)
    return interp(pts, slopes, xn, xk)


def eval_periodic(pts, slopes, lon, lok, hin, hik, xn, xk):
    """Evaluate a map with ``g(x+1) == g(x)+1`` for ``x <= lo`` and ``x >= hi``.

    ``pts`` must span exactly ``[lo, hi + 1]``.
    """
    en, ek = pts[-1][0], pts[-1][1]
    if cmp(xn, xk, en, ek) > 0:
        dn, dk = sub(xn, xk, hin, hik)
        m = dn >> dk
        yn, yk = interp(pts, slopes, *sub(xn, xk, m, 0))
        return add(yn, yk, m, 0)
    if cmp(xn, xk, lon, lok) < 0:
        dn, dk = sub(xn, xk, lon, lok)
        m = -(dn >> dk)
        yn, yk = interp(pts, slopes, *add(xn, xk, m, 0))
        return sub(yn, yk, m, 0)
    return interp(pts, slopes, xn, xk)


def swap(pts):
    """Vertices of the inverse graph."""
    return [(p[2], p[3], p[0], p[1]) for p in pts]


def sort_unique(vals):
    """Sort ``(n, k)`` pairs by value and drop repeats."""
    if not vals:
        return []
    big = max(v[1] for v in vals)
    keyed = {}
    for v in vals:
        keyed[v[0] << (big - v[1])] = v
    return [keyed[key] for key in sorted(keyed)]


def segment_slopes(pts):
    """Slope exponent of each segment; None where the slope is not 2**s."""
    out = []
    for i in range(len(pts) - 1):
        a = pts[i]
        b = pts[i + 1]
        dxn, dxk = sub(b[0], b[1], a[0], a[1])
        dyn, dyk = sub(b[2], b[3], a[2], a[3])
        out.append(log2_ratio(dyn, dyk, dxn, dxk))
    return out


def prune(pts, slopes, tails):
    """Drop vertices where incoming and outgoing slope agree.

    With ``tails`` true both ends are joined to slope-1 tails and may be
    dropped too; otherwise the end vertices are always kept.
    """
    n = len(pts)
    if n == 0:
        return [], []
    keep = []
    new_slopes = []
    for i in range(n):
        if i == 0:
            if not tails:
                keep.append(pts[0])
                if n > 1:
                    new_slopes.append(slopes[0])
                continue
            s_in = 0
        else:
            s_in = slopes[i - 1]
        if i == n - 1:
            if not tails:
                keep.append(pts[i])
                continue
            s_out = 0
        else:
            s_out = slopes[i]
        if s_in != s_out:
            keep.append(pts[i])
            if i < n - 1:
                new_slopes.append(s_out)
    if tails and keep:
        new_slopes = new_slopes[: len(keep) - 1]
    return keep, new_slopes


def compose_f(fp, fs, fl, fr, hp, hs, hl, hr):
    """Vertices and slopes of ``f o h`` for f, h in F (unpruned tails l, r summed)."""
    cands = [(p[0], p[1]) for p in hp]
    if fp:
        ip = swap(hp)
        is_ = [-s for s in hs]
        for p in fp:
            cands.append(eval_f(ip, is_, -hl, -hr, p[0], p[1]))
    cands = sort_unique(cands)
    pts = []
    for c in cands:
        un, uk = eval_f(hp, hs, hl, hr, c[0], c[1])
        yn, yk = eval_f(fp, fs, fl, fr, un, uk)
        pts.append((c[0], c[1], yn, yk))
    return prune(pts, segment_slopes(pts), True)


def periodic_vertices(pts, lon, lok, hin, hik, an, ak, bn, bk):
    """All x in ``[a, b]`` where the periodic map may break, plus a and b."""
    out = [(an, ak), (bn, bk)]
    for p in pts:
        if cmp(p[0], p[1], an, ak) >= 0 and cmp(p[0], p[1], bn, bk) <= 0:
            out.append((p[0], p[1]))
    h1n, h1k = add(hin, hik, 1, 0)
    seeds = [(hin, hik)]
    for p in pts:
        if cmp(p[0], p[1], hin, hik) > 0 and cmp(p[0], p[1], h1n, h1k) < 0:
            seeds.append((p[0], p[1]))
    for wn, wk in seeds:
        # w + m in [a, b] with m >= 1
        dn, dk = sub(an, ak, wn, wk)
        m0 = -((-dn) >> dk)
        if m0 < 1:
            m0 = 1
        dn, dk = sub(bn, bk, wn, wk)
        m1 = dn >> dk
        for m in range(m0, m1 + 1):
            out.append(add(wn, wk, m, 0))
    l1n, l1k = add(lon, lok, 1, 0)
    seeds = [(l1n, l1k)]
    for p in pts:
        if cmp(p[0], p[1], lon, lok) > 0 and cmp(p[0], p[1], l1n, l1k) < 0:
            seeds.append((p[0], p[1]))
    for wn, wk in seeds:
        # w - m in [a, b] with m >= 1
        dn, dk = sub(wn, wk, bn, bk)
        m0 = -((-dn) >> dk)
        if m0 < 1:
            m0 = 1
        dn, dk = sub(wn, wk, an, ak)
        m1 = dn >> dk
        for m in range(m0, m1 + 1):
            out.append(sub(wn, wk, m, 0))
    return sort_unique(out)


def conj_vertices(fp, fs, fl, fr, gp, gs, glo, ghi, ip, is_, ilo, ihi, an, ak, bn, bk):
    """Vertices of ``g o f o g^-1`` over ``[a, b]``.

    ``g`` is periodic with bounds ``glo``/``ghi``; ``ip``/``is_`` with
    ``ilo``/``ihi`` encode its inverse the same way.
    """
    ua = eval_periodic(ip, is_, ilo[0], ilo[1], ihi[0], ihi[1], an, ak)
    ub = eval_periodic(ip, is_, ilo[0], ilo[1], ihi[0], ihi[1], bn, bk)
    # breaks of g^-1 inside [a, b] are images of g-breaks in [ua, ub]
    xs = periodic_vertices(gp, glo[0], glo[1], ghi[0], ghi[1], ua[0], ua[1], ub[0], ub[1])
    for p in fp:
        if cmp(p[0], p[1], ua[0], ua[1]) >= 0 and cmp(p[0], p[1], ub[0], ub[1]) <= 0:
            xs.append((p[0], p[1]))
    va = eval_f(fp, fs, fl, fr, ua[0], ua[1])
    vb = eval_f(fp, fs, fl, fr, ub[0], ub[1])
    fi = swap(fp)
    fis = [-s for s in fs]
    for v in periodic_vertices(gp, glo[0], glo[1], ghi[0], ghi[1], va[0], va[1], vb[0], vb[1]):
        xs.append(eval_f(fi, fis, -fl, -fr, v[0], v[1]))
    pts = []
    for u in sort_unique(xs):
        vn, vk = eval_f(fp, fs, fl, fr, u[0], u[1])
        wn, wk = eval_periodic(gp, gs, glo[0], glo[1], ghi[0], ghi[1], vn, vk)
        yn, yk = eval_periodic(gp, gs, glo[0], glo[1], ghi[0], ghi[1], u[0], u[1])
        pts.append((yn, yk, wn, wk))
    return pts
