# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_pykernels``.  Same raw formats, same results.

Numerators stay Python ints (arbitrary precision); exponents, slopes and
indices are C integers.
"""

BACKEND = "cython"


cdef inline int _tz(object n):
    # trailing zero bits of a nonzero int
    return (n & -n).bit_length() - 1


cdef inline tuple _norm(object n, long k):
    cdef int tz
    if n == 0:
        return (0, 0)
    if k <= 0:
        return (n << -k, 0)
    tz = _tz(n)
    if tz == 0:
        return (n, k)
    if tz > k:
        tz = k
    return (n >> tz, k - tz)


cdef inline tuple _add(object an, long ak, object bn, long bk):
    if ak > bk:
        return (an + (bn << (ak - bk)), ak)
    if bk > ak:
        return ((an << (bk - ak)) + bn, bk)
    return _norm(an + bn, ak)


cdef inline tuple _sub(object an, long ak, object bn, long bk):
    if ak > bk:
        return (an - (bn << (ak - bk)), ak)
    if bk > ak:
        return ((an << (bk - ak)) - bn, bk)
    return _norm(an - bn, ak)


cdef inline tuple _mul_pow2(object n, long k, long e):
    if n == 0:
        return (0, 0)
    k -= e
    if k <= 0:
        return (n << -k, 0)
    return _norm(n, k)


cdef inline int _cmp(object an, long ak, object bn, long bk):
    if ak > bk:
        bn = bn << (ak - bk)
    elif bk > ak:
        an = an << (bk - ak)
    if an > bn:
        return 1
    if an < bn:
        return -1
    return 0


def normalize(n, k):
    return _norm(n, k)


def add(an, long ak, bn, long bk):
    return _add(an, ak, bn, bk)


def sub(an, long ak, bn, long bk):
    return _sub(an, ak, bn, bk)


def mul(an, long ak, bn, long bk):
    return _norm(an * bn, ak + bk)


def mul_pow2(n, long k, long e):
    return _mul_pow2(n, k, e)


def cmp(an, long ak, bn, long bk):
    return _cmp(an, ak, bn, bk)


cdef object _log2_ratio(object dyn, long dyk, object dxn, long dxk):
    cdef int ty, tx
    if dyn <= 0 or dxn <= 0:
        return None
    ty = _tz(dyn)
    tx = _tz(dxn)
    if (dyn >> ty) != (dxn >> tx):
        return None
    return ty - dyk - tx + dxk


def log2_ratio(dyn, long dyk, dxn, long dxk):
    return _log2_ratio(dyn, dyk, dxn, dxk)


cdef Py_ssize_t _locate(tuple pts, object xn, long xk):
    cdef Py_ssize_t lo = 0, hi = len(pts) - 1, mid
    cdef tuple p
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        p = <tuple>pts[mid]
        if _cmp(p[0], p[1], xn, xk) <= 0:
            lo = mid
        else:
            hi = mid - 1
    return lo


cdef tuple _interp(tuple pts, tuple slopes, object xn, long xk):
    cdef Py_ssize_t i = _locate(pts, xn, xk)
    cdef tuple p = <tuple>pts[i]
    cdef tuple d
    if i == len(pts) - 1:
        return (p[2], p[3])
    d = _sub(xn, xk, p[0], p[1])
    if d[0] == 0:
        return (p[2], p[3])
    d = _mul_pow2(d[0], d[1], slopes[i])
    return _add(p[2], p[3], d[0], d[1])


def interp(pts, slopes, xn, long xk):
    return _interp(tuple(pts), tuple(slopes), xn, xk)


cdef tuple _eval_f(tuple pts, tuple slopes, object l, object r, object xn, long xk):
    cdef tuple p
    if not pts:
        return _add(xn, xk, l, 0)
    p = <tuple>pts[0]
    if _cmp(xn, xk, p[0], p[1]) <= 0:
        return _add(xn, xk, l, 0)
    p = <tuple>pts[len(pts) - 1]
    if _cmp(xn, xk, p[0], p[1]) >= 0:
        return _add(xn, xk, r, 0)
    return _interp(pts, slopes, xn, xk)


def eval_f(pts, slopes, l, r, xn, long xk):
    return _eval_f(tuple(pts), tuple(slopes), l, r, xn, xk)


cdef tuple _eval_periodic(tuple pts, tuple slopes, object lon, long lok,
                          object hin, long hik, object xn, long xk):
    cdef tuple e = <tuple>pts[len(pts) - 1]
    cdef tuple d, y
    cdef object m
    if _cmp(xn, xk, e[0], e[1]) > 0:
        d = _sub(xn, xk, hin, hik)
        m = d[0] >> <long>d[1]
        d = _sub(xn, xk, m, 0)
        y = _interp(pts, slopes, d[0], d[1])
        return _add(y[0], y[1], m, 0)
    if _cmp(xn, xk, lon, lok) < 0:
        d = _sub(xn, xk, lon, lok)
        m = -(d[0] >> <long>d[1])
        d = _add(xn, xk, m, 0)
        y = _interp(pts, slopes, d[0], d[1])
        return _sub(y[0], y[1], m, 0)
    return _interp(pts, slopes, xn, xk)


def eval_periodic(pts, slopes, lon, long lok, hin, long hik, xn, long xk):
    return _eval_periodic(tuple(pts), tuple(slopes), lon, lok, hin, hik, xn, xk)


cdef list _swap(pts):
    return [(p[2], p[3], p[0], p[1]) for p in pts]


def swap(pts):
    return _swap(pts)


cdef list _sort_unique(list vals):
    cdef long big = 0
    cdef dict keyed = {}
    cdef tuple v
    if not vals:
        return []
    for v in vals:
        if <long>v[1] > big:
            big = v[1]
    for v in vals:
        keyed[v[0] << (big - <long>v[1])] = v
    return [keyed[key] for key in sorted(keyed)]


def sort_unique(vals):
    return _sort_unique(list(vals))


cdef list _segment_slopes(list pts):
    cdef list out = []
    cdef Py_ssize_t i, n = len(pts)
    cdef tuple a, b, dx, dy
    for i in range(n - 1):
        a = <tuple>pts[i]
        b = <tuple>pts[i + 1]
        dx = _sub(b[0], b[1], a[0], a[1])
        dy = _sub(b[2], b[3], a[2], a[3])
        out.append(_log2_ratio(dy[0], dy[1], dx[0], dx[1]))
    return out


def segment_slopes(pts):
    return _segment_slopes(list(pts))


cdef tuple _prune(list pts, list slopes, bint tails):
    cdef Py_ssize_t n = len(pts), i
    cdef list keep = [], new_slopes = []
    cdef object s_in, s_out
    if n == 0:
        return ([], [])
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
    return (keep, new_slopes)


def prune(pts, slopes, tails):
    return _prune(list(pts), list(slopes), bool(tails))


def compose_f(fp, fs, fl, fr, hp, hs, hl, hr):
    cdef tuple tfp = tuple(fp), tfs = tuple(fs), thp = tuple(hp), ths = tuple(hs)
    cdef list cands = [(p[0], p[1]) for p in thp]
    cdef tuple ip, is_, u, y, p, c
    cdef list pts = []
    if tfp:
        ip = tuple(_swap(thp))
        is_ = tuple([-s for s in ths])
        for p in tfp:
            cands.append(_eval_f(ip, is_, -hl, -hr, p[0], p[1]))
    for c in _sort_unique(cands):
        u = _eval_f(thp, ths, hl, hr, c[0], c[1])
        y = _eval_f(tfp, tfs, fl, fr, u[0], u[1])
        pts.append((c[0], c[1], y[0], y[1]))
    return _prune(pts, _segment_slopes(pts), True)


cdef object _ceil(tuple d):
    return -((-d[0]) >> <long>d[1])


cdef object _floor(tuple d):
    return d[0] >> <long>d[1]


cdef list _periodic_vertices(tuple pts, object lon, long lok, object hin, long hik,
                             object an, long ak, object bn, long bk):
    cdef list out = [(an, ak), (bn, bk)]
    cdef list seeds
    cdef tuple p, h1, l1, w
    cdef object m, m0, m1
    for p in pts:
        if _cmp(p[0], p[1], an, ak) >= 0 and _cmp(p[0], p[1], bn, bk) <= 0:
            out.append((p[0], p[1]))
    h1 = _add(hin, hik, 1, 0)
    seeds = [(hin, hik)]
    for p in pts:
        if _cmp(p[0], p[1], hin, hik) > 0 and _cmp(p[0], p[1], h1[0], h1[1]) < 0:
            seeds.append((p[0], p[1]))
    for w in seeds:
        m0 = _ceil(_sub(an, ak, w[0], w[1]))
        if m0 < 1:
            m0 = 1
        m1 = _floor(_sub(bn, bk, w[0], w[1]))
        m = m0
        while m <= m1:
            out.append(_add(w[0], w[1], m, 0))
            m += 1
    l1 = _add(lon, lok, 1, 0)
    seeds = [l1]
    for p in pts:
        if _cmp(p[0], p[1], lon, lok) > 0 and _cmp(p[0], p[1], l1[0], l1[1]) < 0:
            seeds.append((p[0], p[1]))
    for w in seeds:
        m0 = _ceil(_sub(w[0], w[1], bn, bk))
        if m0 < 1:
            m0 = 1
        m1 = _floor(_sub(w[0], w[1], an, ak))
        m = m0
        while m <= m1:
            out.append(_sub(w[0], w[1], m, 0))
            m += 1
    return _sort_unique(out)


def periodic_vertices(pts, lon, long lok, hin, long hik, an, long ak, bn, long bk):
    return _periodic_vertices(tuple(pts), lon, lok, hin, hik, an, ak, bn, bk)


def conj_vertices(fp, fs, fl, fr, gp, gs, glo, ghi, ip, is_, ilo, ihi, an, long ak, bn, long bk):
    cdef tuple tfp = tuple(fp), tfs = tuple(fs), tgp = tuple(gp), tgs = tuple(gs)
    cdef tuple tip = tuple(ip), tis = tuple(is_)
    cdef tuple ua, ub, va, vb, p, u, v, w, y, fi, fis
    cdef list xs, pts = []
    ua = _eval_periodic(tip, tis, ilo[0], ilo[1], ihi[0], ihi[1], an, ak)
    ub = _eval_periodic(tip, tis, ilo[0], ilo[1], ihi[0], ihi[1], bn, bk)
    xs = _periodic_vertices(tgp, glo[0], glo[1], ghi[0], ghi[1], ua[0], ua[1], ub[0], ub[1])
    for p in tfp:
        if _cmp(p[0], p[1], ua[0], ua[1]) >= 0 and _cmp(p[0], p[1], ub[0], ub[1]) <= 0:
            xs.append((p[0], p[1]))
    va = _eval_f(tfp, tfs, fl, fr, ua[0], ua[1])
    vb = _eval_f(tfp, tfs, fl, fr, ub[0], ub[1])
    fi = tuple(_swap(tfp))
    fis = tuple([-s for s in tfs])
    for v in _periodic_vertices(tgp, glo[0], glo[1], ghi[0], ghi[1], va[0], va[1], vb[0], vb[1]):
        xs.append(_eval_f(fi, fis, -fl, -fr, v[0], v[1]))
    for u in _sort_unique(xs):
        v = _eval_f(tfp, tfs, fl, fr, u[0], u[1])
        w = _eval_periodic(tgp, tgs, glo[0], glo[1], ghi[0], ghi[1], v[0], v[1])
        y = _eval_periodic(tgp, tgs, glo[0], glo[1], ghi[0], ghi[1], u[0], u[1])
        pts.append((y[0], y[1], w[0], w[1]))
    return pts
