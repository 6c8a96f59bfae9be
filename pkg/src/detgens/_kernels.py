"""Hot loops of the Groebner engine.

The pair-criterion kernels work on exponent matrices and come in a numba
``@njit`` version and a pure-numpy version with the same contract.  The
division kernel ``nb_reduce`` works on packed int64 monomials over GF(p);
its fallback is the dict-based reduction in :mod:`detgens.groebner`.
``DETGENS_NUMBA=0`` in the environment forces the fallbacks; otherwise
numba is used when it imports.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

HAVE_NUMBA = numba is not None
_CHUNK = 256


def wanted() -> bool:
    return HAVE_NUMBA and os.environ.get("DETGENS_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")


# ----------------------------------------------------------------------
# numpy path
# ----------------------------------------------------------------------

def np_pair_candidates(L: np.ndarray, h: int):
    """New pairs (g, h), g < h, surviving the Gebauer-Moeller M/F criteria.

    Returns ``(keep, lcms)``: ``keep[g]`` is True when the pair is to be
    installed (coprime pairs are never kept), ``lcms[g]`` the pair lcm.
    """
    lh = L[h]
    Lg = L[:h]
    lcms = np.maximum(Lg, lh)
    coprime = ~np.any((Lg > 0) & (lh > 0), axis=1)
    idx = np.arange(h)
    dominated = np.zeros(h, dtype=bool)
    for start in range(0, h, _CHUNK):
        blk = lcms[start:start + _CHUNK]
        # div[a, g]: lcm of pair (start+a) divides lcm of pair g
        div = np.all(blk[:, None, :] <= lcms[None, :, :], axis=2)
        eq = np.all(blk[:, None, :] == lcms[None, :, :], axis=2)
        rows = idx[start:start + _CHUNK]
        earlier = (rows[:, None] < idx[None, :]) | coprime[start:start + _CHUNK, None]
        dom = (div & ~eq) | (eq & earlier)
        dom[rows - start, rows] = False
        dominated |= dom.any(axis=0)
    return ~coprime & ~dominated, lcms


def np_stale_pairs(L: np.ndarray, pi: np.ndarray, pj: np.ndarray, plcm: np.ndarray, h: int):
    """Mask of old pairs (i, j) killed by the new leading monomial L[h].

    A pair dies when L[h] divides its lcm and lcm(i, h), lcm(j, h) both
    differ from it.
    """
    if len(pi) == 0:
        return np.zeros(0, dtype=bool)
    lh = L[h]
    div = np.all(lh <= plcm, axis=1)
    ne_i = np.any(np.maximum(L[pi], lh) != plcm, axis=1)
    ne_j = np.any(np.maximum(L[pj], lh) != plcm, axis=1)
    return div & ne_i & ne_j


# ----------------------------------------------------------------------
# numba path
# ----------------------------------------------------------------------

if HAVE_NUMBA:
    @numba.njit(cache=True)
    def nb_pair_candidates(L, h):
        N = L.shape[1]
        lcms = np.empty((h, N), np.int64)
        coprime = np.empty(h, np.bool_)
        for g in range(h):
            cp = True
            for v in range(N):
                a = L[g, v]
                b = L[h, v]
                lcms[g, v] = a if a > b else b
                if a != 0 and b != 0:
                    cp = False
            coprime[g] = cp
        keep = np.zeros(h, np.bool_)
        for g in range(h):
            if coprime[g]:
                continue
            dom = False
            for g2 in range(h):
                if g2 == g:
                    continue
                divides = True
                equal = True
                for v in range(N):
                    if lcms[g2, v] > lcms[g, v]:
                        divides = False
                        break
                    if lcms[g2, v] != lcms[g, v]:
                        equal = False
                if divides and (not equal or g2 < g or coprime[g2]):
                    dom = True
                    break
            keep[g] = not dom
        return keep, lcms

    @numba.njit(cache=True)
    def nb_stale_pairs(L, pi, pj, plcm, h):
        P = pi.shape[0]
        N = L.shape[1]
        out = np.zeros(P, np.bool_)
        for k in range(P):
            div = True
            for v in range(N):
                if L[h, v] > plcm[k, v]:
                    div = False
                    break
            if not div:
                continue
            ne_i = False
            ne_j = False
            for v in range(N):
                li = L[pi[k], v] if L[pi[k], v] > L[h, v] else L[h, v]
                lj = L[pj[k], v] if L[pj[k], v] > L[h, v] else L[h, v]
                if li != plcm[k, v]:
                    ne_i = True
                if lj != plcm[k, v]:
                    ne_j = True
            out[k] = ne_i and ne_j
        return out

    @numba.njit(cache=True)
    def _push(hk, hs, n, k, s):
        i = n
        while i > 0:
            par = (i - 1) >> 1
            if hk[par] >= k:
                break
            hk[i] = hk[par]
            hs[i] = hs[par]
            i = par
        hk[i] = k
        hs[i] = s

    @numba.njit(cache=True)
    def _pop(hk, hs, n):
        # drop the top of a heap holding n entries
        n -= 1
        k = hk[n]
        s = hs[n]
        i = 0
        while True:
            c = 2 * i + 1
            if c >= n:
                break
            if c + 1 < n and hk[c + 1] > hk[c]:
                c += 1
            if hk[c] <= k:
                break
            hk[i] = hk[c]
            hs[i] = hs[c]
            i = c
        hk[i] = k
        hs[i] = s

    @numba.njit(cache=True)
    def _grow(a):
        b = np.empty(2 * a.shape[0], a.dtype)
        b[:a.shape[0]] = a
        return b

    @numba.njit(cache=True)
    def nb_reduce(fk, fc, s_g, s_m, s_d, lms, offs, tk, tc, nb, guard, fmask, p, full, cache, max_ops):
        """Remainder of f + sum_q s_m[q] * x^s_d[q] * tail(g_{s_g[q]}) modulo the basis.

        Monomials are packed int64 keys whose integer order is the monomial
        order (largest first in every array); basis element g is monic with
        leading key ``lms[g]`` and tail ``tk/tc[offs[g]:offs[g+1]]``.  Each
        quotient term becomes a stream over one tail and a heap merges the
        streams (Monagan-Pearce division).  ``cache`` maps a key to 1 + its
        divisor index, or to minus the number of basis elements known not to
        divide it.  With ``full`` false only the leading term is reduced.
        Returns ``(keys, coeffs, done)``; ``done`` is False when more than
        ``max_ops`` (if positive) tail terms were scheduled for merging.
        """
        cap = 64
        st_m = np.empty(cap, np.int64)
        st_d = np.empty(cap, np.int64)
        st_pos = np.empty(cap, np.int64)
        st_end = np.empty(cap, np.int64)
        hk = np.empty(cap, np.int64)
        hs = np.empty(cap, np.int64)
        ns = 0
        hn = 0
        for q in range(s_g.shape[0]):
            g = s_g[q]
            if ns == st_m.shape[0]:
                st_m = _grow(st_m)
                st_d = _grow(st_d)
                st_pos = _grow(st_pos)
                st_end = _grow(st_end)
                hk = _grow(hk)
                hs = _grow(hs)
            st_m[ns] = s_m[q]
            st_d[ns] = s_d[q]
            st_pos[ns] = offs[g]
            st_end[ns] = offs[g + 1]
            if offs[g] < offs[g + 1]:
                _push(hk, hs, hn, tk[offs[g]] + s_d[q], ns)
                hn += 1
            ns += 1
        nf = fk.shape[0]
        rk = np.empty(nf + 64, np.int64)
        rc = np.empty(nf + 64, np.int64)
        rn = 0
        fi = 0
        reducing = True
        ops = 0
        while True:
            if fi < nf:
                k = fk[fi]
                if hn > 0 and hk[0] > k:
                    k = hk[0]
            elif hn > 0:
                k = hk[0]
            else:
                break
            acc = 0
            if fi < nf and fk[fi] == k:
                acc = fc[fi]
                fi += 1
            while hn > 0 and hk[0] == k:
                s = hs[0]
                _pop(hk, hs, hn)
                hn -= 1
                acc = (acc + st_m[s] * tc[st_pos[s]]) % p
                st_pos[s] += 1
                if st_pos[s] < st_end[s]:
                    _push(hk, hs, hn, tk[st_pos[s]] + st_d[s], s)
                    hn += 1
            if acc == 0:
                continue
            g = -1
            if reducing:
                v = cache.get(k, 0)
                if v > 0:
                    g = v - 1
                else:
                    kb = k & fmask
                    for idx in range(-v, nb):
                        if (((lms[idx] & fmask) | guard) - kb) & guard == guard:
                            g = idx
                            break
                    cache[k] = g + 1 if g >= 0 else -nb
            if g >= 0:
                ops += offs[g + 1] - offs[g]
                if max_ops > 0 and ops > max_ops:
                    return rk[:0].copy(), rc[:0].copy(), False
                if ns == st_m.shape[0]:
                    st_m = _grow(st_m)
                    st_d = _grow(st_d)
                    st_pos = _grow(st_pos)
                    st_end = _grow(st_end)
                    hk = _grow(hk)
                    hs = _grow(hs)
                st_m[ns] = p - acc
                st_d[ns] = k - lms[g]
                st_pos[ns] = offs[g]
                st_end[ns] = offs[g + 1]
                if offs[g] < offs[g + 1]:
                    _push(hk, hs, hn, tk[offs[g]] + st_d[ns], ns)
                    hn += 1
                ns += 1
            else:
                if rn == rk.shape[0]:
                    rk = _grow(rk)
                    rc = _grow(rc)
                rk[rn] = k
                rc[rn] = acc
                rn += 1
                if not full:
                    reducing = False
        return rk[:rn].copy(), rc[:rn].copy(), True
else:  # pragma: no cover
    nb_pair_candidates = None
    nb_stale_pairs = None
    nb_reduce = None


def pair_candidates(L, h, use_numba: bool | None = None):
    if wanted() if use_numba is None else (use_numba and HAVE_NUMBA):
        return nb_pair_candidates(L, h)
    return np_pair_candidates(L, h)


def stale_pairs(L, pi, pj, plcm, h, use_numba: bool | None = None):
    if wanted() if use_numba is None else (use_numba and HAVE_NUMBA):
        return nb_stale_pairs(L, pi, pj, plcm, h)
    return np_stale_pairs(L, pi, pj, plcm, h)


def new_cache():
    """Empty divisor cache for :func:`nb_reduce`."""
    return numba.typed.Dict.empty(numba.types.int64, numba.types.int64)


def backend() -> str:
    return "numba" if wanted() else "numpy"
