"""Independent cross-check path: brute-force symmetric polynomials in a
finite alphabet.

Everything here works on explicit monomials.  A polynomial is a dict mapping
a packed exponent key to an int coefficient: 4 bits per variable, variable 0
in the most significant nibble, so integer comparison of keys is
lexicographic comparison of monomials.  That limits this module to at most
15 variables and per-variable exponents below 16 -- plenty for the
cross-check weights, and enforced loudly.

Schur polynomials come from a one-letter-at-a-time horizontal-strip dynamic
program (summing over semistandard tableaux), decomposition back into Schur
terms peels the lexicographically greatest monomial, and the deformed Schur
functions are read off literally from truncated products of their generating
kernels.  None of the character/power-sum machinery of schurring is used
here; only the partitions module is shared.
"""

import math

import numpy as np

from .partitions import (conjugate, partition, subpartitions, weight)
from .schurring import SymFunc

_MAXVARS = 15


def _pack(exps, nvars):
    key = 0
    for i in range(nvars):
        e = exps[i] if i < len(exps) else 0
        if e > 15:
            raise OverflowError("exponent %d does not fit a nibble" % e)
        key |= e << (4 * (nvars - 1 - i))
    return key


def _unpack(key, nvars):
    return tuple((key >> (4 * (nvars - 1 - i))) & 15 for i in range(nvars))


def _degree(key, nvars):
    d = 0
    for _ in range(nvars):
        d += key & 15
        key >>= 4
    return d


def poly_add_scaled(acc, other, c=1, offset=0):
    """acc += c * other shifted by the monomial `offset` (packed key).
    Mutates and returns acc."""
    for k, v in other.items():
        nk = k + offset
        nv = acc.get(nk, 0) + c * v
        if nv:
            acc[nk] = nv
        else:
            acc.pop(nk, None)
    return acc


def poly_mul(A, B):
    """Product of two packed polynomials (caller guarantees nibbles cannot
    overflow, i.e. combined per-variable exponents stay below 16)."""
    if len(A) * len(B) > 1_500_000:
        return _poly_mul_big(A, B)
    out = {}
    if len(A) < len(B):
        A, B = B, A
    for kb, vb in B.items():
        poly_add_scaled(out, A, vb, kb)
    return out


def _poly_mul_big(A, B):
    """Blocked numpy path for large products: outer-add the packed keys,
    reduce each block with unique+bincount, then reduce the concatenation.
    Exactness: block sums stay far below 2**52, so float64 accumulation is
    exact; asserted anyway."""
    ak = np.fromiter(A.keys(), np.int64, len(A))
    av = np.fromiter(A.values(), np.int64, len(A))
    bk = np.fromiter(B.keys(), np.int64, len(B))
    bv = np.fromiter(B.values(), np.int64, len(B))
    block = max(1, 2_000_000 // max(1, len(B)))
    ks, ws = [], []
    for i in range(0, len(A), block):
        kk = (ak[i:i + block, None] + bk[None, :]).ravel()
        vv = (av[i:i + block, None] * bv[None, :]).ravel().astype(np.float64)
        u, inv = np.unique(kk, return_inverse=True)
        w = np.bincount(inv, weights=vv)
        ks.append(u)
        ws.append(w)
    u, inv = np.unique(np.concatenate(ks), return_inverse=True)
    w = np.bincount(inv, weights=np.concatenate(ws))
    if w.size and np.abs(w).max() >= 2.0 ** 52:
        raise OverflowError("coefficient too large for the numpy fast path")
    out = {}
    for k, v in zip(u.tolist(), np.rint(w).astype(np.int64).tolist()):
        if v:
            out[k] = v
    return out


# #### Schur polynomials by the semistandard-tableau dynamic program ####

_horiz_memo = {}


def _horiz_preds(nu):
    """Proper subshapes nu' of nu with nu/nu' a horizontal strip, as
    (nu', strip size) pairs."""
    found = _horiz_memo.get(nu)
    if found is not None:
        return found
    n = len(nu)
    out = []

    def rec(i, prefix):
        if i == n:
            cand = partition(prefix)
            if cand != nu:
                out.append((cand, sum(nu) - sum(cand)))
            return
        low = nu[i + 1] if i + 1 < n else 0
        for v in range(nu[i], low - 1, -1):
            rec(i + 1, prefix + [v])

    rec(0, [])
    _horiz_memo[nu] = out
    return out


_schur_poly_memo = {}


def _letter_pass(states, order, letter_key):
    """One dynamic-programming pass absorbing a single letter (a packed
    monomial).  In-place: states are visited by decreasing weight, so each
    update reads only not-yet-updated smaller states."""
    for nu in order:
        tgt = states[nu]
        for nup, k in _horiz_preds(nu):
            src = states[nup]
            if src:
                poly_add_scaled(tgt, src, 1, k * letter_key)


def schur_poly(lam, nvars):
    """The Schur polynomial of lam in nvars variables as a packed dict."""
    lam = partition(lam)
    if nvars > _MAXVARS:
        raise OverflowError("at most %d packed variables" % _MAXVARS)
    if len(lam) > nvars:
        return {}
    key = (lam, nvars)
    found = _schur_poly_memo.get(key)
    if found is not None:
        return found
    subs = subpartitions(lam)
    states = {nu: {} for nu in subs}
    states[()] = {0: 1}
    order = sorted(subs, key=weight, reverse=True)
    order = [nu for nu in order if nu]
    for j in range(nvars):
        _letter_pass(states, order, 1 << (4 * (nvars - 1 - j)))
    res = states[lam]
    _schur_poly_memo[key] = res
    return res


def is_symmetric_sampled(poly, nvars):
    """Spot-check symmetry under a few adjacent variable transpositions."""
    if nvars < 2 or not poly:
        return True
    pairs = {(0, 1), (nvars - 2, nvars - 1), (0, nvars - 1)}
    for i, j in pairs:
        si, sj = 4 * (nvars - 1 - i), 4 * (nvars - 1 - j)
        swapped = {}
        for k, v in poly.items():
            a, b = (k >> si) & 15, (k >> sj) & 15
            nk = k - (a << si) - (b << sj) + (a << sj) + (b << si)
            swapped[nk] = v
        if swapped != poly:
            return False
    return True


def decompose(poly, nvars):
    """Write a symmetric packed polynomial as a Schur combination.

    Peels the lexicographically greatest monomial (whose exponents must be
    weakly decreasing, or the input was not symmetric) until nothing is
    left.  Symmetry itself is spot-checked by sampled transpositions first.
    """
    poly = dict(poly)
    if not is_symmetric_sampled(poly, nvars):
        raise ValueError("polynomial is not symmetric in its variables")
    out = {}
    while poly:
        top = max(poly)
        exps = _unpack(top, nvars)
        lead = partition(exps)  # raises when not weakly decreasing
        c = poly[top]
        out[lead] = c
        poly_add_scaled(poly, schur_poly(lead, nvars), -c)
    return SymFunc(out)


# #### cross-check entry points ####

def oracle_product(mu, nu):
    """Product of two Schur functions, by multiplying explicit Schur
    polynomials in |mu|+|nu| variables and decomposing."""
    mu, nu = partition(mu), partition(nu)
    n = weight(mu) + weight(nu)
    if n == 0:
        return SymFunc.one()
    if n > _MAXVARS:
        raise OverflowError("combined weight %d exceeds the packed range" % n)
    return decompose(poly_mul(schur_poly(mu, n), schur_poly(nu, n)), n)


def oracle_plethysm(mu, nu):
    """Plethysm mu[nu] by running the tableau dynamic program whose letters
    are the explicit monomials of the inner Schur polynomial (with
    multiplicity), then decomposing."""
    mu, nu = partition(mu), partition(nu)
    w = weight(mu) * weight(nu)
    if w > _MAXVARS:
        raise OverflowError("plethysm weight %d exceeds the packed range" % w)
    n = max(w, 1)
    letters = sorted(schur_poly(nu, n).items(), reverse=True)
    subs = subpartitions(mu)
    states = {kappa: {} for kappa in subs}
    states[()] = {0: 1}
    order = sorted(subs, key=weight, reverse=True)
    order = [kappa for kappa in order if kappa]
    for key, mult in letters:
        for _ in range(mult):
            _letter_pass(states, order, key)
    return decompose(states[mu], n)


# ---- literal generating kernels for the deformed Schur functions ----
#
# Two alphabets share one packed key: X in the high n nibbles, Z in the low
# n nibbles.  Keys add like monomials as long as no nibble overflows, which
# the weight caps guarantee.

_hprod_memo = {}


def _hprod(dpart, n):
    """Product of one-row Schur polynomials h_{d_1} h_{d_2} ... in n
    variables."""
    key = (dpart, n)
    found = _hprod_memo.get(key)
    if found is not None:
        return found
    acc = {0: 1}
    for k in dpart:
        acc = poly_mul(acc, schur_poly((k,), n))
    _hprod_memo[key] = acc
    return acc


def _compositions(total_max, n):
    """All exponent vectors of length n with sum <= total_max."""
    out = []

    def rec(i, left, prefix):
        if i == n:
            out.append(tuple(prefix))
            return
        for v in range(left + 1):
            rec(i + 1, left - v, prefix + [v])

    rec(0, total_max, [])
    return out

_row_kernel_memo = {}


def _row_kernel_layers(n, cap):
    """The two-alphabet row kernel 1/prod(1 - x_k z_l), truncated to
    Z-degree <= cap and grouped by Z-degree: the Z^d coefficient is the
    h-product over the entries of d."""
    key = (n, cap)
    found = _row_kernel_memo.get(key)
    if found is not None:
        return found
    shift = 4 * n
    layers = {d: {} for d in range(cap + 1)}
    for d in _compositions(cap, n):
        zkey = _pack(d, n)
        xpoly = _hprod(partition(sorted(d, reverse=True)), n)
        layer = layers[sum(d)]
        for xk, c in xpoly.items():
            layer[(xk << shift) | zkey] = c
    _row_kernel_memo[key] = layers
    return layers


_col_kernel_memo = {}


def _col_kernel_layers(n, cap):
    """The two-alphabet column kernel prod(1 - x_k z_l), truncated to
    Z-degree <= cap (X-degree matches Z-degree term by term) and grouped by
    Z-degree."""
    key = (n, cap)
    found = _col_kernel_memo.get(key)
    if found is not None:
        return found
    shift = 4 * n
    acc = {0: 1}
    for k in range(n):
        for l in range(n):
            mono = (1 << (shift + 4 * (n - 1 - k))) | (1 << (4 * (n - 1 - l)))
            new = dict(acc)
            for kk, vv in acc.items():
                if _degree(kk, n) < cap:  # low block = Z-degree
                    nk = kk + mono
                    nv = new.get(nk, 0) - vv
                    if nv:
                        new[nk] = nv
                    else:
                        new.pop(nk, None)
            acc = new
    layers = {d: {} for d in range(cap + 1)}
    for kk, vv in acc.items():
        layers[_degree(kk, n)][kk] = vv
    _col_kernel_memo[key] = layers
    return layers


def _series_factor_layers(base, n, cap, inverted):
    """Truncated product over the monomials T (with multiplicity m) of the
    packed polynomial `base`: of (1 - Z^T)^m, or its inverse when
    `inverted`.  Returns {z_degree: {key: coeff}}."""
    acc = {0: 1}
    for t, m in sorted(base.items(), reverse=True):
        dt = _degree(t, n)
        if dt == 0:
            raise ValueError("constant monomial in a series kernel")
        terms = []
        j = 0
        while j * dt <= cap:
            if inverted:
                c = math.comb(m + j - 1, j)
            else:
                c = (-1) ** j * math.comb(m, j)
            terms.append((j * t, c))
            j += 1
        new = {}
        for kk, vv in acc.items():
            room = cap - _degree(kk, n)
            for off, c in terms:
                if _degree(off, n) > room:
                    break
                nk = kk + off
                nv = new.get(nk, 0) + vv * c
                if nv:
                    new[nk] = nv
                else:
                    new.pop(nk, None)
        acc = new
    layers = {d: {} for d in range(cap + 1)}
    for kk, vv in acc.items():
        layers[_degree(kk, n)][kk] = vv
    return layers


def _extract_schur_z(kernel_layers, zfactor_layers, n, lam):
    """Coefficient of the Z-side Schur polynomial of lam in the product of
    two layered two-alphabet polynomials, as an X-side packed polynomial."""
    w = weight(lam)
    zmap = {}
    for za, A in kernel_layers.items():
        B = zfactor_layers.get(w - za)
        if not B or not A:
            continue
        for ka, va in A.items():
            for kb, vb in B.items():
                nk = ka + kb
                nv = zmap.get(nk, 0) + va * vb
                if nv:
                    zmap[nk] = nv
                else:
                    zmap.pop(nk, None)
    # regroup by Z-monomial
    shift = 4 * n
    zmask = (1 << shift) - 1
    grouped = {}
    for kk, vv in zmap.items():
        grouped.setdefault(kk & zmask, {})[kk >> shift] = vv
    target = {}
    while grouped:
        ztop = max(grouped)
        kappa = partition(_unpack(ztop, n))
        xc = grouped.pop(ztop)
        if kappa == lam:
            target = xc
        zschur = schur_poly(kappa, n)
        for zk, mz in zschur.items():
            if zk == ztop:
                continue
            cell = grouped.setdefault(zk, {})
            for xk, v in xc.items():
                nv = cell.get(xk, 0) - mz * v
                if nv:
                    cell[xk] = nv
                else:
                    cell.pop(xk, None)
            if not cell:
                grouped.pop(zk, None)
    return target


def oracle_pi_schur(pi, lam):
    """Deformed Schur function read literally from its generating kernel:
    the coefficient of the Z-side Schur polynomial of lam in
    (row kernel of XZ) * (column series of pi in Z)."""
    pi, lam = partition(pi), partition(lam)
    if not pi:
        raise ValueError("shape must be a nonempty partition")
    w = weight(lam)
    n = max(w, 1)
    if 2 * n > _MAXVARS and w > 0:
        raise OverflowError("weight %d exceeds the two-alphabet range" % w)
    kernel = _row_kernel_layers(n, w)
    zfac = _series_factor_layers(schur_poly(pi, n), n, w, inverted=False)
    return decompose(_extract_schur_z(kernel, zfac, n, lam), n)


def oracle_dual_pi_schur(pi, lam):
    """Companion family read literally from its generating kernel: the
    coefficient of the Z-side Schur polynomial of lam in (column kernel of
    XZ) * (series of the conjugate shape in Z) -- the row series when |pi|
    is odd, the column series when it is even."""
    pi, lam = partition(pi), partition(lam)
    if not pi:
        raise ValueError("shape must be a nonempty partition")
    w = weight(lam)
    n = max(w, 1)
    if 2 * n > _MAXVARS and w > 0:
        raise OverflowError("weight %d exceeds the two-alphabet range" % w)
    kernel = _col_kernel_layers(n, w)
    zfac = _series_factor_layers(schur_poly(conjugate(pi), n), n, w,
                                 inverted=(weight(pi) % 2 == 1))
    return decompose(_extract_schur_z(kernel, zfac, n, lam), n)
