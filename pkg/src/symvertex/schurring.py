"""Exact symmetric function arithmetic in the Schur and power-sum bases.

Coefficients are ints or fractions.Fraction; nothing here ever rounds.
Partitions index both bases and are plain tuples from the partitions module.

Products and skews run through the power-sum basis with memoized
Murnaghan-Nakayama character tables: multiplication concatenates power-sum
indices, skewing applies the adjoint of multiplication, and one character
contraction converts back to the Schur basis.  Single-row and single-column
shapes take Pieri shortcuts, which keeps the long factor chains built by
vertexops cheap.  The oracle module deliberately shares none of this
machinery.
"""

from fractions import Fraction

from .partitions import conjugate, contains, partition, partitions_of


# #### Murnaghan-Nakayama characters ####

_char_memo = {}


def charvalue(lam, rho):
    """Character of the symmetric group: Schur label lam, class label rho.

    Computed by removing a border strip of size rho[0] in all possible ways,
    tracked on the beta-number (first-column hook length) encoding.
    """
    if sum(lam) != sum(rho):
        raise ValueError("character needs |lam| == |rho|")
    if not lam:
        return 1
    key = (lam, rho)
    val = _char_memo.get(key)
    if val is not None:
        return val
    r = rho[0]
    rest = rho[1:]
    n = len(lam)
    beta = [lam[i] + (n - 1 - i) for i in range(n)]
    bset = set(beta)
    total = 0
    for j in range(n):
        b = beta[j] - r
        if b < 0 or b in bset:
            continue
        jumped = sum(1 for x in beta if b < x < beta[j])
        newbeta = sorted((x for x in beta if x != beta[j]), reverse=True)
        newbeta.append(b)
        newbeta.sort(reverse=True)
        newlam = partition(newbeta[i] - (n - 1 - i) for i in range(n))
        total += (-1) ** jumped * charvalue(newlam, rest)
    _char_memo[key] = total
    return total


def part_mults(p):
    """Multiplicity map {part value: count} of a partition."""
    m = {}
    for x in p:
        m[x] = m.get(x, 0) + 1
    return m


def centralizer_order(rho):
    """Order of the centralizer of a permutation of cycle type rho
    (the inner-product normalizer of the power-sum basis)."""
    z = 1
    for k, m in part_mults(rho).items():
        z *= k ** m
        for i in range(1, m + 1):
            z *= i
    return z


# #### Pieri rules ####

def pieri_row(lam, k):
    """Partitions obtained from lam by adding a horizontal strip of size k."""
    n = len(lam)
    out = []

    def rec(i, rem, prefix):
        if i > n:
            if rem == 0:
                out.append(partition(prefix))
            return
        low = lam[i] if i < n else 0
        cap = lam[i - 1] if i >= 1 else low + rem
        hi = min(cap, low + rem)
        for v in range(hi, low - 1, -1):
            nxt = prefix + [v]
            left = rem - (v - low)
            if i == n:
                if left == 0:
                    out.append(partition(nxt))
            else:
                rec(i + 1, left, nxt)

    if k == 0:
        return [partition(lam)]
    rec(0, k, [])
    return out


def pieri_row_down(lam, k):
    """Partitions obtained from lam by removing a horizontal strip of size k."""
    n = len(lam)
    out = []

    def rec(i, rem, prefix):
        if rem < 0:
            return
        if i == n:
            if rem == 0:
                out.append(partition(prefix))
            return
        low = lam[i + 1] if i + 1 < n else 0
        for v in range(lam[i], low - 1, -1):
            rec(i + 1, rem - (lam[i] - v), prefix + [v])

    if k == 0:
        return [partition(lam)]
    rec(0, k, [])
    return out


def pieri_col(lam, k):
    """Partitions obtained from lam by adding a vertical strip of size k
    (at most one box per row)."""
    n = len(lam)
    out = []

    def rec(i, rem, prefix, prev):
        if rem == 0:
            tail = list(lam[i:])
            out.append(partition(prefix + tail))
            return
        if i >= n + k:
            return
        base = lam[i] if i < n else 0
        if base == 0 and not prefix and i > 0:
            return
        # leave the row as is
        if i < n:
            rec(i + 1, rem, prefix + [base], base)
        # add one box
        if base + 1 <= prev:
            rec(i + 1, rem - 1, prefix + [base + 1], base + 1)

    if k == 0:
        return [partition(lam)]
    rec(0, k, [], k + (lam[0] if n else 0) + 1)
    return out


def pieri_col_down(lam, k):
    """Partitions obtained from lam by removing a vertical strip of size k."""
    n = len(lam)
    out = []

    def rec(i, rem, prefix, prev):
        if rem < 0:
            return
        if i == n:
            if rem == 0:
                out.append(partition(prefix))
            return
        for d in (0, 1):
            v = lam[i] - d
            if v < 0 or v > prev:
                continue
            rec(i + 1, rem - d, prefix + [v], v)

    if k == 0:
        return [partition(lam)]
    rec(0, k, [], lam[0] if n else 0)
    return out


def _is_column(p):
    return all(x == 1 for x in p)


# #### Schur-basis product and skew via the power-sum basis ####

_product_memo = {}
_skew_memo = {}


def product_schur_pair(mu, nu):
    """Expansion dict {lam: int} of the product of two Schur functions."""
    if not mu:
        return {nu: 1}
    if not nu:
        return {mu: 1}
    if len(nu) == 1 or _is_column(nu) or len(mu) == 1 or _is_column(mu):
        if not (len(nu) == 1 or _is_column(nu)):
            mu, nu = nu, mu
        key = (mu, nu)
        found = _product_memo.get(key)
        if found is not None:
            return found
        if len(nu) == 1:
            res = {lam: 1 for lam in pieri_row(mu, nu[0])}
        else:
            res = {lam: 1 for lam in pieri_col(mu, len(nu))}
        _product_memo[key] = res
        return res
    key = (mu, nu) if mu >= nu else (nu, mu)
    found = _product_memo.get(key)
    if found is not None:
        return found
    a, b = sum(mu), sum(nu)
    classes = {}
    for rho in partitions_of(a):
        cm = charvalue(mu, rho)
        if cm == 0:
            continue
        wm = Fraction(cm, centralizer_order(rho))
        for tau in partitions_of(b):
            cn = charvalue(nu, tau)
            if cn == 0:
                continue
            kappa = tuple(sorted(rho + tau, reverse=True))
            classes[kappa] = classes.get(kappa, 0) + wm * Fraction(cn, centralizer_order(tau))
    res = {}
    for lam in partitions_of(a + b):
        c = sum(w * charvalue(lam, kappa) for kappa, w in classes.items())
        if c:
            if c.denominator != 1:
                raise ArithmeticError("non-integer Littlewood-Richardson value")
            res[lam] = int(c)
    _product_memo[key] = res
    return res


def _power_perp_pair(rho, tau):
    """Adjoint of power-sum multiplication on a power-sum monomial:
    returns (coefficient, remaining class) or None when it vanishes."""
    mr, mt = part_mults(rho), part_mults(tau)
    coeff = 1
    for k, m in mr.items():
        have = mt.get(k, 0)
        if have < m:
            return None
        coeff *= k ** m
        for i in range(have - m + 1, have + 1):
            coeff *= i
    left = []
    for k, m in mt.items():
        left.extend([k] * (m - mr.get(k, 0)))
    return coeff, tuple(sorted(left, reverse=True))


def skew_schur_pair(mu, lam):
    """Expansion dict {nu: int} of skewing a Schur function lam by mu
    (the adjoint of multiplication by mu)."""
    if not mu:
        return {lam: 1}
    if sum(mu) > sum(lam) or not contains(lam, mu):
        return {}
    key = (mu, lam)
    found = _skew_memo.get(key)
    if found is not None:
        return found
    if len(mu) == 1:
        res = {nu: 1 for nu in pieri_row_down(lam, mu[0])}
    elif _is_column(mu):
        res = {nu: 1 for nu in pieri_col_down(lam, len(mu))}
    else:
        classes = {}
        for rho in partitions_of(sum(mu)):
            cm = charvalue(mu, rho)
            if cm == 0:
                continue
            wm = Fraction(cm, centralizer_order(rho))
            for tau in partitions_of(sum(lam)):
                cl = charvalue(lam, tau)
                if cl == 0:
                    continue
                hit = _power_perp_pair(rho, tau)
                if hit is None:
                    continue
                coeff, kappa = hit
                classes[kappa] = classes.get(kappa, 0) + wm * Fraction(cl * coeff, centralizer_order(tau))
        res = {}
        for nu in partitions_of(sum(lam) - sum(mu)):
            c = sum(w * charvalue(nu, kappa) for kappa, w in classes.items())
            if c:
                if c.denominator != 1:
                    raise ArithmeticError("non-integer skew coefficient")
                res[nu] = int(c)
    _skew_memo[key] = res
    return res


def lr_coefficient(lam, mu, nu):
    """Littlewood-Richardson coefficient: multiplicity of lam in mu * nu."""
    return product_schur_pair(mu, nu).get(lam, 0)


def multi_lr(target, sizes, columns=False):
    """Multiplicity of the Schur function `target` in a product of complete
    homogeneous (row mode) or elementary (column mode) pieces of the given
    sizes.  Row mode iterates the horizontal-strip rule, column mode the
    vertical-strip rule directly.
    """
    target = partition(target)
    if sum(sizes) != sum(target):
        return 0
    state = {(): 1}
    rule = pieri_col if columns else pieri_row
    for k in sizes:
        new = {}
        for lam, c in state.items():
            for nu in rule(lam, k):
                if contains(target, nu):
                    new[nu] = new.get(nu, 0) + c
        state = new
        if not state:
            return 0
    return state.get(target, 0)


# #### the SymFunc type ####

def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class SymFunc:
    """A finite linear combination of Schur functions with exact coefficients.

    Internally a dict {partition tuple: int | Fraction} with no explicit
    zeros.  Supports ring arithmetic, the degree-lowering skew action, the
    omega involution and the Hall inner product.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for lam, c in coeffs.items():
                if c:
                    d[partition(lam)] = _norm_coeff(c)
        self.c = d

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def schur(cls, lam):
        return cls({partition(lam): 1})

    def terms(self):
        """Items sorted by partition in reverse-lexicographic order."""
        return sorted(self.c.items(), key=lambda kv: kv[0], reverse=True)

    def coeff(self, lam):
        return self.c.get(partition(lam), 0)

    def support(self):
        return sorted(self.c, reverse=True)

    def degree(self):
        """Largest weight in the support (0 for the zero element)."""
        return max((sum(lam) for lam in self.c), default=0)

    def is_homogeneous(self):
        return len({sum(lam) for lam in self.c}) <= 1

    def graded(self):
        """Split into homogeneous components: {weight: SymFunc}."""
        parts = {}
        for lam, c in self.c.items():
            parts.setdefault(sum(lam), {})[lam] = c
        return {d: SymFunc(v) for d, v in sorted(parts.items())}

    def homogeneous_part(self, d):
        return SymFunc({lam: c for lam, c in self.c.items() if sum(lam) == d})

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, SymFunc):
            return self.c == other.c
        return NotImplemented

    def __add__(self, other):
        d = dict(self.c)
        for lam, c in other.c.items():
            v = d.get(lam, 0) + c
            if v:
                d[lam] = _norm_coeff(v)
            else:
                d.pop(lam, None)
        out = SymFunc.zero()
        out.c = d
        return out

    def __neg__(self):
        out = SymFunc.zero()
        out.c = {lam: -c for lam, c in self.c.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a):
        if not a:
            return SymFunc.zero()
        out = SymFunc.zero()
        out.c = {lam: _norm_coeff(c * a) for lam, c in self.c.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SymFunc):
            return NotImplemented
        d = {}
        for mu, a in self.c.items():
            for nu, b in other.c.items():
                ab = a * b
                for lam, m in product_schur_pair(mu, nu).items():
                    v = d.get(lam, 0) + ab * m
                    if v:
                        d[lam] = v
                    else:
                        d.pop(lam, None)
        return SymFunc(d)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def skew_by(self, other):
        """Apply the adjoint of multiplication by `other` (partition or
        SymFunc) to self."""
        if not isinstance(other, SymFunc):
            other = SymFunc.schur(other)
        d = {}
        for mu, a in other.c.items():
            for lam, b in self.c.items():
                ab = a * b
                for nu, m in skew_schur_pair(mu, lam).items():
                    v = d.get(nu, 0) + ab * m
                    if v:
                        d[nu] = v
                    else:
                        d.pop(nu, None)
        return SymFunc(d)

    def omega(self):
        """The involution transposing every indexing partition."""
        return SymFunc({conjugate(lam): c for lam, c in self.c.items()})

    def inner(self, other):
        """Hall inner product (Schur functions are orthonormal)."""
        tot = 0
        for lam, a in self.c.items():
            b = other.c.get(lam)
            if b:
                tot += a * b
        return _norm_coeff(tot)

    def __repr__(self):
        return "SymFunc(%s)" % format_symfunc(self)


def format_symfunc(f):
    """Human-readable form like 's[2,1] - 2*s[1]' ('0' when zero)."""
    if not f:
        return "0"
    bits = []
    for lam, c in f.terms():
        mono = "s[%s]" % ",".join(str(x) for x in lam)
        if c == 1:
            piece = mono
        elif c == -1:
            piece = "-" + mono
        elif isinstance(c, Fraction):
            piece = "(%s)*%s" % (c, mono)
        else:
            piece = "%d*%s" % (c, mono)
        if not bits:
            bits.append(piece)
        elif piece.startswith("-"):
            bits.append("- " + piece[1:])
        else:
            bits.append("+ " + piece)
    return " ".join(bits)


# #### the power-sum basis ####

class PowerExpr:
    """A finite linear combination of power-sum monomials, dict-backed like
    SymFunc.  Multiplication just merges indexing partitions."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for rho, c in coeffs.items():
                if c:
                    d[partition(rho)] = _norm_coeff(c)
        self.c = d

    @classmethod
    def one(cls):
        return cls({(): 1})

    def terms(self):
        return sorted(self.c.items(), key=lambda kv: kv[0], reverse=True)

    def degree(self):
        return max((sum(rho) for rho in self.c), default=0)

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, PowerExpr):
            return self.c == other.c
        return NotImplemented

    def __add__(self, other):
        d = dict(self.c)
        for rho, c in other.c.items():
            v = d.get(rho, 0) + c
            if v:
                d[rho] = _norm_coeff(v)
            else:
                d.pop(rho, None)
        out = PowerExpr()
        out.c = d
        return out

    def __neg__(self):
        out = PowerExpr()
        out.c = {rho: -c for rho, c in self.c.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a):
        if not a:
            return PowerExpr()
        out = PowerExpr()
        out.c = {rho: _norm_coeff(c * a) for rho, c in self.c.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, PowerExpr):
            return NotImplemented
        d = {}
        for rho, a in self.c.items():
            for tau, b in other.c.items():
                kappa = tuple(sorted(rho + tau, reverse=True))
                v = d.get(kappa, 0) + a * b
                if v:
                    d[kappa] = v
                else:
                    d.pop(kappa, None)
        return PowerExpr(d)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __repr__(self):
        if not self.c:
            return "PowerExpr(0)"
        bits = []
        for rho, c in self.terms():
            bits.append("%s*p[%s]" % (c, ",".join(str(x) for x in rho)))
        return "PowerExpr(%s)" % " + ".join(bits)


def power_inner(a, b):
    """Hall inner product in the power-sum basis: classes are orthogonal
    with norm the centralizer order."""
    tot = 0
    for rho, x in a.c.items():
        y = b.c.get(rho)
        if y:
            tot += centralizer_order(rho) * x * y
    return _norm_coeff(tot)


def to_power(f):
    """Schur basis -> power-sum basis."""
    d = {}
    for lam, a in f.c.items():
        for rho in partitions_of(sum(lam)):
            ch = charvalue(lam, rho)
            if ch:
                v = d.get(rho, 0) + a * Fraction(ch, centralizer_order(rho))
                if v:
                    d[rho] = v
                else:
                    d.pop(rho, None)
    return PowerExpr(d)


def from_power(expr):
    """Power-sum basis -> Schur basis."""
    by_weight = {}
    for rho, a in expr.c.items():
        by_weight.setdefault(sum(rho), {})[rho] = a
    d = {}
    for n, layer in by_weight.items():
        for lam in partitions_of(n):
            c = sum(a * charvalue(lam, rho) for rho, a in layer.items())
            if c:
                d[lam] = c
    return SymFunc(d)
