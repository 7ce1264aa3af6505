"""Plethysm and the two inverse generating series built from it.

Everything runs through the power-sum basis: substitution by a power sum
p_k is the ring map sending p_j to p_{jk}, and an arbitrary plethysm is the
corresponding contraction of character data.  Constant inner shapes need no
special casing -- substituting into the empty power-sum monomial leaves it
fixed, which reproduces the usual evaluation-at-a-scalar rules.

Two graded series appear all over the vertex-operator layer:

  row series    M_g(z) = sum_r z^r  h_r[g]
  column series L_g(z) = sum_r z^r (-1)^r e_r[g]

for an arbitrary (possibly inhomogeneous, possibly constant) shape g.  They
are mutually inverse: M_g(z) L_g(z) = 1.
"""

from dataclasses import dataclass, field

from .partitions import conjugate, partition, partitions_of, weight
from .schurring import (SymFunc, PowerExpr, from_power, product_schur_pair,
                        to_power)

DEFAULT_DEGREE_BUDGET = 14


class DegreeBudgetError(Exception):
    """Raised when a plethysm would exceed the configured degree budget."""


def _power_substitute(k, expr):
    """Apply the ring map p_j -> p_{j*k} to a power-sum expression."""
    return PowerExpr({tuple(k * x for x in rho): a for rho, a in expr.c.items()})


def plethysm(outer, inner, budget=DEFAULT_DEGREE_BUDGET):
    """Plethysm outer[inner] of two SymFunc values (outer may be given as a
    partition, meaning the corresponding Schur function).

    Raises DegreeBudgetError when the result degree deg(outer)*deg(inner)
    would exceed `budget`; pass budget=None to disable the check.
    """
    if not isinstance(outer, SymFunc):
        outer = SymFunc.schur(partition(outer))
    if budget is not None and outer.degree() * inner.degree() > budget:
        raise DegreeBudgetError(
            "plethysm degree %d * %d exceeds budget %d"
            % (outer.degree(), inner.degree(), budget))
    gp = to_power(inner)
    sub = {}
    out = PowerExpr()
    for rho, b in to_power(outer).c.items():
        term = PowerExpr.one()
        for k in rho:
            if k not in sub:
                sub[k] = _power_substitute(k, gp)
            term = term * sub[k]
        out = out + term.scale(b)
    return from_power(out)


# #### graded inverse series ####

_series_memo = {}


def _shape_key(shape):
    return tuple(sorted(shape.c.items()))


def series_term(family, shape, r):
    """Degree-r term of the row series ('M') or column series ('L') of the
    given shape: h_r[shape] resp. (-1)^r e_r[shape].  Memoized."""
    if family not in ("M", "L"):
        raise ValueError("series family must be 'M' or 'L'")
    if r < 0:
        return SymFunc.zero()
    if r == 0:
        return SymFunc.one()
    key = (family, _shape_key(shape), r)
    found = _series_memo.get(key)
    if found is not None:
        return found
    if family == "M":
        val = plethysm((r,), shape, budget=None)
    else:
        val = plethysm((1,) * r, shape, budget=None).scale((-1) ** r)
    _series_memo[key] = val
    return val


@dataclass(eq=False)
class SeriesSpec:
    """One of the two graded series attached to a concrete shape.

    family is 'M' (row series) or 'L' (column series); shape is any SymFunc.
    The label only feeds reprs and reports.
    """

    family: str
    shape: SymFunc
    label: str = ""

    @classmethod
    def plain(cls, family, sigma):
        sigma = partition(sigma)
        return cls(family, SymFunc.schur(sigma),
                   "%s[%s]" % (family, ",".join(map(str, sigma))))

    @classmethod
    def skew(cls, family, pi, kappa):
        pi, kappa = partition(pi), partition(kappa)
        shape = SymFunc.schur(pi).skew_by(kappa)
        return cls(family, shape,
                   "%s[%s]/[%s]" % (family, ",".join(map(str, pi)),
                                    ",".join(map(str, kappa))))

    def term(self, r):
        return series_term(self.family, self.shape, r)

    def __repr__(self):
        return "SeriesSpec(%s)" % (self.label or
                                   "%s of %r" % (self.family, self.shape))


def series_perp_apply(spec, f):
    """Graded components of applying the adjoint of a series to f:
    returns {r: SymFunc} over the grades with nonzero value.

    A constant shape in the M family acts as a nonzero scalar in every
    grade, so its graded support is infinite and this raises instead.
    """
    d = spec.shape.degree()
    if d == 0:
        if spec.family == "M" and spec.shape:
            raise ValueError("row series of a constant shape has no finite "
                             "graded expansion; use a windowed factor chain")
        rmax = 1
    else:
        rmax = f.degree() // d
    out = {}
    for r in range(rmax + 1):
        val = f.skew_by(spec.term(r))
        if val:
            out[r] = val
    return out


# #### deformed Schur functions and branching ####

def _require_nonempty(pi):
    pi = partition(pi)
    if not pi:
        raise ValueError("shape must be a nonempty partition")
    return pi


def pi_schur(pi, lam):
    """Deformed Schur function: the full adjoint column series of shape pi
    applied to the Schur function of lam.  Generally inhomogeneous."""
    pi = _require_nonempty(pi)
    lam = partition(lam)
    return pi_unbranch(pi, SymFunc.schur(lam))


def dual_pi_schur(pi, lam):
    """Companion family: (-1)^|lam| times the deformed Schur function of the
    conjugate of lam."""
    pi = _require_nonempty(pi)
    lam = partition(lam)
    return pi_schur(pi, conjugate(lam)).scale((-1) ** weight(lam))


def pi_branch(pi, f):
    """Adjoint row series of shape pi applied to f (all grades summed).
    Inverse of pi_unbranch."""
    pi = _require_nonempty(pi)
    shape = SymFunc.schur(pi)
    out = SymFunc.zero()
    for r in range(f.degree() // weight(pi) + 1):
        out = out + f.skew_by(series_term("M", shape, r))
    return out


def pi_unbranch(pi, f):
    """Adjoint column series of shape pi applied to f (all grades summed).
    Inverse of pi_branch."""
    pi = _require_nonempty(pi)
    shape = SymFunc.schur(pi)
    out = SymFunc.zero()
    for r in range(f.degree() // weight(pi) + 1):
        out = out + f.skew_by(series_term("L", shape, r))
    return out


def cauchy_pi_schur(pi, lam):
    """Deformed Schur function assembled from explicit column-series
    coefficients and Littlewood-Richardson numbers computed on the product
    side (no skewing): sum over nu of L-coefficient(pi, nu) times
    c^lam_{mu,nu} s_mu."""
    pi = _require_nonempty(pi)
    lam = partition(lam)
    shape = SymFunc.schur(pi)
    out = {}
    for r in range(weight(lam) // weight(pi) + 1):
        for nu, lco in series_term("L", shape, r).c.items():
            rest = weight(lam) - weight(nu)
            for mu in partitions_of(rest):
                c = product_schur_pair(mu, nu).get(lam, 0)
                if c:
                    v = out.get(mu, 0) + lco * c
                    if v:
                        out[mu] = v
                    else:
                        out.pop(mu, None)
    return SymFunc(out)


def cauchy_dual_pi_schur(pi, lam):
    """Companion family assembled the same way from the conjugate shape:
    uses column-series coefficients when |pi| is even and row-series
    coefficients when |pi| is odd, with the sign (-1)^|mu| and a conjugate
    on the output label."""
    pi = _require_nonempty(pi)
    lam = partition(lam)
    family = "L" if weight(pi) % 2 == 0 else "M"
    shape = SymFunc.schur(conjugate(pi))
    out = {}
    for r in range(weight(lam) // weight(pi) + 1):
        for nu, co in series_term(family, shape, r).c.items():
            rest = weight(lam) - weight(nu)
            for mup in partitions_of(rest):
                c = product_schur_pair(mup, nu).get(lam, 0)
                if c:
                    mu = conjugate(mup)
                    sign = (-1) ** weight(mu)
                    v = out.get(mu, 0) + sign * co * c
                    if v:
                        out[mu] = v
                    else:
                        out.pop(mu, None)
    return SymFunc(out)
