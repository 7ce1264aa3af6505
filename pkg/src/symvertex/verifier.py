"""Exhaustive machine checks of the operator identities within finite ranges.

Each suite enumerates a deterministic case list, evaluates every case with
exact arithmetic, and returns a VerificationReport.  Case-level parallelism
(`jobs`) never changes the report: results are collected in enumeration
order.  Every suite takes perturb=True, which wires in one deliberate
mutation that must produce failures — a guard against vacuous passes.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .config import CliConfig
from .jsonform import laurent_to_obj, state_to_obj, symfunc_to_obj
from .oracle import oracle_dual_pi_schur, oracle_pi_schur
from .partitions import (conjugate, format_partition, hooks_inside, partition,
                         partitions_of, partitions_up_to, weight)
from .plethysm import (cauchy_dual_pi_schur, cauchy_pi_schur, dual_pi_schur,
                       pi_branch, pi_schur, pi_unbranch)
from .schurring import PowerExpr, SymFunc, to_power
from .vertexops import (ChargedState, FactorChain, LaurentMap, NormalProduct,
                        _kind_is_dual, _vertex_coefficient,
                        annihilation_zero_word, apply_chain,
                        creation_zero_word, make_factor, mode,
                        normal_ordered_string, string_chain, vertex_string,
                        zero_mode_normal_form, ZeroModeNormalForm)


# #### reports ####

@dataclass
class VerificationReport:
    """Outcome of one suite run; failures empty iff the suite passed."""

    suite: str
    config: dict
    cases_run: int
    failures: list
    elapsed_ms: int

    def passed(self):
        return not self.failures

    def to_obj(self):
        return {"suite": self.suite,
                "config": self.config,
                "cases_run": self.cases_run,
                "failures": self.failures,
                "elapsed_ms": self.elapsed_ms}

    @classmethod
    def from_obj(cls, obj):
        return cls(suite=obj["suite"], config=obj["config"],
                   cases_run=int(obj["cases_run"]),
                   failures=list(obj["failures"]),
                   elapsed_ms=int(obj["elapsed_ms"]))

    def summary_lines(self, max_failures=5):
        lines = ["suite %s: %d cases, %d failures, %d ms -> %s"
                 % (self.suite, self.cases_run, len(self.failures),
                    self.elapsed_ms, "PASS" if self.passed() else "FAIL")]
        for rec in self.failures[:max_failures]:
            lines.append("  FAIL %s" % (rec["inputs"],))
        if len(self.failures) > max_failures:
            lines.append("  ... and %d more failures"
                         % (len(self.failures) - max_failures))
        return lines


def _execute(suite, config_obj, keys, case_fn, jobs):
    t0 = time.perf_counter()
    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(case_fn, keys))
    else:
        results = [case_fn(k) for k in keys]
    failures = [r for r in results if r is not None]
    elapsed = int((time.perf_counter() - t0) * 1000)
    return VerificationReport(suite, config_obj, len(keys), failures, elapsed)


def _laurent_diff(a, b):
    """Restrict two LaurentMaps to the exponents where they disagree."""
    da, db = LaurentMap(a.vars), LaurentMap(b.vars)
    for e in sorted(set(a.data) | set(b.data)):
        va, vb = a.data.get(e), b.data.get(e)
        if va != vb:
            if va is not None:
                da.data[e] = va
            if vb is not None:
                db.data[e] = vb
    return da, db


def _default_pis(max_weight=4):
    return [p for w in range(1, max_weight + 1) for p in partitions_of(w)]


# #### suite: reordering ####

REORDERING_CASES = ("MM", "LM", "ML", "LL")


def _reordering_sides(case, pi, perturb=False):
    """LHS and RHS chains of one adjoint-past-multiplication identity.

    Case 'XY' moves the adjoint X-series of shape pi in z across the
    multiplication Y-series in w.  Moving across a row series re-indexes by
    row skews of the same family; moving across a column series re-indexes
    by column skews whose family alternates with the column height.
    """
    vs = ("z", "w")
    perp, mul = case[0], case[1]
    spi = SymFunc.schur(pi)
    s1 = SymFunc.schur((1,))
    lhs = FactorChain(vs, [make_factor("skew", perp, spi, (1, 0), vs),
                           make_factor("multiply", mul, s1, (0, 1), vs)])
    rfacts = [make_factor("multiply", mul, s1, (0, 1), vs)]
    tops = range((pi[0] if mul == "M" else len(pi)) + 1)
    for k in tops:
        if mul == "M":
            shape = spi if k == 0 else spi.skew_by((k,))
            fam = perp
        else:
            shape = spi if k == 0 else spi.skew_by((1,) * k)
            fam = perp if k % 2 == 0 else ("L" if perp == "M" else "M")
        if shape:
            rfacts.append(make_factor("skew", fam, shape, (1, k), vs))
    if perturb:
        f = rfacts[-1]
        flipped = "L" if f.family == "M" else "M"
        rfacts[-1] = make_factor(f.action, flipped, f.shape, f.exps, vs)
    return lhs, FactorChain(vs, rfacts)


def verify_reordering(config=None, cases=REORDERING_CASES, pis=None,
                      window=(0, 4), test_degree=5, perturb=False, jobs=None):
    """Coefficientwise equality of the four adjoint/multiplication
    reorderings on every Schur input up to test_degree."""
    config = (config or CliConfig()).validate()
    jobs = config.jobs if jobs is None else jobs
    pis = _default_pis() if pis is None else [partition(p) for p in pis]
    lams = partitions_up_to(test_degree)
    win = {"z": tuple(window), "w": tuple(window)}
    keys = [(case, pi, lam) for case in cases for pi in pis for lam in lams]
    sides = {}

    def case_fn(key):
        case, pi, lam = key
        pair = sides.get((case, pi))
        if pair is None:
            pair = sides.setdefault((case, pi),
                                    _reordering_sides(case, pi, perturb))
        lhs_chain, rhs_chain = pair
        f = SymFunc.schur(lam)
        lhs = apply_chain(lhs_chain, f, win)
        rhs = apply_chain(rhs_chain, f, win)
        if lhs == rhs:
            return None
        dl, dr = _laurent_diff(lhs, rhs)
        return {"inputs": {"case": case, "pi": format_partition(pi),
                           "lambda": format_partition(lam),
                           "window": list(window)},
                "lhs": laurent_to_obj(dl), "rhs": laurent_to_obj(dr)}

    cfg = {"cases": list(cases), "pis": [format_partition(p) for p in pis],
           "window": list(window), "test_degree": test_degree,
           "perturb": perturb}
    return _execute("reordering", cfg, keys, case_fn, jobs)


# #### suite: zero modes ####

ZERO_MODE_IDENTITIES = (
    ("create-create",
     ("create", "z", "create", "w"),
     ZeroModeNormalForm(prefactor=(("w", -2), ("z", -1)),
                        alpha=(("w", 1), ("z", 1)), shift=2)),
    ("annihilate-annihilate",
     ("annihilate", "z", "annihilate", "w"),
     ZeroModeNormalForm(prefactor=(("w", -1),),
                        alpha=(("w", -1), ("z", -1)), shift=-2)),
    ("create-annihilate",
     ("create", "z", "annihilate", "w"),
     ZeroModeNormalForm(prefactor=(("w", 1), ("z", -1)),
                        alpha=(("w", -1), ("z", 1)), shift=0)),
    ("annihilate-create",
     ("annihilate", "w", "create", "z"),
     ZeroModeNormalForm(prefactor=(),
                        alpha=(("w", -1), ("z", 1)), shift=0)),
)


def _zero_word(spec):
    kind_a, var_a, kind_b, var_b = spec
    mk = {"create": creation_zero_word, "annihilate": annihilation_zero_word}
    return mk[kind_a](var_a) + mk[kind_b](var_b)


def _word_action(word, c):
    """Direct effect of a zero-mode word on a sector of charge c:
    (monomial exponents, final charge)."""
    exps = {}
    cur = c
    for op in reversed(word):
        if op[0] == "shift":
            cur += op[1]
        else:
            _, v, const, alpha = op
            exps[v] = exps.get(v, 0) + const + alpha * cur
    return {v: e for v, e in exps.items() if e}, cur


def _form_obj(nf):
    return {"prefactor": {v: e for v, e in nf.prefactor},
            "alpha": {v: e for v, e in nf.alpha},
            "shift": nf.shift}


def verify_zero_modes(config=None, charge_range=None, perturb=False,
                      jobs=None):
    """The four ordered forms of products of charge-shift words, checked
    symbolically and on every concrete charge in the range."""
    config = (config or CliConfig()).validate()
    jobs = config.jobs if jobs is None else jobs
    lo, hi = charge_range or config.charge_range
    keys = []
    for name, _, _ in ZERO_MODE_IDENTITIES:
        keys.append((name, "form"))
        keys.extend((name, c) for c in range(lo, hi + 1))
    by_name = {name: (spec, expected)
               for name, spec, expected in ZERO_MODE_IDENTITIES}

    def case_fn(key):
        name, which = key
        spec, expected = by_name[name]
        word = _zero_word(spec)
        if which == "form":
            got = zero_mode_normal_form(word)
            if got == expected:
                return None
            return {"inputs": {"identity": name, "check": "normal-form"},
                    "lhs": _form_obj(got), "rhs": _form_obj(expected)}
        c = which
        lhs = _word_action(word, c)
        if perturb:
            # deliberately read the charge before the shift
            e = dict(expected.prefactor)
            for v, a in expected.alpha:
                e[v] = e.get(v, 0) + a * c
            rhs = ({v: x for v, x in e.items() if x}, c + expected.shift)
        else:
            rhs = expected.exponents_at(c)
        if lhs == rhs:
            return None
        return {"inputs": {"identity": name, "charge": c},
                "lhs": {"exponents": lhs[0], "charge": lhs[1]},
                "rhs": {"exponents": rhs[0], "charge": rhs[1]}}

    cfg = {"charge_range": [lo, hi], "perturb": perturb}
    return _execute("zero-modes", cfg, keys, case_fn, jobs)


# #### suite: clifford ####

DEFAULT_CLIFFORD_PIS = ((), (2,), (1, 1), (3,), (2, 1), (4,))

_CLIFFORD_RELATIONS = ("create-create", "annihilate-annihilate", "mixed")


def _mode_with_convention(pi, kind, m, state, post_shift):
    """mode(), optionally with the deliberately wrong convention that reads
    the extraction index off the shifted charge."""
    if not post_shift:
        return mode(pi, kind, m, state)
    dual = _kind_is_dual(kind)
    out = ChargedState()
    for c, f in state.sectors.items():
        tgt = (c - 1) if dual else (c + 1)
        j = (tgt - 1 - m) if dual else (-m - tgt)
        acc = SymFunc.zero()
        for lam, co in f.c.items():
            acc = acc + _vertex_coefficient(pi, dual, j, lam).scale(co)
        if acc:
            out = out + ChargedState({tgt: acc})
    return out


def _anticommutator_with_convention(pi, kind_a, m, kind_b, n, state,
                                    post_shift):
    def act(kind, idx, st):
        return _mode_with_convention(pi, kind, idx, st, post_shift)

    return act(kind_a, m, act(kind_b, n, state)) + \
        act(kind_b, n, act(kind_a, m, state))


def verify_clifford(config=None, pis=DEFAULT_CLIFFORD_PIS, mode_range=None,
                    degree_bound=5, charges=(-1, 0, 1), perturb=False,
                    jobs=None):
    """Anticommutators of the mode families: like kinds vanish, mixed kinds
    give the identity exactly when the mode indices cancel."""
    config = (config or CliConfig()).validate()
    jobs = config.jobs if jobs is None else jobs
    pis = [partition(p) for p in pis]
    lo, hi = mode_range or config.mode_range
    lams = partitions_up_to(degree_bound)
    keys = []
    for pi in pis:
        for rel in _CLIFFORD_RELATIONS:
            for m in range(lo, hi + 1):
                for n in range(m if rel != "mixed" else lo, hi + 1):
                    for lam in lams:
                        for c in charges:
                            keys.append((pi, rel, m, n, lam, c))
    kinds = {"create-create": ("X", "X"),
             "annihilate-annihilate": ("Xstar", "Xstar"),
             "mixed": ("X", "Xstar")}

    def case_fn(key):
        pi, rel, m, n, lam, c = key
        ka, kb = kinds[rel]
        st = ChargedState.vacuum(c, SymFunc.schur(lam))
        got = _anticommutator_with_convention(pi, ka, m, kb, n, st, perturb)
        expected = st if (rel == "mixed" and m + n == 0) else ChargedState()
        if got == expected:
            return None
        return {"inputs": {"pi": format_partition(pi), "relation": rel,
                           "m": m, "n": n, "lambda": format_partition(lam),
                           "charge": c},
                "lhs": state_to_obj(got), "rhs": state_to_obj(expected)}

    cfg = {"pis": [format_partition(p) for p in pis],
           "mode_range": [lo, hi], "degree_bound": degree_bound,
           "charges": list(charges), "perturb": perturb}
    return _execute("clifford", cfg, keys, case_fn, jobs)


# #### suite: multivertex ####

def verify_multivertex(config=None, pis=((2,), (2, 1)), ms=(2, 3),
                       duals=(False, True), inputs=None, window=None,
                       perturb=False, jobs=None):
    """Sequential strings of like vertex operators against their
    normal-ordered form, coefficientwise on a window."""
    config = (config or CliConfig()).validate()
    jobs = config.jobs if jobs is None else jobs
    pis = [partition(p) for p in pis]
    if inputs is None:
        inputs = (("1", SymFunc.one()), ("s[1]", SymFunc.schur((1,))))
    if window is None:
        window = config.window if isinstance(config.window, tuple) else (-3, 3)
    keys = [(pi, m, dual, label)
            for pi in pis for m in ms for dual in duals
            for label, _ in inputs]
    by_label = dict(inputs)

    def case_fn(key):
        pi, m, dual, label = key
        f = by_label[label]
        win = {"z%d" % (i + 1): tuple(window) for i in range(m)}
        lhs = apply_chain(string_chain(pi, m, dual=dual), f, win)
        np = normal_ordered_string(pi, m, dual=dual)
        if perturb:
            # deliberately drop the first scalar prefactor
            np = NormalProduct(np.vars, np.prefactors[1:], np.chain)
        rhs = np.apply(f, win)
        if lhs == rhs:
            return None
        dl, dr = _laurent_diff(lhs, rhs)
        return {"inputs": {"pi": format_partition(pi), "m": m, "dual": dual,
                           "state": label, "window": list(window)},
                "lhs": laurent_to_obj(dl), "rhs": laurent_to_obj(dr)}

    cfg = {"pis": [format_partition(p) for p in pis], "ms": list(ms),
           "duals": list(duals), "inputs": [label for label, _ in inputs],
           "window": list(window), "perturb": perturb}
    return _execute("multivertex", cfg, keys, case_fn, jobs)


# #### suite: route agreement (CLI name: theorem2) ####

_ROUTE_CHECKS = ("routes", "dual-routes", "conjugate-pairing",
                 "branch-roundtrip")


def verify_route_agreement(config=None, pis=None, max_weight=6, max_length=3,
                           include_oracle=True, include_vertex=True,
                           perturb=False, jobs=None):
    """All independent constructions of the deformed Schur functions agree:
    adjoint series, coefficient-extraction, vertex strings, and the literal
    monomial oracle; plus the conjugate pairing between the two families and
    the branching round trip."""
    config = (config or CliConfig()).validate()
    jobs = config.jobs if jobs is None else jobs
    pis = _default_pis() if pis is None else [partition(p) for p in pis]
    lams = partitions_up_to(max_weight, max_length=max_length)
    keys = [(pi, lam, check) for pi in pis for lam in lams
            for check in _ROUTE_CHECKS]

    def routes_for(pi, lam, dual):
        if dual:
            out = [("perp", dual_pi_schur(pi, lam)),
                   ("cauchy", cauchy_dual_pi_schur(pi, lam))]
            if include_vertex:
                out.append(("vertex", vertex_string(pi, lam, dual=True)))
            if include_oracle:
                out.append(("oracle", oracle_dual_pi_schur(pi, lam)))
        else:
            out = [("perp", pi_schur(pi, lam)),
                   ("cauchy", cauchy_pi_schur(pi, lam))]
            if include_vertex:
                out.append(("vertex", vertex_string(pi, lam)))
            if include_oracle:
                out.append(("oracle", oracle_pi_schur(pi, lam)))
        return out

    def case_fn(key):
        pi, lam, check = key
        inputs = {"pi": format_partition(pi), "lambda": format_partition(lam),
                  "check": check}
        if check in ("routes", "dual-routes"):
            vals = routes_for(pi, lam, check == "dual-routes")
            base_name, base = vals[0]
            for name, val in vals[1:]:
                if val != base:
                    inputs["routes"] = "%s vs %s" % (base_name, name)
                    return {"inputs": inputs, "lhs": symfunc_to_obj(base),
                            "rhs": symfunc_to_obj(val)}
            return None
        if check == "conjugate-pairing":
            sign = (-1) ** (weight(lam) + (1 if perturb else 0))
            lhs = cauchy_dual_pi_schur(pi, lam)
            rhs = pi_schur(pi, conjugate(lam)).scale(sign)
            if lhs == rhs:
                return None
            return {"inputs": inputs, "lhs": symfunc_to_obj(lhs),
                    "rhs": symfunc_to_obj(rhs)}
        s = SymFunc.schur(lam)
        back = pi_branch(pi, pi_schur(pi, lam))
        there = pi_unbranch(pi, pi_branch(pi, s))
        if back == s and there == s:
            return None
        bad = back if back != s else there
        return {"inputs": inputs, "lhs": symfunc_to_obj(bad),
                "rhs": symfunc_to_obj(s)}

    cfg = {"pis": [format_partition(p) for p in pis],
           "max_weight": max_weight, "max_length": max_length,
           "include_oracle": include_oracle,
           "include_vertex": include_vertex, "perturb": perturb}
    return _execute("theorem2", cfg, keys, case_fn, jobs)


# #### suite: inverse series ####

def _power_plethysm_pk(k, gp):
    """Power-sum plethysm p_k applied to a power expression: every index
    is scaled by k (constants are fixed points)."""
    out = PowerExpr()
    out.c = {tuple(sorted((k * x for x in rho), reverse=True)): c
             for rho, c in gp.c.items()}
    return out


def _series_power_terms(shape, rmax):
    """(row_terms, col_terms): power-basis expansions of the degree-r terms
    of the row series and the signed column series of the shape, r <= rmax,
    via the Newton recurrences seeded with q_k = p_k plethysm of the shape."""
    gp = to_power(shape)
    qs = [None] + [_power_plethysm_pk(k, gp) for k in range(1, rmax + 1)]
    row = [PowerExpr.one()]
    col = [PowerExpr.one()]
    for r in range(1, rmax + 1):
        acc_row = PowerExpr()
        acc_col = PowerExpr()
        for k in range(1, r + 1):
            acc_row = acc_row + qs[k] * row[r - k]
            acc_col = acc_col + qs[k] * col[r - k]
        row.append(acc_row.scale(Fraction(1, r)))
        col.append(acc_col.scale(Fraction(-1, r)))
    return row, col


def verify_inverse_series(config=None, max_sigma_weight=3, max_zweight=12,
                          hook_pis=None, perturb=False, jobs=None):
    """The row and signed-column series of any shape are mutually inverse:
    plain shapes up to max_sigma_weight, and the hook-indexed skew shapes
    paired on the diagonal of the mixed two-vertex product, with the formal
    weight of each pair capped at max_zweight."""
    config = (config or CliConfig()).validate()
    jobs = config.jobs if jobs is None else jobs
    sigmas = [p for w in range(0, max_sigma_weight + 1)
              for p in partitions_of(w)]
    hook_pis = (_default_pis() if hook_pis is None
                else [partition(p) for p in hook_pis])
    keys = []
    shapes = {}

    def add_shape(tag, shape, grade):
        skey = tuple(sorted(shape.c.items()))
        rmax = max_zweight // grade
        prev = shapes.get(skey)
        if prev is None or prev[1] < rmax:
            shapes[skey] = (shape, rmax, None)
        return skey, rmax

    for sigma in sigmas:
        grade = max(weight(sigma), 1)
        skey, rmax = add_shape("series", SymFunc.schur(sigma), grade)
        keys.extend(("series", format_partition(sigma), skey, r)
                    for r in range(1, rmax + 1))
    for pi in hook_pis:
        for hook in hooks_inside(pi):
            shape = SymFunc.schur(pi).skew_by(hook)
            if not shape:
                continue
            grade = weight(hook)
            skey, rmax = add_shape("hooks", shape, grade)
            keys.extend(("hooks",
                         "%s/%s" % (format_partition(pi),
                                    format_partition(hook)), skey, r)
                        for r in range(1, rmax + 1))

    def get_terms(skey):
        shape, rmax, cached = shapes[skey]
        if cached is None:
            cached = _series_power_terms(shape, rmax)
            shapes[skey] = (shape, rmax, cached)
        return cached

    def case_fn(key):
        tag, label, skey, r = key
        row, col = get_terms(skey)
        total = PowerExpr()
        for a in range(r + 1):
            b = col[r - a]
            if perturb:
                # deliberately strip the sign off the column terms
                b = b.scale((-1) ** (r - a))
            total = total + row[a] * b
        if not total:
            return None
        bad = {",".join(map(str, rho)): str(cv)
               for rho, cv in total.terms()}
        return {"inputs": {"part": tag, "shape": label, "r": r},
                "lhs": bad, "rhs": {}}

    cfg = {"max_sigma_weight": max_sigma_weight, "max_zweight": max_zweight,
           "hook_pis": [format_partition(p) for p in hook_pis],
           "perturb": perturb}
    return _execute("inverse-series", cfg, keys, case_fn, jobs)


SUITES = {
    "reordering": verify_reordering,
    "zero-modes": verify_zero_modes,
    "clifford": verify_clifford,
    "multivertex": verify_multivertex,
    "theorem2": verify_route_agreement,
    "inverse-series": verify_inverse_series,
}
