"""Brute-force verification of polar predictions on explicit witnesses.

A witness is a branch with seeded random integer coefficients in a given
equisingularity class, built as an explicit Puiseux root and its exact
minimal polynomial.  For every level l and order k the checks are:

* the Newton diagram of the hat transform of the k-th polar equals the
  symbolic derivative predicted by the splitting R^(t) + L, both on the
  region of inclination above m_l/n_l and as a whole;
* every edge above that inclination carries a squarefree edge polynomial
  (non-degeneracy), so the steep parts (M_i, N_i) can be read off and turned
  into contacts M_i/((b0/e_{l-1}) N_i) and multiplicities, which must agree
  with the predicted Z-factors;
* the weighted initial form of the hat transform of f equals
  a x^b (y^(n_l) - a_{b_l}^(n_l) x^(m_l))^(e_l) with a, b determined by the
  earlier coefficients - exactly, coefficient by coefficient;
* the vertical length of the edge at inclination exactly m_l/n_l equals the
  aggregate multiplicity of the W-factors of group l and of everything in
  deeper groups (individual W-factors are not separable without factoring).

Diagram mismatches and degenerate steep edges mean the witness is not
generic (the failure of an open Zariski condition) and the seed is retried;
any other disagreement is a hard failure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import diagram as diagram_mod
from .charclass import CharSequence, bbar, semiroot_degree
from .errors import AllSeedsDegenerate, OrderOutOfRange, OrderTooLarge, TruncationTooShort
from .polar import PolarPrediction, predict
from .puiseux import (
    BivariatePoly,
    PuiseuxSeries,
    binomial_power,
    derivative_y,
    diagram_of,
    edge_poly_squarefree,
    hat_transform,
    min_poly,
)
from .rational import fmt_q

__all__ = [
    "WitnessBranch",
    "LemmaNDResult",
    "LevelReport",
    "SeedRun",
    "VerificationReport",
    "sample_witness",
    "witness_from_root",
    "expected_hat_diagram",
    "check_lemma_nd",
    "check_initial_form",
    "verify_prediction",
    "find_generic_witness",
]

COEFF_RANGE = 9  # sampled coefficients live in [-9, 9]


@dataclass(frozen=True)
class WitnessBranch:
    cs: CharSequence
    root: PuiseuxSeries
    f: BivariatePoly
    seed: int | None
    trunc_numer_bound: int | None

    def lam(self, l: int) -> PuiseuxSeries:
        """The truncation of the root below b_l/b0, over its own index."""
        cutoff = Fraction(self.cs.b[l], self.cs.b0)
        return self.root.truncate_below(cutoff).reduce()

    def hat(self, l: int, poly: BivariatePoly | None = None) -> BivariatePoly:
        """Hat transform of ``poly`` (default: f) straightening the l-th
        truncation: poly(x^(b0/e_{l-1}), y + lam_l(x^(b0/e_{l-1})))."""
        n_sub = semiroot_degree(self.cs, l)
        return hat_transform(self.f if poly is None else poly, n_sub, self.lam(l))


def allowed_exponents(cs: CharSequence, upto: int) -> list:
    """Exponent numerators that keep the characteristic intact: multiples of
    e_j between b_j and b_{j+1}, everything past b_h."""
    out = []
    for i in range(cs.b0, upto + 1):
        level = 0
        for bj in cs.b[1:]:
            if i >= bj:
                level += 1
            else:
                break
        if i % cs.e[level] == 0:
            out.append(i)
    return out


def sample_witness(cs: CharSequence, seed: int, extra_terms: int | None = None) -> WitnessBranch:
    """Random branch in the class: nonzero integer coefficients at the
    characteristic exponents, arbitrary ones elsewhere, all in [-9, 9]."""
    if extra_terms is None:
        extra_terms = cs.b0
    if extra_terms < 0:
        raise ValueError("extra_terms must be nonnegative")
    rng = random.Random(seed)
    upto = cs.b[-1] + extra_terms * cs.e[-1]
    nonzero = [v for v in range(-COEFF_RANGE, COEFF_RANGE + 1) if v]
    coeffs = {}
    char_positions = set(cs.b[1:])
    for i in allowed_exponents(cs, upto):
        if i in char_positions:
            coeffs[i] = rng.choice(nonzero)
        else:
            coeffs[i] = rng.randint(-COEFF_RANGE, COEFF_RANGE)
    root = PuiseuxSeries(cs.b0, coeffs)
    assert root.characteristic().b == cs.b
    return WitnessBranch(cs, root, min_poly(root), seed, root.trunc_bound)


def witness_from_root(cs: CharSequence, root: PuiseuxSeries,
                      seed: int | None = None) -> WitnessBranch:
    """Wrap an explicit Puiseux root (e.g. the non-generic all-ones example)."""
    got = root.reduce().characteristic()
    if got.b != cs.b:
        raise ValueError(f"root has characteristic {got.b}, expected {cs.b}")
    return WitnessBranch(cs, root, min_poly(root), seed, root.trunc_bound)


def expected_hat_diagram(cs: CharSequence, l: int, k: int,
                         hat_diagram: diagram_mod.NewtonDiagram) -> diagram_mod.NewtonDiagram:
    """R^(k) + L where R is the steep part e_l * (m_l, n_l) of the witness's
    hat diagram and L is everything of lower inclination.

    Only the steep part is theory; L is taken from the witness itself.
    """
    if k >= cs.e[l - 1]:
        raise OrderTooLarge(f"order {k} >= e_{l - 1} = {cs.e[l - 1]}")
    m_l, n_l = cs.m_seq[l - 1], cs.n_seq[l - 1]
    e_l = cs.e[l]
    rep = hat_diagram.canonical_rep(long=True)
    steep = [p for p in rep.parts if p[0] * n_l >= p[1] * m_l]
    assert steep == [(m_l, n_l)] * e_l, (
        f"hat diagram of a class member must start with {e_l} copies of "
        f"({m_l},{n_l}), got {steep}"
    )
    r_deriv, low = diagram_mod.split_derivative(hat_diagram, k, len(steep))
    return r_deriv + low


@dataclass
class LemmaNDResult:
    level: int
    k: int
    status: str                       # ok | degenerate | unknown
    reasons: list = field(default_factory=list)
    expected: tuple | None = None
    observed: tuple | None = None
    steep_parts: tuple = ()
    contacts: tuple = ()
    multiplicities: tuple = ()
    aggregate_edge_length: int | None = None


def _steep_data(d: diagram_mod.NewtonDiagram, m_l: int, n_l: int):
    """Long-canonical parts of inclination > m_l/n_l and the vertical length
    of the edge at inclination exactly m_l/n_l."""
    steep = []
    exact_len = 0
    for m, n in d.canonical_rep(long=True).parts:
        if m * n_l > n * m_l:
            steep.append((m, n))
        elif m * n_l == n * m_l:
            exact_len += n
    return tuple(steep), exact_len


def check_lemma_nd(w: WitnessBranch, l: int, k: int,
                   fhat: BivariatePoly | None = None) -> LemmaNDResult:
    """Diagram equality and steep-edge non-degeneracy for one level and order."""
    cs = w.cs
    if k >= cs.e[l - 1]:
        raise OrderTooLarge(f"order {k} >= e_{l - 1} = {cs.e[l - 1]}")
    m_l, n_l = cs.m_seq[l - 1], cs.n_seq[l - 1]
    n_sub = semiroot_degree(cs, l)
    res = LemmaNDResult(level=l, k=k, status="ok")
    try:
        if fhat is None:
            fhat = w.hat(l)
        expected = expected_hat_diagram(cs, l, k, diagram_of(fhat))
        polar_hat = w.hat(l, poly=derivative_y(w.f, k))
        observed = diagram_of(polar_hat)
    except TruncationTooShort as exc:
        res.status = "unknown"
        res.reasons.append(str(exc))
        return res

    res.expected = expected.vertices
    res.observed = observed.vertices

    steep_obs, exact_len = _steep_data(observed, m_l, n_l)
    steep_exp, _ = _steep_data(expected, m_l, n_l)
    res.aggregate_edge_length = exact_len
    if steep_obs != steep_exp:
        res.status = "degenerate"
        res.reasons.append(
            f"steep diagram region {steep_obs} differs from expected {steep_exp}"
        )
    if observed != expected:
        res.status = "degenerate"
        res.reasons.append("full hat diagram differs from the symbolic derivative")

    for edge in observed.compact_edges():
        (xa, ya), (xb, yb) = edge
        if (xb - xa) * n_l > (ya - yb) * m_l:
            if not edge_poly_squarefree(polar_hat, edge):
                res.status = "degenerate"
                res.reasons.append(f"steep edge {edge} is degenerate")

    res.steep_parts = steep_obs
    res.contacts = tuple(Fraction(m, n_sub * n) for m, n in steep_obs)
    res.multiplicities = tuple(n_sub * n for _, n in steep_obs)
    return res


def check_initial_form(w: WitnessBranch, l: int,
                       fhat: BivariatePoly | None = None) -> bool:
    """Exact comparison of in_omega(f-hat) with a x^b (y^n_l - a_{b_l}^n_l x^m_l)^e_l.

    Holds for every conjugate-product witness (unit 1), generic or not.
    """
    cs = w.cs
    if fhat is None:
        fhat = w.hat(l)
    m_l, n_l = cs.m_seq[l - 1], cs.n_seq[l - 1]
    e_l = cs.e[l]
    observed = fhat.initial_form((n_l, m_l))

    scale = Fraction(1)
    for j in range(1, l):
        a_bj = w.root.coefficient(Fraction(cs.b[j], cs.b0))
        scale *= Fraction(cs.n_seq[j - 1]) ** cs.e[j] * a_bj ** (cs.e[j - 1] - cs.e[j])
    a_bl = w.root.coefficient(Fraction(cs.b[l], cs.b0))
    shift = bbar(cs, l) - cs.b[l]
    wanted = binomial_power(scale, a_bl, n_l, m_l, e_l, shift)
    return observed.terms == wanted.terms


# ---------------------------------------------------------------------------
# end-to-end verification
# ---------------------------------------------------------------------------


@dataclass
class LevelReport:
    lemma: LemmaNDResult
    initial_form_ok: bool | None = None
    prediction_match: bool | None = None
    aggregate_predicted: int | None = None
    aggregate_ok: bool | None = None

    def failures(self) -> list:
        out = []
        if self.initial_form_ok is False:
            out.append(f"level {self.lemma.level}: initial form mismatch")
        if self.prediction_match is False:
            out.append(f"level {self.lemma.level}: extracted factors disagree with prediction")
        if self.aggregate_ok is False:
            out.append(
                f"level {self.lemma.level}: edge length {self.lemma.aggregate_edge_length} "
                f"!= predicted {self.aggregate_predicted}"
            )
        return out

    def to_json(self) -> dict:
        lm = self.lemma
        return {
            "l": lm.level,
            "status": lm.status,
            "reasons": list(lm.reasons),
            "expected": [list(v) for v in lm.expected] if lm.expected else None,
            "observed": [list(v) for v in lm.observed] if lm.observed else None,
            "steep_parts": [list(p) for p in lm.steep_parts],
            "contacts": [fmt_q(c) for c in lm.contacts],
            "multiplicities": list(lm.multiplicities),
            "initial_form_ok": self.initial_form_ok,
            "prediction_match": self.prediction_match,
            "aggregate_edge": {
                "observed": lm.aggregate_edge_length,
                "predicted": self.aggregate_predicted,
                "ok": self.aggregate_ok,
            },
        }


@dataclass
class SeedRun:
    seed: int
    status: str                      # pass | degenerate | fail | unknown
    levels: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "status": self.status,
            "levels": [lv.to_json() for lv in self.levels],
            "failures": list(self.failures),
        }


@dataclass
class VerificationReport:
    cs: CharSequence
    k: int
    prediction: PolarPrediction
    runs: list = field(default_factory=list)
    verdict: str = "UNKNOWN"
    passing_seed: int | None = None
    degenerate_count: int = 0

    @property
    def all_seeds_degenerate(self) -> bool:
        return self.verdict == "UNKNOWN" and self.degenerate_count == len(self.runs) > 0

    def to_json(self) -> dict:
        return {
            "char": list(self.cs.b),
            "k": self.k,
            "verdict": self.verdict,
            "passing_seed": self.passing_seed,
            "degenerate_count": self.degenerate_count,
            "seeds": [run.seed for run in self.runs],
            "prediction": self.prediction.to_json(),
            "runs": [run.to_json() for run in self.runs],
        }

    def to_text(self) -> str:
        lines = [f"verify K{self.cs} k={self.k}: {self.verdict}"]
        if self.passing_seed is not None:
            lines.append(f"witness seed {self.passing_seed} confirms the prediction")
        if self.degenerate_count:
            lines.append(f"{self.degenerate_count} seed(s) hit a degenerate witness")
        for run in self.runs:
            lines.append(f"seed {run.seed}: {run.status}")
            for lv in run.levels:
                lm = lv.lemma
                bits = [f"  l={lm.level} {lm.status}"]
                if lm.status == "ok":
                    parts = "+".join(f"({m},{n})" for m, n in lm.steep_parts) or "-"
                    bits.append(f"steep {parts}")
                    bits.append(f"contacts {{{', '.join(fmt_q(c) for c in lm.contacts)}}}")
                    bits.append(f"initial form {'ok' if lv.initial_form_ok else 'MISMATCH'}")
                    bits.append(
                        f"edge@(m/n) {lm.aggregate_edge_length}={lv.aggregate_predicted}"
                        if lv.aggregate_ok
                        else f"edge@(m/n) {lm.aggregate_edge_length}!={lv.aggregate_predicted}"
                    )
                lines.append(" ".join(bits))
            for fail in run.failures:
                lines.append(f"  FAIL: {fail}")
        return "\n".join(lines)


def _aggregate_predicted(prediction: PolarPrediction, cs: CharSequence, l: int) -> int:
    """Vertical length at inclination exactly m_l/n_l in the l-th hat chart:
    W-factors of group l plus every factor of deeper groups, each scaled by
    e_{l-1}/b0."""
    total = 0
    for f in prediction.factors():
        if f.group_index == l and f.kind == "W":
            total += f.multiplicity
        elif f.group_index > l:
            total += f.multiplicity
    scaled = total * cs.e[l - 1]
    assert scaled % cs.b0 == 0
    return scaled // cs.b0


def _run_seed(w: WitnessBranch, prediction: PolarPrediction, levels) -> SeedRun:
    cs = w.cs
    run = SeedRun(seed=w.seed, status="pass")
    for l in levels:
        fhat = w.hat(l)
        lemma = check_lemma_nd(w, l, prediction.k, fhat=fhat)
        report = LevelReport(lemma=lemma)
        run.levels.append(report)
        if lemma.status != "ok":
            continue
        report.initial_form_ok = check_initial_form(w, l, fhat=fhat)
        predicted_z = [f for f in prediction.groups[l - 1] if f.kind == "Z"]
        report.prediction_match = (
            list(lemma.steep_parts) == [f.part for f in predicted_z]
            and list(lemma.contacts) == [f.contact_with_semiroot for f in predicted_z]
            and list(lemma.multiplicities) == [f.multiplicity for f in predicted_z]
        )
        report.aggregate_predicted = _aggregate_predicted(prediction, cs, l)
        report.aggregate_ok = lemma.aggregate_edge_length == report.aggregate_predicted
        run.failures.extend(report.failures())

    statuses = [lv.lemma.status for lv in run.levels]
    if run.failures:
        run.status = "fail"
    elif "unknown" in statuses:
        run.status = "unknown"
    elif "degenerate" in statuses:
        run.status = "degenerate"
    return run


def verify_prediction(cs: CharSequence, k: int, seeds,
                      extra_terms: int | None = None,
                      degenerate_policy: int = 8) -> VerificationReport:
    """Check the prediction for every level against sampled witnesses.

    PASS needs one fully passing seed and no hard contradiction anywhere;
    degenerate witnesses are retried with fresh seeds up to
    ``degenerate_policy`` attempts in total.
    """
    if not 1 <= k < cs.b0:
        raise OrderOutOfRange(f"polar order must satisfy 1 <= k < {cs.b0}, got {k}")
    seeds = list(seeds)
    if not seeds:
        raise ValueError("at least one seed is required")
    prediction = predict(cs, k)
    levels = [l for l in range(1, cs.h + 1) if cs.e[l - 1] > k]
    report = VerificationReport(cs=cs, k=k, prediction=prediction)

    queue = list(seeds)
    next_extra = max(seeds) + 1
    while queue:
        seed = queue.pop(0)
        run = _run_seed(sample_witness(cs, seed, extra_terms), prediction, levels)
        report.runs.append(run)
        if run.status == "fail":
            report.verdict = "FAIL"
            return report
        if run.status == "pass" and report.passing_seed is None:
            report.passing_seed = run.seed
        if run.status == "degenerate":
            report.degenerate_count += 1
            # open Zariski condition: retry with fresh seeds, within policy
            if not queue and report.passing_seed is None and len(report.runs) < degenerate_policy:
                queue.append(next_extra)
                next_extra += 1

    report.verdict = "PASS" if report.passing_seed is not None else "UNKNOWN"
    return report


def find_generic_witness(cs: CharSequence, k: int, seeds,
                         extra_terms: int | None = None) -> WitnessBranch:
    """First sampled witness passing every check, or AllSeedsDegenerate."""
    prediction = predict(cs, k)
    levels = [l for l in range(1, cs.h + 1) if cs.e[l - 1] > k]
    tried = 0
    for seed in seeds:
        w = sample_witness(cs, seed, extra_terms)
        tried += 1
        if _run_seed(w, prediction, levels).status == "pass":
            return w
    raise AllSeedsDegenerate(f"all {tried} seeds produced degenerate witnesses")
