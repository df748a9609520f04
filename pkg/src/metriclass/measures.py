"""Registry of retrieval evaluation measures.

Each measure is a pure function from a domain element to a tagged value.
Rational-formula measures run on the exact backend; only the log-bearing
ones (discounted gain, normalized log precision) use floats, with the
default tolerance from :mod:`metriclass.values`.

Measure ids are stable strings: plain (``recall``), with a rank cutoff
(``prec@4``), or with parameters (``rbp?p=1/2``, ``dcg?b=2``,
``utility?alpha=1,beta=1,gamma=1,delta=1``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .errors import ParameterError, ParseError, UndefinedValueError
from .model import (
    ContingencyTable,
    LeveledOutput,
    Ranking,
    Universe,
    UserContext,
    derived_counts,
    ideal_gains,
)
from .values import DEFAULT_EPS, Approx, Exact, Value, add, exact

# ---------------------------------------------------------------------------
# Set-based measures over a contingency table
# ---------------------------------------------------------------------------


def _ratio(measure_id: str, element: str, num: int, den: int) -> Exact:
    if den == 0:
        raise UndefinedValueError(measure_id, element)
    return exact(num, den)


def recall(t: ContingencyTable) -> Exact:
    """tp / (tp + fn)"""
    return _ratio("recall", t.display(), t.tp, t.tp + t.fn)


def precision(t: ContingencyTable) -> Exact:
    """tp / (tp + fp)"""
    return _ratio("precision", t.display(), t.tp, t.tp + t.fp)


def fallout(t: ContingencyTable) -> Exact:
    """fp / (fp + tn)"""
    return _ratio("fallout", t.display(), t.fp, t.fp + t.tn)


def classification_accuracy(t: ContingencyTable) -> Exact:
    """(tp + tn) / (tp + fn + fp + tn)"""
    return _ratio("accuracy", t.display(), t.tp + t.tn, t.collection_size)


def miss_rate(t: ContingencyTable) -> Exact:
    """fn / (tp + fn)"""
    return _ratio("miss-rate", t.display(), t.fn, t.tp + t.fn)


def error_rate(t: ContingencyTable) -> Exact:
    """(fp + fn) / (tp + fn + fp + tn)"""
    return _ratio("error-rate", t.display(), t.fp + t.fn, t.collection_size)


def inverse_recall(t: ContingencyTable) -> Exact:
    """tn / (fp + tn)"""
    return _ratio("inverse-recall", t.display(), t.tn, t.fp + t.tn)


def inverse_precision(t: ContingencyTable) -> Exact:
    """tn / (fn + tn)"""
    return _ratio("inverse-precision", t.display(), t.tn, t.fn + t.tn)


def specificity(t: ContingencyTable) -> Exact:
    """tn / (tn + fp)"""
    return _ratio("specificity", t.display(), t.tn, t.tn + t.fp)


def false_discovery_rate(t: ContingencyTable) -> Exact:
    """fp / (fp + tp)"""
    return _ratio("fdr", t.display(), t.fp, t.fp + t.tp)


def false_omission_rate(t: ContingencyTable) -> Exact:
    """fn / (fn + tn)"""
    return _ratio("for", t.display(), t.fn, t.fn + t.tn)


def f_measure(t: ContingencyTable) -> Exact:
    """2 * prec * recall / (prec + recall)

    Undefined whenever precision or recall is undefined or both are zero;
    on defined tables it equals 2*tp / (2*tp + fp + fn).
    """
    p = precision(t).rational if t.tp + t.fp else None
    r = recall(t).rational if t.tp + t.fn else None
    if p is None or r is None or p + r == 0:
        raise UndefinedValueError("f-measure", t.display())
    return Exact(2 * p * r / (p + r))


def generality(t: ContingencyTable) -> Exact:
    """(tp + fn) / (tp + fn + fp + tn) -- prevalence of relevance."""
    return _ratio("generality", t.display(), t.tp + t.fn, t.collection_size)


def utility(
    t: ContingencyTable,
    alpha: Fraction,
    beta: Fraction,
    gamma: Fraction,
    delta: Fraction,
) -> Exact:
    """alpha*tp + beta*fn + gamma*fp + delta*tn with positive user weights."""
    for name, w in (("alpha", alpha), ("beta", beta), ("gamma", gamma), ("delta", delta)):
        if w <= 0:
            raise ParameterError(f"measures: utility weight {name} must be positive")
    return Exact(alpha * t.tp + beta * t.fn + gamma * t.fp + delta * t.tn)


# ---------------------------------------------------------------------------
# User-oriented measures
# ---------------------------------------------------------------------------


def coverage_ratio(c: UserContext) -> Exact:
    """R_k / U"""
    return exact(c.retrieved_known, c.known_relevant)


def retrieval_recall(c: UserContext) -> Exact:
    """(R_k + R_u) / U -- can exceed 1 when unknown relevant turn up."""
    return exact(c.retrieved_known + c.retrieved_unknown, c.known_relevant)


def novelty_ratio(c: UserContext) -> Exact:
    """R_u / (R_u + R_k)"""
    den = c.retrieved_unknown + c.retrieved_known
    if den == 0:
        raise UndefinedValueError("novelty-ratio", c.display(), "no relevant retrieved")
    return exact(c.retrieved_unknown, den)


def recall_effort(c: UserContext) -> Exact:
    """U / A"""
    return exact(c.known_relevant, c.retrieved_total)


# ---------------------------------------------------------------------------
# Rank-based measures over (ranking, universe)
# ---------------------------------------------------------------------------


def precision_at(cutoff: int, ranking: Ranking, universe: Universe) -> Exact:
    """cg(r) / r at the cutoff rank."""
    if cutoff < 1 or cutoff > ranking.length:
        raise ParameterError(
            f"measures: cutoff {cutoff} out of range for a length-{ranking.length} ranking"
        )
    d = derived_counts(ranking, universe)
    return Exact(d.cg[cutoff - 1] / cutoff)


def recall_at(cutoff: int, ranking: Ranking, universe: Universe) -> Exact:
    """cg(r) over the total ideal gain; cg(r)/R in the binary case."""
    if cutoff < 1 or cutoff > ranking.length:
        raise ParameterError(
            f"measures: cutoff {cutoff} out of range for a length-{ranking.length} ranking"
        )
    total = ranking.scheme.top_gain * universe.total_relevant
    if total == 0:
        raise UndefinedValueError(f"recall@{cutoff}", ranking.display(), "no relevant in universe")
    d = derived_counts(ranking, universe)
    return Exact(d.cg[cutoff - 1] / total)


def _r_padded(ranking: Ranking, universe: Universe) -> tuple[Ranking, int]:
    r = universe.total_relevant
    if r == 0:
        raise UndefinedValueError("r-precision", ranking.display(), "R = 0")
    return ranking.padded(r), r


def r_precision(ranking: Ranking, universe: Universe) -> Exact:
    """count(R) / R; the ranking is padded with the lowest grade if L < R."""
    padded, r = _r_padded(ranking, universe)
    d = derived_counts(padded, universe)
    return exact(d.count[r - 1], r)


def r_weighted_precision(ranking: Ranking, universe: Universe) -> Exact:
    """cg(R) / cig(R)"""
    padded, r = _r_padded(ranking, universe)
    d = derived_counts(padded, universe)
    if d.cig[r - 1] == 0:
        raise UndefinedValueError("r-wp", ranking.display())
    return Exact(d.cg[r - 1] / d.cig[r - 1])


def r_measure(ranking: Ranking, universe: Universe) -> Exact:
    """(cg(R) + count(R)) / (cig(R) + R)"""
    padded, r = _r_padded(ranking, universe)
    d = derived_counts(padded, universe)
    return Exact((d.cg[r - 1] + d.count[r - 1]) / (d.cig[r - 1] + r))


def sliding_ratio(ranking: Ranking, universe: Universe) -> Exact:
    """cg(L) / cig(L)"""
    d = derived_counts(ranking, universe)
    if d.cig[-1] == 0:
        raise UndefinedValueError("sr", ranking.display(), "no relevant in universe")
    return Exact(d.cg[-1] / d.cig[-1])


def modified_sliding_ratio(ranking: Ranking, universe: Universe) -> Exact:
    """Rank-weighted sliding ratio: sum g(r)/r over sum ig(r)/r."""
    derived_counts(ranking, universe)  # consistency check
    num = sum(
        (ranking.gain_at(r) / r for r in range(1, ranking.length + 1)), Fraction(0)
    )
    den = sum(
        (g / r for r, g in enumerate(ideal_gains(ranking.scheme, universe, ranking.length), 1)),
        Fraction(0),
    )
    if den == 0:
        raise UndefinedValueError("msr", ranking.display(), "no relevant in universe")
    return Exact(num / den)


def _rocchio_guard(measure_id: str, ranking: Ranking, universe: Universe) -> int:
    r = universe.total_relevant
    if r == 0 or r >= ranking.length:
        raise UndefinedValueError(measure_id, ranking.display(), "requires 0 < R < L")
    return r


def normalized_recall(ranking: Ranking, universe: Universe) -> Exact:
    """1 - (sum of relevant ranks - sum of 1..R) / (R * (L - R))"""
    r = _rocchio_guard("rnorm", ranking, universe)
    d = derived_counts(ranking, universe)
    rank_sum = sum(k for k in range(1, ranking.length + 1) if d.isrel[k - 1])
    best = r * (r + 1) // 2
    return Exact(1 - Fraction(rank_sum - best, r * (ranking.length - r)))


def normalized_precision(ranking: Ranking, universe: Universe) -> Approx:
    """Log-weighted variant of normalized recall (float backend)."""
    r = _rocchio_guard("pnorm", ranking, universe)
    d = derived_counts(ranking, universe)
    log_sum = sum(math.log(k) for k in range(1, ranking.length + 1) if d.isrel[k - 1])
    best = sum(math.log(k) for k in range(1, r + 1))
    den = math.log(math.comb(ranking.length, r))
    return Approx(1 - (log_sum - best) / den)


def average_precision(ranking: Ranking, universe: Universe) -> Exact:
    """(1/R) * sum over relevant ranks of count(r)/r."""
    r = universe.total_relevant
    if r == 0:
        raise UndefinedValueError("ap", ranking.display(), "R = 0")
    d = derived_counts(ranking, universe)
    tot = sum(
        (Fraction(d.count[k], k + 1) for k in range(ranking.length) if d.isrel[k]),
        Fraction(0),
    )
    return Exact(tot / r)


def average_weighted_precision(ranking: Ranking, universe: Universe) -> Exact:
    """Sum over relevant ranks of cg(r)/cig(r) (no 1/R factor)."""
    d = derived_counts(ranking, universe)
    if universe.total_relevant == 0:
        raise UndefinedValueError("awp", ranking.display(), "R = 0")
    tot = Fraction(0)
    for k in range(ranking.length):
        if d.isrel[k]:
            tot += d.cg[k] / d.cig[k]
    return Exact(tot)


def q_measure(ranking: Ranking, universe: Universe) -> Exact:
    """(1/R) * sum over relevant ranks of (cg(r)+count(r)) / (cig(r)+r)."""
    r = universe.total_relevant
    if r == 0:
        raise UndefinedValueError("q-measure", ranking.display(), "R = 0")
    d = derived_counts(ranking, universe)
    tot = Fraction(0)
    for k in range(ranking.length):
        if d.isrel[k]:
            tot += (d.cg[k] + d.count[k]) / (d.cig[k] + (k + 1))
    return Exact(tot / r)


def reciprocal_rank(ranking: Ranking, universe: Universe) -> Exact:
    """1 over the rank of the first relevant document, 0 if none."""
    d = derived_counts(ranking, universe)
    for k, rel in enumerate(d.isrel):
        if rel:
            return exact(1, k + 1)
    return exact(0)


def discounted_cumulative_gain(base: float, ranking: Ranking, universe: Universe) -> Approx:
    """Sum of g(r) / max(1, log_base r) -- float backend."""
    if base <= 1:
        raise ParameterError("measures: dcg base must be greater than 1")
    derived_counts(ranking, universe)
    tot = 0.0
    for r in range(1, ranking.length + 1):
        disc = math.log2(r) if base == 2 else math.log(r) / math.log(base)
        tot += float(ranking.gain_at(r)) / max(1.0, disc)
    return Approx(tot)


def rank_biased_precision(p: Fraction, ranking: Ranking, universe: Universe) -> Exact:
    """(1-p)/g(top) * sum of p^(r-1) * g(r); exact for rational p."""
    p = Fraction(p)
    if not 0 < p < 1:
        raise ParameterError("measures: rbp persistence p must lie strictly in (0, 1)")
    derived_counts(ranking, universe)
    top = ranking.scheme.top_gain
    tot = sum(
        (p ** (r - 1) * ranking.gain_at(r) for r in range(1, ranking.length + 1)),
        Fraction(0),
    )
    return Exact((1 - p) / top * tot)


def bpref(ranking: Ranking, universe: Universe) -> Exact:
    """(1/R) * sum over relevant ranks of 1 - (r - count(r))/R."""
    r = universe.total_relevant
    if r == 0:
        raise UndefinedValueError("bpref", ranking.display(), "R = 0")
    d = derived_counts(ranking, universe)
    tot = Fraction(0)
    for k in range(ranking.length):
        if d.isrel[k]:
            tot += 1 - Fraction((k + 1) - d.count[k], r)
    return Exact(tot / r)


def _cutoff_counts(measure_id: str, cutoff: int, ranking: Ranking, universe: Universe):
    if cutoff < 1:
        raise ParameterError(f"measures: cutoff must be positive, got {cutoff}")
    padded = ranking.padded(cutoff)
    d = derived_counts(padded, universe)
    if d.cig[cutoff - 1] == 0 or d.cig[-1] == 0:
        raise UndefinedValueError(measure_id, ranking.display(), "no relevant in universe")
    return padded, d


def nxcg_at(cutoff: int, ranking: Ranking, universe: Universe) -> Exact:
    """cg(r) / cig(r) at the cutoff rank."""
    _, d = _cutoff_counts(f"nxcg@{cutoff}", cutoff, ranking, universe)
    return Exact(d.cg[cutoff - 1] / d.cig[cutoff - 1])


def manxcg_at(cutoff: int, ranking: Ranking, universe: Universe) -> Exact:
    """Mean of cg(j)/cig(j) for j up to the cutoff."""
    _, d = _cutoff_counts(f"manxcg@{cutoff}", cutoff, ranking, universe)
    tot = sum((d.cg[j] / d.cig[j] for j in range(cutoff)), Fraction(0))
    return Exact(tot / cutoff)


def gain_recall_at(cutoff: int, ranking: Ranking, universe: Universe) -> Exact:
    """cg(r) / cig(L): prefix gain against the full-length ideal gain."""
    padded, d = _cutoff_counts(f"gr@{cutoff}", cutoff, ranking, universe)
    return Exact(d.cg[cutoff - 1] / d.cig[padded.length - 1])


# ---------------------------------------------------------------------------
# Expected search length over a leveled output
# ---------------------------------------------------------------------------


def expected_search_length(out: LeveledOutput) -> Exact:
    """Nonrelevant documents passed before the need is met.

    The final level is the first level at which the cumulative relevant
    count reaches the need; within it, document order is uniformly random,
    so it contributes i*s/(t+1) on top of the j nonrelevant documents in
    the preceding levels.
    """
    out.require_satisfiable()
    passed = 0
    remaining = out.need
    for rel, non in out.levels:
        if rel >= remaining:
            return Exact(passed + Fraction(non * remaining, rel + 1))
        remaining -= rel
        passed += non
    raise AssertionError("unreachable: satisfiability was checked")


# ---------------------------------------------------------------------------
# Aggregation over queries (always flagged)
# ---------------------------------------------------------------------------

PERMISSIBILITY_WARNING = (
    "mean of ordinal-scale values; arithmetic aggregation requires at least "
    "an interval scale"
)

AGGREGATE_KINDS = ("map", "gmap", "err-mean", "manxcg-mean")


def _nth_root(n: int, k: int) -> int | None:
    """Exact integer k-th root of n, or None."""
    if n == 0:
        return 0
    r = round(n ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == n:
            return cand
    return None


def aggregate(values: list[Value], kind: str) -> tuple[Value, str]:
    """Arithmetic or geometric mean plus the permissibility warning.

    The warning is attached unconditionally: collapsing per-query values
    with a mean presumes an interval scale that most rank-based measures
    do not have.
    """
    kind = kind.lower()
    if kind not in AGGREGATE_KINDS:
        raise ParameterError(f"measures: unknown aggregate kind {kind!r}")
    if not values:
        raise ParameterError("measures: aggregate of an empty value list")
    if kind in ("map", "err-mean", "manxcg-mean"):
        total: Value = exact(0)
        for v in values:
            total = add(total, v)
        if isinstance(total, Exact):
            mean: Value = Exact(total.rational / len(values))
        else:
            mean = Approx(total.real / len(values), total.eps)
        return mean, PERMISSIBILITY_WARNING
    # gmap: geometric mean, exact when the root is rational
    floats = []
    product = Fraction(1)
    all_exact = True
    for v in values:
        x = v.numeric()
        if (isinstance(v, Exact) and x <= 0) or (not isinstance(v, Exact) and float(x) <= 0):
            raise UndefinedValueError("gmap", str(x), "requires strictly positive values")
        floats.append(float(x))
        if isinstance(v, Exact):
            product *= v.rational
        else:
            all_exact = False
    q = len(values)
    if all_exact:
        rn = _nth_root(product.numerator, q)
        rd = _nth_root(product.denominator, q)
        if rn is not None and rd is not None:
            return Exact(Fraction(rn, rd)), PERMISSIBILITY_WARNING
    mean = math.exp(sum(math.log(x) for x in floats) / q)
    return Approx(mean, DEFAULT_EPS), PERMISSIBILITY_WARNING


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Measure:
    """A named, parameter-bound measure ready to evaluate domain elements."""

    id: str
    display: str
    family: str  # contingency | user | ranking | leveled
    backend: str  # exact | approx
    unit_range: bool  # value stays in [0,1] for gain schemes bounded by 1
    _fn: Callable

    def evaluate(self, element, universe: Optional[Universe] = None) -> Value:
        if self.family == "ranking":
            if universe is None:
                raise ParameterError(f"measures: {self.id} needs a universe")
            return self._fn(element, universe)
        return self._fn(element)

    @property
    def eps(self) -> float | None:
        return DEFAULT_EPS if self.backend == "approx" else None


_CONTINGENCY = {
    "recall": ("recall", recall, True),
    "precision": ("precision", precision, True),
    "fallout": ("fallout", fallout, True),
    "miss-rate": ("miss rate", miss_rate, True),
    "accuracy": ("classification accuracy", classification_accuracy, True),
    "error-rate": ("error rate", error_rate, True),
    "inverse-recall": ("inverse recall", inverse_recall, True),
    "inverse-precision": ("inverse precision", inverse_precision, True),
    "specificity": ("specificity", specificity, True),
    "fdr": ("false discovery rate", false_discovery_rate, True),
    "for": ("false omission rate", false_omission_rate, True),
    "f-measure": ("F-measure", f_measure, True),
    "generality": ("generality", generality, True),
}

_USER = {
    "coverage-ratio": ("coverage ratio", coverage_ratio, True),
    "retrieval-recall": ("retrieval recall", retrieval_recall, False),
    "novelty-ratio": ("novelty ratio", novelty_ratio, True),
    "recall-effort": ("recall effort", recall_effort, True),
}

# ranking measures without parameters: id -> (display, fn, unit_range, backend)
_RANKING_PLAIN = {
    "r-precision": ("R-precision", r_precision, True, "exact"),
    "r-wp": ("R-WP", r_weighted_precision, True, "exact"),
    "r-measure": ("R-measure", r_measure, True, "exact"),
    "sr": ("sliding ratio", sliding_ratio, True, "exact"),
    "msr": ("modified sliding ratio", modified_sliding_ratio, True, "exact"),
    "rnorm": ("normalized recall", normalized_recall, False, "exact"),
    "pnorm": ("normalized precision", normalized_precision, False, "approx"),
    "ap": ("average precision", average_precision, True, "exact"),
    "awp": ("average weighted precision", average_weighted_precision, False, "exact"),
    "q-measure": ("Q-measure", q_measure, True, "exact"),
    "rr": ("reciprocal rank", reciprocal_rank, True, "exact"),
    "bpref": ("bpref", bpref, False, "exact"),
}

# cutoff measures: base id -> (display pattern, fn(cutoff, ...), unit_range)
_RANKING_CUTOFF = {
    "prec": ("Prec@{r}", precision_at, True),
    "recall": ("recall@{r}", recall_at, True),
    "nxcg": ("nxCG@{r}", nxcg_at, True),
    "manxcg": ("MAnxCG@{r}", manxcg_at, True),
    "gr": ("gain recall@{r}", gain_recall_at, True),
}


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"measures: cannot parse rational {text!r}") from None


def _parse_params(text: str) -> dict[str, str]:
    params = {}
    for part in text.split(","):
        if "=" not in part:
            raise ParseError(f"measures: malformed parameter {part!r}")
        key, _, val = part.partition("=")
        if key in params:
            raise ParseError(f"measures: duplicate parameter {key!r}")
        params[key] = val
    return params


def measure_from_id(measure_id: str) -> Measure:
    """Resolve a measure id string to a bound Measure."""
    base, _, param_text = measure_id.partition("?")
    params = _parse_params(param_text) if param_text else {}
    base, _, cutoff_text = base.partition("@")

    if cutoff_text:
        if base not in _RANKING_CUTOFF:
            raise ParseError(f"measures: unknown cutoff measure {base!r}")
        if params:
            raise ParseError(f"measures: {base}@r takes no ?params")
        try:
            cutoff = int(cutoff_text)
        except ValueError:
            raise ParseError(f"measures: bad cutoff {cutoff_text!r}") from None
        if cutoff < 1:
            raise ParameterError("measures: cutoff must be positive")
        display, fn, unit = _RANKING_CUTOFF[base]
        return Measure(
            id=f"{base}@{cutoff}",
            display=display.format(r=cutoff),
            family="ranking",
            backend="exact",
            unit_range=unit,
            _fn=lambda rk, un, _c=cutoff, _f=fn: _f(_c, rk, un),
        )

    if base in _CONTINGENCY or base in _USER:
        if params:
            raise ParseError(f"measures: {base} takes no parameters")
        table = _CONTINGENCY if base in _CONTINGENCY else _USER
        display, fn, unit = table[base]
        family = "contingency" if base in _CONTINGENCY else "user"
        return Measure(base, display, family, "exact", unit, fn)

    if base == "utility":
        missing = {"alpha", "beta", "gamma", "delta"} - set(params)
        if missing:
            raise ParameterError(f"measures: utility needs weights {sorted(missing)}")
        weights = {k: _parse_fraction(params[k]) for k in ("alpha", "beta", "gamma", "delta")}
        canon = ",".join(f"{k}={weights[k]}" for k in ("alpha", "beta", "gamma", "delta"))
        return Measure(
            id=f"utility?{canon}",
            display="utility",
            family="contingency",
            backend="exact",
            unit_range=False,
            _fn=lambda t, _w=weights: utility(t, _w["alpha"], _w["beta"], _w["gamma"], _w["delta"]),
        )

    if base == "dcg":
        if set(params) != {"b"}:
            raise ParameterError("measures: dcg needs exactly the base parameter b")
        b = float(_parse_fraction(params["b"]))
        if b <= 1:
            raise ParameterError("measures: dcg base must be greater than 1")
        return Measure(
            id=f"dcg?b={params['b']}",
            display=f"DCG (base {params['b']})",
            family="ranking",
            backend="approx",
            unit_range=False,
            _fn=lambda rk, un, _b=b: discounted_cumulative_gain(_b, rk, un),
        )

    if base == "rbp":
        if set(params) != {"p"}:
            raise ParameterError("measures: rbp needs exactly the persistence parameter p")
        p = _parse_fraction(params["p"])
        if not 0 < p < 1:
            raise ParameterError("measures: rbp persistence p must lie strictly in (0, 1)")
        return Measure(
            id=f"rbp?p={p}",
            display=f"RBP (p={p})",
            family="ranking",
            backend="exact",
            unit_range=True,
            _fn=lambda rk, un, _p=p: rank_biased_precision(_p, rk, un),
        )

    if base in _RANKING_PLAIN:
        if params:
            raise ParseError(f"measures: {base} takes no parameters")
        display, fn, unit, backend = _RANKING_PLAIN[base]
        return Measure(base, display, "ranking", backend, unit, fn)

    if base == "esl":
        if params:
            raise ParseError("measures: esl takes no parameters")
        return Measure("esl", "expected search length", "leveled", "exact", False,
                       expected_search_length)

    raise ParseError(f"measures: unknown measure id {measure_id!r}")


def list_measure_ids() -> list[str]:
    """All registered ids; parameterized ones shown with example parameters."""
    ids = sorted(_CONTINGENCY) + ["utility?alpha=..,beta=..,gamma=..,delta=.."]
    ids += sorted(_USER)
    ids += [f"{base}@r" for base in sorted(_RANKING_CUTOFF)]
    ids += sorted(_RANKING_PLAIN) + ["dcg?b=..", "rbp?p=..", "esl"]
    return ids
