"""Evaluators for every catalogued claim.

Per-graph evaluators receive a :class:`GraphSubject`; class evaluators a
:class:`GraphClass`. Both return an :class:`Evaluation` whose parts are
judged independently. Guards never raise: they yield NOT_APPLICABLE parts
carrying the failed condition as the note.
"""
from contextlib import contextmanager
from decimal import localcontext
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from src.claims.catalogue import CLAIM_CATALOGUE
from src.claims.exact import (
    Number,
    Verdict,
    compare,
    ge_sqrt,
    le_sqrt,
    like,
    sqrt_value,
)
from src.claims.model import ClaimParams, Evaluation, GraphSubject, PartOutcome, Witness, worst_part
from src.enumeration.graph_class import GraphClass, class_members
from src.generators.graph_families import generate_path
from src.graph.graph import Graph, complete_bipartite_parts, is_hamiltonian, is_path, is_star
from src.invariants.indices import (
    albertson,
    average_degree,
    caterpillar_irr_closed_form,
    caterpillar_spine,
    first_zagreb,
    sigma,
    sigma2_min_nonadjacent,
    total_irregularity,
)
from src.utils.config_manager import VerificationSettings

MAX_FACTORIAL_ARGUMENT = 20

C8_INTERPRETATION = CLAIM_CATALOGUE["C8"]["interpretation"]
C11_INTERPRETATION = CLAIM_CATALOGUE["C11"]["interpretation"]


@contextmanager
def _precision(settings: VerificationSettings) -> Iterator[None]:
    with localcontext() as ctx:
        ctx.prec = settings.decimal_precision
        yield


def _judge(label: str, lhs: Number, rhs: Number, relation: str, settings: VerificationSettings,
           holds: Optional[bool] = None, note: str = "", witness: Optional[Witness] = None) -> PartOutcome:
    """Judge one part; ``holds`` overrides the numeric comparison with an exact decision."""
    if holds is None:
        verdict = compare(lhs, rhs, relation, settings.tolerance, settings.decimal_precision)
    else:
        verdict = Verdict.HOLDS if holds else Verdict.FAILS
    return PartOutcome(label, verdict, lhs, rhs, relation, note, witness)


def _na_part(label: str, reason: str) -> PartOutcome:
    return PartOutcome(label, Verdict.NOT_APPLICABLE, note=reason)


def _na(reason: str, label: str = "claim") -> Evaluation:
    return Evaluation((_na_part(label, reason),))


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _witness(g: Graph, subject: Optional[GraphSubject] = None) -> Witness:
    parts = subject.declared_parts if subject is not None else None
    return Witness.of(g, parts)


# ---------------------------------------------------------------- per graph


def caterpillar_identity(subject: GraphSubject, params, settings) -> Evaluation:
    g = subject.graph
    spine = caterpillar_spine(g)
    if spine is None:
        return _na("not a caterpillar")
    return Evaluation((
        _judge("closed form = irr", caterpillar_irr_closed_form(spine), albertson(g), "==", settings),
    ))


def variance_bound(subject: GraphSubject, params, settings) -> Evaluation:
    g = subject.graph
    m = g.m
    if m == 0:
        return _na("edgeless graph")
    radicand = m * first_zagreb(g) - 4 * m * m
    if radicand < 0:
        return _na("m*M1 < 4m^2")
    irr = albertson(g)
    with _precision(settings):
        rhs = sqrt_value(radicand, settings.decimal_precision)
    return Evaluation((
        _judge("irr <= sqrt(m*M1 - 4m^2)", irr, rhs, "<=", settings, holds=le_sqrt(irr, radicand)),
    ))


def hamiltonian_sigma2(subject: GraphSubject, params, settings) -> Evaluation:
    g = subject.graph
    if g.n < 3:
        return _na("n < 3")
    if g.n > settings.budgets.hamiltonian_max_order:
        return _na(f"n > {settings.budgets.hamiltonian_max_order} (Hamiltonicity budget)")
    if g.is_complete():
        return _na("complete graph")
    if not is_hamiltonian(g, settings.budgets.hamiltonian_max_order):
        return _na("not Hamiltonian")
    value = sigma2_min_nonadjacent(g, settings.sigma2_mode)
    return Evaluation(
        (_judge("sigma2 >= 2", value, 2, ">=", settings),),
        interpretation=f"sigma2 mode: {settings.sigma2_mode}",
    )


def tree_average_degree_bound(subject: GraphSubject, params, settings) -> Evaluation:
    g = subject.graph
    if not g.is_tree():
        return _na("not a tree")
    rhs = average_degree(g) - Fraction(2 * g.m, g.n)
    return Evaluation((_judge("irr >= deg_ave - 2m/n", albertson(g), rhs, ">=", settings),))


def tree_max_degree_bound(subject: GraphSubject, params, settings) -> Evaluation:
    g = subject.graph
    if not g.is_tree():
        return _na("not a tree")
    big, small, m = g.max_degree(), g.min_degree(), g.m
    if big < 4:
        return _na("Delta < 4")
    rhs = Fraction(3 * big * m * m + 2 * small * m, g.n * (big - 3))
    return Evaluation((_judge("irr >= (3*Delta*m^2 + 2*delta*m)/(n(Delta-3))", albertson(g), rhs, ">=", settings),))


def tree_sigma_bound(subject: GraphSubject, params, settings) -> Evaluation:
    g = subject.graph
    if not g.is_tree():
        return _na("not a tree")
    ave = average_degree(g)
    rhs = albertson(g) + ave * ave - Fraction(2 * g.m * g.m, g.n)
    return Evaluation((_judge("sigma >= irr + deg_ave^2 - 2m^2/n", sigma(g), rhs, ">=", settings),))


def sandwich_bound(subject: GraphSubject, params, settings) -> Evaluation:
    g = subject.graph
    if g.m == 0:
        return _na("edgeless graph")
    irr, s = albertson(g), sigma(g)
    with _precision(settings):
        root_sigma = sqrt_value(s, settings.decimal_precision)
        root_m_sigma = sqrt_value(g.m * s, settings.decimal_precision)
    return Evaluation((
        _judge("sqrt(sigma) <= irr", root_sigma, irr, "<=", settings, holds=ge_sqrt(irr, s)),
        _judge("irr <= sqrt(m*sigma)", irr, root_m_sigma, "<=", settings, holds=le_sqrt(irr, g.m * s)),
    ))


def complete_bipartite_identity(subject: GraphSubject, params, settings) -> Evaluation:
    g = subject.graph
    sizes = complete_bipartite_parts(g)
    if sizes is None:
        return _na("not complete bipartite")
    s, t = sizes
    return Evaluation((
        _judge("irr = st|s-t|", albertson(g), s * t * abs(s - t), "==", settings),
        _judge("sigma = st(s-t)^2", sigma(g), s * t * (s - t) ** 2, "==", settings),
    ))


def _parts_or_reason(subject: GraphSubject):
    parts = subject.bipartition()
    if parts is None:
        return None, "not bipartite under the declared parts"
    if parts.n1 == 0 or parts.n2 == 0:
        return None, "empty part"
    return parts, ""


def bipartite_order_bound(subject: GraphSubject, params, settings) -> Evaluation:
    parts, reason = _parts_or_reason(subject)
    if parts is None:
        return _na(reason)
    n1, n2 = max(parts.n1, parts.n2), min(parts.n1, parts.n2)
    irr = albertson(subject.graph)
    with _precision(settings):
        if n1 < 2 * n2:
            radicand = Fraction(28, 9) * n1 * n1 - Fraction(8, 3) * n1 * n2
            root = sqrt_value(radicand, settings.decimal_precision)
            u2 = like(n2 - Fraction(4, 3) * n1, root, settings.decimal_precision) + root
        else:
            u2 = Fraction(n2)
        u1 = (n2 - u2) / 2
        bound = u1 * u2 * (n1 - n2) + u1 * (n2 - u2) * (n2 - u1) + u2 * (n1 - u1) * (n1 - u2)
    return Evaluation((_judge("irr <= u1u2(n1-n2) + u1(n2-u2)(n2-u1) + u2(n1-u1)(n1-u2)",
                              irr, bound, "<=", settings),))


def bipartite_edge_bounds(subject: GraphSubject, params, settings) -> Evaluation:
    parts, reason = _parts_or_reason(subject)
    if parts is None:
        return _na(reason)
    g = subject.graph
    m = g.m
    if m == 0:
        return _na("edgeless graph")
    n1, n2 = parts.n1, parts.n2
    big, small = g.max_degree(), g.min_degree()
    irr, s = albertson(g), sigma(g)
    c = Fraction(n2 * small, m)
    t = s - 4 * n1 * n2
    with _precision(settings):
        root = sqrt_value(2 * n1, settings.decimal_precision)
        rhs_b = like(4 * n1 * n2, root, settings.decimal_precision) + root * like(c, root, settings.decimal_precision)
    results: List[PartOutcome] = [
        _judge("irr <= 2n1n2 + n2*delta/m", irr, 2 * n1 * n2 + c, "<=", settings),
        _judge("sigma <= 4n1n2 + sqrt(2n1)*n2*delta/m", s, rhs_b, "<=", settings,
               holds=t <= 0 or t * t <= 2 * n1 * c * c),
    ]
    gap = m - 3 * big
    if gap > 0:
        floor_irr = ((2 * n1) // gap) ** 2 - 1 + ((2 * n2) // gap) ** 2 - 1
        floor_sigma = ((4 * n1) // gap) ** 2 - 1 + ((4 * n2) // gap) ** 2 - 1
        results.append(_judge("irr <= floor bound", irr, floor_irr, "<=", settings))
        results.append(_judge("sigma <= floor bound", s, floor_sigma, "<=", settings))
    else:
        results.append(_na_part("irr <= floor bound", "m <= 3*Delta"))
        results.append(_na_part("sigma <= floor bound", "m <= 3*Delta"))
    return Evaluation(tuple(results))


def bipartite_degree_sum_bound(subject: GraphSubject, params, settings) -> Evaluation:
    parts, reason = _parts_or_reason(subject)
    if parts is None:
        return _na(reason)
    g = subject.graph
    big = g.max_degree()
    if big < 3:
        return _na("Delta < 3")
    rhs = sum((g.degree(v) - 1) ** 2 for v in parts.part1)
    rhs += sum(g.degree(v) - 2 for v in parts.part2)
    rhs += 2 * parts.n1 * big
    return Evaluation((_judge("irr <= sum_V1 (d-1)^2 + sum_V2 (d-2) + 2n1*Delta", albertson(g), rhs, "<=", settings),))


def bipartite_zagreb_bound(subject: GraphSubject, params, settings) -> Evaluation:
    parts, reason = _parts_or_reason(subject)
    if parts is None:
        return _na(reason)
    g = subject.graph
    irr = albertson(g)
    rhs = 2 * first_zagreb(g) + (parts.n1 - 1) * irr + (parts.n2 - 2) * irr
    return Evaluation((_judge("sigma <= 2M1 + (n1-1)irr + (n2-2)irr", sigma(g), rhs, "<=", settings),))


def bipartite_min_degree_bounds(subject: GraphSubject, params, settings) -> Evaluation:
    parts, reason = _parts_or_reason(subject)
    if parts is None:
        return _na(reason)
    g = subject.graph
    big, small = g.max_degree(), g.min_degree()
    if small < 2:
        return _na("delta < 2")
    n1, n2 = parts.n1, parts.n2
    rhs_irr = 2 * n1 ** 2 + Fraction(big ** 2 * (big - 1) + 4 * n2, n1 * n2 + 5 * small)
    rhs_sigma = 2 * n1 ** 3 + Fraction(big ** 3 * (big - 1) + 4 * n2 ** 2, n1 * n2 + 3 * small ** 2)
    return Evaluation((
        _judge("irr <= 2n1^2 + (Delta^2(Delta-1) + 4n2)/(n1n2 + 5delta)", albertson(g), rhs_irr, "<=", settings),
        _judge("sigma <= 2n1^3 + (Delta^3(Delta-1) + 4n2^2)/(n1n2 + 3delta^2)", sigma(g), rhs_sigma, "<=", settings),
    ))


# ------------------------------------------------------------------ classes


def _extremes(members: Sequence[Graph], index: Callable[[Graph], int]):
    """``(min, max, min attainers, max attainers)`` over a non-empty class."""
    values = [index(g) for g in members]
    low, high = min(values), max(values)
    lows = [g for g, v in zip(members, values) if v == low]
    highs = [g for g, v in zip(members, values) if v == high]
    return low, high, lows, highs


def star_maximizes_irr(graph_class: GraphClass, params, settings) -> Evaluation:
    n = graph_class.n
    if n < 2:
        return _na("n < 2")
    members = class_members(graph_class, settings.budgets)
    _, high, _, highs = _extremes(members, albertson)
    others = [g for g in highs if not is_star(g)]
    unique = len(highs) == 1 and not others
    return Evaluation((
        _judge("irr_max = (n-1)(n-2)", high, (n - 1) * (n - 2), "==", settings, witness=_witness(highs[0])),
        _judge("star is the only maximizer", len(highs), 1, "==", settings, holds=unique,
               witness=_witness(others[0] if others else highs[0])),
    ))


def total_irregularity_extremes(graph_class: GraphClass, params, settings) -> Evaluation:
    n = graph_class.n
    if n < 4:
        return _na("n < 4")
    members = class_members(graph_class, settings.budgets)
    low, high, lows, highs = _extremes(members, total_irregularity)
    return Evaluation((
        _judge("irr_t max = (n-1)(n-2)", high, (n - 1) * (n - 2), "==", settings, witness=_witness(highs[0])),
        _judge("irr_t min = 2(n-2)", low, 2 * (n - 2), "==", settings, witness=_witness(lows[0])),
    ))


def max_sigma_connected(graph_class: GraphClass, params, settings) -> Evaluation:
    n = graph_class.n
    if n < 3:
        return _na("n < 3")
    members = class_members(graph_class, settings.budgets)
    _, high, _, highs = _extremes(members, sigma)
    first: List[PartOutcome] = []
    second: List[PartOutcome] = []
    for g in highs:
        big, small = g.max_degree(), g.min_degree()
        if small == big:
            continue
        w = _witness(g)
        first.append(_judge("sigma > delta(Delta-delta)^3 n/(Delta+1)", high,
                            Fraction(small * (big - small) ** 3 * n, big + 1), ">", settings, witness=w))
        second.append(_judge("sigma > (Delta-1)^3 n/(Delta+1)", high,
                             Fraction((big - 1) ** 3 * n, big + 1), ">", settings, witness=w))
    if not first:
        return _na("every sigma maximizer is regular")
    return Evaluation((worst_part(tuple(first)), worst_part(tuple(second))))


def tree_sigma_extremes(graph_class: GraphClass, params, settings) -> Evaluation:
    n = graph_class.n
    if n < 2:
        return _na("n < 2")
    members = class_members(graph_class, settings.budgets)
    low, high, lows, highs = _extremes(members, sigma)
    if n == 2:
        return Evaluation((_judge("sigma_min = 0", low, 0, "==", settings, witness=_witness(lows[0])),))
    return Evaluation((_judge("sigma_max = (n-1)(n-2)", high, (n - 1) * (n - 2), "==", settings,
                              witness=_witness(highs[0])),))


def min_degree_characterization(graph_class: GraphClass, params, settings) -> Evaluation:
    n = graph_class.n
    if n < 4:
        return _na("n < 4")
    members = class_members(graph_class, settings.budgets)
    groups: Dict[int, List[Graph]] = {}
    for g in members:
        groups.setdefault(g.min_degree(), []).append(g)
    mismatches: List[Graph] = []
    for small in sorted(groups):
        high = max(albertson(g) for g in groups[small])
        condition = 2 * (small - 1) * (2 * small - 1) > 0
        mismatches.extend(g for g in groups[small] if (albertson(g) == high) != condition)
    witness = _witness(mismatches[0]) if mismatches else None
    return Evaluation(
        (_judge("graphs breaking the equivalence", len(mismatches), 0, "==", settings, witness=witness),),
        interpretation=C8_INTERPRETATION,
    )


def _path_characterization(graph_class: GraphClass, settings, index: Callable[[Graph], int],
                           name: str) -> Evaluation:
    n = graph_class.n
    if n < 4:
        return _na("n < 4")
    members = [g for g in class_members(graph_class, settings.budgets) if not is_star(g)]
    low, _, lows, _ = _extremes(members, index)
    path = next(g for g in members if is_path(g))
    intruders = [g for g in lows if not is_path(g)]
    return Evaluation((
        _judge(f"path attains {name}_min", index(path), low, "==", settings, witness=_witness(path)),
        _judge(f"{name}_min = {name}(P_n)", low, index(generate_path(n)), "==", settings,
               witness=_witness(lows[0])),
        _judge("no other tree attains the minimum", len(intruders), 0, "==", settings,
               witness=_witness(intruders[0]) if intruders else None),
    ))


def path_minimizes_irr(graph_class: GraphClass, params, settings) -> Evaluation:
    return _path_characterization(graph_class, settings, albertson, "irr")


def path_minimizes_sigma(graph_class: GraphClass, params, settings) -> Evaluation:
    return _path_characterization(graph_class, settings, sigma, "sigma")


def _min_bound(graph_class: GraphClass, settings, label: str, index: Callable[[Graph], int],
               rhs_for: Callable[[Graph], Optional[Number]]) -> Tuple[PartOutcome, ...]:
    """Judge ``index_min >= rhs`` under the configured extremum reading.

    ``rhs_for`` returns None when its own guard fails for that tree.
    """
    members = class_members(graph_class, settings.budgets)
    if not members:
        return (_na_part(label, "empty class"),)
    if settings.extremum_reading == "per_graph":
        candidates = [(index(g), g) for g in members]
    else:
        low, _, lows, _ = _extremes(members, index)
        candidates = [(low, lows[0])]
    parts = []
    for value, g in candidates:
        rhs = rhs_for(g)
        if rhs is None:
            parts.append(_na_part(label, f"factorial argument > {MAX_FACTORIAL_ARGUMENT}"))
        else:
            parts.append(_judge(label, value, rhs, ">=", settings, witness=_witness(g)))
    return (worst_part(tuple(parts)),)


def _maxdeg_guard(graph_class: GraphClass) -> Optional[str]:
    if graph_class.max_degree < 4:
        return "Delta < 4: no admissible (alpha, p)"
    return None


def min_irr_exponential_bound(graph_class: GraphClass, params: ClaimParams, settings) -> Evaluation:
    reason = _maxdeg_guard(graph_class)
    if reason:
        return _na(reason)
    n, big, alpha = graph_class.n, graph_class.max_degree, params.alpha

    def rhs_for(g: Graph) -> Optional[Fraction]:
        spread = g.max_degree() - g.min_degree()
        if max(spread, big - 1) > MAX_FACTORIAL_ARGUMENT:
            return None
        return Fraction(2 ** alpha * (2 ** (n - big) + _ceil_div(n * big * big, 2)),
                        factorial(spread) + factorial(big - 1))

    return Evaluation(_min_bound(graph_class, settings,
                                 "irr_min >= 2^a(2^(n-Delta) + ceil(n*Delta^2/2))/((d_n-d_1)! + (Delta-1)!)",
                                 albertson, rhs_for))


def min_irr_power_bounds(graph_class: GraphClass, params: ClaimParams, settings) -> Evaluation:
    reason = _maxdeg_guard(graph_class)
    if reason:
        return _na(reason)
    big, alpha, p = graph_class.max_degree, params.alpha, params.p
    first = Fraction(2 ** alpha, (big - p) ** 2)
    second = Fraction(big * big * (big - 1) * 2 ** alpha, (big - p) ** 2)
    return Evaluation(
        _min_bound(graph_class, settings, "irr_min >= 2^a/(Delta-p)^2", albertson, lambda g: first)
        + _min_bound(graph_class, settings, "irr_min >= Delta^2(Delta-1)2^a/(Delta-p)^2", albertson,
                     lambda g: second)
    )


def max_min_irr_relation(graph_class: GraphClass, params: ClaimParams, settings) -> Evaluation:
    reason = _maxdeg_guard(graph_class)
    if reason:
        return _na(reason)
    members = class_members(graph_class, settings.budgets)
    if not members:
        return _na("empty class")
    n, big, alpha, p = graph_class.n, graph_class.max_degree, params.alpha, params.p
    m = n - 1
    low, high, lows, highs = _extremes(members, albertson)
    rhs = low - Fraction(big * big * (big - 1) * 2 ** alpha, (big - p) ** 2)
    radicand = 2 * n * (big * big + 3 * m)
    with _precision(settings):
        root = sqrt_value(radicand, settings.decimal_precision)
        lhs = like(Fraction(high, 2 * (big + 1)), root, settings.decimal_precision) * root
    holds = rhs <= 0 or radicand * high * high >= (2 * (big + 1) * rhs) ** 2
    return Evaluation(
        (_judge("lambda*irr_max >= irr_min - Delta^2(Delta-1)2^a/(Delta-p)^2", lhs, rhs, ">=", settings,
                holds=holds, witness=_witness(lows[0])),),
        interpretation=C11_INTERPRETATION,
    )


def min_sigma_exponential_bound(graph_class: GraphClass, params: ClaimParams, settings) -> Evaluation:
    reason = _maxdeg_guard(graph_class)
    if reason:
        return _na(reason)
    n, big, alpha = graph_class.n, graph_class.max_degree, params.alpha
    if big - 2 > MAX_FACTORIAL_ARGUMENT:
        return _na(f"factorial argument > {MAX_FACTORIAL_ARGUMENT}")
    rhs = Fraction(2 ** alpha * (2 ** (n - big) + _ceil_div(n * big ** 3, 2)), big * factorial(big - 2))
    return Evaluation(_min_bound(graph_class, settings,
                                 "sigma_min >= 2^a(2^(n-Delta) + ceil(n*Delta^3/2))/(Delta(Delta-2)!)",
                                 sigma, lambda g: rhs))


def min_sigma_factorial_bound(graph_class: GraphClass, params: ClaimParams, settings) -> Evaluation:
    reason = _maxdeg_guard(graph_class)
    if reason:
        return _na(reason)
    n, big, alpha, p = graph_class.n, graph_class.max_degree, params.alpha, params.p
    if n < 3 * big:
        return _na("n < 3*Delta")
    if n - 3 * big > MAX_FACTORIAL_ARGUMENT:
        return _na(f"factorial argument > {MAX_FACTORIAL_ARGUMENT}")
    rhs = Fraction(big * big * (big - 1) * (3 ** alpha + big ** p), factorial(n - 3 * big) + (big - p) ** 2)
    return Evaluation(_min_bound(graph_class, settings,
                                 "sigma_min >= Delta^2(Delta-1)(3^a + Delta^p)/((n-3Delta)! + (Delta-p)^2)",
                                 sigma, lambda g: rhs))


def min_sigma_quadratic_bound(graph_class: GraphClass, params: ClaimParams, settings) -> Evaluation:
    reason = _maxdeg_guard(graph_class)
    if reason:
        return _na(reason)
    n, big, alpha, p = graph_class.n, graph_class.max_degree, params.alpha, params.p
    if 2 * big == 3 * p:
        return _na("2*Delta = 3p")
    rhs = Fraction(n * big * big * (big - 1) * 3 ** alpha, (2 * big - 3 * p) ** 2)
    return Evaluation(_min_bound(graph_class, settings, "sigma_min >= n*Delta^2(Delta-1)3^a/(2Delta-3p)^2",
                                 sigma, lambda g: rhs))


def bipartite_extremes(graph_class: GraphClass, params, settings) -> Evaluation:
    n1, n2 = graph_class.n1, graph_class.n2
    if n1 > 2 * n2:
        return _na("n1 > 2*n2")
    discriminant = 28 * n1 * n1 - 24 * n1 * n2
    if discriminant < 0:
        return _na("28n1^2 - 24n1n2 < 0")
    members = class_members(graph_class, settings.budgets)
    if not members:
        return _na("empty class")
    low, high, lows, highs = _extremes(members, albertson)
    prec = settings.decimal_precision
    with _precision(settings):
        root = sqrt_value(discriminant, prec)
        alpha = like(n2 - Fraction(4, 3) * n1, root, prec) + root / 3
        base = like(4 * n1, root, prec) - root
        formula_max = base ** 3 / 108 + alpha * n1 * n1 - alpha * alpha * n1
        formula_min = base / 3
    return Evaluation((
        _judge("irr_max = (4n1 - r)^3/108 + alpha*n1^2 - alpha^2*n1", high, formula_max, "==", settings,
               witness=Witness.of(highs[0], graph_class.declared_parts())),
        _judge("irr_min = (4n1 - r)/3", low, formula_min, "==", settings,
               witness=Witness.of(lows[0], graph_class.declared_parts())),
    ))


EVALUATORS = {
    "C1": star_maximizes_irr,
    "C2": caterpillar_identity,
    "C3": total_irregularity_extremes,
    "C4": variance_bound,
    "C5": max_sigma_connected,
    "C6": tree_sigma_extremes,
    "C7": hamiltonian_sigma2,
    "C8": min_degree_characterization,
    "C9": min_irr_exponential_bound,
    "C10": min_irr_power_bounds,
    "C11": max_min_irr_relation,
    "C12": path_minimizes_irr,
    "C13": tree_average_degree_bound,
    "C14": tree_max_degree_bound,
    "C15": min_sigma_exponential_bound,
    "C16": min_sigma_factorial_bound,
    "C17": min_sigma_quadratic_bound,
    "C18": path_minimizes_sigma,
    "C19": tree_sigma_bound,
    "C20": bipartite_order_bound,
    "C21": bipartite_extremes,
    "C22": bipartite_edge_bounds,
    "C23": bipartite_degree_sum_bound,
    "C24": bipartite_zagreb_bound,
    "C25": bipartite_min_degree_bounds,
    "C26": sandwich_bound,
    "C27": complete_bipartite_identity,
}
