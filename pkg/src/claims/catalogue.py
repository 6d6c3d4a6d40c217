"""Catalogue of checkable statements about irregularity indices.

Each entry describes one claim: its statement, kind, applicability guard,
the graph classes it is evaluated on, and its parameter rule. The
evaluation code lives in :mod:`src.claims.evaluators`.
"""

from typing import Any, Dict, List, Optional

TREE_CLASSES = ("TREES",)
MAXDEG_CLASSES = ("TREES_MAXDEG",)
CONNECTED_CLASSES = ("CONNECTED",)
BIPARTITE_CLASSES = ("BIPARTITE",)

CLAIM_CATALOGUE: Dict[str, Dict[str, Any]] = {
    "C1": {
        "statement": "Among trees of order n the star is the unique maximizer of irr, with value (n-1)(n-2).",
        "kind": "CLASS_EXTREMAL",
        "guard": "n >= 2",
        "classes": TREE_CLASSES,
    },
    "C2": {
        "statement": "For a caterpillar with spine degrees d_1..d_k, irr = (d_1-1)^2 + (d_k-1)^2 "
                     "+ sum_{interior} (d_i-1)(d_i-2) + sum |d_i - d_(i+1)|.",
        "kind": "IDENTITY",
        "guard": "caterpillar tree",
    },
    "C3": {
        "statement": "Over trees of order n >= 4 the total irregularity ranges from 2(n-2) to (n-1)(n-2).",
        "kind": "CLASS_EXTREMAL",
        "guard": "n >= 4",
        "classes": TREE_CLASSES,
        "note": "total Albertson index and total irregularity are read as the same quantity",
    },
    "C4": {
        "statement": "irr <= sqrt(m*M1 - 4m^2).",
        "kind": "PER_GRAPH",
        "guard": "m >= 1 and m*M1 >= 4m^2",
    },
    "C5": {
        "statement": "A connected graph attaining sigma_max at order n satisfies sigma > delta(Delta-delta)^3 n/(Delta+1) "
                     "and sigma > (Delta-1)^3 n/(Delta+1).",
        "kind": "CLASS_EXTREMAL",
        "guard": "n >= 3 and the maximizer is not regular",
        "classes": CONNECTED_CLASSES,
    },
    "C6": {
        "statement": "Over trees of order n, sigma_max = (n-1)(n-2) for n >= 3 and sigma_min = 0 for n = 2.",
        "kind": "CLASS_EXTREMAL",
        "guard": "n >= 2",
        "classes": TREE_CLASSES,
    },
    "C7": {
        "statement": "A Hamiltonian graph of order n >= 3 has sigma2 >= 2.",
        "kind": "PER_GRAPH",
        "guard": "Hamiltonian, not complete, 3 <= n <= Hamiltonicity budget",
        "interpretation": "sigma2 uses deg(u) + deg(v); the literal mode uses 2*min(deg(u), deg(v))",
    },
    "C8": {
        "statement": "A connected graph of order n >= 4 and minimum degree delta attains the maximum Albertson "
                     "index iff 2(delta-1)(2delta-1) > 0.",
        "kind": "IFF_CHARACTERIZATION",
        "guard": "n >= 4",
        "classes": CONNECTED_CLASSES,
        "note": "the comparison class is not fixed by the statement",
        "interpretation": "delta >= 2 iff the graph attains the maximum Albertson index among "
                          "connected graphs of the same order and minimum degree",
    },
    "C9": {
        "statement": "irr_min >= 2^alpha (2^(n-Delta) + ceil(n*Delta^2/2)) / ((d_n-d_1)! + (Delta-1)!).",
        "kind": "CLASS_EXTREMAL",
        "guard": "Delta >= 4, factorial arguments <= 20",
        "classes": MAXDEG_CLASSES,
        "params": "alpha",
    },
    "C10": {
        "statement": "irr_min >= 2^alpha/(Delta-p)^2 and irr_min >= Delta^2(Delta-1) 2^alpha/(Delta-p)^2.",
        "kind": "CLASS_EXTREMAL",
        "guard": "Delta >= 4",
        "classes": MAXDEG_CLASSES,
        "params": "alpha,p",
    },
    "C11": {
        "statement": "lambda*irr_max >= irr_min - Delta^2(Delta-1) 2^alpha/(Delta-p)^2 with "
                     "lambda = sqrt(2n(Delta^2+3m))/(2(Delta+1)).",
        "kind": "CLASS_EXTREMAL",
        "guard": "Delta >= 4",
        "classes": MAXDEG_CLASSES,
        "params": "alpha,p",
        "note": "the printed lambda has unbalanced delimiters",
        "interpretation": "lambda = sqrt(2n(Delta^2 + 3m)) / (2(Delta + 1))",
    },
    "C12": {
        "statement": "Among non-star trees of order n, irr(T) >= irr(P_n) with equality iff T is the path.",
        "kind": "IFF_CHARACTERIZATION",
        "guard": "n >= 4",
        "classes": TREE_CLASSES,
    },
    "C13": {
        "statement": "irr(T) >= deg_ave - 2m/n for every tree T.",
        "kind": "PER_GRAPH",
        "guard": "tree",
    },
    "C14": {
        "statement": "irr(T) >= (3*Delta*m^2 + 2*delta*m)/(n(Delta-3)) for every tree T with Delta >= 4.",
        "kind": "PER_GRAPH",
        "guard": "tree with Delta >= 4",
    },
    "C15": {
        "statement": "sigma_min >= 2^alpha (2^(n-Delta) + ceil(n*Delta^3/2)) / (Delta (Delta-2)!).",
        "kind": "CLASS_EXTREMAL",
        "guard": "Delta >= 4",
        "classes": MAXDEG_CLASSES,
        "params": "alpha",
    },
    "C16": {
        "statement": "sigma_min >= Delta^2(Delta-1)(3^alpha + Delta^p) / ((n-3Delta)! + (Delta-p)^2).",
        "kind": "CLASS_EXTREMAL",
        "guard": "Delta >= 4 and n >= 3*Delta",
        "classes": MAXDEG_CLASSES,
        "params": "alpha,p",
    },
    "C17": {
        "statement": "sigma_min >= n*Delta^2(Delta-1) 3^alpha / (2Delta-3p)^2.",
        "kind": "CLASS_EXTREMAL",
        "guard": "Delta >= 4 and 2*Delta != 3p",
        "classes": MAXDEG_CLASSES,
        "params": "alpha,p",
    },
    "C18": {
        "statement": "Among non-star trees of order n, sigma(T) >= sigma(P_n) with equality iff T is the path.",
        "kind": "IFF_CHARACTERIZATION",
        "guard": "n >= 4",
        "classes": TREE_CLASSES,
    },
    "C19": {
        "statement": "sigma(T) >= irr(T) + deg_ave^2 - 2m^2/n for every tree T.",
        "kind": "PER_GRAPH",
        "guard": "tree",
    },
    "C20": {
        "statement": "For a bipartite graph with parts n1 >= n2, irr <= u1u2(n1-n2) + u1(n2-u2)(n2-u1) "
                     "+ u2(n1-u1)(n1-u2), u1 = (n2-u2)/2, u2 = n2 - 4n1/3 + sqrt(28n1^2/9 - 8n1n2/3) "
                     "when n1 < 2n2 and u2 = n2 otherwise.",
        "kind": "PER_GRAPH",
        "guard": "bipartite with non-empty parts",
    },
    "C21": {
        "statement": "Over bipartite graphs with parts n1, n2: irr_max = (4n1 - r)^3/108 + alpha*n1^2 - alpha^2*n1 "
                     "and irr_min = (4n1 - r)/3 with r = sqrt(28n1^2 - 24n1n2), alpha = n2 - 4n1/3 + r/3.",
        "kind": "CLASS_EXTREMAL",
        "guard": "n1 <= 2n2 and 28n1^2 - 24n1n2 >= 0",
        "classes": BIPARTITE_CLASSES,
        "note": "the printed closed forms are tested as given",
    },
    "C22": {
        "statement": "For a bipartite graph: irr <= 2n1n2 + n2*delta/m, sigma <= 4n1n2 + sqrt(2n1) n2*delta/m, "
                     "and for m > 3Delta the floor bounds irr <= (floor(2n1/(m-3Delta))^2 - 1) "
                     "+ (floor(2n2/(m-3Delta))^2 - 1) and its sigma analogue with 4n1, 4n2.",
        "kind": "PER_GRAPH",
        "guard": "bipartite, m >= 1; floor parts need m > 3*Delta",
    },
    "C23": {
        "statement": "For a bipartite graph with Delta >= 3: irr <= sum_V1 (d-1)^2 + sum_V2 (d-2) + 2n1*Delta.",
        "kind": "PER_GRAPH",
        "guard": "bipartite, Delta >= 3",
    },
    "C24": {
        "statement": "For a bipartite graph: sigma <= 2M1 + (n1-1) irr + (n2-2) irr.",
        "kind": "PER_GRAPH",
        "guard": "bipartite",
    },
    "C25": {
        "statement": "For a bipartite graph with delta >= 2: irr <= 2n1^2 + (Delta^2(Delta-1) + 4n2)/(n1n2 + 5delta) "
                     "and sigma <= 2n1^3 + (Delta^3(Delta-1) + 4n2^2)/(n1n2 + 3delta^2).",
        "kind": "PER_GRAPH",
        "guard": "bipartite, delta >= 2",
    },
    "C26": {
        "statement": "sqrt(sigma) <= irr <= sqrt(m*sigma).",
        "kind": "PER_GRAPH",
        "guard": "m >= 1",
    },
    "C27": {
        "statement": "irr(K_{s,t}) = st|s-t| and sigma(K_{s,t}) = st(s-t)^2.",
        "kind": "IDENTITY",
        "guard": "complete bipartite",
    },
}


def get_claim_entry(claim_id: str) -> Optional[Dict[str, Any]]:
    """Catalogue entry for ``claim_id``, or None."""
    return CLAIM_CATALOGUE.get(claim_id)


def get_claim_ids() -> List[str]:
    """Catalogued ids in numeric order."""
    return sorted(CLAIM_CATALOGUE, key=lambda cid: int(cid[1:]))
