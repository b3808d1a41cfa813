#!/usr/bin/env python3
"""
TotDom Game Solver - Claim Suites
Combinatorial Games Group

Each suite turns a group of exact statements about game values into a list
of ClaimChecks. Suites only build claims; nothing is solved until a
ClaimRunner runs them. SUITE_REGISTRY maps suite names to the builder and
the profile entry that parameterises it.

Notation in loci: g(C_n) is the D-game value, g'(C_n) the S-game value,
G|S predomination of S, G|^m S predomination after move m.
"""

import logging
import random
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Sequence, Tuple

from src.config.settings import REPORTED_ATTACHMENT_ORDERS
from src.game.variants import (
    Player,
    admissible_sdp_pairs,
    delayed_predom,
    dgame,
    double_staller,
    sdp,
    sdp_predom,
    sgame,
    ssp,
)
from src.graph.core import Graph, remove_vertex
from src.graph.families import (
    attach_complete,
    build_cycle,
    build_gndm,
    build_hm,
    build_k_leaves,
    build_path,
    build_tilde,
    build_z_core,
    build_zk,
    join_universal,
    random_graph_sample,
)
from src.solver.critical import is_critical, values_all_single_predominations
from src.verify.claims import (
    ClaimCheck,
    ClaimStatus,
    ValueCache,
    at_least,
    equals,
    holds,
    observed,
    out_of_hypothesis,
)

logger = logging.getLogger(__name__)

CYCLE_HYPOTHESIS = "n must be 2 mod 6"
ZK_HYPOTHESIS = "Z_k is defined for k >= 1"


def cycle_game_value(n: int) -> int:
    """g(C_n) for n = 2 mod 6"""
    return (2 * n - 1) // 3


def _d(graph: Graph, S=None) -> Callable[[ValueCache], int]:
    return lambda cache: cache.value(graph, dgame(S))


def _s(graph: Graph, S=None) -> Callable[[ValueCache], int]:
    return lambda cache: cache.value(graph, sgame(S))


def _cycle_ok(n: int) -> bool:
    return n >= 8 and n % 6 == 2


# ---- cycles ------------------------------------------------------------------


def suite_cycle_closed_forms(n_list: Sequence[int], seed: int) -> List[ClaimCheck]:
    locus = "cycle closed forms: g(C_n) = g(C_n|v) = (2n-1)/3, g'(C_n) = g'(C_n|v) = (2n-1)/3 - 1"
    checks: List[ClaimCheck] = []
    for n in n_list:
        prefix = f"cycle/n={n}"
        if not _cycle_ok(n):
            checks.append(out_of_hypothesis(prefix, locus, "closed form", CYCLE_HYPOTHESIS))
            continue
        C = build_cycle(n)
        g = cycle_game_value(n)
        # vertex-transitive: u1 plus one random vertex stand in for all v
        v = random.Random(seed + n).randrange(1, n)
        name = C.name_of(v)
        checks += [
            equals(f"{prefix}/d", locus, g, _d(C)),
            equals(f"{prefix}/s", locus, g - 1, _s(C)),
            equals(f"{prefix}/d|u1", locus, g, _d(C, [0])),
            equals(f"{prefix}/s|u1", locus, g - 1, _s(C, [0])),
            equals(f"{prefix}/d|{name}", locus, g, _d(C, [v])),
            equals(f"{prefix}/s|{name}", locus, g - 1, _s(C, [v])),
            equals(
                f"{prefix}/critical",
                "a cycle with g(C_n|v) = g(C_n) is not critical",
                0,
                lambda cache, C=C: int(is_critical(C, cache.limits)),
            ),
        ]
    return checks


def suite_variant_lemmas(n_list: Sequence[int], double_staller_orders: Sequence[int]) -> List[ClaimCheck]:
    checks: List[ClaimCheck] = []

    locus = "double-Staller start: g''(C_n) = g(C_n) for n >= 3"
    for n in double_staller_orders:
        C = build_cycle(n)
        checks.append(
            holds(
                f"double-staller/n={n}",
                locus,
                "ss == d",
                lambda cache, C=C: {"ss": cache.value(C, double_staller()), "d": cache.value(C, dgame())},
                lambda values: values["ss"] == values["d"],
            )
        )

    for n in n_list:
        prefix = f"lemmas/n={n}"
        if not _cycle_ok(n):
            checks.append(out_of_hypothesis(prefix, "cycle variant lemmas", ">= (2n-1)/3", CYCLE_HYPOTHESIS))
            continue
        C = build_cycle(n)
        g = cycle_game_value(n)
        pair = [0, 4]
        checks.append(equals(f"{prefix}/d|u1,u5", "g(C_n|{u1,u5}) = (2n-1)/3", g, _d(C, pair)))

        locus = "delayed predomination: g(C_n|^m{u1,u5}) >= (2n-1)/3 for every m"
        for m in range(g + 1):
            checks.append(
                at_least(f"{prefix}/delayed/m={m}", locus, g, lambda cache, m=m, C=C: cache.value(C, delayed_predom(m, pair)))
            )

        # The counting bound needs both passes to happen and Dominator to stay
        # off u1, u5 between them. Free play can break either, so a short game
        # is a discrepancy carrying its optimal line, not a failure.
        sdp_locus = "forced passes: g^sdp(k,l)(C_n) >= (2n-1)/3 for every admissible k <= l"
        sdp_predom_locus = "forced passes with predomination at l: g^sdp(k,l)(C_n|^l{u1,u5}) >= (2n-1)/3"
        for k, l in admissible_sdp_pairs(g):
            plain_sdp, predom_sdp = sdp(k, l), sdp_predom(k, l, pair)
            for name, locus, variant in (("sdp", sdp_locus, plain_sdp), ("sdp-predom", sdp_predom_locus, predom_sdp)):
                checks.append(
                    at_least(
                        f"{prefix}/{name}/k={k},l={l}",
                        locus,
                        g,
                        lambda cache, C=C, variant=variant: cache.value(C, variant),
                        on_mismatch=ClaimStatus.DISCREPANCY,
                        witness=lambda cache, C=C, variant=variant: cache.line(C, variant),
                    )
                )

        checks.append(
            at_least(
                f"{prefix}/ssp/u1,u5",
                "trigger passes: g^ssp(u1,u5)(C_n) >= (2n-1)/3",
                g,
                lambda cache, C=C: cache.value(C, ssp(0, 4)),
            )
        )
    return checks


# ---- attached cliques --------------------------------------------------------


def suite_gnm(gnm: Sequence[Tuple[int, int]], hm: Sequence[int]) -> List[ClaimCheck]:
    checks: List[ClaimCheck] = []
    locus = "G_{n,m}: g(G_{n,m}) = (2n-1)/3 + 2 and g(G_{n,m}|w1) = (2n-1)/3"
    for n, m in gnm:
        prefix = f"gnm/n={n}/m={m}"
        if not _cycle_ok(n) or m < 4:
            checks.append(out_of_hypothesis(prefix, locus, "closed form", "needs n = 2 mod 6, n >= 8, m >= 4"))
            continue
        G = build_gndm(n, 4, m)
        w1 = G.vertex("w1")
        g = cycle_game_value(n)
        checks += [
            equals(f"{prefix}/d", locus, g + 2, _d(G)),
            equals(f"{prefix}/d|w1", locus, g, _d(G, [w1])),
            holds(
                f"{prefix}/drop-by-two",
                "predominating one vertex lowers g by at most 2, with equality at w1",
                "d|w1 == d - 2",
                lambda cache, G=G, w1=w1: {"d": cache.value(G, dgame()), "d|w1": cache.value(G, dgame([w1]))},
                lambda values: values["d|w1"] == values["d"] - 2,
            ),
        ]

    for m in hm:
        H = build_hm(m)
        prefix = f"hm/m={m}"
        w = {H.vertex("w1"), H.vertex("w2")}
        checks += [
            equals(f"{prefix}/d", "g(H_m) = g'(H_m) = 2", 2, _d(H)),
            equals(f"{prefix}/s", "g(H_m) = g'(H_m) = 2", 2, _s(H)),
        ]
        for v in range(H.order):
            name = H.name_of(v)
            checks.append(equals(f"{prefix}/s|{name}", "g'(H_m|v) = 2 for every v", 2, _s(H, [v])))
            expected = 1 if v in w else 2
            checks.append(equals(f"{prefix}/d|{name}", "g(H_m|v) = 1 for v in {w1,w2}, else 2", expected, _d(H, [v])))
    return checks


def suite_tilde(pairs: Sequence[Tuple[int, int]]) -> List[ClaimCheck]:
    # hypothesis n = 2 mod 6 carried over from the G_{n,m} family
    locus = "tilde G_{n,m}: g = (2n-1)/3 + 2 and g(.|w) = (2n-1)/3 (assumes n = 2 mod 6)"
    checks: List[ClaimCheck] = []
    for n, m in pairs:
        prefix = f"tilde/n={n}/m={m}"
        if not _cycle_ok(n) or m < 3:
            checks.append(out_of_hypothesis(prefix, locus, "closed form", "needs n = 2 mod 6, m >= 3"))
            continue
        G = build_tilde(n, m)
        g = cycle_game_value(n)
        checks += [
            equals(f"{prefix}/d", locus, g + 2, _d(G)),
            equals(f"{prefix}/d|w", locus, g, _d(G, [G.vertex("w")])),
        ]
    return checks


def two_predominated_expected(n: int, d: int) -> int:
    g = cycle_game_value(n)
    r = d % 6
    if r == 4:
        return g
    if r in (1, 3, 5):
        return g - 1
    return g - 2


def suite_two_predominated(n_list: Sequence[int]) -> List[ClaimCheck]:
    d_locus = "g(C_n|{u1,u2}) = g, g - 1, g - 2 for d(u1,u2) mod 6 = 4, odd, {0,2}"
    s_locus = "g'(C_n|{u1,u2}) = g(C_n) - 1"
    checks: List[ClaimCheck] = []
    for n in n_list:
        prefix = f"two-predom/n={n}"
        if not _cycle_ok(n):
            checks.append(out_of_hypothesis(prefix, d_locus, "case table", CYCLE_HYPOTHESIS))
            continue
        C = build_cycle(n)
        g = cycle_game_value(n)
        for d in range(1, n // 2 + 1):
            pair = [0, d]
            checks.append(equals(f"{prefix}/d={d}/d", d_locus, two_predominated_expected(n, d), _d(C, pair)))
            checks.append(equals(f"{prefix}/d={d}/s", s_locus, g - 1, _s(C, pair)))
    return checks


# ---- general attachment ------------------------------------------------------


def _sandwich_host(kind: str, order: int) -> Graph:
    if kind == "cycle":
        return build_cycle(order)
    if kind == "path":
        return build_path(order)
    raise ValueError(f"unknown sandwich host {kind!r}")


def sandwich_values(cache: ValueCache, host: Graph, a: int, b: int, m: int) -> Dict[str, int]:
    """Lower bound, value and upper bound of g(G_{H,a,b,m})"""
    length = cache.value(host, dgame())
    pair = [a, b]
    lower = [cache.value(host, delayed_predom(p, pair)) for p in range(length + 1)]
    lower.append(cache.value(host, ssp(a, b)))
    for k, l in admissible_sdp_pairs(length):
        lower.append(cache.value(host, sdp(k, l)))
        lower.append(cache.value(host, sdp_predom(k, l, pair)))
    upper = max(length, cache.value(host, double_staller()))
    middle = cache.value(attach_complete(host, a, b, m), dgame())
    return {"lower": min(lower) + 2, "value": middle, "upper": upper + 2}


def suite_sandwich(instances: Sequence[Tuple[str, int, int, int]]) -> List[ClaimCheck]:
    """
    Instances are (host kind, host order, second vertex, m). For cycles the
    second vertex is given by its distance from u1, for paths by its index.
    """
    locus = "min over delayed, ssp, sdp variants of H + 2 <= g(G_{H,a,b,m}) <= max(g(H), g''(H)) + 2"
    checks: List[ClaimCheck] = []
    for kind, order, second, m in instances:
        host = _sandwich_host(kind, order)
        prefix = f"sandwich/{kind}{order}/b={second}/m={m}"
        checks.append(
            holds(
                prefix,
                locus,
                "lower <= value <= upper",
                lambda cache, host=host, second=second, m=m: sandwich_values(cache, host, 0, second, m),
                lambda v: v["lower"] <= v["value"] <= v["upper"],
            )
        )
        if kind == "cycle" and second == 4 and _cycle_ok(order):
            checks.append(
                equals(
                    f"{prefix}/value",
                    "G_{n,m} = G_{n,4,m}: g = (2n-1)/3 + 2",
                    cycle_game_value(order) + 2,
                    _d(attach_complete(host, 0, second, m)),
                )
            )
    return checks


def attachment_expected(cycle_value: int, d: int) -> int:
    return cycle_value + (2 if d % 6 == 4 else 1)


def suite_attachment_conjecture(pairs: Sequence[Tuple[int, int]]) -> List[ClaimCheck]:
    """
    Reproduction of reported computations: g(G_{n,d,m}) = g(C_n) + 1 for
    d != 4 mod 6 and g(C_n) + 2 for d = 4 mod 6. Mismatches outside the
    reported orders are discrepancies, not failures.
    """
    locus = "reported computation: g(G_{n,d,m}) = g(C_n) + 1, or + 2 when d = 4 mod 6"
    bound_locus = "g(C_n|{u1,u2}) + 2 <= g(G_{n,d,m}) <= g(C_n) + 2"
    checks: List[ClaimCheck] = []
    for n, m in pairs:
        prefix = f"attachment/n={n}/m={m}"
        if not _cycle_ok(n):
            checks.append(out_of_hypothesis(prefix, locus, "g(C_n) + 1 or + 2", CYCLE_HYPOTHESIS))
            continue
        C = build_cycle(n)
        mismatch = ClaimStatus.FAIL if n in REPORTED_ATTACHMENT_ORDERS else ClaimStatus.DISCREPANCY
        for d in range(1, n // 2 + 1):
            G = build_gndm(n, d, m)
            checks.append(
                holds(
                    f"{prefix}/d={d}",
                    locus,
                    f"value == cycle + {attachment_expected(0, d)}",
                    lambda cache, G=G, C=C: {"value": cache.value(G, dgame()), "cycle": cache.value(C, dgame())},
                    lambda v, d=d: v["value"] == attachment_expected(v["cycle"], d),
                    on_mismatch=mismatch,
                )
            )
            checks.append(
                holds(
                    f"{prefix}/d={d}/bounds",
                    bound_locus,
                    "lower <= value <= upper",
                    lambda cache, G=G, C=C, d=d: {
                        "lower": cache.value(C, dgame([0, d])) + 2,
                        "value": cache.value(G, dgame()),
                        "upper": cache.value(C, dgame()) + 2,
                    },
                    lambda v: v["lower"] <= v["value"] <= v["upper"],
                )
            )
    return checks


# ---- vertex removal ----------------------------------------------------------


def removable_vertices(graph: Graph) -> List[int]:
    """Vertices whose removal leaves a graph without isolated vertices"""
    result = []
    for v in range(graph.order):
        if graph.order < 3:
            continue
        if all(graph.degree(u) > 1 for u in graph.neighbours(v)):
            result.append(v)
    return result


def _removal_values(cache: ValueCache, graph: Graph) -> Dict[str, int]:
    d, s = cache.value(graph, dgame()), cache.value(graph, sgame())
    worst_d = worst_s = None
    for v in removable_vertices(graph):
        H = remove_vertex(graph, v)
        dd = d - cache.value(H, dgame())
        ds = s - cache.value(H, sgame())
        worst_d = dd if worst_d is None else max(worst_d, dd)
        worst_s = ds if worst_s is None else max(worst_s, ds)
    drops = values_all_single_predominations(graph, Player.DOMINATOR, cache.limits)
    return {
        "d": d,
        "s": s,
        "max_d_minus_removed": worst_d if worst_d is not None else 0,
        "max_s_minus_removed": worst_s if worst_s is not None else 0,
        "min_predominated": min(drops.values()),
    }


def suite_vertex_removal(random_count: int, seed: int, orders: Sequence[int] = (8,)) -> List[ClaimCheck]:
    checks: List[ClaimCheck] = []
    locus = "g(G) <= g(G-v) + 4, g'(G) <= g'(G-v) + 4, g(G|v) >= g(G) - 2"
    graphs = random_graph_sample(random_count, orders, seed)

    for i, G in enumerate(graphs):
        checks.append(
            holds(
                f"removal/random/seed={seed}/#{i:03d}",
                locus,
                "differences <= 4, predominated >= d - 2",
                lambda cache, G=G: _removal_values(cache, G),
                lambda v: v["max_d_minus_removed"] <= 4
                and v["max_s_minus_removed"] <= 4
                and v["min_predominated"] >= v["d"] - 2,
            )
        )
    checks.append(
        observed(
            f"removal/random/seed={seed}/max-difference",
            "largest g(G) - g(G-v) seen on the random sample",
            "observed maximum",
            lambda cache: {
                "d": max((_removal_values(cache, G)["max_d_minus_removed"] for G in graphs), default=0),
                "s": max((_removal_values(cache, G)["max_s_minus_removed"] for G in graphs), default=0),
            },
        )
    )

    for host_name, host in (("path6", build_path(6)), ("cycle8", build_cycle(8))):
        G = join_universal(host)
        prefix = f"removal/join/{host_name}"
        checks += [
            equals(f"{prefix}/d", "a universal vertex gives g(G) = 2", 2, _d(G)),
            holds(
                f"{prefix}/d-v",
                "g(G - v) = g(H) for the universal vertex v",
                "removed == host",
                lambda cache, G=G, host=host: {
                    "removed": cache.value(remove_vertex(G, "v"), dgame()),
                    "host": cache.value(host, dgame()),
                },
                lambda v: v["removed"] == v["host"],
            ),
        ]

    for k in (2, 3, 4):
        G = build_k_leaves(k)
        H = remove_vertex(G, "v")
        prefix = f"removal/kleaves/k={k}"
        locus_k = "g(G) = g(G-v) = g'(G) = g'(G-v) = k + 1"
        checks += [
            equals(f"{prefix}/d", locus_k, k + 1, _d(G)),
            equals(f"{prefix}/d-v", locus_k, k + 1, _d(H)),
            equals(f"{prefix}/s", locus_k, k + 1, _s(G)),
            equals(f"{prefix}/s-v", locus_k, k + 1, _s(H)),
        ]
    return checks


# ---- difference families -----------------------------------------------------

PATH_D_RESIDUES = (0, 1, 2, 4)
PATH_S_RESIDUES = (1, 2, 4, 5)


def suite_difference_families(path_orders: Sequence[int], zk_max: int) -> List[ClaimCheck]:
    checks: List[ClaimCheck] = []
    for n in path_orders:
        P = build_path(n)
        Q = remove_vertex(P, "end")
        for letter, residues, ctor in (("d", PATH_D_RESIDUES, dgame), ("s", PATH_S_RESIDUES, sgame)):
            claim_id = f"paths/n={n}/{letter}"
            compute = lambda cache, P=P, Q=Q, ctor=ctor: cache.value(P, ctor()) - cache.value(Q, ctor())
            if n % 6 in residues:
                locus = f"removing an end of P_n lowers the {letter.upper()}-game by 1 for n mod 6 in {set(residues)}"
                checks.append(equals(claim_id, locus, 1, compute))
            else:
                checks.append(observed(claim_id, "end-vertex difference outside the claimed residues", "difference", compute))

    Z = build_z_core()
    z = Z.vertex("z")
    locus = "gamma_t(Z) = g(Z) = g'(Z) = g(Z|z) = g'(Z|z) = 4"
    checks += [
        equals("z-core/gamma-t", locus, 4, lambda cache: cache.total_domination(Z)),
        equals("z-core/d", locus, 4, _d(Z)),
        equals("z-core/s", locus, 4, _s(Z)),
        equals("z-core/d|z", locus, 4, _d(Z, [z])),
        equals("z-core/s|z", locus, 4, _s(Z, [z])),
    ]
    P6 = build_path(6)
    checks += [
        equals(
            "paths/n=6/gamma-t|end",
            "gamma_t(P_6) = 3 with one end predominated",
            3,
            lambda cache: cache.total_domination(P6, predominated=1 << P6.vertex("end")),
        ),
        observed("paths/n=6/gamma-t", "gamma_t(P_6) with nothing predominated", "value", lambda cache: cache.total_domination(P6)),
    ]

    # Z_0 has no hanging path for Staller's opening, so the formula starts at k = 1
    Z0 = build_zk(0)
    checks += [
        out_of_hypothesis("zk/k=0/s", "g'(Z_k) = 3k + 8", "== 8", ZK_HYPOTHESIS),
        observed("zk/k=0/s-value", "g'(Z_0), outside the family", "value", _s(Z0)),
    ]
    for k in range(1, zk_max + 1):
        G = build_zk(k)
        H = remove_vertex(G, "v")
        checks += [
            equals(f"zk/k={k}/s", "g'(Z_k) = 3k + 8", 3 * k + 8, _s(G)),
            equals(f"zk/k={k}/s-v", "g'(Z_k - v) = 3k + 6", 3 * k + 6, _s(H)),
        ]
    return checks


# ---- registry ----------------------------------------------------------------


@dataclass(frozen=True)
class SuiteEntry:
    name: str
    locus: str
    build: Callable[[Dict[str, Any], int], List[ClaimCheck]]


SUITE_REGISTRY: Dict[str, SuiteEntry] = {
    entry.name: entry
    for entry in (
        SuiteEntry(
            "cycle_closed_forms",
            "D- and S-game on cycles with at most one predominated vertex",
            lambda p, seed: suite_cycle_closed_forms(p["cycles"], seed),
        ),
        SuiteEntry(
            "variant_lemmas",
            "cycles under double-Staller start, delayed predomination, forced and trigger passes",
            lambda p, seed: suite_variant_lemmas(p["lemma_cycles"], p["double_staller_orders"]),
        ),
        SuiteEntry(
            "gnm",
            "cycle with an attached clique at distance 4, and the small graph H_m",
            lambda p, seed: suite_gnm(p["gnm"], p["hm"]),
        ),
        SuiteEntry("tilde", "cycle joined to a clique by one edge", lambda p, seed: suite_tilde(p["tilde"])),
        SuiteEntry(
            "two_predominated",
            "cycles with two predominated vertices",
            lambda p, seed: suite_two_predominated(p["two_predominated"]),
        ),
        SuiteEntry(
            "sandwich",
            "lower and upper bounds for a clique attached to any host",
            lambda p, seed: suite_sandwich(p["sandwich"]),
        ),
        SuiteEntry(
            "attachment_conjecture",
            "reported computations for cliques attached at every distance",
            lambda p, seed: suite_attachment_conjecture(p["attachment"]),
        ),
        SuiteEntry(
            "vertex_removal",
            "effect of deleting or predominating one vertex",
            lambda p, seed: suite_vertex_removal(p["random_graphs"], seed),
        ),
        SuiteEntry(
            "difference_families",
            "paths and the Z_k family under vertex removal",
            lambda p, seed: suite_difference_families(p["path_orders"], p["zk_max"]),
        ),
    )
}


def build_checks(profile: Dict[str, Any], seed: int, suites: Sequence[str] = ()) -> List[ClaimCheck]:
    names = list(suites) or list(SUITE_REGISTRY)
    checks: List[ClaimCheck] = []
    for name in names:
        entry = SUITE_REGISTRY[name]
        built = entry.build(profile, seed)
        logger.info("suite %s: %d claims", name, len(built))
        checks.extend(built)
    return checks
