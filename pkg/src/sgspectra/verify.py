"""Interlacing-inequality checkers, campaign runner and report formats.

Each check id (T2.1, C2.2, ...) names one positionwise eigenvalue inequality
between a graph's spectrum and the spectrum of a derived graph (vertex or
edge deleted, cycle shrunk, pair contracted), or a two-sided spectral bound.
A checker never assumes its hypothesis: when the input does not satisfy it,
the report carries hypothesis_met=False and no verdict is implied.

The campaign runner replays bit-exactly from a seed.  A report whose
hypothesis was met and whose worst slack drops below -tol is a genuine
violation; since every checked inequality is expected to hold, violations
are treated by callers as implementation-bug alarms (CLI exit code 4).
"""
from __future__ import annotations

import csv
import io
import json
import math
import random
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import (
    BadOrder,
    ConfigInvalid,
    EmptyGraph,
    LengthMismatch,
    NoSuchEdge,
)
from .eigen import eigenvalues
from .fileio import to_edge_string
from .graphs import (
    MINUS,
    PLUS,
    SignedGraph,
    apply_switching,
    balancing_switch,
    co_regularity,
    degree_profile,
    generate,
    is_balanced,
    is_connected,
    min_max_neg_degree,
    random_signed_graph,
    sign_char,
)
from .matrices import laplacian, net_laplacian, normalized_net_laplacian
from .surgery import contract, delete_edge, delete_vertex, disjoint_open_neighborhoods

CHECK_IDS = (
    "T2.1", "C2.2", "L2.3", "T2.4", "C2.5", "T2.7", "C2.8", "C2.9",
    "L3.1", "T3.2", "T3.3", "T3.4", "C3.5", "C3.6", "C3.7",
    "B4", "T4.1", "T4.2", "T4.3",
)

_INF = math.inf


@dataclass
class InterlacingReport:
    """Outcome of one inequality check on one input."""

    theorem: str
    holds: bool
    hypothesis_met: bool
    worst_slack: float
    witness_position: int  # 1-based position of the worst margin; 0 if none
    tol: float
    spectra: dict
    graph: str
    surgery: dict
    links_skipped: list = field(default_factory=list)
    note: str = ""
    info: dict = field(default_factory=dict)


def default_tol(*spectra) -> float:
    """1e-9 scaled by the largest eigenvalue magnitude in play."""
    top = 1.0
    for s in spectra:
        arr = np.asarray(s, dtype=np.float64)
        if arr.size:
            top = max(top, float(np.max(np.abs(arr))))
    return 1e-9 * top


def check_chain(lower, mid, upper, tol: float):
    """Verify lower_p <= mid_p <= upper_p for all p.

    Returns (holds, worst_slack, witness) where the slack at p is
    min(mid_p - lower_p, upper_p - mid_p), worst_slack is the minimum over
    positions and witness its 1-based index (0 for empty input).
    """
    lower = np.asarray(lower, dtype=np.float64)
    mid = np.asarray(mid, dtype=np.float64)
    upper = np.asarray(upper, dtype=np.float64)
    if not (lower.shape == mid.shape == upper.shape):
        raise LengthMismatch(
            f"chain lengths differ: {lower.shape}, {mid.shape}, {upper.shape}"
        )
    margins = _chain_margins(lower, mid, upper)
    return _verdict(margins, tol)


def _chain_margins(lower, mid, upper) -> list[float]:
    out = []
    for lo, md, up in zip(lower, mid, upper):
        lo_m = _INF if lo == -_INF else md - lo
        up_m = _INF if up == _INF else up - md
        out.append(min(lo_m, up_m))
    return out


def _verdict(margins: Sequence[float], tol: float):
    if len(margins) == 0:
        return True, _INF, 0
    worst = min(margins)
    witness = margins.index(worst) + 1
    return bool(worst >= -tol), float(worst), witness


def _spec_list(arr) -> list:
    return [float(x) for x in arr]


def _lap_spectrum(g: SignedGraph) -> np.ndarray:
    return eigenvalues(laplacian(g).astype(np.float64))


def _net_spectrum(g: SignedGraph) -> np.ndarray:
    return eigenvalues(net_laplacian(g).astype(np.float64))


def _norm_spectrum(g: SignedGraph) -> np.ndarray:
    return eigenvalues(normalized_net_laplacian(g))


def _chain_report(theorem, g_str, surgery, spectra, lower, mid, upper, tol,
                  links_skipped=(), note="", info=None) -> InterlacingReport:
    tol_val = tol if tol is not None else default_tol(*spectra.values())
    margins = _chain_margins(lower, mid, upper)
    holds, worst, witness = _verdict(margins, tol_val)
    return InterlacingReport(
        theorem=theorem,
        holds=holds,
        hypothesis_met=True,
        worst_slack=worst,
        witness_position=witness,
        tol=float(tol_val),
        spectra=spectra,
        graph=g_str,
        surgery=surgery,
        links_skipped=list(links_skipped),
        note=note,
        info=dict(info or {}),
    )


def _skipped_report(theorem, g_str, surgery, note, tol) -> InterlacingReport:
    return InterlacingReport(
        theorem=theorem,
        holds=True,
        hypothesis_met=False,
        worst_slack=_INF,
        witness_position=0,
        tol=float(tol if tol is not None else 0.0),
        spectra={},
        graph=g_str,
        surgery=surgery,
        note=note,
    )


# --- Laplacian checks -------------------------------------------------------

def check_vertex_deletion_laplacian(g: SignedGraph, v: int, tol=None) -> InterlacingReport:
    """T2.1: deleting any vertex, alpha_p <= beta_p + 1 <= alpha_{p+1} + 1."""
    g._check_vertex(v)
    surgery = {"vertex": v}
    if g.n < 2:
        return _skipped_report("T2.1", to_edge_string(g), surgery, "graph has fewer than 2 vertices", tol)
    alpha = _lap_spectrum(g)
    sub, _ = delete_vertex(g, v)
    beta = _lap_spectrum(sub)
    spectra = {"alpha": _spec_list(alpha), "beta": _spec_list(beta)}
    return _chain_report("T2.1", to_edge_string(g), surgery, spectra,
                         alpha[:-1], beta + 1.0, alpha[1:] + 1.0, tol)


def check_dominating_vertex_deletion(g: SignedGraph, v: int, tol=None) -> InterlacingReport:
    """C2.2: deleting a vertex adjacent to all others tightens the upper link."""
    g._check_vertex(v)
    surgery = {"vertex": v}
    if g.n < 2 or g.degree(v) != g.n - 1:
        return _skipped_report("C2.2", to_edge_string(g), surgery,
                               f"vertex {v} is not adjacent to all remaining vertices", tol)
    alpha = _lap_spectrum(g)
    sub, _ = delete_vertex(g, v)
    beta = _lap_spectrum(sub)
    spectra = {"alpha": _spec_list(alpha), "beta": _spec_list(beta)}
    return _chain_report("C2.2", to_edge_string(g), surgery, spectra,
                         alpha[:-1], beta + 1.0, alpha[1:], tol)


def check_edge_deletion_laplacian(g: SignedGraph, u: int, v: int, tol=None) -> InterlacingReport:
    """L2.3: deleting any edge, beta_p <= alpha_p <= beta_p + 2."""
    if not g.has_edge(u, v):
        raise NoSuchEdge(f"no edge ({u}, {v})")
    sub, removed = delete_edge(g, u, v)
    alpha = _lap_spectrum(g)
    beta = _lap_spectrum(sub)
    spectra = {"alpha": _spec_list(alpha), "beta": _spec_list(beta)}
    surgery = {"edge": [min(u, v), max(u, v)], "sign": sign_char(removed)}
    return _chain_report("L2.3", to_edge_string(g), surgery, spectra,
                         beta, alpha, beta + 2.0, tol)


def check_cycle_shrink(m: int, sig1: Sequence[int], sign_last: int, tol=None) -> InterlacingReport:
    """T2.4: a signed (m+1)-cycle against the m-cycle sharing its path edges.

    sig1 lists the large cycle's signs in canonical edge order (closing edge
    last); the small cycle copies the first m-1 of them and closes with
    sign_last.  Chain: alpha_p - 1 <= beta_p <= alpha_{p+1} + 2.
    """
    if m < 3:
        raise BadOrder(f"cycle comparison needs m >= 3, got {m}")
    big = generate("cycle", m + 1, sig1)
    small_signs = list(sig1[: m - 1]) + [sign_last]
    small = generate("cycle", m, small_signs)
    alpha = _lap_spectrum(big)
    beta = _lap_spectrum(small)
    spectra = {"alpha": _spec_list(alpha), "beta": _spec_list(beta)}
    surgery = {"small_graph": to_edge_string(small), "closing_sign": sign_char(sign_last)}
    return _chain_report("T2.4", to_edge_string(big), surgery, spectra,
                         alpha[:-1] - 1.0, beta, alpha[1:] + 2.0, tol)


def check_cycle_shrink_random(m: int, seed: int, tol=None) -> InterlacingReport:
    """C2.5: the cycle comparison holds for independently random signatures.

    Both cycles are reduced by switching to their balance-class canonical
    form (all-positive, or a single negative closing edge), whose spectra
    equal the drawn ones, and the T2.4 chain is verified there.
    """
    if m < 3:
        raise BadOrder(f"cycle comparison needs m >= 3, got {m}")
    rng = random.Random(seed)
    sig1 = [MINUS if rng.random() < 0.5 else PLUS for _ in range(m + 1)]
    sig2 = [MINUS if rng.random() < 0.5 else PLUS for _ in range(m)]
    big = generate("cycle", m + 1, sig1)
    small = generate("cycle", m, sig2)
    canon1 = [PLUS] * m + [PLUS if is_balanced(big) else MINUS]
    closing2 = PLUS if is_balanced(small) else MINUS
    inner = check_cycle_shrink(m, canon1, closing2, tol)
    return InterlacingReport(
        theorem="C2.5",
        holds=inner.holds,
        hypothesis_met=True,
        worst_slack=inner.worst_slack,
        witness_position=inner.witness_position,
        tol=inner.tol,
        spectra=inner.spectra,
        graph=to_edge_string(big),
        surgery={"small_graph": to_edge_string(small), "seed": seed,
                 "canonical_closing_large": sign_char(canon1[-1]),
                 "canonical_closing_small": sign_char(closing2)},
        note="compared via switching to balance-class canonical forms",
    )


def check_pendant_deletion(g: SignedGraph, u: int, tol=None) -> InterlacingReport:
    """T2.7: deleting a degree-1 vertex, alpha_p <= beta_p <= alpha_{p+1}."""
    g._check_vertex(u)
    surgery = {"vertex": u}
    if g.degree(u) != 1:
        return _skipped_report("T2.7", to_edge_string(g), surgery,
                               f"vertex {u} has degree {g.degree(u)}, not 1", tol)
    alpha = _lap_spectrum(g)
    sub, _ = delete_vertex(g, u)
    beta = _lap_spectrum(sub)
    spectra = {"alpha": _spec_list(alpha), "beta": _spec_list(beta)}
    return _chain_report("T2.7", to_edge_string(g), surgery, spectra,
                         alpha[:-1], beta, alpha[1:], tol)


def check_tree_shrink(kind: str, m: int, seed: int, tol=None) -> InterlacingReport:
    """C2.8 (paths) / C2.9 (stars): random signatures on orders m+1 and m.

    Trees are balanced, so both graphs are switched to all-positive before
    comparing; the chain is the pendant-deletion one.
    """
    if kind not in ("path", "star"):
        raise BadOrder(f"kind must be 'path' or 'star', got {kind!r}")
    if m < 2:
        raise BadOrder(f"tree comparison needs m >= 2, got {m}")
    theorem = "C2.8" if kind == "path" else "C2.9"
    rng = random.Random(seed)
    sig_big = [MINUS if rng.random() < 0.5 else PLUS for _ in range(m)]
    sig_small = [MINUS if rng.random() < 0.5 else PLUS for _ in range(m - 1)]
    big = generate(kind, m + 1, sig_big)
    small = generate(kind, m, sig_small)
    big_pos = apply_switching(big, balancing_switch(big))
    small_pos = apply_switching(small, balancing_switch(small))
    alpha = _lap_spectrum(big_pos)
    beta = _lap_spectrum(small_pos)
    spectra = {"alpha": _spec_list(alpha), "beta": _spec_list(beta)}
    surgery = {"small_graph": to_edge_string(small), "seed": seed, "kind": kind}
    return _chain_report(theorem, to_edge_string(big), surgery, spectra,
                         alpha[:-1], beta, alpha[1:], tol,
                         note="both trees switched to all-positive before comparing")


def check_path_shrink(m: int, seed: int, tol=None) -> InterlacingReport:
    return check_tree_shrink("path", m, seed, tol)


def check_star_shrink(m: int, seed: int, tol=None) -> InterlacingReport:
    return check_tree_shrink("star", m, seed, tol)


# --- net-Laplacian checks ---------------------------------------------------

def check_laplacian_net_gap(g: SignedGraph, tol=None) -> InterlacingReport:
    """L3.1: beta_p + 2*min(d-) <= alpha_p <= beta_p + 2*max(d-), same graph."""
    if g.n == 0:
        raise EmptyGraph("comparison needs at least one vertex")
    dmin, dmax = min_max_neg_degree(g)
    alpha = _lap_spectrum(g)
    beta = _net_spectrum(g)
    spectra = {"alpha": _spec_list(alpha), "beta": _spec_list(beta)}
    surgery = {"delta_minus": dmin, "Delta_minus": dmax}
    return _chain_report("L3.1", to_edge_string(g), surgery, spectra,
                         beta + 2.0 * dmin, alpha, beta + 2.0 * dmax, tol)


def check_negative_edge_deletion_net(g: SignedGraph, u: int, v: int, tol=None) -> InterlacingReport:
    """T3.2: deleting a negative edge, alpha_p <= beta_p <= alpha_{p+1} with
    the top position capped by the vertex count."""
    if not g.has_edge(u, v):
        raise NoSuchEdge(f"no edge ({u}, {v})")
    surgery = {"edge": [min(u, v), max(u, v)], "sign": sign_char(g.sign(u, v))}
    if g.sign(u, v) != MINUS:
        return _skipped_report("T3.2", to_edge_string(g), surgery,
                               f"edge ({u}, {v}) is positive", tol)
    sub, _ = delete_edge(g, u, v)
    alpha = _net_spectrum(g)
    beta = _net_spectrum(sub)
    spectra = {"alpha": _spec_list(alpha), "beta": _spec_list(beta)}
    upper = np.append(alpha[1:], float(g.n))
    return _chain_report("T3.2", to_edge_string(g), surgery, spectra,
                         alpha, beta, upper, tol)


def check_positive_edge_deletion_net(g: SignedGraph, u: int, v: int, tol=None) -> InterlacingReport:
    """T3.3: deleting a positive edge, alpha_{p-1} <= beta_p <= alpha_p with
    the bottom position floored at minus the vertex count."""
    if not g.has_edge(u, v):
        raise NoSuchEdge(f"no edge ({u}, {v})")
    surgery = {"edge": [min(u, v), max(u, v)], "sign": sign_char(g.sign(u, v))}
    if g.sign(u, v) != PLUS:
        return _skipped_report("T3.3", to_edge_string(g), surgery,
                               f"edge ({u}, {v}) is negative", tol)
    sub, _ = delete_edge(g, u, v)
    alpha = _net_spectrum(g)
    beta = _net_spectrum(sub)
    spectra = {"alpha": _spec_list(alpha), "beta": _spec_list(beta)}
    lower = np.append(-float(g.n), alpha[:-1])
    return _chain_report("T3.3", to_edge_string(g), surgery, spectra,
                         lower, beta, alpha, tol)


def check_vertex_deletion_net(g: SignedGraph, v: int, tol=None) -> InterlacingReport:
    """T3.4: deleting a vertex of a connected graph,
    alpha_p - 1 <= beta_p <= alpha_{p+1} + 1."""
    g._check_vertex(v)
    surgery = {"vertex": v}
    if g.n < 2:
        return _skipped_report("T3.4", to_edge_string(g), surgery, "graph has fewer than 2 vertices", tol)
    if not is_connected(g):
        return _skipped_report("T3.4", to_edge_string(g), surgery, "graph is not connected", tol)
    alpha = _net_spectrum(g)
    sub, _ = delete_vertex(g, v)
    beta = _net_spectrum(sub)
    spectra = {"alpha": _spec_list(alpha), "beta": _spec_list(beta)}
    return _chain_report("T3.4", to_edge_string(g), surgery, spectra,
                         alpha[:-1] - 1.0, beta, alpha[1:] + 1.0, tol)


def check_negfree_vertex_deletion(g: SignedGraph, v: int, tol=None) -> InterlacingReport:
    """C3.5: deleting a vertex with no negative edges,
    alpha_p - 1 <= beta_p <= alpha_{p+1}."""
    g._check_vertex(v)
    surgery = {"vertex": v}
    if g.n < 2:
        return _skipped_report("C3.5", to_edge_string(g), surgery, "graph has fewer than 2 vertices", tol)
    if degree_profile(g).neg_degree[v] != 0:
        return _skipped_report("C3.5", to_edge_string(g), surgery,
                               f"vertex {v} has a negative edge", tol)
    alpha = _net_spectrum(g)
    sub, _ = delete_vertex(g, v)
    beta = _net_spectrum(sub)
    spectra = {"alpha": _spec_list(alpha), "beta": _spec_list(beta)}
    return _chain_report("C3.5", to_edge_string(g), surgery, spectra,
                         alpha[:-1] - 1.0, beta, alpha[1:], tol)


def check_posfree_vertex_deletion(g: SignedGraph, v: int, tol=None) -> InterlacingReport:
    """C3.6: deleting a vertex with no positive edges,
    alpha_p <= beta_p <= alpha_{p+1} + 1."""
    g._check_vertex(v)
    surgery = {"vertex": v}
    if g.n < 2:
        return _skipped_report("C3.6", to_edge_string(g), surgery, "graph has fewer than 2 vertices", tol)
    if degree_profile(g).pos_degree[v] != 0:
        return _skipped_report("C3.6", to_edge_string(g), surgery,
                               f"vertex {v} has a positive edge", tol)
    alpha = _net_spectrum(g)
    sub, _ = delete_vertex(g, v)
    beta = _net_spectrum(sub)
    spectra = {"alpha": _spec_list(alpha), "beta": _spec_list(beta)}
    return _chain_report("C3.6", to_edge_string(g), surgery, spectra,
                         alpha[:-1], beta, alpha[1:] + 1.0, tol)


def check_onesign_vertex_deletion(g: SignedGraph, v: int, tol=None) -> InterlacingReport:
    """Dispatch to C3.5 or C3.6 by the deleted vertex's sign pattern."""
    prof = degree_profile(g)
    if prof.neg_degree[v] == 0:
        return check_negfree_vertex_deletion(g, v, tol)
    if prof.pos_degree[v] == 0:
        return check_posfree_vertex_deletion(g, v, tol)
    return _skipped_report("C3.5", to_edge_string(g), {"vertex": v},
                           f"vertex {v} has both positive and negative edges", tol)


def check_complete_coregular_deletion(g: SignedGraph, v: int, tol=None) -> InterlacingReport:
    """C3.7: in a complete co-regular graph with uniform negative degree s,
    chain beta_p + 2s <= alpha_p <= mu_p + (1-2s) <= alpha_{p+1} <= beta_{p+1} + 2s
    (alpha: net spectrum, beta/mu: net/plain spectra after deleting v).
    The final link has no partner at p = m and is skipped.
    """
    g._check_vertex(v)
    surgery = {"vertex": v}
    g_str = to_edge_string(g)
    if g.n < 2:
        return _skipped_report("C3.7", g_str, surgery, "graph has fewer than 2 vertices", tol)
    co = co_regularity(g)
    prof = degree_profile(g)
    uniform_neg = len(set(prof.neg_degree)) == 1
    if co is None or not co.complete or not uniform_neg:
        return _skipped_report("C3.7", g_str, surgery,
                               "graph is not complete co-regular with uniform negative degree", tol)
    s = prof.neg_degree[0]
    surgery["uniform_neg_degree"] = s
    alpha = _net_spectrum(g)
    sub, _ = delete_vertex(g, v)
    beta = _net_spectrum(sub)
    mu = _lap_spectrum(sub)
    m = g.n - 1
    margins = []
    for p in range(1, m + 1):
        a_p = alpha[p - 1]
        a_next = alpha[p]
        mid_val = mu[p - 1] + (1.0 - 2.0 * s)
        links = [
            a_p - (beta[p - 1] + 2.0 * s),
            mid_val - a_p,
            a_next - mid_val,
        ]
        if p < m:
            links.append((beta[p] + 2.0 * s) - a_next)
        margins.append(min(links))
    spectra = {"alpha": _spec_list(alpha), "beta": _spec_list(beta), "mu": _spec_list(mu)}
    tol_val = tol if tol is not None else default_tol(alpha, beta, mu)
    holds, worst, witness = _verdict(margins, tol_val)
    return InterlacingReport(
        theorem="C3.7", holds=holds, hypothesis_met=True, worst_slack=worst,
        witness_position=witness, tol=float(tol_val), spectra=spectra,
        graph=g_str, surgery=surgery,
        links_skipped=[f"upper p={m}"] if m >= 1 else [],
    )


# --- normalized net-Laplacian checks ----------------------------------------

def check_normalized_spectrum_bounds(g: SignedGraph, tol=None) -> InterlacingReport:
    """B4: every normalized net-Laplacian eigenvalue lies in [-2, 2].

    The info flags mark whether either bound is attained (within tol);
    attainment characterizes all-positive / all-negative bipartite components.
    """
    spec = _norm_spectrum(g)
    spectra = {"alpha": _spec_list(spec)}
    tol_val = tol if tol is not None else default_tol(spec)
    lower = np.full(spec.shape, -2.0)
    upper = np.full(spec.shape, 2.0)
    margins = _chain_margins(lower, spec, upper)
    holds, worst, witness = _verdict(margins, tol_val)
    info = {}
    if spec.size:
        info["attains_upper_bound"] = bool(abs(spec[-1] - 2.0) <= tol_val)
        info["attains_lower_bound"] = bool(abs(spec[0] + 2.0) <= tol_val)
    return InterlacingReport(
        theorem="B4", holds=holds, hypothesis_met=True, worst_slack=worst,
        witness_position=witness, tol=float(tol_val), spectra=spectra,
        graph=to_edge_string(g), surgery={}, info=info,
    )


def _isolate_free(g: SignedGraph) -> bool:
    return g.n == 0 or min(degree_profile(g).degree) > 0


def check_negative_edge_deletion_normalized(g: SignedGraph, u: int, v: int, tol=None) -> InterlacingReport:
    """T4.1: deleting a negative edge (no isolated vertices before or after),
    alpha_p <= beta_p <= alpha_{p+2}; positions without an upper partner are
    skipped and recorded."""
    if not g.has_edge(u, v):
        raise NoSuchEdge(f"no edge ({u}, {v})")
    surgery = {"edge": [min(u, v), max(u, v)], "sign": sign_char(g.sign(u, v))}
    g_str = to_edge_string(g)
    if g.sign(u, v) != MINUS:
        return _skipped_report("T4.1", g_str, surgery, f"edge ({u}, {v}) is positive", tol)
    if not _isolate_free(g):
        return _skipped_report("T4.1", g_str, surgery, "graph has an isolated vertex", tol)
    sub, _ = delete_edge(g, u, v)
    if not _isolate_free(sub):
        return _skipped_report("T4.1", g_str, surgery, "deletion isolates a vertex", tol)
    alpha = _norm_spectrum(g)
    beta = _norm_spectrum(sub)
    spectra = {"alpha": _spec_list(alpha), "beta": _spec_list(beta)}
    m = g.n
    upper = np.concatenate([alpha[2:], [_INF, _INF]]) if m >= 2 else np.full(m, _INF)
    skipped = [f"upper p={p}" for p in range(max(1, m - 1), m + 1)]
    return _chain_report("T4.1", g_str, surgery, spectra,
                         alpha, beta, upper, tol, links_skipped=skipped)


def check_positive_edge_deletion_normalized(g: SignedGraph, u: int, v: int, tol=None) -> InterlacingReport:
    """T4.2: deleting a positive edge (no isolated vertices before or after),
    alpha_{p-1} <= beta_p <= alpha_{p+1}; boundary links without a partner
    are skipped and recorded."""
    if not g.has_edge(u, v):
        raise NoSuchEdge(f"no edge ({u}, {v})")
    surgery = {"edge": [min(u, v), max(u, v)], "sign": sign_char(g.sign(u, v))}
    g_str = to_edge_string(g)
    if g.sign(u, v) != PLUS:
        return _skipped_report("T4.2", g_str, surgery, f"edge ({u}, {v}) is negative", tol)
    if not _isolate_free(g):
        return _skipped_report("T4.2", g_str, surgery, "graph has an isolated vertex", tol)
    sub, _ = delete_edge(g, u, v)
    if not _isolate_free(sub):
        return _skipped_report("T4.2", g_str, surgery, "deletion isolates a vertex", tol)
    alpha = _norm_spectrum(g)
    beta = _norm_spectrum(sub)
    spectra = {"alpha": _spec_list(alpha), "beta": _spec_list(beta)}
    m = g.n
    lower = np.concatenate([[-_INF], alpha[: m - 1]])
    upper = np.concatenate([alpha[1:], [_INF]])
    return _chain_report("T4.2", g_str, surgery, spectra,
                         lower, beta, upper, tol,
                         links_skipped=["lower p=1", f"upper p={m}"])


def check_contraction_normalized(g: SignedGraph, a: int, b: int, tol=None) -> InterlacingReport:
    """T4.3: contracting two vertices with disjoint open neighborhoods,
    alpha_{p-1} <= beta_p <= alpha_{p+1} with alpha_0 = -2."""
    surgery = {"pair": [min(a, b), max(a, b)]}
    g_str = to_edge_string(g)
    if not disjoint_open_neighborhoods(g, a, b):
        return _skipped_report("T4.3", g_str, surgery,
                               f"vertices {a} and {b} share a neighbor", tol)
    if not _isolate_free(g):
        return _skipped_report("T4.3", g_str, surgery, "graph has an isolated vertex", tol)
    sub, _, merged = contract(g, a, b)
    if not _isolate_free(sub):
        return _skipped_report("T4.3", g_str, surgery, "contraction isolates a vertex", tol)
    alpha = _norm_spectrum(g)
    beta = _norm_spectrum(sub)
    spectra = {"alpha": _spec_list(alpha), "beta": _spec_list(beta)}
    m = g.n - 1
    surgery["merged_vertex"] = merged
    surgery["contracted_graph"] = to_edge_string(sub)
    lower = np.concatenate([[-2.0], alpha[: m - 1]])
    return _chain_report("T4.3", g_str, surgery, spectra,
                         lower, beta, alpha[1:], tol)


CHECKERS: dict[str, Callable] = {
    "T2.1": check_vertex_deletion_laplacian,
    "C2.2": check_dominating_vertex_deletion,
    "L2.3": check_edge_deletion_laplacian,
    "T2.4": check_cycle_shrink,
    "C2.5": check_cycle_shrink_random,
    "T2.7": check_pendant_deletion,
    "C2.8": check_path_shrink,
    "C2.9": check_star_shrink,
    "L3.1": check_laplacian_net_gap,
    "T3.2": check_negative_edge_deletion_net,
    "T3.3": check_positive_edge_deletion_net,
    "T3.4": check_vertex_deletion_net,
    "C3.5": check_negfree_vertex_deletion,
    "C3.6": check_posfree_vertex_deletion,
    "C3.7": check_complete_coregular_deletion,
    "B4": check_normalized_spectrum_bounds,
    "T4.1": check_negative_edge_deletion_normalized,
    "T4.2": check_positive_edge_deletion_normalized,
    "T4.3": check_contraction_normalized,
}

# argument the CLI / campaign must supply for each check
ARG_KINDS: dict[str, str] = {
    "T2.1": "vertex", "C2.2": "vertex", "L2.3": "edge", "T2.4": "cycle",
    "C2.5": "seeded", "T2.7": "vertex", "C2.8": "seeded", "C2.9": "seeded",
    "L3.1": "graph", "T3.2": "edge", "T3.3": "edge", "T3.4": "vertex",
    "C3.5": "vertex", "C3.6": "vertex", "C3.7": "vertex", "B4": "graph",
    "T4.1": "edge", "T4.2": "edge", "T4.3": "pair",
}


# --- campaigns ---------------------------------------------------------------

@dataclass
class CampaignConfig:
    theorems: tuple = CHECK_IDS
    n_min: int = 4
    n_max: int = 12
    p: float = 0.5
    q: float = 0.5
    samples: int = 1000
    seed: int = 0
    tol: float | None = None

    def validate(self) -> None:
        if self.samples < 1:
            raise ConfigInvalid(f"samples must be >= 1, got {self.samples}")
        if not (0.0 <= self.p <= 1.0 and 0.0 <= self.q <= 1.0):
            raise ConfigInvalid("probabilities must lie in [0, 1]")
        if not (2 <= self.n_min <= self.n_max):
            raise ConfigInvalid(f"need 2 <= n_min <= n_max, got {self.n_min}..{self.n_max}")
        unknown = [t for t in self.theorems if t not in CHECK_IDS]
        if unknown:
            raise ConfigInvalid(f"unknown check ids: {unknown}")
        if not self.theorems:
            raise ConfigInvalid("at least one check id required")
        if self.tol is not None and self.tol < 0:
            raise ConfigInvalid("tol must be non-negative")


@dataclass
class CampaignResult:
    config: CampaignConfig
    reports: list
    summary: list

    @property
    def violations(self) -> int:
        return sum(s["fails"] for s in self.summary)


_MASK63 = (1 << 63) - 1


def _mix(*parts: int) -> int:
    """Stable arithmetic hash of integers -> 63-bit child seed."""
    h = 0x9E3779B97F4A7C15
    for v in parts:
        h = (h ^ (v & _MASK63)) * 0xBF58476D1CE4E5B9 & _MASK63
        h ^= h >> 31
    return h & _MASK63


def _rand_below(rng: random.Random, k: int) -> int:
    """Uniform-ish index in [0, k) drawn only from rng.random(), which is
    stable across Python versions for a fixed seed."""
    return min(int(rng.random() * k), k - 1)


def _rand_range(rng: random.Random, lo: int, hi: int) -> int:
    return lo + _rand_below(rng, hi - lo + 1)


def _choice(rng: random.Random, seq):
    return seq[_rand_below(rng, len(seq))]


def _sample_check(theorem: str, cfg: CampaignConfig, child: int) -> InterlacingReport:
    rng = random.Random(child)
    checker = CHECKERS[theorem]
    kind = ARG_KINDS[theorem]
    if kind == "cycle":
        m = _rand_range(rng, max(3, cfg.n_min), max(3, cfg.n_max))
        sig1 = [MINUS if rng.random() < cfg.q else PLUS for _ in range(m + 1)]
        sign_last = MINUS if rng.random() < cfg.q else PLUS
        return checker(m, sig1, sign_last, cfg.tol)
    if kind == "seeded":
        lo = 3 if theorem == "C2.5" else 2
        m = _rand_range(rng, max(lo, cfg.n_min), max(lo, cfg.n_max))
        return checker(m, _mix(child, 1), cfg.tol)

    n = _rand_range(rng, cfg.n_min, cfg.n_max)
    g = random_signed_graph(n, cfg.p, cfg.q, _mix(child, 2))
    if kind == "graph":
        return checker(g, cfg.tol)
    if kind == "vertex":
        v = _pick_vertex(theorem, g, rng)
        return checker(g, v, cfg.tol)
    if kind == "edge":
        e = _pick_edge(theorem, g, rng)
        if e is None:
            return _skipped_report(theorem, to_edge_string(g), {},
                                   "graph has no usable edge", cfg.tol)
        return checker(g, e[0], e[1], cfg.tol)
    # pair
    pair = _pick_pair(g, rng)
    if pair is None:
        return _skipped_report(theorem, to_edge_string(g), {},
                               "no contractible pair", cfg.tol)
    return checker(g, pair[0], pair[1], cfg.tol)


def _pick_vertex(theorem: str, g: SignedGraph, rng: random.Random) -> int:
    """Prefer a vertex satisfying the check's hypothesis when one exists."""
    prof = degree_profile(g)
    candidates: list[int] = []
    if theorem == "C2.2":
        candidates = [v for v in range(g.n) if prof.degree[v] == g.n - 1]
    elif theorem == "T2.7":
        candidates = [v for v in range(g.n) if prof.degree[v] == 1]
    elif theorem == "C3.5":
        candidates = [v for v in range(g.n) if prof.neg_degree[v] == 0]
    elif theorem == "C3.6":
        candidates = [v for v in range(g.n) if prof.pos_degree[v] == 0]
    if candidates:
        return _choice(rng, candidates)
    return _rand_below(rng, g.n)


def _pick_edge(theorem: str, g: SignedGraph, rng: random.Random):
    edges = list(g.edges)
    if not edges:
        return None
    want = {"T3.2": MINUS, "T4.1": MINUS, "T3.3": PLUS, "T4.2": PLUS}.get(theorem)
    pool = edges if want is None else [e for e in edges if e[2] == want]
    if theorem in ("T4.1", "T4.2") and pool:
        deg = degree_profile(g).degree
        free = _isolate_free(g)
        strong = [e for e in pool if free and deg[e[0]] >= 2 and deg[e[1]] >= 2]
        if strong:
            pool = strong
    if not pool:
        pool = edges  # hypothesis gate will mark the report skipped
    u, v, _ = _choice(rng, pool)
    return u, v


def _pick_pair(g: SignedGraph, rng: random.Random):
    if g.n < 2:
        return None
    good = []
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if not disjoint_open_neighborhoods(g, a, b):
                continue
            nbrs = {w for w, _ in g.neighbors(a)} | {w for w, _ in g.neighbors(b)}
            if nbrs - {a, b}:
                good.append((a, b))
    if good and _isolate_free(g):
        return _choice(rng, good)
    a = _rand_below(rng, g.n)
    b = _rand_below(rng, g.n - 1)
    return (a, b if b < a else b + 1)


def run_campaign(cfg: CampaignConfig) -> CampaignResult:
    """Run every configured check over seeded samples; fully deterministic.

    Child seeds are derived from (seed, master check index, sample index), so
    each check's stream is independent of which other checks run.
    """
    cfg.validate()
    reports: list[InterlacingReport] = []
    summary: list[dict] = []
    for theorem in cfg.theorems:
        ti = CHECK_IDS.index(theorem)
        t_reports = [
            _sample_check(theorem, cfg, _mix(cfg.seed, ti, i))
            for i in range(cfg.samples)
        ]
        met = [r for r in t_reports if r.hypothesis_met]
        fails = [r for r in met if not r.holds]
        worst = min(met, key=lambda r: r.worst_slack) if met else None
        summary.append({
            "theorem": theorem,
            "samples": cfg.samples,
            "hypothesis_met": len(met),
            "holds": sum(1 for r in met if r.holds),
            "fails": len(fails),
            "skipped": cfg.samples - len(met),
            "worst_slack": worst.worst_slack if worst else None,
            "witness": None if worst is None else {
                "graph": worst.graph,
                "surgery": worst.surgery,
                "worst_slack": worst.worst_slack,
                "witness_position": worst.witness_position,
            },
        })
        reports.extend(t_reports)
    return CampaignResult(cfg, reports, summary)


# --- serialization -----------------------------------------------------------

def report_to_dict(r: InterlacingReport) -> dict:
    return asdict(r)


def report_from_dict(d: dict) -> InterlacingReport:
    return InterlacingReport(**d)


def campaign_to_json(result: CampaignResult) -> str:
    doc = {
        "config": asdict(result.config),
        "summary": result.summary,
        "reports": [report_to_dict(r) for r in result.reports],
    }
    return json.dumps(doc, indent=2) + "\n"


_CSV_FIELDS = (
    "theorem", "hypothesis_met", "holds", "worst_slack", "witness_position",
    "tol", "graph", "surgery", "spectrum_alpha", "spectrum_beta",
    "spectrum_mu", "links_skipped", "note",
)


def _fmt17(x: float) -> str:
    return f"{x:.17g}"


def campaign_to_csv(result: CampaignResult) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=_CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in result.reports:
        writer.writerow({
            "theorem": r.theorem,
            "hypothesis_met": r.hypothesis_met,
            "holds": r.holds,
            "worst_slack": _fmt17(r.worst_slack),
            "witness_position": r.witness_position,
            "tol": _fmt17(r.tol),
            "graph": r.graph,
            "surgery": json.dumps(r.surgery, sort_keys=True),
            "spectrum_alpha": " ".join(_fmt17(x) for x in r.spectra.get("alpha", [])),
            "spectrum_beta": " ".join(_fmt17(x) for x in r.spectra.get("beta", [])),
            "spectrum_mu": " ".join(_fmt17(x) for x in r.spectra.get("mu", [])),
            "links_skipped": ";".join(r.links_skipped),
            "note": r.note,
        })
    return buf.getvalue()


def summary_lines(result: CampaignResult) -> list[str]:
    lines = []
    for s in result.summary:
        worst = "n/a" if s["worst_slack"] is None else _fmt17(s["worst_slack"])
        lines.append(
            f"{s['theorem']}: samples={s['samples']} met={s['hypothesis_met']} "
            f"holds={s['holds']} fails={s['fails']} skipped={s['skipped']} "
            f"worst_slack={worst}"
        )
    return lines
