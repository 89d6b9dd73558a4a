"""The four matrices of a signed graph and their combinatorial quadratic forms.

Integer-valued matrices (adjacency, Laplacian, net-Laplacian) are built in
exact integer arithmetic (int64) so identities like L - N = 2*diag(d-) can be
tested exactly; callers widen to float for eigenvalue work.  The normalized
net-Laplacian is assembled from the entrywise scaling formula, which keeps it
exactly symmetric (no post-hoc symmetrization).

The quad_form_* functions evaluate edge-sum formulas directly, independent of
any matrix product, and serve as oracles for the matrix quadratic forms.
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .errors import LengthMismatch, ZeroDenominator
from .graphs import SignedGraph, degree_profile


def adjacency(g: SignedGraph) -> np.ndarray:
    """Signed adjacency: entry (i, j) is the edge sign, 0 if not adjacent."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v, s in g.edges:
        a[u, v] = s
        a[v, u] = s
    return a


def laplacian(g: SignedGraph) -> np.ndarray:
    """Degree diagonal minus signed adjacency."""
    m = -adjacency(g)
    d = degree_profile(g).degree
    for i in range(g.n):
        m[i, i] = d[i]
    return m


def net_laplacian(g: SignedGraph) -> np.ndarray:
    """Net-degree diagonal minus signed adjacency."""
    m = -adjacency(g)
    net = degree_profile(g).net_degree
    for i in range(g.n):
        m[i, i] = net[i]
    return m


def normalized_net_laplacian(g: SignedGraph) -> np.ndarray:
    """Net-Laplacian scaled by 1/sqrt(degree) on both sides.

    The scaling entry for a vertex of degree 0 is 0, so rows and columns of
    isolated vertices are identically zero.  Entries are computed as
    N[i,j] / sqrt(d_i * d_j) in one division, which keeps the matrix exactly
    symmetric and integer ratios (e.g. degree-regular graphs) exact.
    """
    n_mat = net_laplacian(g)
    d = degree_profile(g).degree
    out = np.zeros((g.n, g.n), dtype=np.float64)
    for i in range(g.n):
        for j in range(i, g.n):
            if n_mat[i, j] != 0 and d[i] > 0 and d[j] > 0:
                val = float(n_mat[i, j]) / math.sqrt(float(d[i] * d[j]))
                out[i, j] = val
                out[j, i] = val
    return out


def _check_vector(g: SignedGraph, x: Sequence[float]) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (g.n,):
        raise LengthMismatch(f"vector has length {x.shape}, graph order is {g.n}")
    return x


def quad_form_laplacian(g: SignedGraph, x: Sequence[float]) -> float:
    """Sum over edges of (x_u - sign * x_v)^2; equals x^T L x."""
    x = _check_vector(g, x)
    return float(sum((x[u] - s * x[v]) ** 2 for u, v, s in g.edges))


def quad_form_net_laplacian(g: SignedGraph, x: Sequence[float]) -> float:
    """Edge sum of (x_u - sign * x_v)^2 minus twice the d- weighted square sum."""
    x = _check_vector(g, x)
    dm = degree_profile(g).neg_degree
    edge_sum = sum((x[u] - s * x[v]) ** 2 for u, v, s in g.edges)
    return float(edge_sum - 2.0 * sum(m * xi * xi for m, xi in zip(dm, x)))


def quad_form_normalized(g: SignedGraph, x: Sequence[float]) -> float:
    """Net-Laplacian quadratic form over the degree-weighted square sum.

    Matches the Rayleigh quotient of the normalized net-Laplacian at
    y = sqrt(degree) * x when the graph has no isolated vertices.
    """
    x = _check_vector(g, x)
    d = degree_profile(g).degree
    denom = float(sum(di * xi * xi for di, xi in zip(d, x)))
    if denom == 0.0:
        raise ZeroDenominator("degree-weighted square sum of the vector is zero")
    return quad_form_net_laplacian(g, x) / denom


def matrix_quad_form(m: np.ndarray, x: Sequence[float]) -> float:
    """x^T m x, widened to float."""
    x = np.asarray(x, dtype=np.float64)
    return float(x @ (m.astype(np.float64) @ x))


def switching_matrix(alpha: Sequence[int]) -> np.ndarray:
    """Diagonal +-1 matrix of a switching function."""
    return np.diag(np.asarray(alpha, dtype=np.int64))
