"""Dense symmetric eigensolver and independent small-matrix oracles.

The solver is self-contained: Householder tridiagonalization followed by
implicit-shift QL on the tridiagonal form.  Iteration is capped at 64 sweeps
per eigenvalue and off-diagonals below 1e-15 * scale are deflated to zero.
Eigenvectors are accumulated only when requested; the values-only path skips
the transform bookkeeping.

charpoly_spectrum_oracle takes a completely different route for matrices of
order <= 6: characteristic-polynomial coefficients by the Faddeev-LeVerrier
recurrence in exact rational arithmetic, square-free factorization (Yun), and
Sturm-chain bisection inside Gershgorin bounds.  Every sign evaluation is
exact, so the oracle is immune to the iterative solver's failure modes and is
used to cross-validate it.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import (
    BadOrder,
    DimensionTooLarge,
    NoConvergence,
    NonSymmetric,
    ZeroVector,
)

_DEFLATE = 1e-15
_MAX_SWEEPS = 64


def _as_symmetric(m) -> np.ndarray:
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NonSymmetric(f"expected a square matrix, got shape {m.shape}")
    if not np.array_equal(m, m.T):
        raise NonSymmetric("matrix is not exactly symmetric")
    return m


def _tridiagonalize(a: np.ndarray, want_q: bool):
    """Reduce symmetric a to tridiagonal (d, e) with Q^T a Q tridiagonal.

    Returns (d, e, q) where e[i] couples positions i and i+1; q is None
    unless requested.
    """
    a = a.copy()
    n = a.shape[0]
    q = np.eye(n) if want_q else None
    for k in range(n - 2):
        x = a[k + 1:, k]
        sigma = math.sqrt(float(x @ x))
        if sigma == 0.0:
            continue
        alpha = -math.copysign(sigma, x[0]) if x[0] != 0.0 else -sigma
        u = x.copy()
        u[0] -= alpha
        unorm2 = float(u @ u)
        if unorm2 == 0.0:
            continue
        beta = 2.0 / unorm2
        b = a[k + 1:, k + 1:]
        p = beta * (b @ u)
        kk = 0.5 * beta * float(u @ p)
        w = p - kk * u
        b -= np.outer(w, u) + np.outer(u, w)
        a[k + 1, k] = alpha
        a[k, k + 1] = alpha
        a[k + 2:, k] = 0.0
        a[k, k + 2:] = 0.0
        if q is not None:
            qs = q[:, k + 1:]
            qs -= np.outer(qs @ u, beta * u)
    d = np.diag(a).copy()
    e = np.diag(a, 1).copy() if n > 1 else np.zeros(0)
    return d, e, q


def _ql_implicit(d: np.ndarray, e: np.ndarray, z: np.ndarray | None):
    """Implicit-shift QL on a tridiagonal; mutates d (and rotates z columns)."""
    n = d.size
    if n <= 1:
        return d
    if n == 2:
        # one exact Jacobi rotation; keeps small integer spectra exact
        if e[0] != 0.0:
            tau = (d[1] - d[0]) / (2.0 * e[0])
            t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(tau, 1.0))
            c = 1.0 / math.sqrt(1.0 + t * t)
            s = t * c
            d[0] -= t * e[0]
            d[1] += t * e[0]
            if z is not None:
                col0 = z[:, 0].copy()
                col1 = z[:, 1].copy()
                z[:, 0] = c * col0 - s * col1
                z[:, 1] = s * col0 + c * col1
        return d
    ee = np.zeros(n)
    ee[: n - 1] = e
    scale = max(1.0, float(np.max(np.abs(d))) + float(np.max(np.abs(ee))))
    thresh = _DEFLATE * scale
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1 and abs(ee[m]) > thresh:
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > _MAX_SWEEPS:
                raise NoConvergence(f"eigenvalue {l} did not settle in {_MAX_SWEEPS} sweeps")
            g = (d[l + 1] - d[l]) / (2.0 * ee[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + ee[l] / (g + math.copysign(r, g))
            s = 1.0
            c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * ee[i]
                b = c * ee[i]
                r = math.hypot(f, g)
                ee[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    ee[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                if z is not None:
                    col_i = z[:, i].copy()
                    col_next = z[:, i + 1].copy()
                    z[:, i + 1] = s * col_i + c * col_next
                    z[:, i] = c * col_i - s * col_next
            if underflow:
                continue
            d[l] -= p
            ee[l] = g
            ee[m] = 0.0
    return d


def eigenvalues(m) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, sorted ascending."""
    a = _as_symmetric(m)
    d, e, _ = _tridiagonalize(a, want_q=False)
    d = _ql_implicit(d, e, None)
    return np.sort(d)


def eigenpairs(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and matching eigenvector columns."""
    a = _as_symmetric(m)
    d, e, q = _tridiagonalize(a, want_q=True)
    d = _ql_implicit(d, e, q)
    order = np.argsort(d, kind="stable")
    return d[order], q[:, order]


def rayleigh(m, x: Sequence[float]) -> float:
    """x^T m x / x^T x; always lies between the extreme eigenvalues."""
    a = np.asarray(m, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    denom = float(x @ x)
    if denom == 0.0:
        raise ZeroVector("Rayleigh quotient of the zero vector")
    return float(x @ (a @ x)) / denom


# --- exact characteristic-polynomial oracle (order <= 6) -------------------
#
# Polynomials are coefficient lists of Fractions, lowest degree first.

_ORACLE_MAX_DIM = 6
_ROOT_WIDTH = Fraction(1, 2**50)


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_deriv(p: list[Fraction]) -> list[Fraction]:
    if len(p) <= 1:
        return [Fraction(0)]
    return _poly_trim([k * c for k, c in enumerate(p)][1:])


def _poly_eval(p: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = a[:]
    db, lb = len(b) - 1, b[-1]
    quot = [Fraction(0)] * max(1, len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        factor = a[k] / lb
        quot[k - db] = factor
        for j in range(db + 1):
            a[k - db + j] -= factor * b[j]
    return _poly_trim(quot), _poly_trim(a)


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


def _poly_monic(p: list[Fraction]) -> list[Fraction]:
    lead = p[-1]
    return [c / lead for c in p]


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _poly_trim(a[:]), _poly_trim(b[:])
    while not (len(b) == 1 and b[0] == 0):
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return _poly_monic(a)


def _squarefree_factors(p: list[Fraction]) -> list[tuple[list[Fraction], int]]:
    """Yun's decomposition of monic p into (square-free factor, multiplicity)."""
    dp = _poly_deriv(p)
    g = _poly_gcd(p, dp)
    if len(g) == 1:
        return [(_poly_monic(p), 1)]
    b, _ = _poly_divmod(p, g)
    c, _ = _poly_divmod(dp, g)
    d = _poly_sub(c, _poly_deriv(b))
    factors = []
    mult = 1
    while len(b) > 1:
        a = _poly_gcd(b, d)
        if len(a) > 1:
            factors.append((_poly_monic(a), mult))
        b, _ = _poly_divmod(b, a)
        c, _ = _poly_divmod(d, a)
        d = _poly_sub(c, _poly_deriv(b))
        mult += 1
    return factors


def _sturm_chain(p: list[Fraction]) -> list[list[Fraction]]:
    chain = [p, _poly_deriv(p)]
    while len(chain[-1]) > 1:
        _, r = _poly_divmod(chain[-2], chain[-1])
        if len(r) == 1 and r[0] == 0:
            break
        chain.append([-c for c in r])
    return chain


def _sign_changes(chain: list[list[Fraction]], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = _poly_eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _refine_root(p: list[Fraction], lo: Fraction, hi: Fraction) -> Fraction:
    """Bisect the single simple root of p inside (lo, hi]."""
    if _poly_eval(p, hi) == 0:
        return hi
    fa = _poly_eval(p, lo)
    if fa == 0:
        # lo is itself a (different, uncounted) root; p is square-free, so
        # the sign just right of lo is the derivative's sign there
        fa = _poly_eval(_poly_deriv(p), lo)
    sign_lo = 1 if fa > 0 else -1
    while hi - lo > _ROOT_WIDTH:
        mid = (lo + hi) / 2
        val = _poly_eval(p, mid)
        if val == 0:
            return mid
        if (1 if val > 0 else -1) == sign_lo:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def _isolated_real_roots(p: list[Fraction], lo: Fraction, hi: Fraction) -> list[Fraction]:
    """All real roots of square-free monic p inside (lo, hi]."""
    if len(p) == 2:
        return [-p[0] / p[1]]
    chain = _sturm_chain(p)
    roots: list[Fraction] = []
    stack = [(lo, hi, _sign_changes(chain, lo) - _sign_changes(chain, hi))]
    while stack:
        a, b, count = stack.pop()
        if count == 0:
            continue
        if count == 1:
            roots.append(_refine_root(p, a, b))
            continue
        mid = (a + b) / 2
        left = _sign_changes(chain, a) - _sign_changes(chain, mid)
        stack.append((a, mid, left))
        stack.append((mid, b, count - left))
    return roots


def _fraction_matrix(m: np.ndarray) -> list[list[Fraction]]:
    n = m.shape[0]
    if np.issubdtype(m.dtype, np.integer):
        return [[Fraction(int(m[i, j])) for j in range(n)] for i in range(n)]
    return [[Fraction(float(m[i, j])) for j in range(n)] for i in range(n)]


def characteristic_polynomial(m) -> list[Fraction]:
    """Exact monic coefficients of det(xI - m), lowest degree first.

    Faddeev-LeVerrier recurrence over rationals; float entries convert
    exactly, so no rounding enters the coefficients.
    """
    m = np.asarray(m)
    n = m.shape[0]
    a = _fraction_matrix(m)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    work = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    prev_c = Fraction(0)
    for k in range(1, n + 1):
        if k > 1:
            for i in range(n):
                work[i][i] += prev_c
        am = [[sum(a[i][t] * work[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        c = -sum(am[i][i] for i in range(n)) / k
        coeffs[n - k] = c
        prev_c = c
        work = am
    return coeffs


def _gershgorin_bounds(m: np.ndarray) -> tuple[Fraction, Fraction]:
    a = _fraction_matrix(m)
    n = len(a)
    lo = Fraction(0)
    hi = Fraction(0)
    for i in range(n):
        radius = sum(abs(a[i][j]) for j in range(n) if j != i)
        lo = min(lo, a[i][i] - radius)
        hi = max(hi, a[i][i] + radius)
    return lo - 1, hi + 1


def charpoly_spectrum_oracle(m) -> np.ndarray:
    """Eigenvalues of a symmetric matrix of order <= 6, computed without the
    iterative solver: exact characteristic polynomial, Yun square-free split,
    Sturm bisection within Gershgorin bounds.  Multiplicities are exact.
    """
    a = _as_symmetric(np.asarray(m))
    n = a.shape[0]
    if n > _ORACLE_MAX_DIM:
        raise DimensionTooLarge(f"oracle accepts order <= {_ORACLE_MAX_DIM}, got {n}")
    if n == 0:
        return np.zeros(0)
    src = np.asarray(m)
    poly = characteristic_polynomial(src)
    lo, hi = _gershgorin_bounds(src)
    values: list[float] = []
    for factor, mult in _squarefree_factors(poly):
        for root in _isolated_real_roots(factor, lo, hi):
            values.extend([float(root)] * mult)
    if len(values) != n:
        raise NoConvergence(f"root isolation found {len(values)} of {n} eigenvalues")
    return np.sort(np.array(values))


def determinant_oracle(m) -> float:
    """Determinant via the exact characteristic polynomial's constant term."""
    m = np.asarray(m)
    n = m.shape[0]
    if n > _ORACLE_MAX_DIM:
        raise DimensionTooLarge(f"oracle accepts order <= {_ORACLE_MAX_DIM}, got {n}")
    if n == 0:
        return 1.0
    coeffs = characteristic_polynomial(m)
    return float(coeffs[0] if n % 2 == 0 else -coeffs[0])


# --- closed-form spectra used as fixtures -----------------------------------

def closed_form_cycle_spectrum(n: int, balanced: bool) -> np.ndarray:
    """Laplacian spectrum of a signed n-cycle, by balance class.

    Balanced cycles switch to all-positive: 2 - 2cos(2*pi*k/n).  Unbalanced
    cycles switch to a single negative edge: 2 - 2cos((2k+1)*pi/n).
    """
    if n < 3:
        raise BadOrder(f"cycle needs n >= 3, got {n}")
    if balanced:
        vals = [2.0 - 2.0 * math.cos(2.0 * math.pi * k / n) for k in range(n)]
    else:
        vals = [2.0 - 2.0 * math.cos((2 * k + 1) * math.pi / n) for k in range(n)]
    return np.sort(np.array(vals))


def closed_form_path_spectrum(n: int) -> np.ndarray:
    """Laplacian spectrum of a path on n vertices: 2 - 2cos(k*pi/n)."""
    if n < 1:
        raise BadOrder(f"path needs n >= 1, got {n}")
    vals = [2.0 - 2.0 * math.cos(math.pi * k / n) for k in range(n)]
    return np.sort(np.array(vals))
