"""Projection-splitting kernel for the theta SDP.

One iteration alternates an exact solve on the affine constraint set
(trace one, zeros on edges) with a projection onto the PSD cone, with a
multiplier correction carrying the linear objective (boundary-point style
augmented Lagrangian).  The only heavy primitive is a dense symmetric
eigendecomposition per iteration, so the whole loop jit-compiles.

Two selectable implementations of the same source:

* numba @njit (default when numba imports),
* pure numpy (env IRKIT_PURE_NUMPY=1, or any numba failure).

`benchmarks/bench_theta.py` times one against the other.
"""

from __future__ import annotations

import os

import numpy as np

STATUS_CONVERGED = 0
STATUS_ITER_CAP = 1

# margin factor covering eigensolver backward error in the certified bounds
_EIG_SAFETY = 64.0


def _solve_impl(n, ei, ej, tol, max_iters, check_every, sigma0):  # pragma: no cover - jitted
    """Run the splitting loop; returns certified primal/dual data.

    Returns (status, iters, p_hat, d_hat, Xhat, Abar) where
    p_hat <= theta <= d_hat up to eigensolver backward error, Xhat is the
    exactly-normalized primal witness (trace 1, zero on edges, PSD within
    the reported margin) and Abar the dual witness (ones off the edge
    pattern; lambda_max(Abar) = d_hat).
    """
    m = ei.shape[0]
    eps = 2.2e-16
    X = np.eye(n) / n
    S = np.zeros((n, n))
    sigma = sigma0
    best_p = -1e300
    best_d = 1e300
    Xhat = np.zeros((n, n))
    Abar = np.zeros((n, n))
    it = 0
    status = STATUS_ITER_CAP
    while it < max_iters:
        it += 1
        trX = 0.0
        for i in range(n):
            trX += X[i, i]
        trS = 0.0
        for i in range(n):
            trS += S[i, i]
        y0 = (trS + n + (trX - 1.0) / sigma) / n

        W = -X / sigma - 1.0
        for i in range(n):
            W[i, i] += y0
        for k in range(m):
            W[ei[k], ej[k]] = S[ei[k], ej[k]]
            W[ej[k], ei[k]] = S[ej[k], ei[k]]
        W = 0.5 * (W + W.T)

        lam, V = np.linalg.eigh(W)
        pos = np.maximum(lam, 0.0)
        S = (V * pos) @ V.T
        S = 0.5 * (S + S.T)
        X = sigma * (S - W)
        X = 0.5 * (X + X.T)

        if it % check_every == 0 or it == max_iters:
            # certified primal bound: zero the edges, shift into the cone, renormalize
            Z = X.copy()
            for k in range(m):
                Z[ei[k], ej[k]] = 0.0
                Z[ej[k], ei[k]] = 0.0
            Z = 0.5 * (Z + Z.T)
            lz, _ = np.linalg.eigh(Z)
            zmax = 0.0
            for i in range(n):
                for j in range(n):
                    if abs(Z[i, j]) > zmax:
                        zmax = abs(Z[i, j])
            margin = _EIG_SAFETY * n * eps * (zmax + 1.0)
            shift = margin - lz[0] if lz[0] < margin else margin
            denom = 0.0
            for i in range(n):
                denom += Z[i, i]
            denom += n * shift
            p_hat = 0.0
            if denom > 0.0:
                total = Z.sum() + n * shift
                p_hat = total / denom
            # certified dual bound: lambda_max of the ones-off-edges matrix
            A = np.ones((n, n))
            for k in range(m):
                i, j = ei[k], ej[k]
                A[i, j] = -S[i, j] - X[i, j] / sigma
                A[j, i] = A[i, j]
            la, _ = np.linalg.eigh(A)
            amax = 0.0
            for i in range(n):
                for j in range(n):
                    if abs(A[i, j]) > amax:
                        amax = abs(A[i, j])
            d_hat = la[n - 1] + _EIG_SAFETY * n * eps * (amax + 1.0)
            improved = False
            if p_hat > best_p:
                best_p = p_hat
                for i in range(n):
                    for j in range(n):
                        Xhat[i, j] = (Z[i, j] + (shift if i == j else 0.0)) / denom
                improved = True
            if d_hat < best_d:
                best_d = d_hat
                for i in range(n):
                    for j in range(n):
                        Abar[i, j] = A[i, j]
                improved = True
            if best_d - best_p <= tol:
                status = STATUS_CONVERGED
                break
            # restart heuristic: rebalance the penalty when a check brought
            # no progress; rp is the affine-feasibility residual of X, rd the
            # cone-feasibility proxy of the dual slack
            if not improved:
                rp = abs(trX - 1.0)
                for k in range(m):
                    rp += abs(2.0 * X[ei[k], ej[k]])
                rd = 0.0
                for i in range(n):
                    rd += abs(min(lam[i], 0.0))
                if rp > 10.0 * rd:
                    sigma *= 1.9
                elif rd > 10.0 * rp:
                    sigma /= 1.9
    return status, it, best_p, best_d, Xhat, Abar


def _want_numba() -> bool:
    return os.environ.get("IRKIT_PURE_NUMPY", "").strip() not in ("1", "true", "yes")


_numba_solve = None


def get_solver(use_numba: bool | None = None):
    """The kernel entry point: jitted when numba is available and enabled."""
    global _numba_solve
    if use_numba is None:
        use_numba = _want_numba()
    if not use_numba:
        return _solve_impl
    if _numba_solve is None:
        try:
            import numba

            _numba_solve = numba.njit(cache=True)(_solve_impl)
        except Exception:
            _numba_solve = _solve_impl
    return _numba_solve


def kernel_mode() -> str:
    solver = get_solver()
    return "numpy" if solver is _solve_impl else "numba"
