"""Exhaustive finite-field check of the projection-center system.

For a prime p this enumerates every projective v over F_p (canonical
representatives, last nonzero coordinate 1), solves the ten condition rows
as a linear system in (beta, mu), and counts solution pairs with recovered
lambda nonzero and with lambda = 0.  The counts give an independent oracle
for the exact chart solver: an isolated rational solution contributes one
pair per good prime.

The hot loop runs about p^3 small Gaussian eliminations, so it is compiled
with numba by default; setting CUSPLAB_NO_NUMBA=1 (or a numba import
failure) selects a vectorized pure-numpy fallback with identical results.
Primes are capped at 3000 so that p^5 fits comfortably in int64.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

MAX_ORACLE_PRIME = 3000
_SOL_CAP = 64


def use_numba() -> bool:
    if os.environ.get("CUSPLAB_NO_NUMBA", "").strip() not in ("", "0"):
        return False
    try:
        import numba  # noqa: F401
    except Exception:  # pragma: no cover - environment without numba
        return False
    return True


def system_rows_mod_p(system, p: int) -> np.ndarray:
    """The ten normalized 5x5 row matrices reduced mod p, as int64 (10,5,5)."""
    if p > MAX_ORACLE_PRIME:
        raise ValueError(f"oracle primes are capped at {MAX_ORACLE_PRIME}")
    out = np.zeros((10, 5, 5), dtype=np.int64)
    for r, row in enumerate(system.rows):
        for i in range(5):
            for j in range(5):
                c = Fraction(row.matrix[i][j])
                if c.denominator != 1:
                    raise ValueError("normalized rows should have integer entries")
                out[r, i, j] = c.numerator % p
    return out


@dataclass(frozen=True)
class OracleCount:
    prime: int
    pairs_lambda_nonzero: int
    pairs_lambda_zero: int
    v_points_lambda_nonzero: int
    v_points_lambda_zero: int
    sample_solutions: tuple  # up to _SOL_CAP (v, beta, mu) triples with lambda != 0


def _decode_rep(idx: int, p: int):
    p3, p2 = p ** 3, p ** 2
    if idx < p3:
        return (idx % p, (idx // p) % p, idx // p2, 1)
    idx -= p3
    if idx < p2:
        return (idx % p, idx // p, 1, 0)
    idx -= p2
    if idx < p:
        return (idx, 1, 0, 0)
    return (1, 0, 0, 0)


# -- numba kernel --------------------------------------------------------------------


def _build_kernel():
    from numba import njit

    @njit(cache=True)
    def kernel(rows, p):  # pragma: no cover - compiled
        n_reps = p ** 3 + p ** 2 + p + 1
        nz_pairs = 0
        z_pairs = 0
        nz_points = 0
        z_points = 0
        sols = np.zeros((_SOL_CAP, 9), dtype=np.int64)
        nsols = 0
        A = np.zeros((11, 6), dtype=np.int64)
        v = np.zeros(4, dtype=np.int64)
        for idx in range(n_reps):
            # decode canonical projective representative
            if idx < p ** 3:
                v[0] = idx % p
                v[1] = (idx // p) % p
                v[2] = idx // (p * p)
                v[3] = 1
            elif idx < p ** 3 + p ** 2:
                t = idx - p ** 3
                v[0] = t % p
                v[1] = t // p
                v[2] = 1
                v[3] = 0
            elif idx < p ** 3 + p ** 2 + p:
                v[0] = idx - p ** 3 - p ** 2
                v[1] = 1
                v[2] = 0
                v[3] = 0
            else:
                v[0] = 1
                v[1] = 0
                v[2] = 0
                v[3] = 0
            # base system: 10 rows in (b0..b3, mu | rhs)
            for r in range(10):
                for j in range(4):
                    acc = 0
                    for i in range(4):
                        acc += rows[r, i, 1 + j] * v[i]
                    A[r, j] = acc % p
                A[r, 4] = rows[r, 4, 0] % p
                acc = 0
                for i in range(4):
                    acc += rows[r, i, 0] * v[i]
                A[r, 5] = (-acc) % p
            total, rank, w_ok, w = _solve_mod_p(A, 10, p)
            if total == 0:
                continue
            # lambda = mu + sum(b_j v_j) + v3 = 0 as an extra row
            for j in range(4):
                A[10, j] = v[j] % p
            A[10, 4] = 1
            A[10, 5] = (-v[3]) % p
            z_total, _, _, _ = _solve_mod_p(A, 11, p)
            nz = total - z_total
            if nz > 0:
                nz_pairs += nz
                nz_points += 1
                if rank == 5 and w_ok and nsols < _SOL_CAP:
                    lam = (w[4] + w[0] * v[0] + w[1] * v[1] + w[2] * v[2]
                           + w[3] * v[3] + v[3]) % p
                    if lam != 0:
                        for i in range(4):
                            sols[nsols, i] = v[i]
                        for j in range(5):
                            sols[nsols, 4 + j] = w[j]
                        nsols += 1
            if z_total > 0:
                z_pairs += z_total
                z_points += 1
        return nz_pairs, z_pairs, nz_points, z_points, sols, nsols

    @njit(cache=True)
    def _solve_mod_p(A0, nrows, p):  # pragma: no cover - compiled
        A = A0[:nrows].copy()
        rank = 0
        piv_cols = np.full(5, -1, dtype=np.int64)
        for c in range(5):
            piv = -1
            for i in range(rank, nrows):
                if A[i, c] % p != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != rank:
                for t in range(6):
                    tmp = A[rank, t]
                    A[rank, t] = A[piv, t]
                    A[piv, t] = tmp
            # normalize pivot row
            inv = 1
            base = A[rank, c] % p
            e = p - 2
            while e:
                if e & 1:
                    inv = (inv * base) % p
                base = (base * base) % p
                e >>= 1
            for t in range(6):
                A[rank, t] = (A[rank, t] * inv) % p
            for i in range(nrows):
                if i != rank and A[i, c] % p != 0:
                    f = A[i, c] % p
                    for t in range(6):
                        A[i, t] = (A[i, t] - f * A[rank, t]) % p
            piv_cols[rank] = c
            rank += 1
            if rank == nrows:
                break
        # consistency
        for i in range(rank, nrows):
            if A[i, 5] % p != 0:
                return 0, rank, False, np.zeros(5, dtype=np.int64)
        total = p ** (5 - rank)
        w = np.zeros(5, dtype=np.int64)
        w_ok = rank == 5
        if w_ok:
            for i in range(rank):
                w[piv_cols[i]] = A[i, 5] % p
        return total, rank, w_ok, w

    return kernel


_NUMBA_KERNEL = None


def _numba_enumerate(rows: np.ndarray, p: int):
    global _NUMBA_KERNEL
    if _NUMBA_KERNEL is None:
        _NUMBA_KERNEL = _build_kernel()
    return _NUMBA_KERNEL(rows, p)


# -- vectorized numpy fallback ----------------------------------------------------------


def _modpow_array(base: np.ndarray, e: int, p: int) -> np.ndarray:
    result = np.ones_like(base)
    b = base % p
    while e:
        if e & 1:
            result = (result * b) % p
        b = (b * b) % p
        e >>= 1
    return result


def _batch_solve(A: np.ndarray, p: int):
    """Gauss-Jordan over F_p on a batch of augmented systems.

    A has shape (B, R, 6) with unknown columns 0..4.  Returns
    (consistent, rank, solution, unique, rref, pivot_row_of_col) where
    solution holds the unique w for full-rank systems (zeros otherwise) and
    pivot_row_of_col[b, c] is the pivot row for column c, or -1.
    """
    B, R, _ = A.shape
    A = A % p
    used = np.zeros((B, R), dtype=bool)
    piv_col_of_row = np.full((B, R), -1, dtype=np.int64)
    piv_row_of_col = np.full((B, 5), -1, dtype=np.int64)
    for c in range(5):
        cand = (A[:, :, c] != 0) & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        idx = np.argmax(cand, axis=1)  # first usable pivot row per batch entry
        rows_sel = A[np.arange(B), idx]  # (B, 6)
        inv = _modpow_array(rows_sel[:, c], p - 2, p)
        piv_norm = (rows_sel * inv[:, None]) % p
        piv_norm[~has] = 0
        factors = A[:, :, c].copy()  # (B, R)
        update = (factors[:, :, None] * piv_norm[:, None, :]) % p
        A = np.where(has[:, None, None], (A - update) % p, A)
        # restore the pivot row itself (the update eliminated it as well)
        sel = np.nonzero(has)[0]
        A[sel, idx[has]] = piv_norm[has]
        used[sel, idx[has]] = True
        piv_col_of_row[sel, idx[has]] = c
        piv_row_of_col[sel, c] = idx[has]
    rank = used.sum(axis=1)
    bad = ((A[:, :, :5] == 0).all(axis=2)) & (A[:, :, 5] != 0)
    consistent = ~bad.any(axis=1)
    solution = np.zeros((B, 5), dtype=np.int64)
    bs, rs = np.nonzero(used)
    cols = piv_col_of_row[bs, rs]
    solution[bs, cols] = A[bs, rs, 5]
    unique = rank == 5
    return consistent, rank, solution, unique, A, piv_row_of_col


def _numpy_enumerate(rows: np.ndarray, p: int, batch: int = 1 << 14):
    n_reps = p ** 3 + p ** 2 + p + 1
    nz_pairs = z_pairs = nz_points = z_points = 0
    sols = np.zeros((_SOL_CAP, 9), dtype=np.int64)
    nsols = 0
    L_beta = rows[:, :4, 1:5]  # (10, 4(v), 4(beta))
    L_mu = rows[:, 4, 0]       # (10,)
    L_const = rows[:, :4, 0]   # (10, 4)
    for start in range(0, n_reps, batch):
        idxs = np.arange(start, min(start + batch, n_reps), dtype=np.int64)
        B = len(idxs)
        V = np.zeros((B, 4), dtype=np.int64)
        in3 = idxs < p ** 3
        t = idxs
        V[in3, 0] = t[in3] % p
        V[in3, 1] = (t[in3] // p) % p
        V[in3, 2] = t[in3] // (p * p)
        V[in3, 3] = 1
        m2 = (idxs >= p ** 3) & (idxs < p ** 3 + p ** 2)
        t2 = idxs[m2] - p ** 3
        V[m2, 0] = t2 % p
        V[m2, 1] = t2 // p
        V[m2, 2] = 1
        m1 = (idxs >= p ** 3 + p ** 2) & (idxs < p ** 3 + p ** 2 + p)
        V[m1, 0] = idxs[m1] - p ** 3 - p ** 2
        V[m1, 1] = 1
        m0 = idxs >= p ** 3 + p ** 2 + p
        V[m0, 0] = 1
        A = np.zeros((B, 10, 6), dtype=np.int64)
        A[:, :, :4] = np.einsum("rij,bi->brj", L_beta, V) % p
        A[:, :, 4] = L_mu[None, :] % p
        A[:, :, 5] = (-np.einsum("ri,bi->br", L_const, V)) % p
        consistent, rank, sol, unique, rref, piv_row = _batch_solve(A, p)
        total = np.where(consistent, p ** (5 - rank), 0)
        # lambda = 0: reduce the single extra row against the computed RREF
        lam_row = np.zeros((B, 6), dtype=np.int64)
        lam_row[:, :4] = V % p
        lam_row[:, 4] = 1
        lam_row[:, 5] = (-V[:, 3]) % p
        for c in range(5):
            have = piv_row[:, c] >= 0
            if not have.any():
                continue
            sel = np.nonzero(have)[0]
            factor = lam_row[sel, c]
            lam_row[sel] = (lam_row[sel] - factor[:, None]
                            * rref[sel, piv_row[sel, c]]) % p
        extra_pivot = (lam_row[:, :5] != 0).any(axis=1)
        lam_inconsistent = ~extra_pivot & (lam_row[:, 5] != 0)
        rank0 = rank + extra_pivot
        consistent0 = consistent & ~lam_inconsistent
        total0 = np.where(consistent0, p ** (5 - rank0), 0)
        nz = total - total0
        nz_pairs += int(nz.sum())
        z_pairs += int(total0.sum())
        nz_points += int((nz > 0).sum())
        z_points += int((total0 > 0).sum())
        for b in np.nonzero((nz > 0) & unique & consistent)[0]:
            if nsols >= _SOL_CAP:
                break
            lam = (sol[b, 4] + (sol[b, :4] * V[b]).sum() + V[b, 3]) % p
            if lam != 0:
                sols[nsols, :4] = V[b]
                sols[nsols, 4:] = sol[b]
                nsols += 1
    return nz_pairs, z_pairs, nz_points, z_points, sols, nsols


def count_solutions_mod_p(system, p: int) -> OracleCount:
    """Exhaustive count of (projective v, beta, mu) solutions over F_p."""
    rows = system_rows_mod_p(system, p)
    if use_numba():
        res = _numba_enumerate(rows, p)
    else:
        res = _numpy_enumerate(rows, p)
    nz_pairs, z_pairs, nz_points, z_points, sols, nsols = res
    samples = tuple(tuple(int(x) for x in sols[i]) for i in range(nsols))
    return OracleCount(prime=p, pairs_lambda_nonzero=int(nz_pairs),
                       pairs_lambda_zero=int(z_pairs),
                       v_points_lambda_nonzero=int(nz_points),
                       v_points_lambda_zero=int(z_points),
                       sample_solutions=samples)


def predicted_pair_counts(solution_set, p: int):
    """Counts over F_p implied by an exact SolutionSet, or None when the prime
    is unusable (a denominator or discriminant degenerates mod p).

    A rational isolated solution contributes 1; a number-field packet
    contributes one pair per root of its modulus in F_p (requiring the
    modulus to stay squarefree mod p)."""
    from . import upoly

    def contribution(sol) -> int | None:
        if sol.field is None:
            for coord in list(sol.v) + list(sol.beta) + [sol.mu]:
                if Fraction(coord).denominator % p == 0:
                    return None
            return 1
        mod = list(sol.field.modulus)
        try:
            reduced = upoly.mod_p(mod, p)
        except ZeroDivisionError:
            return None
        if upoly.degree(reduced) != len(mod) - 1:
            return None
        if upoly.degree(upoly.gcd_p(reduced, upoly.deriv(reduced), p)) != 0:
            return None
        return len(upoly.roots_p(reduced, p))

    nz = 0
    for sol in solution_set.centers:
        c = contribution(sol)
        if c is None:
            return None
        nz += c
    z = 0
    for sol in solution_set.lambda_zero:
        c = contribution(sol)
        if c is None:
            return None
        z += c
    return nz, z
