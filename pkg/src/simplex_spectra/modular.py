"""Exact linear algebra modulo word-sized primes.

Ranks, nullities and characteristic polynomials of integer matrices are
computed over GF(p) for fixed primes just below 2^31, so every product of
two reduced residues stays inside int64.  Agreement across independent
primes is what certifies multiplicities elsewhere in the package.
"""

from __future__ import annotations

import os

import numpy as np

#: Fixed fingerprint primes: the three largest primes below 2^31.  Builds on
#: any machine use the same set, so fingerprints are comparable.
DEFAULT_PRIMES = (2147483647, 2147483629, 2147483587)

#: Escalation pool used when two primes disagree on a nullity.
BACKUP_PRIMES = (2147483579, 2147483563, 2147483549)

_ENV_PRIMES = "SIMPLEX_SPECTRA_PRIMES"


class NotPrimeError(ValueError):
    pass


class CertificationError(RuntimeError):
    """Independent primes kept disagreeing; indicates overflow or a bug."""


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin, valid for all 64-bit integers."""
    if m < 2:
        return False
    for w in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if m % w == 0:
            return m == w
        if m < w * w:
            return True
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def default_primes() -> tuple[int, ...]:
    """The fixed prime set, or the SIMPLEX_SPECTRA_PRIMES override.

    Overriding breaks fingerprint comparability with default-prime builds.
    """
    raw = os.environ.get(_ENV_PRIMES)
    if not raw:
        return DEFAULT_PRIMES
    primes = tuple(int(tok) for tok in raw.split(",") if tok.strip())
    for p in primes:
        if not is_prime(p):
            raise NotPrimeError(f"{_ENV_PRIMES} entry {p} is not prime")
        if p >= 2**31:
            raise ValueError(f"{_ENV_PRIMES} entry {p} too large for int64 arithmetic")
    if len(primes) < 2:
        raise ValueError(f"{_ENV_PRIMES} needs at least two primes")
    return primes


def _check_prime(p: int):
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p >= 2**31:
        raise ValueError(f"prime {p} too large for int64 arithmetic")


def rank_modp(a: np.ndarray, p: int) -> int:
    """Rank over GF(p) by vectorized Gaussian elimination."""
    _check_prime(p)
    a = np.array(a, dtype=np.int64, copy=True) % p
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = a[r, c:] * inv % p
        rows = r + 1 + np.nonzero(a[r + 1:, c])[0]
        if rows.size:
            a[rows, c:] = (a[rows, c:] - a[rows, c][:, None] * a[r, c:][None, :]) % p
        r += 1
    return r


def nullity_modp(a: np.ndarray, p: int, shift: int = 0) -> int:
    """Nullity of (a - shift*I) over GF(p); a must be square."""
    m, n = a.shape
    if m != n:
        raise ValueError("nullity needs a square matrix")
    if shift:
        a = np.array(a, dtype=np.int64, copy=True)
        a[np.diag_indices(n)] -= shift
    return n - rank_modp(a, p)


def charpoly_modp(a: np.ndarray, p: int) -> list[int]:
    """Coefficients (ascending powers, monic) of det(xI - a) over GF(p).

    Reduces to upper Hessenberg form by similarity, then runs the standard
    recurrence on leading principal characteristic polynomials.  Requires
    p greater than the matrix order.
    """
    _check_prime(p)
    n = a.shape[0]
    if a.shape[1] != n:
        raise ValueError("characteristic polynomial needs a square matrix")
    if p <= n:
        raise ValueError(f"prime {p} must exceed the matrix order {n}")
    if n == 0:
        return [1]
    h = np.array(a, dtype=np.int64, copy=True) % p
    for j in range(n - 2):
        nz = np.nonzero(h[j + 1:, j])[0]
        if nz.size == 0:
            continue
        piv = j + 1 + int(nz[0])
        if piv != j + 1:
            h[[j + 1, piv]] = h[[piv, j + 1]]
            h[:, [j + 1, piv]] = h[:, [piv, j + 1]]
        inv = pow(int(h[j + 1, j]), p - 2, p)
        rows = j + 2 + np.nonzero(h[j + 2:, j])[0]
        if rows.size:
            f = h[rows, j] * inv % p
            h[rows] = (h[rows] - f[:, None] * h[j + 1][None, :]) % p
            # inverse similarity: add the eliminated columns back into column j+1
            h[:, j + 1] = (h[:, j + 1] + ((h[:, rows] * f[None, :]) % p).sum(axis=1)) % p
    polys = [np.array([1], dtype=np.int64)]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        cur = np.zeros(m + 1, dtype=np.int64)
        cur[1:] = prev
        cur[:m] = (cur[:m] - int(h[m - 1, m - 1]) * prev) % p
        beta = 1
        for i in range(1, m):
            beta = beta * int(h[m - i, m - i - 1]) % p
            if beta == 0:
                break
            coef = int(h[m - 1 - i, m - 1]) * beta % p
            if coef:
                q = polys[m - 1 - i]
                cur[:len(q)] = (cur[:len(q)] - coef * q) % p
        polys.append(cur)
    return [int(c) for c in polys[n]]


# ---------------------------------------------------------------------------
# small polynomial helpers over GF(p), ascending-coefficient lists
# ---------------------------------------------------------------------------

def poly_mul_mod(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def poly_pow_mod(a: list[int], e: int, p: int) -> list[int]:
    out = [1]
    base = list(a)
    while e:
        if e & 1:
            out = poly_mul_mod(out, base, p)
        e >>= 1
        if e:
            base = poly_mul_mod(base, base, p)
    return out


def poly_from_roots_mod(roots: dict[int, int], p: int) -> list[int]:
    """Expand prod (x - r)^mult over GF(p)."""
    out = [1]
    for r, mult in sorted(roots.items()):
        out = poly_mul_mod(out, poly_pow_mod([(-r) % p, 1], mult, p), p)
    return out


def poly_divide_linear_power(coeffs: list[int], root: int, mult: int, p: int) -> list[int]:
    """Exact division of a polynomial by (x - root)^mult over GF(p).

    Raises CertificationError when any of the mult synthetic divisions
    leaves a remainder; exactness is a consistency check on certified
    multiplicities.
    """
    cur = list(coeffs)
    r = root % p
    for _ in range(mult):
        if len(cur) < 2:
            raise CertificationError(f"degree too small to divide by (x-{root})^{mult}")
        quot = [0] * (len(cur) - 1)
        carry = 0
        for k in range(len(cur) - 1, 0, -1):
            carry = (cur[k] + carry * r) % p
            quot[k - 1] = carry
        remainder = (cur[0] + carry * r) % p
        if remainder != 0:
            raise CertificationError(f"division by (x-{root})^{mult} not exact mod {p}")
        cur = quot
    return cur
