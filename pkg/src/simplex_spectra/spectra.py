"""Laplacians of clique complexes and certified spectra.

The up, down and total Laplacians at dimension i are assembled from the
signed coboundary matrices.  Spectra are computed in two passes: a dense
symmetric eigensolve locates integer candidates, then every candidate
multiplicity is certified as an exact nullity over at least two independent
primes.  Non-integer spectral content is never reported eigenvalue by
eigenvalue; it is carried as the residual characteristic polynomial modulo
the fingerprint primes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import modular
from .complexes import CliqueComplex, IntMatrix, coboundary
from .modular import CertificationError


def up_laplacian(X: CliqueComplex, i: int) -> IntMatrix:
    """delta_i^T delta_i on the i-faces; the zero matrix when no (i+1)-faces
    exist.  At i = 0 this is the ordinary graph Laplacian."""
    size = X.num_faces(i)
    tag = X.space_tag(i)
    if i + 1 > X.max_dim or X.num_faces(i + 1) == 0:
        return IntMatrix.zero(size, size, row_space=tag, col_space=tag)
    d = coboundary(X, i)
    return d.T @ d


def down_laplacian(X: CliqueComplex, i: int) -> IntMatrix:
    """delta_{i-1} delta_{i-1}^T on the i-faces; the all-ones matrix at
    i = 0."""
    if i < 0:
        raise ValueError("down laplacian needs i >= 0")
    size = X.num_faces(i)
    tag = X.space_tag(i)
    if size == 0:
        return IntMatrix.zero(0, 0, row_space=tag, col_space=tag)
    d = coboundary(X, i - 1)
    return d @ d.T


def total_laplacian(X: CliqueComplex, i: int) -> IntMatrix:
    return up_laplacian(X, i) + down_laplacian(X, i)


def numeric_spectrum(M: IntMatrix) -> list[float]:
    """Eigenvalues of a symmetric integer matrix, ascending (float64
    symmetric solver; diagnostic precision only)."""
    if not M.is_symmetric():
        raise ValueError("numeric_spectrum needs a symmetric matrix")
    if M.nrows == 0:
        return []
    return [float(x) for x in np.linalg.eigvalsh(M.to_dense().astype(np.float64))]


def nullity_mod_p(M: IntMatrix, shift: int, p: int) -> int:
    """Exact nullity of (M - shift*I) over GF(p)."""
    return modular.nullity_modp(M.to_dense(), p, shift)


def rank_mod_p(M: IntMatrix, p: int) -> int:
    """Exact rank of M over GF(p)."""
    return modular.rank_modp(M.to_dense(), p)


def charpoly_mod_p(M: IntMatrix, p: int) -> list[int]:
    """Characteristic polynomial coefficients of M over GF(p), ascending."""
    return modular.charpoly_modp(M.to_dense(), p)


@dataclass(frozen=True)
class CharPolyFingerprint:
    """Characteristic polynomial reduced modulo several fixed primes."""

    degree: int
    evaluations: tuple[tuple[int, tuple[int, ...]], ...]

    def __post_init__(self):
        for p, coeffs in self.evaluations:
            if len(coeffs) != self.degree + 1:
                raise ValueError("fingerprint degree inconsistent across primes")
            if self.degree >= 0 and coeffs[-1] % p != 1:
                raise ValueError("fingerprint polynomial must be monic")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.evaluations)


@dataclass(frozen=True)
class SpectrumSummary:
    """Certified eigenvalue multiset of a symmetric integer matrix.

    integer_eigs lists (eigenvalue, multiplicity, certified) with every
    multiplicity backed by agreeing nullities modulo two primes.  The part
    of the spectrum not accounted for by integers has degree
    residual_degree and is identified by residual_fingerprint, the quotient
    of the characteristic polynomial by the integer factors modulo each
    prime.  float_eigs is the raw numeric solve, kept for diagnostics.
    """

    size: int
    integer_eigs: tuple[tuple[int, int, bool], ...]
    residual_degree: int
    residual_fingerprint: tuple[tuple[int, tuple[int, ...]], ...]
    float_eigs: tuple[float, ...] = field(compare=False, repr=False, default=())

    def eig_multiset(self) -> dict[int, int]:
        return {v: m for v, m, _ in self.integer_eigs}

    def certified_key(self):
        """Everything certified: equal keys mean equal certified spectra."""
        return (self.size, self.integer_eigs, self.residual_degree,
                self.residual_fingerprint)

    def array_str(self) -> str:
        """Two-row array: eigenvalues over multiplicities, ascending."""
        if not self.integer_eigs and self.residual_degree == 0:
            return "( empty spectrum )"
        vals = [str(v) for v, _, _ in self.integer_eigs]
        mults = [str(m) for _, m, _ in self.integer_eigs]
        width = [max(len(a), len(b)) for a, b in zip(vals, mults)]
        top = " ".join(v.rjust(w) for v, w in zip(vals, width))
        bot = " ".join(m.rjust(w) for m, w in zip(mults, width))
        out = f"( {top} )\n( {bot} )"
        if self.residual_degree:
            out += f"\nplus a non-integer residual of degree {self.residual_degree}"
        return out

    def to_json_dict(self) -> dict:
        return {
            "size": self.size,
            "eigs": [{"value": v, "mult": m} for v, m, _ in self.integer_eigs],
            "residual": {
                "degree": self.residual_degree,
                "primes": [p for p, _ in self.residual_fingerprint],
                "coeffs": [list(c) for _, c in self.residual_fingerprint],
            },
        }


def certified_rank(M: IntMatrix, primes: Optional[Sequence[int]] = None) -> tuple[int, tuple[int, ...]]:
    """Rank agreed on by two independent primes, escalating through the
    backup pool on disagreement (four distinct answers is a hard error)."""
    if primes is None:
        primes = modular.default_primes()
    dense = M.to_dense()
    pool = list(primes) + [p for p in modular.BACKUP_PRIMES if p not in primes]
    seen: list[int] = []
    used: list[int] = []
    for p in pool[:4]:
        used.append(p)
        r = modular.rank_modp(dense, p)
        if r in seen:
            return r, tuple(used)
        seen.append(r)
    raise CertificationError(f"rank disagrees across 4 primes: {seen}")


def _certified_nullity(dense: np.ndarray, shift: int, primes: Sequence[int]) -> int:
    """Nullity agreed on by two primes, escalating through the pool."""
    pool = list(primes) + [p for p in modular.BACKUP_PRIMES if p not in primes]
    seen: list[int] = []
    for p in pool[:4]:
        v = modular.nullity_modp(dense, p, shift)
        if v in seen:
            return v
        seen.append(v)
    raise CertificationError(
        f"nullity at shift {shift} disagrees across 4 primes: {seen}")


def certified_spectrum(M: IntMatrix, primes: Optional[Sequence[int]] = None) -> SpectrumSummary:
    """Numeric eigensolve plus exact certification of integer multiplicities.

    Numeric eigenvalues within 1e-6 * max(1, |M|_inf) of an integer become
    candidates; each candidate's multiplicity is an exact nullity agreed on
    by two primes.  The characteristic polynomial modulo every fingerprint
    prime must divide exactly by the certified integer factors; the
    quotients form the residual fingerprint.
    """
    if not M.is_symmetric():
        raise ValueError("certified_spectrum needs a symmetric integer matrix")
    if primes is None:
        primes = modular.default_primes()
    n = M.nrows
    if n == 0:
        return SpectrumSummary(0, (), 0, tuple((p, (1,)) for p in primes))
    dense = M.to_dense()
    floats = np.linalg.eigvalsh(dense.astype(np.float64))
    tol = 1e-6 * max(1, M.inf_norm())
    candidates = sorted({int(round(x)) for x in floats if abs(x - round(x)) <= tol})
    integer_eigs = []
    total = 0
    for c in candidates:
        mult = _certified_nullity(dense, c, primes)
        if mult > 0:
            integer_eigs.append((c, mult, True))
            total += mult
    residual_degree = n - total
    fingerprint = []
    for p in primes:
        coeffs = modular.charpoly_modp(dense, p)
        for c, mult, _ in integer_eigs:
            coeffs = modular.poly_divide_linear_power(coeffs, c, mult, p)
        fingerprint.append((p, tuple(coeffs)))
    degrees = {len(c) - 1 for _, c in fingerprint}
    if degrees != {residual_degree}:
        raise CertificationError(
            f"residual degree mismatch: certified {residual_degree}, primes saw {degrees}")
    return SpectrumSummary(n, tuple(integer_eigs), residual_degree,
                           tuple(fingerprint), tuple(float(x) for x in floats))


def cospectral_fingerprint(M: IntMatrix, primes: Optional[Sequence[int]] = None) -> CharPolyFingerprint:
    """Characteristic polynomial of M modulo the fingerprint primes.

    Equality of fingerprints over k primes near 2^31 is the package's
    cospectrality verdict; for degree-d polynomials the false-positive
    probability is below (d / 2^31)^k.
    """
    if M.nrows != M.ncols:
        raise ValueError("fingerprint needs a square matrix")
    if primes is None:
        primes = modular.default_primes()
    evals = tuple((p, tuple(modular.charpoly_modp(M.to_dense(), p))) for p in primes)
    return CharPolyFingerprint(M.nrows, evals)
