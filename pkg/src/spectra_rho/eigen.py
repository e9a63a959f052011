"""Two independent eigenvalue engines for symmetric/integer matrices.

``sym_eigen`` is a row-cyclic Jacobi solver (numeric, deterministic sweep
order).  ``exact_char_poly`` + ``real_roots`` go through exact big-integer
arithmetic: Faddeev-LeVerrier for the characteristic polynomial, Yun's
square-free decomposition for multiplicities, Sturm chains for isolation
and dyadic bisection for refinement.  Spectral claims elsewhere are trusted
only when the two engines agree.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np


class SymmetryError(ValueError):
    pass


class NumericConvergenceError(RuntimeError):
    pass


class ExactnessError(ValueError):
    pass


class ComplexResidueWarning(UserWarning):
    """A polynomial handed to real_roots has non-real roots."""


JACOBI_SWEEP_CAP = 64
DEFAULT_GROUPING = 1e-8
ROOT_WIDTH = 1e-10


def group_values(values, tol: float) -> tuple[tuple[float, int], ...]:
    """Gap-group a value list: a new group starts when the drop exceeds tol."""
    if len(values) == 0:
        return ()
    vals = sorted(values, reverse=True)
    groups = []
    cur = [vals[0]]
    for v in vals[1:]:
        if cur[-1] - v <= tol:
            cur.append(v)
        else:
            groups.append(cur)
            cur = [v]
    groups.append(cur)
    return tuple((sum(g) / len(g), len(g)) for g in groups)


@dataclass(frozen=True)
class Spectrum:
    """Grouped eigenvalue multiset, sorted descending."""

    entries: tuple[tuple[float, int], ...]
    grouping_tol: float

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.entries)

    def expanded(self) -> list[float]:
        out: list[float] = []
        for v, m in self.entries:
            out.extend([v] * m)
        return out

    @property
    def max_value(self) -> float:
        return self.entries[0][0]

    @property
    def min_value(self) -> float:
        return self.entries[-1][0]

    def multiplicity_near(self, x: float, tol: float | None = None) -> int:
        tol = self.grouping_tol if tol is None else tol
        return sum(m for v, m in self.entries if abs(v - x) <= tol)

    def without_one(self, x: float, tol: float | None = None) -> "Spectrum":
        """Drop a single occurrence of the value nearest x (must be within tol)."""
        tol = self.grouping_tol if tol is None else tol
        best = None
        for i, (v, _) in enumerate(self.entries):
            if abs(v - x) <= tol and (best is None or abs(v - x) < abs(self.entries[best][0] - x)):
                best = i
        if best is None:
            raise ValueError(f"no eigenvalue within {tol} of {x}")
        entries = list(self.entries)
        v, m = entries[best]
        if m == 1:
            del entries[best]
        else:
            entries[best] = (v, m - 1)
        return Spectrum(tuple(entries), self.grouping_tol)

    def shifted(self, delta: float) -> "Spectrum":
        return Spectrum(tuple((v + delta, m) for v, m in self.entries), self.grouping_tol)

    def negated(self) -> "Spectrum":
        return Spectrum(tuple((-v, m) for v, m in reversed(self.entries)), self.grouping_tol)

    def merged_with(self, other: "Spectrum", tol: float | None = None) -> "Spectrum":
        tol = max(self.grouping_tol, other.grouping_tol) if tol is None else tol
        return spectrum_from_values(self.expanded() + other.expanded(), tol)

    def to_json(self) -> list[list]:
        return [[v, m] for v, m in self.entries]

    def __str__(self):
        def fmt(v: float) -> str:
            r = round(v)
            return str(int(r)) if abs(v - r) < 5e-7 else f"{v:.4f}"

        return " ".join(
            fmt(v) if m == 1 else f"{fmt(v)}^{m}" for v, m in self.entries
        )


def spectrum_from_values(values, tol: float) -> Spectrum:
    return Spectrum(group_values(values, tol), tol)


def spectra_match(
    a: Spectrum, b: Spectrum, tol: float, require_multiplicities: bool = True
) -> tuple[bool, float]:
    """Compare multisets; returns (match, worst value deviation)."""
    va, vb = a.expanded(), b.expanded()
    if len(va) != len(vb):
        return False, float("inf")
    if not va:
        return True, 0.0
    worst = max(abs(x - y) for x, y in zip(va, vb))
    if worst > tol:
        return False, worst
    if require_multiplicities:
        ga = group_values(va, tol)
        gb = group_values(vb, tol)
        if [m for _, m in ga] != [m for _, m in gb]:
            return False, worst
    return True, worst


# -- Jacobi --------------------------------------------------------------


def sym_eigen(M, want_vectors: bool = False, sweep_cap: int = JACOBI_SWEEP_CAP):
    """Eigenvalues (and optionally an orthonormal eigenbasis) of a symmetric
    matrix by row-cyclic Jacobi rotations.

    Returns a Spectrum, or (Spectrum, raw_values_desc, vectors) where column
    k of `vectors` pairs with raw_values_desc[k].
    """
    A = np.array(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise SymmetryError(f"expected a square matrix, got shape {A.shape}")
    d = A.shape[0]
    if d < 1:
        raise SymmetryError("dimension must be >= 1")
    if not np.isfinite(A).all():
        raise ValueError("matrix entries must be finite")
    if np.max(np.abs(A - A.T)) != 0.0:
        raise SymmetryError("matrix is not symmetric; use the exact route")

    fro = float(np.linalg.norm(A))
    thresh = 1e-12 * fro if fro > 0 else 1e-14
    skip = thresh / (d * d) if d > 1 else 0.0
    V = np.eye(d) if want_vectors else None

    off = _off_norm(A)
    for _ in range(sweep_cap):
        if off < thresh:
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = A[p, q]
                if abs(apq) <= skip:
                    continue
                app, aqq = A[p, p], A[q, q]
                theta = (aqq - app) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                colp = A[:, p].copy()
                colq = A[:, q].copy()
                new_p = c * colp - s * colq
                new_q = s * colp + c * colq
                A[:, p] = new_p
                A[p, :] = new_p
                A[:, q] = new_q
                A[q, :] = new_q
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = A[q, p] = 0.0
                if V is not None:
                    vp = V[:, p].copy()
                    vq = V[:, q].copy()
                    V[:, p] = c * vp - s * vq
                    V[:, q] = s * vp + c * vq
        off = _off_norm(A)
    else:
        raise NumericConvergenceError(
            f"Jacobi did not converge in {sweep_cap} sweeps; "
            f"off-diagonal residual {off:.3e}"
        )

    raw = np.diag(A).copy()
    order = np.argsort(-raw, kind="stable")
    raw = raw[order]
    tol = DEFAULT_GROUPING * max(1.0, float(np.max(np.abs(raw))))
    spectrum = spectrum_from_values(list(raw), tol)
    if want_vectors:
        return spectrum, [float(x) for x in raw], V[:, order]
    return spectrum


def _off_norm(A: np.ndarray) -> float:
    off = A.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def gershgorin_intervals(M) -> list[tuple[float, float]]:
    """Row discs [m_ii - R_i, m_ii + R_i]; every eigenvalue lies in the union."""
    A = np.asarray(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise ValueError(f"expected a square matrix of dimension >= 1, got {A.shape}")
    out = []
    for i in range(A.shape[0]):
        radius = float(np.sum(np.abs(A[i]))) - abs(float(A[i, i]))
        center = float(A[i, i])
        out.append((center - radius, center + radius))
    return out


def in_gershgorin_union(value: float, intervals, slack: float = 1e-9) -> bool:
    return any(lo - slack <= value <= hi + slack for lo, hi in intervals)


# -- exact characteristic polynomial --------------------------------------


@dataclass(frozen=True)
class ExactPolynomial:
    """Monic integer polynomial, coefficients c_0..c_d ascending."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> tuple[int, ...]:
        return tuple(i * c for i, c in enumerate(self.coeffs) if i >= 1)

    def __str__(self):
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "1" if i == 0 else "x" if i == 1 else f"x^{i}"
            if i == 0:
                terms.append(f"{c:+d}")
            elif c == 1:
                terms.append(f"+{mono}")
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c:+d}{mono}")
        text = "".join(terms) or "0"
        return text.lstrip("+")


CHAR_POLY_DIM_CAP = 64


def _as_int_matrix(M) -> list[list[int]]:
    A = np.asarray(M)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    out = []
    for row in A.tolist():
        r = []
        for x in row:
            if isinstance(x, bool):
                r.append(int(x))
            elif isinstance(x, int):
                r.append(x)
            elif isinstance(x, float):
                if not x.is_integer():
                    raise ExactnessError(f"entry {x!r} is not an integer")
                r.append(int(x))
            else:
                raise ExactnessError(f"entry {x!r} is not an integer")
        out.append(r)
    return out


def exact_char_poly(M) -> ExactPolynomial:
    """det(xI - M) for an integer matrix, by the Faddeev-LeVerrier recurrence
    in exact big-integer arithmetic.
    """
    A = _as_int_matrix(M)
    d = len(A)
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if d > CHAR_POLY_DIM_CAP:
        raise ValueError(f"dimension {d} exceeds the exact cap {CHAR_POLY_DIM_CAP}")
    coeffs = [0] * (d + 1)
    coeffs[d] = 1
    B = [row[:] for row in A]
    coeffs[d - 1] = -sum(B[i][i] for i in range(d))
    for k in range(2, d + 1):
        ck = coeffs[d - k + 1]
        shifted = [row[:] for row in B]
        for i in range(d):
            shifted[i][i] += ck
        B = _int_matmul(A, shifted)
        trace = sum(B[i][i] for i in range(d))
        q, r = divmod(-trace, k)
        if r:
            raise RuntimeError("Faddeev-LeVerrier divisibility violated")
        coeffs[d - k] = q
    return ExactPolynomial(tuple(coeffs))


def _int_matmul(A, B):
    d = len(A)
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def principal_minor_sum(M, r: int) -> int:
    """Sum of all r x r principal minors (exact); for cross-checking."""
    from itertools import combinations as combs

    A = _as_int_matrix(M)
    d = len(A)
    total = 0
    for subset in combs(range(d), r):
        total += _int_det([[A[i][j] for j in subset] for i in subset])
    return total


def _int_det(A) -> int:
    d = len(A)
    if d == 0:
        return 1
    if d == 1:
        return A[0][0]
    total = 0
    for j in range(d):
        if A[0][j]:
            minor = [row[:j] + row[j + 1 :] for row in A[1:]]
            total += (-1) ** j * A[0][j] * _int_det(minor)
    return total


# -- integer polynomial utilities -----------------------------------------


def _frac_norm(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _frac_divmod(a: list[Fraction], b: list[Fraction]):
    a = a[:]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and _frac_norm(a):
        shift = len(a) - len(b)
        factor = a[-1] / b[-1]
        q[shift] = factor
        for i, c in enumerate(b):
            a[i + shift] -= factor * c
        _frac_norm(a)
    return _frac_norm(q), a


def _frac_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _frac_norm(a[:]), _frac_norm(b[:])
    while b:
        _, r = _frac_divmod(a, b)
        a, b = b, _frac_norm(r)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _frac_deriv(p: list[Fraction]) -> list[Fraction]:
    return [i * c for i, c in enumerate(p)][1:]


def _to_primitive_int(p: list[Fraction]) -> list[int]:
    """Scale by a positive rational to primitive integer coefficients."""
    from math import gcd, lcm

    if not p:
        return []
    denom = lcm(*(c.denominator for c in p))
    ints = [int(c * denom) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    return [c // g for c in ints] if g else ints


def square_free_decomposition(p: ExactPolynomial) -> list[tuple[list[int], int]]:
    """Yun's algorithm: [(primitive square-free factor, multiplicity), ...]."""
    f = [Fraction(c) for c in p.coeffs]
    fp = _frac_deriv(f)
    g = _frac_gcd(f, fp)
    if len(g) == 1:
        return [(_to_primitive_int(f), 1)]
    c, _ = _frac_divmod(f, g)
    dq, _ = _frac_divmod(fp, g)
    d = [x - y for x, y in _zip_pad(dq, _frac_deriv(c))]
    _frac_norm(d)
    out = []
    i = 1
    while len(c) > 1:
        a = _frac_gcd(c, d)
        if len(a) > 1:
            out.append((_to_primitive_int(a), i))
        c, _ = _frac_divmod(c, a)
        dq, _ = _frac_divmod(d, a)
        d = [x - y for x, y in _zip_pad(dq, _frac_deriv(c))]
        _frac_norm(d)
        i += 1
    return out


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return zip(a, b)


def _eval_sign_at(p: list[int], num: int, den: int) -> int:
    """Sign of p(num/den) for den > 0, in exact integer arithmetic."""
    acc = 0
    power = 1
    for c in reversed(p):
        acc = acc * num + c * power
        power *= den
    return (acc > 0) - (acc < 0)


def _sturm_chain(p: list[int]) -> list[list[int]]:
    chain = [p[:], [i * c for i, c in enumerate(p)][1:]]
    while len(chain[-1]) > 1:
        fa = [Fraction(c) for c in chain[-2]]
        fb = [Fraction(c) for c in chain[-1]]
        _, r = _frac_divmod(fa, fb)
        r = _frac_norm(r)
        if not r:
            break
        chain.append(_to_primitive_int([-c for c in r]))
    return chain


def _variations(chain, num: int, den: int) -> int:
    signs = [s for p in chain if (s := _eval_sign_at(p, num, den)) != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _root_bound(p: list[int]) -> int:
    """Strict bound on root magnitude (Fujiwara-style, integer ceiling)."""
    d = len(p) - 1
    lead = abs(p[-1])
    best = 0.0
    for i in range(d):
        if p[i]:
            best = max(best, (abs(p[i]) / lead) ** (1.0 / (d - i)))
    return int(2.0 * best) + 2


class _ExactHit(Exception):
    """A probe point landed exactly on a root (carries num, den)."""

    def __init__(self, num: int, den: int):
        self.num, self.den = num, den


def _isolate_square_free(p: list[int], width: float) -> list[float]:
    """All real roots of a primitive square-free integer polynomial.

    When a probe point evaluates to zero exactly, that root is divided out
    and isolation restarts on the (strictly smaller) quotient, so interval
    endpoints never sit on roots.
    """
    if len(p) <= 1:
        return []
    try:
        chain = _sturm_chain(p)
        bound = _root_bound(p)
        total = _variations(chain, -bound, 1) - _variations(chain, bound, 1)
        if total == 0:
            return []
        # endpoints kept as (numerator, shared power-of-two denominator)
        stack = [(-bound, bound, 1, total)]
        isolated = []
        while stack:
            lo, hi, den, count = stack.pop()
            if count == 0:
                continue
            if count == 1:
                isolated.append((lo, hi, den))
                continue
            lo, hi, den = 2 * lo, 2 * hi, 2 * den
            mid = (lo + hi) // 2
            if _eval_sign_at(p, mid, den) == 0:
                raise _ExactHit(mid, den)
            left = _variations(chain, lo, den) - _variations(chain, mid, den)
            stack.append((lo, mid, den, left))
            stack.append((mid, hi, den, count - left))
        return [_bisect(p, lo, hi, den, width) for lo, hi, den in isolated]
    except _ExactHit as hit:
        quotient = _deflate_rational(p, hit.num, hit.den)
        return _isolate_square_free(quotient, width) + [hit.num / hit.den]


def _deflate_rational(p: list[int], num: int, den: int) -> list[int]:
    """Divide a primitive integer polynomial by (den*x - num) exactly."""
    q, r = _frac_divmod([Fraction(c) for c in p], [Fraction(-num), Fraction(den)])
    if _frac_norm(r):
        raise RuntimeError("deflation by a non-root")
    return _to_primitive_int(q)


def _bisect(p: list[int], lo: int, hi: int, den: int, width: float) -> float:
    """Refine a single sign-changing root to the requested interval width."""
    s_lo = _eval_sign_at(p, lo, den)
    while (hi - lo) / den > width:
        lo, hi, den = 2 * lo, 2 * hi, 2 * den
        mid = (lo + hi) // 2
        s_mid = _eval_sign_at(p, mid, den)
        if s_mid == 0:
            raise _ExactHit(mid, den)
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / (2.0 * den)


def real_roots(p: ExactPolynomial, width: float = ROOT_WIDTH) -> list[tuple[float, int]]:
    """All real roots with exact multiplicities, refined to `width`.

    Non-real roots are legal input; their presence is reported with a
    ComplexResidueWarning rather than silently dropped.
    """
    if p.degree < 1:
        raise ValueError("degree must be >= 1")
    found: list[tuple[float, int]] = []
    real_count = 0
    for factor, mult in square_free_decomposition(p):
        for root in _isolate_square_free(factor, width):
            found.append((root, mult))
            real_count += mult
    if real_count < p.degree:
        warnings.warn(
            f"{p.degree - real_count} non-real roots ignored", ComplexResidueWarning
        )
    return sorted(found, key=lambda t: -t[0])


def roots_spectrum(p: ExactPolynomial, tol: float = DEFAULT_GROUPING) -> Spectrum:
    values: list[float] = []
    for root, mult in real_roots(p):
        values.extend([root] * mult)
    scale = max([1.0] + [abs(v) for v in values])
    return spectrum_from_values(values, tol * scale)


def reconstruct_coefficients(eigenvalues) -> list[float]:
    """Monic polynomial coefficients (ascending) from a numeric spectrum."""
    coeffs = np.array([1.0])
    for lam in eigenvalues:
        coeffs = np.convolve(coeffs, np.array([-lam, 1.0]))
    return [float(c) for c in coeffs]
