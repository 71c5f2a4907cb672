"""Dirichlet coefficient providers.

Generators for the coefficient sequences used in the numerical
experiments: the divisor function d(n), the discriminant cusp-form
coefficients tau(n) via an exact eta-product expansion, higher-weight
level-1 eigenforms assembled from Eisenstein series, and a strict
file-based ingester.  Generated coefficients are exact integers or
rationals; file-based sources pass floats through as given.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Sequence

import gmpy2
import numpy as np

from .errors import LfclassError
from .gammafun import bernoulli_number


class CoefficientError(LfclassError):
    """Malformed coefficient input."""


# ---------------------------------------------------------------------------
# divisor function
# ---------------------------------------------------------------------------

def divisor_sieve(n_max: int) -> np.ndarray:
    """d(1..n_max) as an int16 array (d(n) < 2^15 for all n <= 10^9).

    Splits each factorization n = a*b at a threshold A: divisors a <= A
    are counted by stride-a slices, the complementary cofactors by
    stride-b slices starting past A*b, so the number of numpy calls is
    O(sqrt(n_max)) instead of O(n_max).
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    d = np.zeros(n_max, dtype=np.int16)
    A = max(1, int(n_max ** 0.5))
    for a in range(1, A + 1):
        d[a - 1::a] += 1
    for b in range(1, n_max // (A + 1) + 1):
        start = (A + 1) * b
        if start <= n_max:
            d[start - 1::b] += 1
    return d


# ---------------------------------------------------------------------------
# exact dense-series multiplication via integer packing
# ---------------------------------------------------------------------------

_PACK_BITS = 192
_PACK_BYTES = _PACK_BITS // 8


def _pack(coeffs: Sequence[int]) -> gmpy2.mpz:
    """sum_i coeffs[i] * 2^(192 i), split into positive/negative parts."""
    pos = bytearray(len(coeffs) * _PACK_BYTES)
    neg = bytearray(len(coeffs) * _PACK_BYTES)
    for i, c in enumerate(coeffs):
        if c > 0:
            pos[i * _PACK_BYTES:(i + 1) * _PACK_BYTES] = \
                int(c).to_bytes(_PACK_BYTES, "little")
        elif c < 0:
            neg[i * _PACK_BYTES:(i + 1) * _PACK_BYTES] = \
                int(-c).to_bytes(_PACK_BYTES, "little")
    return (gmpy2.mpz(int.from_bytes(bytes(pos), "little"))
            - gmpy2.mpz(int.from_bytes(bytes(neg), "little")))


def _unpack(value: gmpy2.mpz, n_terms: int) -> List[int]:
    """Inverse of _pack with signed-limb borrow propagation.

    A limb u >= 2^191 encodes u - 2^192 with a borrow carried into the
    next limb; valid as long as every true coefficient fits in a signed
    192-bit range, which holds with huge margin for all series used
    here (|tau(n)| < n^6 < 2^120 for n <= 10^6).
    """
    nbytes = max(n_terms * _PACK_BYTES + _PACK_BYTES,
                 int(value).bit_length() // 8 + 2)
    raw = int(value).to_bytes(nbytes, "little", signed=True)
    half = 1 << (_PACK_BITS - 1)
    full = 1 << _PACK_BITS
    out = []
    carry = 0
    for i in range(n_terms):
        u = int.from_bytes(raw[i * _PACK_BYTES:(i + 1) * _PACK_BYTES],
                           "little") + carry
        if u >= half:
            u -= full
            carry = 1
        else:
            carry = 0
        out.append(u)
    return out


def series_mul(a: Sequence[int], b: Sequence[int], n_terms: int) -> List[int]:
    """Product of two integer power series truncated to ``n_terms``."""
    pa = _pack(list(a[:n_terms]))
    pb = pa if a is b else _pack(list(b[:n_terms]))
    return _unpack(pa * pb, n_terms)


# ---------------------------------------------------------------------------
# cusp-form coefficients
# ---------------------------------------------------------------------------

def _eta_cubed(n_terms: int) -> Dict[int, int]:
    """q-expansion of the cube of the eta quotient without the q^(1/8):
    sum_{k>=0} (-1)^k (2k+1) q^(k(k+1)/2), as a sparse exponent map."""
    out = {}
    k = 0
    while k * (k + 1) // 2 < n_terms:
        out[k * (k + 1) // 2] = (2 * k + 1) * (-1 if k % 2 else 1)
        k += 1
    return out


def tau_coefficients(n_max: int) -> List[int]:
    """tau(1..n_max): coefficients of q * prod(1 - q^n)^24.

    Computed as the 8th power of the sparse cube series: one sparse
    self-convolution, then two packed-integer squarings.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    n_terms = n_max  # powers of q after factoring out the leading q
    eta3 = _eta_cubed(n_terms)
    # sparse square -> dense (eta^6); ~(2 n_max)^(1/2) entries squared
    p2 = [0] * n_terms
    keys = sorted(eta3)
    for i, e1 in enumerate(keys):
        c1 = eta3[e1]
        if 2 * e1 < n_terms:
            p2[2 * e1] += c1 * c1
        for e2 in keys[i + 1:]:
            e = e1 + e2
            if e >= n_terms:
                break
            p2[e] += 2 * c1 * eta3[e2]
    p4 = series_mul(p2, p2, n_terms)
    p8 = series_mul(p4, p4, n_terms)
    return p8  # tau(n) = p8[n-1] since Delta = q * (eta-cube series)^8


def _tau_self_test(tau: Sequence[int]) -> None:
    checks = {1: 1, 2: -24, 3: 252, 4: -1472, 5: 4830}
    for n, v in checks.items():
        if n <= len(tau) and tau[n - 1] != v:
            raise CoefficientError("tau(%d) = %d, expected %d"
                                   % (n, tau[n - 1], v))
    if len(tau) >= 6 and tau[5] != tau[1] * tau[2]:
        raise CoefficientError("tau(6) != tau(2) tau(3)")
    # classical congruence tau(n) = sigma_11(n) mod 691
    limit = min(len(tau), 1000)
    sigma11 = [0] * (limit + 1)
    for a in range(1, limit + 1):
        p = a ** 11
        for m in range(a, limit + 1, a):
            sigma11[m] += p
    for n in range(1, limit + 1):
        if (tau[n - 1] - sigma11[n]) % 691:
            raise CoefficientError("tau(%d) violates the mod-691 congruence" % n)


def eisenstein_coefficients(weight: int, n_max: int) -> List[Fraction]:
    """Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n."""
    if weight < 4 or weight % 2:
        raise ValueError("Eisenstein weight must be an even integer >= 4")
    factor = Fraction(-2 * weight) / bernoulli_number(weight)
    sigma = [0] * (n_max + 1)
    for a in range(1, n_max + 1):
        p = a ** (weight - 1)
        for m in range(a, n_max + 1, a):
            sigma[m] += p
    out = [Fraction(1)] + [factor * sigma[n] for n in range(1, n_max + 1)]
    return out


def eigenform_coefficients(weight: int, n_max: int) -> List[int]:
    """Integral coefficients of the unique normalized level-1 cusp
    eigenform of the given weight (12 and the one-dimensional weights
    16, 18, 20, 22, 26), built as Delta times an Eisenstein series."""
    if weight == 12:
        return tau_coefficients(n_max)
    if weight not in (16, 18, 20, 22, 26):
        raise ValueError(
            "level-1 cusp forms are one-dimensional only for weights "
            "12, 16, 18, 20, 22, 26; got %d" % weight)
    tau = tau_coefficients(n_max)
    eis = eisenstein_coefficients(weight - 12, n_max)
    if any(c.denominator != 1 for c in eis):
        raise CoefficientError("Eisenstein coefficients are not integral "
                               "at weight %d" % (weight - 12))
    eis_int = [int(c) for c in eis]
    # arrays indexed by q-exponent: Delta starts at q^1
    delta_q = [0] + tau
    prod = series_mul(eis_int, delta_q, n_max + 1)
    return prod[1:n_max + 1]


# ---------------------------------------------------------------------------
# sources
# ---------------------------------------------------------------------------

@dataclasses.dataclass
class CoefficientSource:
    """A coefficient provider with its normalization record.

    ``values(n_max)`` returns the Dirichlet coefficients a(1..n_max) as
    float64 (or the exact int16 divisor array); ``exact(n)`` returns
    the underlying exact value when the source is generated.
    """

    kind: str
    shift: Fraction = Fraction(0)
    path: str = None
    weight: int = None

    _cache_n: int = dataclasses.field(default=0, repr=False)
    _cache: object = dataclasses.field(default=None, repr=False)

    def _generate(self, n_max: int):
        if self.kind == "divisor":
            return divisor_sieve(n_max)
        if self.kind == "tau":
            tau = tau_coefficients(n_max)
            _tau_self_test(tau)
            return tau
        if self.kind == "eigenform":
            return eigenform_coefficients(self.weight, n_max)
        if self.kind == "file":
            return _read_coefficient_file(self.path, n_max)
        raise ValueError("unknown coefficient source kind %r" % self.kind)

    def raw(self, n_max: int):
        """Exact generated values (ints / rationals / file floats)."""
        if self._cache is None or self._cache_n < n_max:
            self._cache = self._generate(n_max)
            self._cache_n = n_max
        if isinstance(self._cache, np.ndarray):
            return self._cache[:n_max]
        return self._cache[:n_max]

    def values(self, n_max: int) -> np.ndarray:
        """a(n) * n^(-shift) for n = 1..n_max, as a numeric array.

        The divisor source is returned as exact int16 (no shift); other
        sources come back float64 with the normalization shift applied.
        """
        raw = self.raw(n_max)
        if self.kind == "divisor" and self.shift == 0:
            return raw
        if any(isinstance(c, complex) and c.imag != 0 for c in raw):
            arr = np.asarray([complex(c) for c in raw], dtype=np.complex128)
        else:
            arr = np.asarray([float(c.real) if isinstance(c, complex)
                              else float(c) for c in raw], dtype=np.float64)
        if self.shift != 0:
            n = np.arange(1, n_max + 1, dtype=np.float64)
            arr = arr * n ** (-float(self.shift))
        return arr

    def a(self, n: int):
        """Single normalized coefficient (exact when shift is zero)."""
        raw = self.raw(n)[n - 1]
        if self.shift == 0:
            return raw
        return raw * float(n) ** (-float(self.shift))


def divisor_source() -> CoefficientSource:
    """Coefficients of the square of the Riemann zeta function."""
    return CoefficientSource(kind="divisor")


def tau_source(shifted: bool = True) -> CoefficientSource:
    """Discriminant cusp-form coefficients; ``shifted`` applies the
    analytic normalization tau(n)/n^(11/2) so that a(1) = 1 and the
    functional equation is s -> 1-s."""
    return CoefficientSource(kind="tau",
                             shift=Fraction(11, 2) if shifted else Fraction(0))


def eigenform_source(weight: int, shifted: bool = True) -> CoefficientSource:
    shift = Fraction(weight - 1, 2) if shifted else Fraction(0)
    return CoefficientSource(kind="eigenform", weight=weight, shift=shift)


def file_source(path) -> CoefficientSource:
    return CoefficientSource(kind="file", path=str(path))


def _read_coefficient_file(path, n_max: int):
    """Strict parser for the coefficient file format:
    header '# lfun-coeffs v1; normalization=<a1|none>; shift=<decimal>'
    then lines 'n <re> [<im>]'."""
    lines = Path(path).read_text().splitlines()
    if not lines:
        raise CoefficientError("%s: empty coefficient file" % path)
    header = lines[0].strip()
    if not header.startswith("# lfun-coeffs v1;"):
        raise CoefficientError("%s:1: bad header %r" % (path, header))
    fields = dict(part.strip().split("=", 1)
                  for part in header.split(";")[1:] if "=" in part)
    if fields.get("normalization") not in ("a1", "none"):
        raise CoefficientError("%s:1: normalization must be 'a1' or 'none'"
                               % path)
    try:
        shift = float(fields.get("shift", "0"))
    except ValueError:
        raise CoefficientError("%s:1: bad shift %r" % (path, fields.get("shift")))
    out = np.zeros(n_max, dtype=np.complex128)
    seen = set()
    for idx, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise CoefficientError("%s:%d: expected 'n re [im]'" % (path, idx))
        try:
            n = int(parts[0])
            re = float(parts[1])
            im = float(parts[2]) if len(parts) == 3 else 0.0
        except ValueError:
            raise CoefficientError("%s:%d: unparseable entry" % (path, idx))
        if n in seen:
            raise CoefficientError("%s:%d: duplicate n=%d" % (path, idx, n))
        seen.add(n)
        if 1 <= n <= n_max:
            out[n - 1] = complex(re, im) * n ** (-shift)
    if fields["normalization"] == "a1" and out[0] != 1:
        raise CoefficientError("%s: declared a1-normalized but a(1)=%s"
                               % (path, out[0]))
    if np.all(out.imag == 0):
        return out.real.copy()
    return out
