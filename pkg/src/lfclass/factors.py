"""Gamma-factor data model, functional-equation invariants, normalization,
duplication equivalence, virtual factors, and the classifiers.

A gamma-factor is the archimedean datum

    Q^s * prod_j Gamma(lam_j s + mu_j),        Q > 0, lam_j > 0, Re mu_j >= 0,

paired (optionally) with a unimodular omega.  Q is stored structurally as
sqrt(u) * pi^(v/2) with u a positive rational whenever possible, so that
conductor-1 tests are exact decisions rather than float comparisons.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Tuple, Union

import mpmath

from .errors import (ChiNotReal, DescriptorError, IrrationalConductor,
                     NegativeRealPart, NotConductorOne, NotDegreeTwo,
                     ParityUndefined)
from .exact import ExactScalar, QI, rational_from_string
from .gammafun import bernoulli_poly
from .precision import get_precision, working_precision

MuLike = Union[ExactScalar, mpmath.mpc]


@dataclass(frozen=True)
class StructuralQ:
    """Q = sqrt(u) * pi^(v/2) with u a positive rational, v an integer."""
    u: Fraction
    v: int

    def __post_init__(self):
        if self.u <= 0:
            raise ValueError("u must be positive")

    def squared(self) -> ExactScalar:
        """Q^2 = u * pi^v, exactly."""
        return ExactScalar.pi_power(2 * self.v, self.u)

    def to_mpf(self) -> mpmath.mpf:
        return mpmath.sqrt(mpmath.mpf(self.u.numerator) / self.u.denominator) \
            * mpmath.pi ** (mpmath.mpf(self.v) / 2)


@dataclass(frozen=True)
class GammaFactor:
    """The data (Q, {lam_j}, {mu_j}, omega) of a functional equation."""

    Q: Union[StructuralQ, mpmath.mpf]
    lambdas: Tuple[Fraction, ...]
    mus: Tuple[MuLike, ...]
    omega: Optional[Union[ExactScalar, mpmath.mpc]] = None
    notes: Tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.lambdas) != len(self.mus):
            raise ValueError("lambdas and mus must have equal length")
        for lam in self.lambdas:
            if lam <= 0:
                raise ValueError("lambda_j must be positive")
        for mu in self.mus:
            re = mu.real_part().to_mpc().real if isinstance(mu, ExactScalar) \
                else mpmath.mpc(mu).real
            if re < 0:
                raise ValueError("Re(mu_j) must be nonnegative")

    @property
    def r(self) -> int:
        return len(self.lambdas)

    @property
    def is_exact(self) -> bool:
        return (isinstance(self.Q, StructuralQ)
                and all(isinstance(mu, ExactScalar) for mu in self.mus)
                and (self.omega is None or isinstance(self.omega, ExactScalar)))

    def mu_mpc(self, j: int) -> mpmath.mpc:
        mu = self.mus[j]
        return mu.to_mpc() if isinstance(mu, ExactScalar) else mpmath.mpc(mu)

    def omega_mpc(self) -> mpmath.mpc:
        if self.omega is None:
            raise ValueError("gamma-factor is virtual (no omega set)")
        return self.omega.to_mpc() if isinstance(self.omega, ExactScalar) \
            else mpmath.mpc(self.omega)

    def Q_mpf(self) -> mpmath.mpf:
        return self.Q.to_mpf() if isinstance(self.Q, StructuralQ) \
            else mpmath.mpf(self.Q)

    def eval(self, s) -> mpmath.mpc:
        """gamma(s) = Q^s prod Gamma(lam_j s + mu_j), numerically."""
        from .gammafun import log_gamma
        with working_precision(guard=32):
            sc = mpmath.mpc(s)
            acc = sc * mpmath.log(self.Q_mpf())
            for j, lam in enumerate(self.lambdas):
                lamf = mpmath.mpf(lam.numerator) / lam.denominator
                acc += log_gamma(lamf * sc + self.mu_mpc(j))
            return +mpmath.exp(acc)

    def eval_bar(self, s) -> mpmath.mpc:
        """The reflected factor  gamma-bar(s) = conj(gamma(conj(s)))."""
        return mpmath.conj(self.eval(mpmath.conj(mpmath.mpc(s))))


@dataclass(frozen=True)
class InvariantSet:
    """Degree, conductor, root number and the Bernoulli-sum invariants."""

    degree: object            # Fraction (exact) or mpf
    conductor: object         # ExactScalar (exact) or mpf
    root_number: object       # ExactScalar / mpc / None for virtual factors
    xi: object                # ExactScalar or mpc
    eta: object
    theta: object             # Fraction (exact) or mpf
    H: tuple
    chi: object               # ExactScalar or mpf
    exact: bool
    notes: Tuple[str, ...] = ()

    def conductor_is_one(self, tol=None) -> bool:
        if self.exact:
            return self.conductor == ExactScalar.from_rational(1)
        if tol is None:
            tol = mpmath.mpf(10) ** (-get_precision() // 2)
        return abs(self.conductor - 1) < tol

    def degree_is(self, d: int, tol=None) -> bool:
        if self.exact:
            return self.degree == d
        if tol is None:
            tol = mpmath.mpf(10) ** (-get_precision() // 2)
        return abs(self.degree - d) < tol


def _exact_lambda_power(lam: Fraction) -> Fraction:
    """lam^(2*lam) as an exact rational, or raise IrrationalConductor."""
    two_lam = 2 * lam
    if two_lam.denominator == 1:
        return lam ** two_lam.numerator
    # lam^(2 lam) = (lam^(2 lam * b))^(1/b): rational only if lam^a is a
    # perfect b-th power; handle that case, give up otherwise.
    a, b = two_lam.numerator, two_lam.denominator
    target = lam ** a
    for val in (target.numerator, target.denominator):
        root = round(val ** (1.0 / b))
        if not any((root + d) ** b == val for d in (-1, 0, 1)):
            raise IrrationalConductor(
                "lambda^(2 lambda) is irrational for lambda = %s" % lam)
    num = round(target.numerator ** (1.0 / b))
    den = round(target.denominator ** (1.0 / b))
    while num ** b < target.numerator:
        num += 1
    while den ** b < target.denominator:
        den += 1
    return Fraction(num, den)


def invariants(g: GammaFactor, n_max: int = 4) -> InvariantSet:
    """All functional-equation invariants of ``g`` up to H(n_max).

    Exact whenever the gamma-factor data is exact and the lambda-powers
    in the conductor are rational; otherwise computed numerically at the
    configured precision (with an ``IrrationalConductor`` downgrade to
    numerics when lam^(2 lam) falls outside the rationals).
    """
    notes = []
    if g.is_exact:
        d = 2 * sum(g.lambdas, Fraction(0))
        try:
            lam_pow = Fraction(1)
            for lam in g.lambdas:
                lam_pow *= _exact_lambda_power(lam)
            if d.denominator != 1:
                raise IrrationalConductor("degree %s is not an integer" % d)
            q = ExactScalar.pi_power(2 * d.numerator, Fraction(2) ** d.numerator) \
                * g.Q.squared() * lam_pow
        except IrrationalConductor as exc:
            notes.append(str(exc))
            return _invariants_numeric(g, n_max, tuple(notes))

        xi = ExactScalar()
        for mu in g.mus:
            xi = xi + 2 * (mu - Fraction(1, 2))
        eta = xi.real_part()
        theta_scalar = xi.imag_part() / d
        theta = theta_scalar.as_rational() if theta_scalar.is_rational() else theta_scalar

        # omega_F = omega * prod lam_j^(-2i Im mu_j); exact iff the Im(mu)
        # exponents cancel within each group of equal lambda.
        exponents = {}
        for lam, mu in zip(g.lambdas, g.mus):
            b = mu.imag_part()
            if not b.is_zero():
                exponents[lam] = exponents.get(lam, ExactScalar()) + b
        if all(e.is_zero() for e in exponents.values()):
            omega_F = g.omega
        elif g.omega is None:
            omega_F = None
            notes.append("root number depends on unset omega")
        else:
            with working_precision(guard=16):
                prod = mpmath.mpc(1)
                for lam, e in exponents.items():
                    lamf = mpmath.mpf(lam.numerator) / lam.denominator
                    prod *= lamf ** (-2j * e.to_mpc())
                omega_F = +(g.omega.to_mpc() * prod)

        H = []
        for n in range(n_max + 1):
            acc = ExactScalar()
            for lam, mu in zip(g.lambdas, g.mus):
                acc = acc + 2 * bernoulli_poly(n, mu) * (lam ** (1 - n))
            H.append(acc)
        chi = H[1] + H[2] + Fraction(2, 3)
        return InvariantSet(degree=d, conductor=q, root_number=omega_F,
                            xi=xi, eta=eta, theta=theta, H=tuple(H), chi=chi,
                            exact=True, notes=tuple(notes))
    return _invariants_numeric(g, n_max, ())


def _invariants_numeric(g: GammaFactor, n_max: int, notes) -> InvariantSet:
    with working_precision(guard=32):
        d = 2 * sum(mpmath.mpf(l.numerator) / l.denominator for l in g.lambdas)
        q = (2 * mpmath.pi) ** d * g.Q_mpf() ** 2
        for lam in g.lambdas:
            lamf = mpmath.mpf(lam.numerator) / lam.denominator
            q *= lamf ** (2 * lamf)
        xi = mpmath.mpc(0)
        omega_prod = mpmath.mpc(1)
        for j, lam in enumerate(g.lambdas):
            mu = g.mu_mpc(j)
            lamf = mpmath.mpf(lam.numerator) / lam.denominator
            xi += 2 * (mu - mpmath.mpf(1) / 2)
            omega_prod *= lamf ** (-2j * mu.imag)
        eta = xi.real
        theta = xi.imag / d
        omega_F = None if g.omega is None else +(g.omega_mpc() * omega_prod)
        H = []
        for n in range(n_max + 1):
            acc = mpmath.mpc(0)
            for j, lam in enumerate(g.lambdas):
                lamf = mpmath.mpf(lam.numerator) / lam.denominator
                acc += 2 * bernoulli_poly(n, g.mu_mpc(j)) / lamf ** (n - 1)
            H.append(+acc)
        chi = H[1] + H[2] + mpmath.mpf(2) / 3
        return InvariantSet(degree=+d, conductor=+q, root_number=omega_F,
                            xi=+xi, eta=+eta, theta=+theta, H=tuple(H),
                            chi=+chi, exact=False, notes=tuple(notes))


def normalize_shift(g: GammaFactor) -> GammaFactor:
    """Shift s by -i*theta so the shifted factor has theta = 0, real xi.

    Convention: the shifted factor is gamma(s - i*theta), i.e.
    mu_j -> mu_j - i*lam_j*theta (coefficients would pick up n^(i*theta)).
    Records a NegativeRealPart note instead of failing when a shifted
    mu leaves the closed right half-plane.
    """
    inv = invariants(g, n_max=2)
    theta = inv.theta
    if (isinstance(theta, Fraction) and theta == 0) or \
            (not isinstance(theta, Fraction) and not inv.exact and abs(theta) == 0):
        return g
    notes = list(g.notes)
    if inv.exact:
        new_mus = []
        for lam, mu in zip(g.lambdas, g.mus):
            shift = ExactScalar.from_gauss(0, -lam * Fraction(theta))
            nmu = mu + shift
            if nmu.real_part().to_mpc().real < 0:
                notes.append("shifted mu has negative real part: %r" % nmu)
            new_mus.append(nmu)
        return replace(g, mus=tuple(new_mus), notes=tuple(notes))
    new_mus = []
    for j, lam in enumerate(g.lambdas):
        lamf = mpmath.mpf(lam.numerator) / lam.denominator
        nmu = g.mu_mpc(j) - 1j * lamf * theta
        if nmu.real < 0:
            notes.append("shifted mu has negative real part: %s" % mpmath.nstr(nmu, 8))
        new_mus.append(+nmu)
    return replace(g, mus=tuple(new_mus), notes=tuple(notes))


@dataclass(frozen=True)
class DuplicationConstant:
    """The constant 2^(mu-1) * pi^(-1/2) left over by Legendre duplication."""
    mu: MuLike

    def to_mpc(self) -> mpmath.mpc:
        with working_precision(guard=16):
            mu = self.mu.to_mpc() if isinstance(self.mu, ExactScalar) \
                else mpmath.mpc(self.mu)
            return +(2 ** (mu - 1) / mpmath.sqrt(mpmath.pi))

    def phase_ratio(self):
        """conj(c)/c; exactly 1 when mu is real."""
        if isinstance(self.mu, ExactScalar) and self.mu.is_real():
            return ExactScalar.from_rational(1)
        with working_precision(guard=16):
            c = self.to_mpc()
            return +(mpmath.conj(c) / c)


def duplicate(g: GammaFactor, j: int):
    """Apply Legendre duplication to factor ``j`` (1-based).

    Gamma(lam s + mu) = 2^(lam s + mu - 1) pi^(-1/2)
                        * Gamma((lam s + mu)/2) Gamma((lam s + mu + 1)/2);
    2^(lam s) folds into Q, the leftover c = 2^(mu-1) pi^(-1/2) is returned
    and omega transforms to omega * conj(c)/c so the functional equation
    is preserved.
    """
    if not 1 <= j <= g.r:
        raise IndexError("factor index out of range")
    idx = j - 1
    lam, mu = g.lambdas[idx], g.mus[idx]
    half = Fraction(1, 2)
    if isinstance(mu, ExactScalar):
        mu_half = mu / 2
        mu_half_shift = (mu + 1) / 2
    else:
        mu_half = mu / 2
        mu_half_shift = (mu + 1) / 2
    new_lambdas = g.lambdas[:idx] + (lam * half, lam * half) + g.lambdas[idx + 1:]
    new_mus = g.mus[:idx] + (mu_half, mu_half_shift) + g.mus[idx + 1:]

    if isinstance(g.Q, StructuralQ):
        two_lam = 2 * lam
        if two_lam.denominator == 1:
            newQ = StructuralQ(g.Q.u * Fraction(2) ** two_lam.numerator, g.Q.v)
        else:
            lamf = mpmath.mpf(lam.numerator) / lam.denominator
            newQ = +(g.Q.to_mpf() * mpmath.mpf(2) ** lamf)
    else:
        lamf = mpmath.mpf(lam.numerator) / lam.denominator
        newQ = +(g.Q * 2 ** lamf)

    c = DuplicationConstant(mu)
    if g.omega is None:
        new_omega = None
    else:
        ratio = c.phase_ratio()
        if isinstance(g.omega, ExactScalar) and isinstance(ratio, ExactScalar):
            new_omega = g.omega * ratio
        else:
            om = g.omega.to_mpc() if isinstance(g.omega, ExactScalar) else g.omega
            rt = ratio.to_mpc() if isinstance(ratio, ExactScalar) else ratio
            new_omega = +(om * rt)
    return replace(g, Q=newQ, lambdas=new_lambdas, mus=new_mus,
                   omega=new_omega), c


def virtual_gamma(kind: str, *, mu=None, eps=None, kappa=None) -> GammaFactor:
    """The two canonical degree-2, conductor-1 shapes, with omega unset.

    kind='hecke':  (2 pi)^(-s) Gamma(s + mu), mu > 0.
    kind='maass':  pi^(-s) Gamma((s+eps+i kappa)/2) Gamma((s+eps-i kappa)/2),
                   eps in {0, 1}, kappa >= 0.
    Rational parameters yield exact data; floats fall to the numeric path.
    """
    if kind == "hecke":
        if mu is None:
            raise ValueError("hecke factor needs mu > 0")
        if isinstance(mu, (int, Fraction)):
            mu = Fraction(mu)
            if mu <= 0:
                raise ValueError("mu must be positive")
            mus = (ExactScalar.from_rational(mu),)
        else:
            mus = (mpmath.mpc(mu),)
        return GammaFactor(Q=StructuralQ(Fraction(1, 4), -2),
                           lambdas=(Fraction(1),), mus=mus)
    if kind == "maass":
        if eps not in (0, 1):
            raise ValueError("eps must be 0 or 1")
        if kappa is None:
            raise ValueError("maass factor needs kappa >= 0")
        half = Fraction(1, 2)
        if isinstance(kappa, (int, Fraction)):
            kappa = Fraction(kappa)
            if kappa < 0:
                raise ValueError("kappa must be nonnegative")
            mus = (ExactScalar.from_gauss(Fraction(eps, 2), kappa / 2),
                   ExactScalar.from_gauss(Fraction(eps, 2), -kappa / 2))
        else:
            kf = mpmath.mpf(kappa)
            mus = (mpmath.mpc(eps, kf) / 2, mpmath.mpc(eps, -kf) / 2)
        return GammaFactor(Q=StructuralQ(Fraction(1), -2),
                           lambdas=(half, half), mus=mus)
    raise ValueError("kind must be 'hecke' or 'maass'")


def dim_cusp_forms_level1(k: int) -> int:
    """Dimension of the space of level-1 holomorphic cusp forms of weight k."""
    if k < 4 or k % 2 == 1:
        return 0
    return k // 12 - 1 if k % 12 == 2 else k // 12


@dataclass(frozen=True)
class Classification:
    case: str                     # 'hecke' | 'zeta_squared' | 'maass' | 'empty'
    chi: object
    theta: object
    weight: Optional[int] = None
    eigenvalue: Optional[Fraction] = None
    parity: Optional[int] = None
    reason: Optional[str] = None
    notes: Tuple[str, ...] = ()


def _chi_as_real(inv: InvariantSet):
    """chi as an exact Fraction or mpf; raises ChiNotReal."""
    chi = inv.chi
    if inv.exact:
        if not chi.is_real():
            raise ChiNotReal("chi = %r has nonzero imaginary part" % chi)
        if not chi.is_rational():
            raise ChiNotReal("chi = %r carries pi-grades" % chi)
        return chi.as_rational()
    tol = mpmath.mpf(10) ** (-get_precision() // 2)
    if abs(mpmath.mpc(chi).imag) > tol * (1 + abs(chi)):
        raise ChiNotReal("chi = %s is not real within tolerance" % mpmath.nstr(chi, 8))
    return mpmath.mpc(chi).real


def classify(g: GammaFactor) -> Classification:
    """Classify a degree-2 conductor-1 gamma-factor by the sign of chi.

    chi > 0: holomorphic-cusp-form case with weight k = 1 + sqrt(2 chi)
    when k is an even integer and the level-1 space is nonempty;
    chi = 0: the zeta^2 case; chi < 0: the real-analytic (Maass) case
    with eigenvalue (1 - 2 chi)/4 and parity (1 - omega_F)/2.
    """
    gn = normalize_shift(g)
    inv = invariants(gn, n_max=2)
    inv0 = invariants(g, n_max=2)
    theta = inv0.theta
    if not inv.degree_is(2):
        raise NotDegreeTwo("degree is %s, not 2" % (inv.degree,))
    if not inv.conductor_is_one():
        raise NotConductorOne("conductor is %r, not 1" % (inv.conductor,))
    chi = _chi_as_real(inv)
    notes = inv.notes

    if chi > 0:
        k = _even_weight_from_chi(chi, inv.exact)
        if k is None:
            return Classification(case="empty", chi=chi, theta=theta,
                                  reason="1 + sqrt(2 chi) is not an even integer",
                                  notes=notes)
        if dim_cusp_forms_level1(k) < 1:
            return Classification(case="empty", chi=chi, theta=theta, weight=k,
                                  reason="no level-1 cusp forms of weight %d" % k,
                                  notes=notes)
        return Classification(case="hecke", chi=chi, theta=theta, weight=k,
                              notes=notes)
    if chi == 0 or (not inv.exact and abs(chi) < mpmath.mpf(10) ** (-get_precision() // 2)):
        return Classification(case="zeta_squared", chi=chi, theta=theta, notes=notes)

    # chi < 0
    eigenvalue = (1 - 2 * chi) / 4
    parity = None
    om = inv.root_number
    if om is None:
        raise ParityUndefined("omega is unset; parity (1 - omega_F)/2 undefined")
    if isinstance(om, ExactScalar):
        if om == ExactScalar.from_rational(1):
            parity = 0
        elif om == ExactScalar.from_rational(-1):
            parity = 1
        else:
            raise ParityUndefined("omega_F = %r is not +-1" % om)
    else:
        tol = mpmath.mpf(10) ** (-get_precision() // 2)
        if abs(om - 1) < tol:
            parity = 0
        elif abs(om + 1) < tol:
            parity = 1
        else:
            raise ParityUndefined("omega_F = %s is not +-1 within tolerance"
                                  % mpmath.nstr(om, 8))
    return Classification(case="maass", chi=chi, theta=theta,
                          eigenvalue=eigenvalue, parity=parity, notes=notes)


def _even_weight_from_chi(chi, exact: bool) -> Optional[int]:
    """k = 1 + sqrt(2 chi) when that is an even integer, else None."""
    if exact:
        two_chi = 2 * chi
        if two_chi.denominator != 1:
            return None
        root = math.isqrt(two_chi.numerator)
        if root * root != two_chi.numerator:
            return None
        k = 1 + int(root)
        return k if k % 2 == 0 else None
    tol = mpmath.mpf(10) ** (-get_precision() // 4)
    root = mpmath.sqrt(2 * chi)
    k = int(mpmath.nint(1 + root))
    if abs((1 + root) - k) < tol and k % 2 == 0:
        return k
    return None


@dataclass(frozen=True)
class PairClassification:
    """Classification of a two-series functional equation gamma(s)F(s) =
    omega gamma-bar(1-s) G(1-s), with the F<->G relation it forces."""
    classification: Classification
    omega: object
    relation: str
    relation_factor: object       # the scalar multiplying f (or alpha) in G
    plus_minus_rule: str


def classify_pair(g: GammaFactor, omega) -> PairClassification:
    """Classify and report how the second series is determined by the first.

    Weight-k case: g = i^k conj(omega) f;  chi = 0: beta = alpha conj(omega);
    Maass case: g = (-1)^eps conj(omega) f.  Also reports the symmetrized
    combinations H+- = c+-(F +- conj(G)) whose omega transforms as
    omega * conj(c+-)/c+-.
    """
    if isinstance(omega, (int, Fraction)):
        omega = ExactScalar.from_rational(omega)
    gg = replace(g, omega=omega)
    cls = classify(gg)
    om_conj = omega.conjugate() if isinstance(omega, ExactScalar) \
        else mpmath.conj(mpmath.mpc(omega))
    if cls.case == "hecke":
        k = cls.weight
        i_pow = ExactScalar.from_gauss(*{0: (1, 0), 1: (0, 1), 2: (-1, 0),
                                         3: (0, -1)}[k % 4])
        factor = i_pow * om_conj if isinstance(om_conj, ExactScalar) \
            else i_pow.to_mpc() * om_conj
        relation = "g = i^k * conj(omega) * f"
    elif cls.case == "zeta_squared":
        factor = om_conj
        relation = "beta = alpha * conj(omega)"
    elif cls.case == "maass":
        sign = 1 if cls.parity == 0 else -1
        factor = sign * om_conj
        relation = "g = (-1)^eps * conj(omega) * f"
    else:
        factor = None
        relation = "empty class: no second series forced"
    return PairClassification(
        classification=cls, omega=omega, relation=relation,
        relation_factor=factor,
        plus_minus_rule=("H+- = c+-(F(s) +- conj(G)(s)) satisfies the one-series "
                         "equation with omega+- = omega * conj(c+-)/c+-"))


# -- JSON descriptors -------------------------------------------------


def _mu_to_json(mu) -> dict:
    if isinstance(mu, ExactScalar):
        q = mu.as_gauss()
        return {"re": str(q.re), "im": str(q.im)}
    m = mpmath.mpc(mu)
    return {"re": mpmath.nstr(m.real, 40), "im_numeric": mpmath.nstr(m.imag, 40)}


def _mu_from_json(obj) -> MuLike:
    if "im_numeric" in obj:
        return mpmath.mpc(rational_from_string(obj.get("re", "0")),
                          mpmath.mpf(obj["im_numeric"]))
    return ExactScalar.from_gauss(rational_from_string(obj.get("re", "0")),
                                  rational_from_string(obj.get("im", "0")))


def to_descriptor(g: GammaFactor) -> dict:
    if isinstance(g.Q, StructuralQ):
        qobj = {"u": str(g.Q.u), "v": g.Q.v}
    else:
        qobj = {"numeric": mpmath.nstr(g.Q, 40)}
    out = {"Q": qobj,
           "factors": [{"lambda": str(lam), "mu": _mu_to_json(mu)}
                       for lam, mu in zip(g.lambdas, g.mus)]}
    if g.omega is not None:
        out["omega"] = _mu_to_json(g.omega)
    return out


def from_descriptor(obj: dict) -> GammaFactor:
    try:
        qobj = obj["Q"]
        if "numeric" in qobj:
            Q = mpmath.mpf(qobj["numeric"])
        else:
            Q = StructuralQ(rational_from_string(str(qobj["u"])),
                            int(qobj["v"]))
        lambdas, mus = [], []
        for f in obj["factors"]:
            lambdas.append(rational_from_string(str(f["lambda"])))
            mus.append(_mu_from_json(f["mu"]))
        omega = _mu_from_json(obj["omega"]) if "omega" in obj else None
    except (KeyError, ValueError, TypeError) as exc:
        raise DescriptorError("malformed descriptor: %s" % exc) from exc
    return GammaFactor(Q=Q, lambdas=tuple(lambdas), mus=tuple(mus), omega=omega)


def load_descriptor(path: str) -> GammaFactor:
    with open(path) as fh:
        return from_descriptor(json.load(fh))


def dump_descriptor(g: GammaFactor, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(to_descriptor(g), fh, indent=2)
        fh.write("\n")


def zeta_squared_gamma() -> GammaFactor:
    """pi^(-s) Gamma(s/2)^2 with omega = 1."""
    half = Fraction(1, 2)
    return GammaFactor(Q=StructuralQ(Fraction(1), -2),
                       lambdas=(half, half),
                       mus=(ExactScalar(), ExactScalar()),
                       omega=ExactScalar.from_rational(1))


def delta_gamma() -> GammaFactor:
    """(2 pi)^(-s) Gamma(s + 11/2) with omega = 1 (the shifted weight-12 case)."""
    g = virtual_gamma("hecke", mu=Fraction(11, 2))
    return replace(g, omega=ExactScalar.from_rational(1))
