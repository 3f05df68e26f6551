"""Quantum GL(2) generator quadruples acting on a 4-dimensional space.

A GL2Rep packages four n x n matrices (c11, c12, c21, c22) that are
supposed to satisfy the six defining relations of the quantum group, with
quantum determinant c11*c22 - c12*c21.  Everything here verifies those
relations exactly, derives the standard consequences (invertibility of the
diagonal generators, nilpotency of the off-diagonal ones), and searches
for equivalences between quadruples up to conjugation and column scaling.
"""

from dataclasses import dataclass
from typing import Optional

from .matrices import Mat, invertible_element, power_traces, stacked_nullspace
from .scalars import ONE, Q, Scalar

__all__ = [
    "GL2Rep",
    "RelationReport",
    "InvertibilityReport",
    "PowerCommutatorReport",
    "QuantumPlaneReport",
    "verify_relations",
    "invertibility_nilpotency_check",
    "power_commutator_check",
    "quantum_plane_split",
    "classical_point",
    "gl2_equivalent",
]


@dataclass(frozen=True)
class GL2Rep:
    c11: Mat
    c12: Mat
    c21: Mat
    c22: Mat
    q: Scalar = Q

    def __post_init__(self):
        n = self.c11.n
        if not (self.c12.n == n and self.c21.n == n and self.c22.n == n):
            raise ValueError("dimension mismatch")

    @property
    def n(self) -> int:
        return self.c11.n

    def generators(self) -> tuple:
        return (self.c11, self.c12, self.c21, self.c22)

    def detq(self) -> Mat:
        """Quantum determinant c11*c22 - c12*c21."""
        return self.c11 * self.c22 - self.c12 * self.c21

    def perturbation(self) -> Mat:
        """(q - 1) * c12 * c21, the defect of commutativity of the
        diagonal generators: c22*c11 - c11*c22 equals this when the
        relations hold."""
        return (self.c12 * self.c21).scale(self.q - ONE)

    def block_matrix(self) -> Mat:
        """The 2n x 2n matrix with blocks [[c11, c12], [c21, c22]]."""
        n = self.n
        rows = []
        for i in range(n):
            rows.append(tuple(self.c11.rows[i]) + tuple(self.c12.rows[i]))
        for i in range(n):
            rows.append(tuple(self.c21.rows[i]) + tuple(self.c22.rows[i]))
        return Mat(tuple(rows))


RELATION_LABELS = (
    "c11*c12 = c12*c11",
    "c21*c11 = q*c11*c21",
    "c22*c12 = q*c12*c22",
    "c21*c22 = c22*c21",
    "c21*c12 = q*c12*c21",
    "c22*c11 - c11*c22 = (q-1)*c12*c21",
)


@dataclass(frozen=True)
class RelationReport:
    """Exact outcome of the six defining relations plus the quantum
    determinant and perturbation facts.  ok requires all six relations
    and an invertible determinant; perturbation_nonzero is informational
    (diagonal quadruples legitimately have zero perturbation)."""

    relations: dict
    detq: Mat
    detq_invertible: bool
    perturbation: Mat
    perturbation_nonzero: bool

    @property
    def ok(self) -> bool:
        return all(self.relations.values()) and self.detq_invertible


def verify_relations(rep: GL2Rep) -> RelationReport:
    a, b, c, d, q = rep.c11, rep.c12, rep.c21, rep.c22, rep.q
    checks = (
        a * b == b * a,
        c * a == (a * c).scale(q),
        d * b == (b * d).scale(q),
        c * d == d * c,
        c * b == (b * c).scale(q),
        d * a - a * d == (b * c).scale(q - ONE),
    )
    detq = rep.detq()
    pert = rep.perturbation()
    return RelationReport(
        relations=dict(zip(RELATION_LABELS, checks)),
        detq=detq,
        detq_invertible=detq.is_invertible(),
        perturbation=pert,
        perturbation_nonzero=not pert.is_zero(),
    )


@dataclass(frozen=True)
class InvertibilityReport:
    """Consequences that must follow once the relations hold and detq is
    invertible: diagonal generators invertible, off-diagonal generators
    nilpotent, and the diagonal of c12*c21 zero.  applicable records
    whether the premises held; failures lists what broke."""

    applicable: bool
    c11_invertible: bool
    c22_invertible: bool
    c12_nilpotent: bool
    c21_nilpotent: bool
    offdiag_product_diag_zero: bool

    @property
    def failures(self) -> tuple:
        bad = []
        for label in ("c11_invertible", "c22_invertible", "c12_nilpotent",
                      "c21_nilpotent", "offdiag_product_diag_zero"):
            if not getattr(self, label):
                bad.append(label)
        return tuple(bad)

    @property
    def ok(self) -> bool:
        return self.applicable and not self.failures


def invertibility_nilpotency_check(rep: GL2Rep) -> InvertibilityReport:
    applicable = verify_relations(rep).ok
    prod = rep.c12 * rep.c21
    z = rep.c11.rows[0][0] - rep.c11.rows[0][0]
    return InvertibilityReport(
        applicable=applicable,
        c11_invertible=rep.c11.is_invertible(),
        c22_invertible=rep.c22.is_invertible(),
        c12_nilpotent=rep.c12.is_nilpotent(),
        c21_nilpotent=rep.c21.is_nilpotent(),
        offdiag_product_diag_zero=all(
            prod.rows[i][i] == z for i in range(rep.n)),
    )


@dataclass(frozen=True)
class PowerCommutatorReport:
    """Power commutation identity checker.

    With eps = x*y - y*x, the premise is eps*x = q*x*eps.  When it holds,
    x^k*y - y*x^k must equal (1 + q + ... + q^(k-1)) * x^(k-1) * eps for
    every k; results records (k, bool) for k = 1..kmax.  A failed premise
    is reported, not raised."""

    premise_holds: bool
    results: tuple

    @property
    def ok(self) -> bool:
        return self.premise_holds and all(r for _, r in self.results)


def power_commutator_check(x: Mat, y: Mat, kmax: int,
                           q: Scalar = Q) -> PowerCommutatorReport:
    if x.n != y.n:
        raise ValueError("dimension mismatch")
    eps = x * y - y * x
    if eps * x != (x * eps).scale(q):
        return PowerCommutatorReport(premise_holds=False, results=())
    results = []
    one = type(q).one()
    coeff = one    # 1 + q + ... + q^(k-1)
    qpow = one     # q^(k-1)
    xk = Mat.identity(x.n, one=_one_of(x))   # x^(k-1)
    xk1 = x                                  # x^k
    for k in range(1, kmax + 1):
        if k > 1:
            qpow = qpow * q
            coeff = coeff + qpow
        lhs = xk1 * y - y * xk1
        rhs = (xk * eps).scale(coeff)
        results.append((k, lhs == rhs))
        xk = xk1
        xk1 = xk1 * x
    return PowerCommutatorReport(premise_holds=True, results=tuple(results))


def _one_of(m: Mat):
    return type(m.rows[0][0]).one()


_PAIR_ORDER = (
    ("c21", "c11"), ("c21", "a12"), ("c21", "a22"),
    ("c11", "a12"), ("c11", "a22"), ("a12", "a22"),
)


@dataclass(frozen=True)
class QuantumPlaneReport:
    """Pairwise commutation behaviour of {c21, c11, a12, a22} where
    a12 = c11^-1 * c12 and a22 = c11^-1 * detq.  For each pair (x, y) the
    labels of every relation that holds are listed: "xy=yx", "xy=q*yx",
    "yx=q*xy"; an empty tuple means none of them.  Purely a report, no
    relation is asserted."""

    elements: dict
    pairs: dict


def quantum_plane_split(rep: GL2Rep) -> QuantumPlaneReport:
    inv = rep.c11.inverse()
    elements = {
        "c21": rep.c21,
        "c11": rep.c11,
        "a12": inv * rep.c12,
        "a22": inv * rep.detq(),
    }
    q = rep.q
    pairs = {}
    for xn, yn in _PAIR_ORDER:
        x, y = elements[xn], elements[yn]
        xy, yx = x * y, y * x
        labels = []
        if xy == yx:
            labels.append("xy=yx")
        if xy == yx.scale(q):
            labels.append("xy=q*yx")
        if yx == xy.scale(q):
            labels.append("yx=q*xy")
        pairs[f"{xn},{yn}"] = tuple(labels)
    return QuantumPlaneReport(elements=elements, pairs=pairs)


def classical_point(n: int = 4) -> GL2Rep:
    """The commutative quadruple: identity diagonal generators, zero
    off-diagonal ones.  Useful as a baseline; its invariant space is the
    whole matrix algebra."""
    return GL2Rep(Mat.identity(n), Mat.zero(n), Mat.zero(n), Mat.identity(n))


def _survivors(g1: Mat, g2: Mat, max_exponent: int) -> list:
    t1, t2 = power_traces(g1, g1.n), power_traces(g2, g2.n)
    out = []
    for k in range(-max_exponent, max_exponent + 1):
        alpha = Q ** k
        p = ONE
        good = True
        for x1, x2 in zip(t1, t2):
            p = p * alpha
            if x2 != p * x1:
                good = False
                break
        if good:
            out.append(k)
    return out


def gl2_equivalent(r1: GL2Rep, r2: GL2Rep,
                   max_exponent: int = 4) -> Optional[tuple]:
    """Search for (u, alpha1, alpha2) with

        r2.c11 = u r1.c11 u^-1 alpha1,   r2.c21 = u r1.c21 u^-1 alpha1,
        r2.c12 = u r1.c12 u^-1 alpha2,   r2.c22 = u r1.c22 u^-1 alpha2,

    the scalings ranging over monomials q^k with |k| <= max_exponent.
    Column rescaling preserves the defining relations, so this is the
    natural equivalence for quadruples.  Returns an exactly verified
    witness or None when no witness exists within those scalings.
    """
    if r1.q != r2.q or r1.n != r2.n:
        return None
    n = r1.n
    cand1 = _survivors(r1.c11, r2.c11, max_exponent)
    cand2 = _survivors(r1.c22, r2.c22, max_exponent)
    tdet1 = power_traces(r1.detq(), n)
    tdet2 = power_traces(r2.detq(), n)
    for k1 in cand1:
        for k2 in cand2:
            prod = Q ** (k1 + k2)
            p = ONE
            good = True
            for x1, x2 in zip(tdet1, tdet2):
                p = p * prod
                if x2 != p * x1:
                    good = False
                    break
            if not good:
                continue
            a1, a2 = Q ** k1, Q ** k2
            ops = []
            for g1, g2, alpha in ((r1.c11, r2.c11, a1),
                    (r1.c21, r2.c21, a1), (r1.c12, r2.c12, a2),
                    (r1.c22, r2.c22, a2)):
                ops.append([(None, g1.scale(alpha), ONE), (g2, None, -ONE)])
            u = invertible_element(stacked_nullspace(n, ops))
            if u is None:
                continue
            ui = u.inverse()
            if (u * r1.c11 * ui * a1 == r2.c11
                    and u * r1.c21 * ui * a1 == r2.c21
                    and u * r1.c12 * ui * a2 == r2.c12
                    and u * r1.c22 * ui * a2 == r2.c22):
                return (u, a1, a2)
    return None
