"""Adjoint action of elementary root unipotents on coordinate vectors.

The action of x_rho(xi) on a vector v with root coordinates v_alpha and
zero-weight coordinates v_s follows the classical coordinate rules:

  1. v_lambda is unchanged when lambda - rho is neither a root nor zero;
  2. v_lambda picks up N_{rho,lambda-rho} * xi * v_{lambda-rho} when both
     lambda and lambda - rho are roots;
  3. each zero coordinate picks up m_s(rho) * xi * v_{-rho};
  4. the rho coordinate becomes
     v_rho - sum_s <rho, alpha_s> xi v_s - xi^2 v_{-rho}.

Vectors are value-semantic: applying a unipotent returns a fresh vector.
Words act left to right with the last factor applied first, so the word
x_1 x_2 ... x_n sends v to x_1(x_2(...x_n(v))).
"""

from __future__ import annotations

from dataclasses import dataclass

from .rings import Ring
from .root_system import Root, RootSystem, Weight
from .signs import SignTable


@dataclass
class AdjointVector:
    """Dense coordinate vector over a ring, in canonical weight order."""

    rs: RootSystem
    ring: Ring
    coords: list

    def copy(self) -> "AdjointVector":
        return AdjointVector(self.rs, self.ring, list(self.coords))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AdjointVector)
            and other.rs is self.rs
            and other.ring == self.ring
            and other.coords == self.coords
        )

    def to_json(self):
        return {
            "system": str(self.rs.system),
            "ring": self.ring.name,
            "coords": [self.ring.format(c) for c in self.coords],
        }


@dataclass(frozen=True)
class Elementary:
    """An elementary root unipotent x_rho(xi)."""

    rho: Root
    xi: object


@dataclass(frozen=True)
class Word:
    """A product of elementary unipotents, an element of the elementary group."""

    factors: tuple[Elementary, ...]

    def to_json(self, ring: Ring):
        return [{"rho": list(e.rho), "xi": ring.format(e.xi)} for e in self.factors]

    @classmethod
    def from_json(cls, data, rs: RootSystem, ring: Ring) -> "Word":
        factors = []
        for item in data:
            rho = tuple(int(x) for x in item["rho"])
            rs.root_index(rho)  # validates
            factors.append(Elementary(rho, ring.parse(item["xi"])))
        return cls(tuple(factors))


def inverse_word(word: Word, ring: Ring) -> Word:
    """The reversed word with negated arguments."""
    return Word(tuple(Elementary(e.rho, ring.neg(e.xi)) for e in reversed(word.factors)))


def zero_vector(rs: RootSystem, ring: Ring) -> AdjointVector:
    return AdjointVector(rs, ring, [ring.zero for _ in range(rs.dim_v)])


def basis_vector(rs: RootSystem, ring: Ring, weight: Weight) -> AdjointVector:
    """The admissible base vector e^lambda: one at the weight, zero elsewhere."""
    v = zero_vector(rs, ring)
    v.coords[rs.weight_position(weight)] = ring.one
    return v


class _Plan:
    """Precomputed index lists for the action of one root's unipotents."""

    __slots__ = ("rho_pos", "neg_rho_pos", "shifts", "zero_gains", "rho_zero")

    def __init__(self, rs: RootSystem, rho_idx: int):
        n = rs.n_roots
        neg = rs._neg
        self.rho_pos = rho_idx
        self.neg_rho_pos = int(neg[rho_idx])
        # Rule 2: targets lambda = mu + rho over roots mu with mu + rho a root.
        self.shifts = [
            (int(rs._sum_idx[rho_idx, mu]), mu)
            for mu in range(n)
            if rs._sum_idx[rho_idx, mu] >= 0
        ]
        rho = rs.roots[rho_idx]
        self.zero_gains = [(n + s, rho[s]) for s in range(rs.rank) if rho[s] != 0]
        pair = rs._pairings[rho_idx]
        self.rho_zero = [(n + s, int(pair[s])) for s in range(rs.rank) if pair[s] != 0]


def _plan_for(rs: RootSystem, signs: SignTable, rho_idx: int) -> _Plan:
    plan = signs._plans.get(rho_idx)
    if plan is None:
        plan = _Plan(rs, rho_idx)
        signs._plans[rho_idx] = plan
    return plan


def apply_elementary(
    rs: RootSystem, signs: SignTable, elem: Elementary, v: AdjointVector
) -> AdjointVector:
    """Apply x_rho(xi) to v, returning a fresh vector.

    Linear in v; satisfies the one-parameter law
    x_rho(xi) x_rho(eta) = x_rho(xi + eta) as an operator identity.
    """
    if v.rs is not rs and v.rs.system != rs.system:
        raise ValueError("vector and root system do not match")
    ring = v.ring
    xi = elem.xi
    rho_idx = rs.root_index(elem.rho)
    plan = _plan_for(rs, signs, rho_idx)
    old = v.coords
    w = list(old)
    for target, src in plan.shifts:
        nval = signs.n_idx(rho_idx, src)
        gain = ring.mul(ring.from_int(nval), ring.mul(xi, old[src]))
        w[target] = ring.add(w[target], gain)
    vm = old[plan.neg_rho_pos]
    for zpos, ms in plan.zero_gains:
        w[zpos] = ring.add(w[zpos], ring.mul(ring.from_int(ms), ring.mul(xi, vm)))
    acc = old[plan.rho_pos]
    for zpos, pr in plan.rho_zero:
        acc = ring.sub(acc, ring.mul(ring.from_int(pr), ring.mul(xi, old[zpos])))
    acc = ring.sub(acc, ring.mul(ring.mul(xi, xi), vm))
    w[plan.rho_pos] = acc
    return AdjointVector(rs, ring, w)


def apply_word(rs: RootSystem, signs: SignTable, word: Word, v: AdjointVector) -> AdjointVector:
    for e in reversed(word.factors):
        v = apply_elementary(rs, signs, e, v)
    return v


def zero_weight_combo(rs: RootSystem, beta: Root, v: AdjointVector):
    """sum_s <beta, alpha_s> v_s over the zero-weight coordinates.

    Shift law: applying x_rho(xi) first adds xi * <beta, rho> * v_{-rho}.
    """
    ring = v.ring
    bi = rs.root_index(beta)
    total = ring.zero
    for s in range(rs.rank):
        c = int(rs._pairings[bi, s])
        if c:
            total = ring.add(total, ring.mul(ring.from_int(c), v.coords[rs.n_roots + s]))
    return total
