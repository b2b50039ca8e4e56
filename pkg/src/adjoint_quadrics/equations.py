"""The three families of quadratic forms cutting out the highest weight orbit.

For an orthogonal pair of roots (alpha, beta) with square members beta_i
(beta_1 = alpha, beta_{-1} = beta):

  pi/2 form:    v_a v_b - sum over the other square pairs {g, d} of
                N_{a,-g} N_{b,-d} v_g v_d
  2pi/3 form:   sum_{i != +-1} N_{b1,-bi} v_{b1-bi} v_{bi}
                - v_{b1} * sum_s <b_{-1}, alpha_s> v_s
  pi form:      sum_{i != +-1} (v_{b1-bi} v_{bi-b1} - v_{-bi} v_{bi})
                - sum_s <b1, alpha_s> v_s * sum_s <b_{-1}, alpha_s> v_s

Each form is a sparse integer combination of products of two distinct
weight coordinates.  Every family vanishes identically on the basis
vectors e^rho and, by the invariance theorem, on the whole orbit of e^rho
under the elementary group.

The 2pi/3 and pi builders construct each form twice, from the raw
companion-set definition and from the square description, and insist the
results agree; a disagreement would mean a structure-constant identity
failed, so it is raised as a program error.

A full equation set holds one pi/2 form per maximal square, one 2pi/3
form per ordered orthogonal pair (both orders are emitted; the
orderedness is visible in the counts), and one pi form per unordered
pair.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

import numpy as np

from .action import AdjointVector
from .root_system import Root, RootSystem, SystemId
from .signs import SignTable
from .squares import InvalidPairError, MaximalSquare, square_of_pair, enumerate_squares

# Safety bounds for the vectorized integer evaluation path.
_INT64_SAFE_COORD = 1 << 26
_INT64_SAFE_MODULUS = 1 << 20


class FormKind(str, enum.Enum):
    PI2 = "pi/2"
    TWO_PI3 = "2pi/3"
    PI = "pi"


@dataclass(frozen=True)
class QuadraticForm:
    """A sparse integer quadratic form over weight coordinates.

    Monomials are (position_a, position_b, coefficient) with a <= b, sorted;
    each unordered coordinate pair appears at most once and coefficients
    are nonzero.  Equality a == b occurs only on the zero-weight diagonal
    of pi forms.
    """

    system: SystemId
    kind: FormKind
    key: tuple
    monomials: tuple[tuple[int, int, int], ...]

    def key_json(self):
        if self.kind is FormKind.PI2:
            return {"sigma": list(self.key)}
        alpha, beta = self.key
        return {"alpha": list(alpha), "beta": list(beta)}

    def to_json(self, rs: RootSystem):
        return {
            "kind": self.kind.value,
            "key": self.key_json(),
            "monomials": [
                {"a": rs.weight_to_json(a), "b": rs.weight_to_json(b), "c": c}
                for a, b, c in self.monomials
            ],
        }


def _finish(system, kind, key, acc: dict) -> QuadraticForm:
    monos = tuple(sorted((a, b, c) for (a, b), c in acc.items() if c != 0))
    return QuadraticForm(system, kind, key, monos)


def _put(acc: dict, a: int, b: int, c: int) -> None:
    if a > b:
        a, b = b, a
    if a == b:
        raise RuntimeError("quadratic form touched a squared coordinate")
    acc[(a, b)] = acc.get((a, b), 0) + c


def pi2_form(rs: RootSystem, signs: SignTable, alpha: Root, beta: Root) -> QuadraticForm:
    """The pi/2 form rooted at the pair (alpha, beta), leading coefficient +1.

    Rooting at another pair of the same square changes the form by a
    global sign only.
    """
    square = square_of_pair(rs, alpha, beta)
    ai, bi = rs.root_index(alpha), rs.root_index(beta)
    neg = rs._neg
    acc: dict = {}
    _put(acc, ai, bi, 1)
    for g, d in square.pairs:
        gi, di = rs.root_index(g), rs.root_index(d)
        if {gi, di} == {ai, bi}:
            continue
        c1 = signs.n_idx(ai, int(neg[gi])) * signs.n_idx(bi, int(neg[di]))
        c2 = signs.n_idx(ai, int(neg[di])) * signs.n_idx(bi, int(neg[gi]))
        if c1 != c2:
            raise RuntimeError("pi/2 coefficient depends on the pair order")
        _put(acc, gi, di, -c1)
    return _finish(rs.system, FormKind.PI2, tuple(square.sigma), acc)


def pi2_form_for_square(rs: RootSystem, signs: SignTable, square: MaximalSquare) -> QuadraticForm:
    """The square-keyed pi/2 form, rooted at the square's canonical first pair."""
    a, b = square.pairs[0]
    return pi2_form(rs, signs, a, b)


def two_pi3_form(rs: RootSystem, signs: SignTable, alpha: Root, beta: Root) -> QuadraticForm:
    ai, bi = rs.root_index(alpha), rs.root_index(beta)
    if rs.dot2_idx(ai, bi) != 0:
        raise InvalidPairError(f"{alpha} and {beta} are not orthogonal")
    square = square_of_pair(rs, alpha, beta)
    neg = rs._neg
    acc: dict = {}
    for m in square.members():
        if m == alpha or m == beta:
            continue
        mi = rs.root_index(m)
        diff = int(rs._sum_idx[ai, int(neg[mi])])  # alpha - m
        _put(acc, diff, mi, signs.n_idx(ai, int(neg[mi])))

    # Cross-check against the raw companion-set definition.
    ga, gb = rs._gram[ai], rs._gram[bi]
    raw: dict = {}
    for gi in np.nonzero((ga == 1) & (gb == 1))[0].tolist():
        di = int(rs._sum_idx[ai, int(neg[gi])])  # delta = alpha - gamma
        a, b = (gi, di) if gi < di else (di, gi)
        raw[(a, b)] = -signs.n_idx(gi, di)
    if raw != acc:
        raise RuntimeError("2pi/3 square form disagrees with the raw definition")

    for s in range(rs.rank):
        c = int(rs._pairings[bi, s])
        if c:
            _put(acc, ai, rs.n_roots + s, -c)
    return _finish(rs.system, FormKind.TWO_PI3, (alpha, beta), acc)


def pi_form(rs: RootSystem, signs: SignTable, alpha: Root, beta: Root) -> QuadraticForm:
    ai, bi = rs.root_index(alpha), rs.root_index(beta)
    if rs.dot2_idx(ai, bi) != 0:
        raise InvalidPairError(f"{alpha} and {beta} are not orthogonal")
    square = square_of_pair(rs, alpha, beta)
    neg = rs._neg
    acc: dict = {}
    for m in square.members():
        if m == alpha or m == beta:
            continue
        mi = rs.root_index(m)
        diff = int(rs._sum_idx[ai, int(neg[mi])])  # alpha - m
        _put(acc, diff, int(neg[diff]), 1)
        _put(acc, mi, int(neg[mi]), -1)

    ga, gb = rs._gram[ai], rs._gram[bi]
    raw: dict = {}
    for gi in np.nonzero((ga == -1) & (gb == 1))[0].tolist():
        a, b = gi, int(neg[gi])
        raw[(a, b) if a < b else (b, a)] = 1
    for gi in np.nonzero((ga == -1) & (gb == -1))[0].tolist():
        a, b = gi, int(neg[gi])
        raw[(a, b) if a < b else (b, a)] = -1
    if raw != acc:
        raise RuntimeError("pi square form disagrees with the raw definition")

    pa, pb = rs._pairings[ai], rs._pairings[bi]
    base = rs.n_roots
    for s in range(rs.rank):
        cs = int(pa[s])
        if cs == 0:
            continue
        for t in range(rs.rank):
            ct = int(pb[t])
            if ct == 0:
                continue
            if s == t:
                acc[(base + s, base + s)] = acc.get((base + s, base + s), 0) - cs * ct
            else:
                _put(acc, base + s, base + t, -cs * ct)
    key = (alpha, beta) if ai < bi else (beta, alpha)
    return _finish(rs.system, FormKind.PI, key, acc)


def evaluate_form(form: QuadraticForm, v: AdjointVector):
    """Evaluate over the vector's ring; integer coefficients are embedded
    through the ring's characteristic-safe from_int."""
    if v.rs.system != form.system:
        raise ValueError(f"vector is over {v.rs.system}, form over {form.system}")
    ring = v.ring
    coords = v.coords
    total = ring.zero
    for a, b, c in form.monomials:
        total = ring.add(total, ring.mul(ring.from_int(c), ring.mul(coords[a], coords[b])))
    return total


@dataclass
class EquationSet:
    """All forms for one system, indexed by (kind, key), in canonical order."""

    system: SystemId
    forms: tuple[QuadraticForm, ...]
    _by_key: dict = field(default_factory=dict, repr=False)
    _compiled: object = field(default=None, repr=False)

    def __post_init__(self):
        if not self._by_key:
            self._by_key = {(f.kind, f.key): f for f in self.forms}

    def counts(self) -> dict[str, int]:
        out = {k.value: 0 for k in FormKind}
        for f in self.forms:
            out[f.kind.value] += 1
        return out

    def form_for(self, kind: FormKind, key: tuple) -> QuadraticForm:
        return self._by_key[(kind, key)]

    def compiled(self) -> "_Compiled":
        if self._compiled is None:
            self._compiled = _Compiled(self.forms)
        return self._compiled

    def check_vector(self, v: AdjointVector):
        """(all_vanish, witness) where witness names the first failing form."""
        if v.rs.system != self.system:
            raise ValueError(f"vector is over {v.rs.system}, equations over {self.system}")
        idx, value = self.compiled().first_nonzero(v)
        if idx is None:
            return True, None
        f = self.forms[idx]
        return False, {"kind": f.kind.value, "key": f.key_json(), "value": v.ring.format(value)}

    def to_json_doc(self, rs: RootSystem):
        return {
            "system": str(self.system),
            "counts": self.counts(),
            "forms": [f.to_json(rs) for f in self.forms],
        }

    def to_json(self, rs: RootSystem) -> str:
        return json.dumps(self.to_json_doc(rs), sort_keys=True, separators=(",", ":"))


class _Compiled:
    """Flattened monomial arrays for bulk evaluation of a whole set."""

    def __init__(self, forms):
        ia, ib, cs, offsets = [], [], [], [0]
        for f in forms:
            if not f.monomials:
                raise RuntimeError("empty form cannot be compiled")
            for a, b, c in f.monomials:
                ia.append(a)
                ib.append(b)
                cs.append(c)
            offsets.append(len(ia))
        self.ia = np.array(ia, dtype=np.int64)
        self.ib = np.array(ib, dtype=np.int64)
        self.c = np.array(cs, dtype=np.int64)
        self.offsets = np.array(offsets, dtype=np.int64)
        self.n_forms = len(forms)

    def _values_numpy(self, varr: np.ndarray) -> np.ndarray:
        prods = self.c * varr[self.ia] * varr[self.ib]
        return np.add.reduceat(prods, self.offsets[:-1])

    def _values_numpy_mod(self, varr: np.ndarray, m: int) -> np.ndarray:
        prods = (self.c % m) * varr[self.ia] % m * varr[self.ib] % m
        return np.add.reduceat(prods, self.offsets[:-1]) % m

    def first_nonzero(self, v: AdjointVector):
        from .rings import IntegerRing, IntegersMod

        ring = v.ring
        coords = v.coords
        if isinstance(ring, IntegersMod) and ring.modulus <= _INT64_SAFE_MODULUS:
            varr = np.fromiter(coords, dtype=np.int64, count=len(coords))
            values = self._values_numpy_mod(varr, ring.modulus)
            nz = np.nonzero(values)[0]
            if len(nz) == 0:
                return None, None
            i = int(nz[0])
            return i, int(values[i])
        if isinstance(ring, IntegerRing) and max(abs(x) for x in coords) < _INT64_SAFE_COORD:
            varr = np.fromiter(coords, dtype=np.int64, count=len(coords))
            values = self._values_numpy(varr)
            nz = np.nonzero(values)[0]
            if len(nz) == 0:
                return None, None
            i = int(nz[0])
            return i, int(values[i])
        # Exact fallback, one form at a time.
        ia, ib, cs, off = self.ia, self.ib, self.c, self.offsets
        for fi in range(self.n_forms):
            total = ring.zero
            for p in range(int(off[fi]), int(off[fi + 1])):
                total = ring.add(
                    total,
                    ring.mul(
                        ring.from_int(int(cs[p])),
                        ring.mul(coords[int(ia[p])], coords[int(ib[p])]),
                    ),
                )
            if not ring.is_zero(total):
                return fi, total
        return None, None


def generate_all_equations(rs: RootSystem, signs: SignTable) -> EquationSet:
    """One pi/2 form per square, one 2pi/3 form per ordered orthogonal pair,
    one pi form per unordered pair, in deterministic key order."""
    forms: list[QuadraticForm] = []
    for square in enumerate_squares(rs):
        forms.append(pi2_form_for_square(rs, signs, square))
    n = rs.n_roots
    gram = rs._gram
    for i in range(n):
        for j in np.nonzero(gram[i] == 0)[0].tolist():
            forms.append(two_pi3_form(rs, signs, rs.roots[i], rs.roots[j]))
    for i in range(n):
        for j in np.nonzero(gram[i] == 0)[0].tolist():
            if j > i:
                forms.append(pi_form(rs, signs, rs.roots[i], rs.roots[j]))
    return EquationSet(rs.system, tuple(forms))


def eqset_from_json(rs: RootSystem, doc) -> EquationSet:
    if doc["system"] != str(rs.system):
        raise ValueError(f"equation file is for {doc['system']}, not {rs.system}")
    forms = []
    for fd in doc["forms"]:
        kind = FormKind(fd["kind"])
        kj = fd["key"]
        if kind is FormKind.PI2:
            key = tuple(int(x) for x in kj["sigma"])
        else:
            key = (tuple(int(x) for x in kj["alpha"]), tuple(int(x) for x in kj["beta"]))
        monos = tuple(
            sorted(
                (rs.weight_from_json(m["a"]), rs.weight_from_json(m["b"]), int(m["c"]))
                for m in fd["monomials"]
            )
        )
        forms.append(QuadraticForm(rs.system, kind, key, monos))
    return EquationSet(rs.system, tuple(forms))
