"""
Hall algebra of nilpotent representations over F1.

Basis elements are delta functions on iso classes, indexed by canonical
keys.  The product is

    delta_M * delta_N = sum_R a^R_{M,N} delta_R,

where a^R_{M,N} counts subrepresentations L of R with L ~ N and R/L ~ M,
and the coproduct is Delta(delta_R) = sum over ordered pairs (A, B) with
A + B ~ R of delta_A (x) delta_B.  All coefficients are Fractions.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import combinations

from .colored import CanonicalKey, component_keys, join_keys, rep_key
from .enumeration import IsoClassTable
from .quiver import Quiver
from .rep import (Representation, aut_count, hom_set, is_indecomposable, quotient,
                  subrep_as_rep, subrepresentations)

ZERO_KEY: CanonicalKey = b""


class HallElement:
    """Finite linear combination of iso classes with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[CanonicalKey, Fraction] = {}
        for k, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[k] = c

    @classmethod
    def basis(cls, key: CanonicalKey) -> "HallElement":
        return cls({key: 1})

    def __add__(self, other: "HallElement") -> "HallElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return HallElement(out)

    def __sub__(self, other: "HallElement") -> "HallElement":
        return self + other.scale(-1)

    def scale(self, c) -> "HallElement":
        return HallElement({k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, HallElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*[{k.decode() or '0'}]" for k, c in sorted(self.terms.items()))

    def to_json(self) -> dict:
        return {key_str(k): f"{c.numerator}/{c.denominator}" for k, c in sorted(self.terms.items())}


Tensor = dict  # (key, key) -> Fraction


def key_str(k: CanonicalKey) -> str:
    """Hex form of a key; the zero class is written "0"."""
    return k.hex() if k else "0"


def parse_key(text: str) -> CanonicalKey:
    return b"" if text == "0" else bytes.fromhex(text)


def _clean(t: dict) -> dict:
    return {k: v for k, v in t.items() if v}


def tensor_to_json(t: Tensor) -> dict:
    return {f"{key_str(a)}|{key_str(b)}": f"{c.numerator}/{c.denominator}" for (a, b), c in sorted(t.items())}


# -- counting ---------------------------------------------------------------

def hall_coeff(r: Representation, m: Representation, n: Representation) -> int:
    """a^R_{M,N}: subreps L of R with L ~ N and R/L ~ M."""
    km, kn = rep_key(m), rep_key(n)
    if m.dim + n.dim != r.dim:
        return 0
    count = 0
    for s in subrepresentations(r):
        if sum(s.dims) != n.dim:
            continue
        if rep_key(subrep_as_rep(s)) == kn and rep_key(quotient(r, s)) == km:
            count += 1
    return count


def ses_count(r: Representation, m: Representation, n: Representation) -> int:
    """P^R_{M,N}: pairs (N -> R injective, R -> M surjective) with image = kernel."""
    if m.dim + n.dim != r.dim:
        return 0
    incs = hom_set(n, r, kind="injective")
    if not incs:
        return 0
    projs = hom_set(r, m, kind="surjective")
    by_kernel = defaultdict(int)
    for p in projs:
        by_kernel[p.kernel()] += 1
    return sum(by_kernel.get(i.image(), 0) for i in incs)


def sigma_twist(v: Representation, sigma) -> Representation:
    """(V, f_sigma(0), ..., f_sigma(n-1)) for a representation of L_n."""
    q = v.quiver
    if not q.is_loop_quiver():
        raise ValueError("sigma_twist needs a representation of a loop quiver L_n")
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(q.num_arrows)):
        raise ValueError("sigma must be a permutation of the loops")
    return Representation(q, v.dims, tuple(v.maps[sigma[i]] for i in range(q.num_arrows)))


# -- the algebra ------------------------------------------------------------

class HallAlgebra:
    """Hall algebra truncated at total dimension ``dim_cap``."""

    def __init__(self, q: Quiver, dim_cap: int, table: IsoClassTable | None = None):
        self.quiver = q
        self.dim_cap = dim_cap
        if table is None:
            table = IsoClassTable.build(q, dim_cap, nilpotent_only=True)
        self.table = table
        self.reps: dict[CanonicalKey, Representation] = {}
        self.by_dimvec: dict[tuple, list[CanonicalKey]] = defaultdict(list)
        for e in table.entries():
            if e.rep.dim > dim_cap:
                continue
            self.reps[e.key] = e.rep
            self.by_dimvec[e.rep.dims].append(e.key)
        self._coeffs: dict[CanonicalKey, dict[tuple, int]] = {}
        self._aut: dict[CanonicalKey, int] = {}

    # classes

    def keys(self, dim: int | None = None) -> list[CanonicalKey]:
        return sorted(k for k, r in self.reps.items() if dim is None or r.dim == dim)

    def rep(self, key: CanonicalKey) -> Representation:
        try:
            return self.reps[key]
        except KeyError:
            raise KeyError(f"class {key!r} not in the table; extend the table (dim_cap={self.dim_cap})")

    def key_of(self, v: Representation) -> CanonicalKey:
        k = rep_key(v)
        if k not in self.reps:
            raise KeyError("representation outside the table; extend the table")
        return k

    def dims(self, key) -> tuple[int, ...]:
        return self.rep(key).dims

    def aut(self, key) -> int:
        if key not in self._aut:
            self._aut[key] = aut_count(self.rep(key))
        return self._aut[key]

    def is_indecomposable(self, key) -> bool:
        return len(component_keys(key)) == 1

    # structure constants

    def coefficients(self, rkey: CanonicalKey) -> dict[tuple, int]:
        """{(M, N): a^R_{M,N}} for one R, from a single pass over its subreps."""
        if rkey not in self._coeffs:
            r = self.rep(rkey)
            out: dict[tuple, int] = defaultdict(int)
            for s in subrepresentations(r):
                kn = rep_key(subrep_as_rep(s))
                km = rep_key(quotient(r, s))
                out[(km, kn)] += 1
            self._coeffs[rkey] = dict(out)
        return self._coeffs[rkey]

    def hall_coeff(self, rkey, mkey, nkey) -> int:
        return self.coefficients(rkey).get((mkey, nkey), 0)

    def ses_count(self, rkey, mkey, nkey) -> int:
        return ses_count(self.rep(rkey), self.rep(mkey), self.rep(nkey))

    def _targets(self, mkey, nkey) -> list[CanonicalKey]:
        dm, dn = self.dims(mkey), self.dims(nkey)
        if sum(dm) + sum(dn) > self.dim_cap:
            raise ValueError(f"product leaves the table (dim {sum(dm) + sum(dn)} > dim_cap {self.dim_cap}); "
                             "extend the table")
        target = tuple(a + b for a, b in zip(dm, dn))
        return self.by_dimvec.get(target, [])

    def basis_product(self, mkey, nkey) -> HallElement:
        return HallElement({r: self.hall_coeff(r, mkey, nkey) for r in self._targets(mkey, nkey)})

    def basis_product_ses(self, mkey, nkey) -> HallElement:
        """Same product computed as sum_R P^R_{M,N} / (a_M a_N) delta_R."""
        denom = self.aut(mkey) * self.aut(nkey)
        return HallElement({r: Fraction(self.ses_count(r, mkey, nkey), denom)
                            for r in self._targets(mkey, nkey)})

    def product(self, x: HallElement, y: HallElement) -> HallElement:
        out = HallElement()
        for a, ca in x.terms.items():
            for b, cb in y.terms.items():
                out = out + self.basis_product(a, b).scale(ca * cb)
        return out

    def basis_coproduct(self, rkey) -> Tensor:
        """Ordered splittings of R into two direct summands, via Krull-Schmidt."""
        parts = component_keys(rkey)
        seen = set()
        for k in range(len(parts) + 1):
            for idx in combinations(range(len(parts)), k):
                a = join_keys(parts[i] for i in idx)
                b = join_keys(parts[i] for i in range(len(parts)) if i not in idx)
                seen.add((a, b))
        return {pair: Fraction(1) for pair in sorted(seen)}

    def coproduct(self, x: HallElement) -> Tensor:
        out: dict = defaultdict(Fraction)
        for r, c in x.terms.items():
            for pair, v in self.basis_coproduct(r).items():
                out[pair] += c * v
        return _clean(out)

    def tensor_product(self, s: Tensor, t: Tensor) -> Tensor:
        """(a (x) b)(c (x) d) = ac (x) bd, extended bilinearly."""
        out: dict = defaultdict(Fraction)
        for (a, b), cs in s.items():
            for (c, d), ct in t.items():
                left = self.basis_product(a, c)
                right = self.basis_product(b, d)
                for k1, v1 in left.terms.items():
                    for k2, v2 in right.terms.items():
                        out[(k1, k2)] += cs * ct * v1 * v2
        return _clean(out)

    def lie_bracket(self, xkey, ykey) -> HallElement:
        if not (self.is_indecomposable(xkey) and self.is_indecomposable(ykey)):
            raise ValueError("lie_bracket is defined here on indecomposable classes")
        return self.basis_product(xkey, ykey) - self.basis_product(ykey, xkey)

    def twist_key(self, key, sigma) -> CanonicalKey:
        return rep_key(sigma_twist(self.rep(key), sigma))


# -- axiom checks -----------------------------------------------------------

def flip(t: Tensor) -> Tensor:
    return {(b, a): c for (a, b), c in t.items()}


def coassociativity_sides(alg: HallAlgebra, rkey):
    """((Delta x id) Delta, (id x Delta) Delta) applied to delta_R, as triple dicts."""
    left: dict = defaultdict(Fraction)
    right: dict = defaultdict(Fraction)
    for (a, b), c in alg.basis_coproduct(rkey).items():
        for (a1, a2), c1 in alg.basis_coproduct(a).items():
            left[(a1, a2, b)] += c * c1
        for (b1, b2), c2 in alg.basis_coproduct(b).items():
            right[(a, b1, b2)] += c * c2
    return _clean(left), _clean(right)


def check_consistency(alg: HallAlgebra) -> list[tuple]:
    """Triples (R, M, N) where a * a_M * a_N differs from P (empty if none)."""
    bad = []
    for r in alg.keys():
        for m in alg.keys():
            for n in alg.keys():
                if alg.dims(m) != tuple(x - y for x, y in zip(alg.dims(r), alg.dims(n))):
                    continue
                a = alg.hall_coeff(r, m, n)
                p = alg.ses_count(r, m, n)
                if a * alg.aut(m) * alg.aut(n) != p:
                    bad.append((r, m, n))
    return bad


def check_associativity(alg: HallAlgebra) -> list[tuple]:
    bad = []
    keys = alg.keys()
    for a in keys:
        for b in keys:
            for c in keys:
                if alg.rep(a).dim + alg.rep(b).dim + alg.rep(c).dim > alg.dim_cap:
                    continue
                ea, eb, ec = (HallElement.basis(k) for k in (a, b, c))
                if alg.product(alg.product(ea, eb), ec) != alg.product(ea, alg.product(eb, ec)):
                    bad.append((a, b, c))
    return bad


def check_coassociativity(alg: HallAlgebra) -> list:
    return [r for r in alg.keys() if (lambda lr: lr[0] != lr[1])(coassociativity_sides(alg, r))]


def check_cocommutativity(alg: HallAlgebra) -> list:
    return [r for r in alg.keys() if flip(alg.basis_coproduct(r)) != alg.basis_coproduct(r)]


def check_bialgebra(alg: HallAlgebra, max_dim: int | None = None) -> list[tuple]:
    max_dim = alg.dim_cap if max_dim is None else max_dim
    bad = []
    keys = alg.keys()
    for a in keys:
        for b in keys:
            if alg.rep(a).dim + alg.rep(b).dim > max_dim:
                continue
            lhs = alg.coproduct(alg.basis_product(a, b))
            rhs = alg.tensor_product(alg.basis_coproduct(a), alg.basis_coproduct(b))
            if lhs != rhs:
                bad.append((a, b))
    return bad


def check_grading(alg: HallAlgebra) -> list[tuple]:
    bad = []
    keys = alg.keys()
    for a in keys:
        for b in keys:
            if alg.rep(a).dim + alg.rep(b).dim > alg.dim_cap:
                continue
            want = tuple(x + y for x, y in zip(alg.dims(a), alg.dims(b)))
            for r in alg.basis_product(a, b).terms:
                if alg.dims(r) != want:
                    bad.append((a, b, r))
    return bad


def check_primitives(alg: HallAlgebra) -> list:
    bad = []
    for r in alg.keys():
        if r == ZERO_KEY:
            continue
        primitive = alg.basis_coproduct(r) == {(r, ZERO_KEY): 1, (ZERO_KEY, r): 1}
        if primitive != is_indecomposable(alg.rep(r)):
            bad.append(r)
    return bad


def check_twist_invariance(alg: HallAlgebra, sigma) -> list[tuple]:
    bad = []
    for r in alg.keys():
        rs = alg.twist_key(r, sigma)
        moved = {(alg.twist_key(m, sigma), alg.twist_key(n, sigma)): a
                 for (m, n), a in alg.coefficients(r).items()}
        if alg.coefficients(rs) != moved:
            bad.append(r)
    return bad


__all__ = [
    "HallAlgebra", "HallElement", "Tensor", "ZERO_KEY", "key_str", "parse_key", "hall_coeff", "ses_count", "sigma_twist",
    "flip", "tensor_to_json", "coassociativity_sides", "check_consistency", "check_associativity",
    "check_coassociativity", "check_cocommutativity", "check_bialgebra", "check_grading",
    "check_primitives", "check_twist_invariance",
]
