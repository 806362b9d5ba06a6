"""The 45-term invariant cubic form on the 27 coordinates.

A term is an unordered triple of distinct coordinate labels with a sign; the
form is C(x) = sum sign * x_u x_v x_w.  The monomial generators permute the
coordinates with unit scalars, so they act on signed triples directly, and
the full form is the closure of four seed triples under that action:

    + (-3,-2,-1)    - (-3,1,4)    - (1,9,17)    + (1,10,24)

Every term must satisfy the diagonal eigenvalue condition: the z-exponents
of f1 (and of f2) on its three coordinates sum to 0 mod 5, otherwise the
diagonal subgroup could not fix the monomial.

Invariance under a dense matrix m is checked exactly by expanding
C(m x) as a polynomial and comparing coefficients with C; that is the same
test as transforming the symmetric coefficient tensor T by m on all three
slots, since C(m x) = T(mx, mx, mx)/6.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import cyclo
from .cyclo import CycNum
from . import exactlinalg as la
from .exactlinalg import ExactMatrix
from . import generators
from .generators import LABELS, LABEL_INDEX, F1_EXP, F2_EXP, CheckReport


class NotMonomialError(ValueError):
    pass


class NonRealSignError(ValueError):
    pass


class SignConflictError(ValueError):
    pass


@dataclass(frozen=True)
class SignedTriple:
    """An unordered triple of distinct labels with a sign +-1."""

    coords: frozenset
    sign: int

    def __post_init__(self):
        if len(self.coords) != 3:
            raise ValueError("need 3 distinct coordinate labels")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +-1")
        if not self.coords <= set(LABELS):
            raise ValueError(f"unknown labels in {set(self.coords)}")

    @property
    def sorted_coords(self):
        return tuple(sorted(self.coords))


def triple(a, b, c, sign):
    return SignedTriple(frozenset((a, b, c)), sign)


#: The four seed triples with their signs.
SEEDS = (
    triple(-3, -2, -1, +1),
    triple(-3, 1, 4, -1),
    triple(1, 9, 17, -1),
    triple(1, 10, 24, +1),
)


class CubicForm:
    """An immutable set of signed triples, at most one sign per triple."""

    def __init__(self, terms):
        terms = sorted(terms, key=lambda t: t.sorted_coords)
        signs = {}
        for t in terms:
            if signs.setdefault(t.coords, t.sign) != t.sign:
                raise SignConflictError(f"conflicting signs on {t.sorted_coords}")
        self.terms = tuple(terms)
        self._signs = signs

    def sign_of(self, coords):
        return self._signs.get(frozenset(coords))

    def with_flipped(self, coords):
        coords = frozenset(coords)
        return CubicForm(
            SignedTriple(t.coords, -t.sign if t.coords == coords else t.sign)
            for t in self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, CubicForm):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        return f"<CubicForm {len(self.terms)} terms>"


@dataclass(frozen=True)
class MonomialMap:
    """Permutation-with-scalars action of a monomial matrix on labels.

    perm[u] is the label whose basis vector receives e_u, and scale[u] the
    unit scalar attached: m e_u = scale[u] * e_perm[u].
    """

    perm: tuple
    scale: tuple

    def perm_of(self, label):
        return self.perm[LABEL_INDEX[label]]

    def scale_of(self, label):
        return self.scale[LABEL_INDEX[label]]


def as_monomial(m: ExactMatrix) -> MonomialMap:
    """Extract the monomial action; fails on matrices with dense columns."""
    if m.rows != 27 or m.cols != 27:
        raise NotMonomialError("expected a 27x27 matrix")
    perm = [None] * 27
    scale = [None] * 27
    for j in range(27):
        nz = [i for i in range(27) if not m.data[i][j].is_zero()]
        if len(nz) != 1:
            raise NotMonomialError(f"column {j} has {len(nz)} nonzero entries")
        i = nz[0]
        perm[j] = LABELS[i]
        scale[j] = m.data[i][j]
    if len(set(perm)) != 27:
        raise NotMonomialError("repeated target row")
    return MonomialMap(tuple(perm), tuple(scale))


def act_on_triple(g: MonomialMap, t: SignedTriple) -> SignedTriple:
    """Push a signed triple through a monomial map.

    The image coefficient picks up the product of the three scalars, which
    must be +-1 for the triple to stay sign-valued.
    """
    prod = cyclo.ONE
    for c in t.coords:
        prod = prod * g.scale_of(c)
    if prod == cyclo.ONE:
        s = 1
    elif prod == cyclo.MINUS_ONE:
        s = -1
    else:
        raise NonRealSignError(f"scalar product {prod} is not +-1 on {t.sorted_coords}")
    return SignedTriple(frozenset(g.perm_of(c) for c in t.coords), t.sign * s)


def close_terms(seeds, gens) -> CubicForm:
    """Breadth-first closure of seed triples under monomial maps.

    Deterministic for a fixed seed and generator order; the resulting term
    set is order-independent.  Reaching one coordinate set with both signs
    raises SignConflictError.
    """
    signs = {}
    queue = []
    for t in seeds:
        prev = signs.setdefault(t.coords, t.sign)
        if prev != t.sign:
            raise SignConflictError(f"conflicting seed signs on {t.sorted_coords}")
        queue.append(t)
    i = 0
    while i < len(queue):
        t = queue[i]
        i += 1
        for g in gens:
            u = act_on_triple(g, t)
            prev = signs.get(u.coords)
            if prev is None:
                signs[u.coords] = u.sign
                queue.append(u)
            elif prev != u.sign:
                raise SignConflictError(f"sign conflict reaching {u.sorted_coords}")
    return CubicForm(SignedTriple(c, s) for c, s in signs.items())


def eigenvalue_check(t: SignedTriple) -> bool:
    """Whether both diagonal generators act trivially on the monomial."""
    for table in (F1_EXP, F2_EXP):
        if sum(table[LABEL_INDEX[c]] for c in t.coords) % 5 != 0:
            return False
    return True


@lru_cache(maxsize=1)
def dickson_form() -> CubicForm:
    """The 45-term form: closure of the seeds under the monomial generators."""
    g = generators.build_all()
    form = close_terms(SEEDS, (as_monomial(g.d), as_monomial(g.ac)))
    assert len(form) == 45
    return form


def to_tensor(c: CubicForm) -> dict:
    """The fully symmetric coefficient tensor as a sparse dict on labels.

    T[(u, v, w)] = sign for every ordering of each term; 45 terms give 270
    nonzero entries, and C(x) = T(x, x, x)/6.
    """
    t = {}
    sign_one = {1: cyclo.ONE, -1: cyclo.MINUS_ONE}
    for term in c:
        a, b, d = term.sorted_coords
        val = sign_one[term.sign]
        for key in ((a, b, d), (a, d, b), (b, a, d), (b, d, a), (d, a, b), (d, b, a)):
            t[key] = val
    return t


def _term_poly(m: ExactMatrix, idx_triple):
    """Coefficients of prod_k (m x)_{i_k} as a dict on sorted index triples."""
    nz = []
    for i in idx_triple:
        row = m.data[i]
        nz.append([(j, e) for j, e in enumerate(row) if not e.is_zero()])
    out = {}
    zero = cyclo.ZERO
    for a, ca in nz[0]:
        for b, cb in nz[1]:
            cab = ca * cb
            for c, cc in nz[2]:
                key = tuple(sorted((a, b, c)))
                out[key] = out.get(key, zero) + cab * cc
    return {k: v for k, v in out.items() if not v.is_zero()}


def _form_index_dict(c: CubicForm):
    sign_one = {1: cyclo.ONE, -1: cyclo.MINUS_ONE}
    return {tuple(sorted(LABEL_INDEX[l] for l in t.coords)): sign_one[t.sign]
            for t in c}


def invariance_report(c: CubicForm, m: ExactMatrix):
    """Expand C(m x) exactly.

    Returns (invariant, flip_safe) where `invariant` says C(m x) = C(x) and
    `flip_safe` lists the terms whose single sign flip would also leave the
    form invariant under m (expected empty for a faithful dense generator:
    flipping term t changes C by -2 sign_t x_t, so the flipped form is
    invariant iff the expansion of the term's own monomial is exactly that
    monomial).
    """
    target = _form_index_dict(c)
    sign_one = {1: cyclo.ONE, -1: cyclo.MINUS_ONE}
    total = {}
    zero = cyclo.ZERO
    flip_safe = []
    for t in c:
        key = tuple(sorted(LABEL_INDEX[l] for l in t.coords))
        poly = _term_poly(m, key)
        if poly == {key: cyclo.ONE}:
            flip_safe.append(t)
        s = sign_one[t.sign]
        for k, v in poly.items():
            acc = total.get(k, zero) + s * v
            if acc.is_zero():
                total.pop(k, None)
            else:
                total[k] = acc
    return total == target, flip_safe


def verify_invariance(c: CubicForm, m: ExactMatrix) -> bool:
    """True iff the transformed tensor equals the original exactly."""
    return invariance_report(c, m)[0]


def identity_vector():
    """(1, 1, 1; 0^24) in storage order."""
    return (cyclo.ONE,) * 3 + (cyclo.ZERO,) * 24


def evaluate(c: CubicForm, entries) -> CycNum:
    """The value of the form on a vector of 27 scalars."""
    sign_one = {1: cyclo.ONE, -1: cyclo.MINUS_ONE}
    acc = cyclo.ZERO
    for t in c:
        prod = sign_one[t.sign]
        for lab in t.coords:
            prod = prod * entries[LABEL_INDEX[lab]]
            if prod.is_zero():
                break
        acc = acc + prod
    return acc


def jordan_identity_check(c: CubicForm, gens) -> CheckReport:
    """Certify the fixed vector of the point stabilizer as the Jordan identity.

    `gens` maps names to matrices; the expected set is {f1, f2, ac, eprime}.
    Each must fix (1,1,1;0^24) exactly, and the form must evaluate to +1 on
    it (its support is the single positive term (-3,-2,-1)).
    """
    v = identity_vector()
    checks = [(f"{name} fixes (1,1,1;0^24)", la.matvec(m, v) == v)
              for name, m in gens.items()]
    checks.append(("form value on fixed vector is +1", evaluate(c, v) == cyclo.ONE))
    return CheckReport(tuple(checks))
