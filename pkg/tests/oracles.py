"""Independent reference computations used to cross-check the package.

Nothing here calls a package verifier.  Groups are rebuilt from permutations
or modular arithmetic, the Sweedler algebra from its presentation on
``1, g, x, xg``, and the point-action equations are written out by hand.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product

import sympy

# ---------------------------------------------------------------------------
# groups as (elements, mul, identity, inv) with elements hashable


def cyclic(n):
    els = list(range(n))
    return els, (lambda a, b: (a + b) % n), 0


def klein():
    els = [(a, b) for a in range(2) for b in range(2)]
    return els, (lambda u, v: ((u[0] + v[0]) % 2, (u[1] + v[1]) % 2)), (0, 0)


def sym3():
    els = list(permutations(range(3)))
    return els, (lambda p, q: tuple(p[q[i]] for i in range(3))), (0, 1, 2)


def inverse_of(els, mul, e, a):
    return next(b for b in els if mul(a, b) == e)


def brute_subgroups(els, mul, e):
    """All subsets containing ``e`` and closed under the product."""
    out = []
    for r in range(1, len(els) + 1):
        for sub in combinations(els, r):
            s = set(sub)
            if e in s and all(mul(a, b) in s for a in s for b in s):
                out.append(frozenset(s))
    return out


def subgroup_count(els, mul, e):
    return len(brute_subgroups(els, mul, e))


# ---------------------------------------------------------------------------
# point actions written straight from the defining equations


def dual_point_ok(els, mul, e, lam):
    """(a'), (b'), (c') for ``lam: G -> Q`` describing a partial ``k^G`` action on ``k``."""
    inv = {a: inverse_of(els, mul, e, a) for a in els}
    if sum(lam[g] for g in els) != 1:
        return False
    for g in els:
        if lam[g] != sum(lam[mul(g, inv[h])] * lam[h] for h in els):
            return False
    for g, h in product(els, repeat=2):
        lhs = lam[h] * lam[g]
        if lhs != lam[mul(h, inv[g])] * lam[g] or lhs != lam[mul(inv[g], h)] * lam[g]:
            return False
    return True


def group_point_ok(els, mul, e, lam):
    """(1), (2), (3) for a partial ``kG`` action on ``k``."""
    if lam[e] != 1:
        return False
    if any(lam[g] != lam[g] * lam[g] for g in els):
        return False
    return all(lam[g] * lam[h] == lam[g] * lam[mul(g, h)] for g, h in product(els, repeat=2))


def constant_on_support_solutions(els, mul, e, dual: bool):
    """Every nonempty support ``S`` with ``lam = 1/|S|`` (dual) or ``1`` (group algebra) that solves the system."""
    found = []
    for r in range(1, len(els) + 1):
        for sub in combinations(els, r):
            s = set(sub)
            v = Fraction(1, len(s)) if dual else Fraction(1)
            lam = {g: (v if g in s else Fraction(0)) for g in els}
            ok = dual_point_ok(els, mul, e, lam) if dual else group_point_ok(els, mul, e, lam)
            if ok:
                found.append(frozenset(s))
    return found


# ---------------------------------------------------------------------------
# Sweedler algebra from the presentation g^2 = 1, x^2 = 0, gx = -xg
# normal-form words x^a g^b indexed 0:1, 1:g, 2:x, 3:xg


def _word(i):
    return {0: (0, 0), 1: (0, 1), 2: (1, 0), 3: (1, 1)}[i]


def _index(a, b):
    return {(0, 0): 0, (0, 1): 1, (1, 0): 2, (1, 1): 3}[(a, b)]


def word_mul(i, j):
    """``(x^a g^b)(x^c g^d) = (-1)^{bc} x^{a+c} g^{b+d}``; returns ``{index: coeff}``."""
    a, b = _word(i)
    c, d = _word(j)
    if a + c > 1:
        return {}
    return {_index(a + c, (b + d) % 2): (-1) ** (b * c)}


def h4_mul(u, v):
    out = [Fraction(0)] * 4
    for i, ui in enumerate(u):
        for j, vj in enumerate(v):
            if ui and vj:
                for k, c in word_mul(i, j).items():
                    out[k] += ui * vj * c
    return out


def _t_mul(s, t):
    out = {}
    for (i, j), c in s.items():
        for (k, l), d in t.items():
            for p, x in word_mul(i, k).items():
                for q, y in word_mul(j, l).items():
                    out[(p, q)] = out.get((p, q), 0) + c * d * x * y
    return {k: v for k, v in out.items() if v}


def word_comult(i):
    """``Delta g = g (x) g`` and ``Delta x = x (x) 1 + g (x) x``, extended multiplicatively."""
    a, b = _word(i)
    res = {(0, 0): Fraction(1)}
    if a:
        res = _t_mul(res, {(2, 0): Fraction(1), (1, 2): Fraction(1)})
    if b:
        res = _t_mul(res, {(1, 1): Fraction(1)})
    return res


def word_counit(i):
    return Fraction(1) if _word(i)[0] == 0 else Fraction(0)


def word_antipode(i):
    """``S(g) = g``, ``S(x) = -gx = xg``; anti-multiplicative."""
    a, b = _word(i)
    v = [Fraction(1), 0, 0, 0]
    if b:
        v = h4_mul([0, 1, 0, 0], v)
    if a:
        v = h4_mul(v, [0, 0, 0, 1])
    return v


# e1, e2, h1, h2 in word coordinates (columns of the change of basis)
_H = Fraction(1, 2)
SWEEDLER_BASIS = [
    [_H, _H, 0, 0],
    [_H, -_H, 0, 0],
    [0, 0, _H, _H],
    [0, 0, _H, -_H],
]


def _to_new(v):
    m = sympy.Matrix(SWEEDLER_BASIS).T
    sol = m.solve(sympy.Matrix([sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) for c in v]))
    return [Fraction(int(s.p), int(s.q)) for s in sol]


def sweedler_structure():
    """Structure constants of the Sweedler algebra in the basis e1, e2, h1, h2.

    Returns ``(mult, unit, comult, counit, antipode)`` with ``mult[i][j]`` a coordinate
    list, ``comult[i]`` a ``{(j, k): c}`` dict and ``antipode[i]`` the image of ``b_i``.
    """
    B = SWEEDLER_BASIS
    mult = [[_to_new(h4_mul(B[i], B[j])) for j in range(4)] for i in range(4)]
    unit = _to_new([1, 0, 0, 0])
    comult = []
    for i in range(4):
        acc = {}
        for w, c in enumerate(B[i]):
            if c:
                for (p, q), d in word_comult(w).items():
                    acc[(p, q)] = acc.get((p, q), 0) + c * d
        # rewrite both legs in the new basis
        conv = {}
        cols = {p: _to_new([1 if r == p else 0 for r in range(4)]) for p in range(4)}
        for (p, q), d in acc.items():
            for j, x in enumerate(cols[p]):
                for k, y in enumerate(cols[q]):
                    if x and y:
                        conv[(j, k)] = conv.get((j, k), 0) + d * x * y
        comult.append({k: v for k, v in conv.items() if v})
    counit = [sum(c * word_counit(w) for w, c in enumerate(B[i])) for i in range(4)]
    antipode = []
    for i in range(4):
        v = [Fraction(0)] * 4
        for w, c in enumerate(B[i]):
            if c:
                v = [a + c * b for a, b in zip(v, word_antipode(w))]
        antipode.append(_to_new(v))
    return mult, unit, comult, counit, antipode


def hopf_point_ok(structure, lam):
    """Partial action of a Hopf algebra on ``k`` from raw structure constants.

    ``lam(1_H) = 1``, ``lam_h = lam(h1) lam(h2)`` and
    ``lam_h lam_k = lam(h1) lam(h2 k) = lam(h1 k) lam(h2)`` on basis elements.
    """
    mult, unit, comult, _, _ = structure
    n = len(lam)

    def ev(v):
        return sum(c * lam[i] for i, c in enumerate(v))

    if ev(unit) != 1:
        return False
    for i in range(n):
        if lam[i] != sum(c * lam[j] * lam[k] for (j, k), c in comult[i].items()):
            return False
    for i, m in product(range(n), repeat=2):
        lhs = lam[i] * lam[m]
        if lhs != sum(c * lam[j] * ev(mult[k][m]) for (j, k), c in comult[i].items()):
            return False
        if lhs != sum(c * ev(mult[j][m]) * lam[k] for (j, k), c in comult[i].items()):
            return False
    return True


# ---------------------------------------------------------------------------
# smash normal form on the cycle category for the uniform 1/n action


def cycle_smash_dims(n):
    """Dimension of ``span{f # p_a}`` per hom space of the 3-cycle category.

    With ``p_g . f = f/n`` one has ``f # p_a = sum_b (1/n) f (x) p_b``; the
    coefficient matrix over ``a, b`` is constant, so each nonzero hom space
    contributes its own dimension times the rank of that matrix.
    """
    homs = {("1", "1"): 1, ("2", "2"): 1, ("3", "3"): 1, ("2", "1"): 1, ("3", "2"): 1, ("1", "3"): 1}
    objs = ["1", "2", "3"]
    m = sympy.Matrix(n, n, lambda a, b: sympy.Rational(1, n))
    r = m.rank()
    return {(y, x): homs.get((y, x), 0) * r for y in objs for x in objs}


# ---------------------------------------------------------------------------
# globalization of a point action: B = H > F(1) with F(1)(h) = lam(h) and
# (k > phi)(h) = phi(h k), so dim B is the rank of the matrix lam(b_h b_k)


def point_globalization_dim(products, lam):
    """``products[h][k]`` is the coordinate list of ``b_h b_k``."""
    n = len(lam)

    def q(c):
        c = Fraction(c)
        return sympy.Rational(c.numerator, c.denominator)

    m = sympy.Matrix(n, n, lambda h, k: sum(q(c) * q(lam[i]) for i, c in enumerate(products[h][k])))
    return m.rank()


def group_coset_count(order, sub_order):
    return order // sub_order


def cycle_globalization_dims(n):
    """Uniform ``1/n`` action on the 3-cycle: ``F(f)(p_g) = f/n`` and ``p_a > F(f)`` picks out ``p_a``.

    The translates span all of ``(k^G)^*``, so each nonzero hom space becomes ``n``-dimensional.
    """
    m = sympy.Matrix(n, n, lambda a, g: sympy.Rational(1, n) if a == g else 0)
    r = m.rank()
    objs = ["1", "2", "3"]
    nonzero = {("1", "1"), ("2", "2"), ("3", "3"), ("2", "1"), ("3", "2"), ("1", "3")}
    return {f"{y}|{x}": (r if (y, x) in nonzero else 0) for y in objs for x in objs}


def point_smash_dim(comult, lam):
    """``1 # b_i = sum lam(b_i1) b_i2``; the smash on ``k`` is the span of these vectors."""
    n = len(lam)

    def q(c):
        c = Fraction(c)
        return sympy.Rational(c.numerator, c.denominator)

    m = sympy.Matrix(n, n, lambda i, k: sum(q(c) * q(lam[j]) for (j, kk), c in comult[i].items() if kk == k))
    return m.rank()
