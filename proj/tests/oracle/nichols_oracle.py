#!/usr/bin/env python3
"""Independent oracle for the frozen values in tests/frozen_oracle.hpp.

Graded dimensions of Nichols algebras come from the rank of the quantum
symmetrizer, degree by degree and block by block, over exact rationals at a
fixed generic-looking point. PBW series come from sympy series expansion of
products of (1 + t^d) and 1/(1 - t^d). Nothing here shares code with the C++
engine.

    python3 tests/oracle/nichols_oracle.py > tests/frozen_oracle.hpp
"""

import itertools
import sys
from fractions import Fraction as F

import sympy


# ----------------------------------------------------------------- spaces
#
# A space is (comp, act): comp[k] is the component of basis vector k and
# act[j][k][l] the coefficient of e_k in g_j . e_l.


def zero(n):
    return [[F(0)] * n for _ in range(n)]


def space_two_block(q12, q21, q11, q22, a, b):
    """Pale block x1, x3_2 (component 0) next to a 2-dim component x2, x5_2."""
    g1, g2 = zero(4), zero(4)
    g1[0][0] = g1[1][1] = q11
    g1[2][2] = g1[3][3] = q12
    g1[2][3] = q12 * a
    g2[0][0] = g2[0][1] = g2[1][1] = q21
    g2[2][2] = g2[3][3] = q22
    g2[2][3] = q22 * b
    return [0, 0, 1, 1], [g1, g2]


def space_pale_point(q12, q21, q22):
    g1, g2 = zero(3), zero(3)
    g1[0][0] = g1[1][1] = F(-1)
    g1[2][2] = q12
    g2[0][0] = g2[0][1] = g2[1][1] = q21
    g2[2][2] = q22
    return [0, 0, 1], [g1, g2]


def space_e3(q, q22):
    g1, g2 = zero(4), zero(4)
    for i in range(3):
        g1[i][i] = F(-1)
        g2[i][i] = 1 / q
        if i > 0:
            g2[i - 1][i] = 1 / q
    g1[3][3] = q
    g2[3][3] = q22
    return [0, 0, 0, 1], [g1, g2]


def space_three(q12, q13, q23, q21, q31, q32, q22, q33, a):
    g = [zero(4) for _ in range(3)]
    g[0][0][0] = g[0][1][1] = F(-1)
    g[0][2][2], g[0][3][3] = q12, q13
    g[1][0][0] = g[1][0][1] = g[1][1][1] = q21
    g[1][2][2], g[1][3][3] = q22, q23
    g[2][0][0] = g[2][1][1] = q31
    g[2][0][1] = q31 * a
    g[2][2][2], g[2][3][3] = q32, q33
    return [0, 0, 1, 2], g


def space_jordan(eps, l):
    g = zero(l)
    for i in range(l):
        g[i][i] = eps
        if i > 0:
            g[i - 1][i] = F(1)
    return [0] * l, [g]


# ------------------------------------------------------- symmetrizer rank


def braid_pair(space, k, l):
    """c(e_k (x) e_l) = (g_{comp k} . e_l) (x) e_k as {(m, k): coeff}."""
    comp, act = space
    g = act[comp[k]]
    return {(m, k): g[m][l] for m in range(len(comp)) if g[m][l] != 0}


def apply_c(space, i, vec):
    out = {}
    for w, c in vec.items():
        for (m, k), x in braid_pair(space, w[i], w[i + 1]).items():
            nw = w[:i] + (m, k) + w[i + 2:]
            out[nw] = out.get(nw, 0) + c * x
    return {w: c for w, c in out.items() if c != 0}


def add_into(acc, vec, scale=1):
    for w, c in vec.items():
        acc[w] = acc.get(w, 0) + scale * c


def symmetrizer(space, word, memo):
    """S_n = (S_{n-1} (x) id)(1 + c_{n-1} + c_{n-1}c_{n-2} + ... + c_{n-1}...c_1).

    The term starting at c_i carries the factor in position i to the end.
    """
    if word in memo:
        return memo[word]
    n = len(word)
    if n <= 1:
        return {word: F(1)}
    t = {word: F(1)}
    for i in range(n - 1):
        cur = {word: F(1)}
        for j in range(i, n - 1):
            cur = apply_c(space, j, cur)
        add_into(t, cur)
    out = {}
    for w, c in t.items():
        if c == 0:
            continue
        for v, d in symmetrizer(space, w[:-1], memo).items():
            key = v + (w[-1],)
            out[key] = out.get(key, 0) + c * d
    out = {w: c for w, c in out.items() if c != 0}
    memo[word] = out
    return out


def rank(rows):
    pivots = {}
    r = 0
    for row in rows:
        row = dict(row)
        while row:
            p = min(row)
            if p not in pivots:
                piv = row[p]
                pivots[p] = {k: v / piv for k, v in row.items()}
                r += 1
                break
            prow = pivots[p]
            lam = row[p]
            for k, v in prow.items():
                nv = row.get(k, 0) - lam * v
                if nv == 0:
                    row.pop(k, None)
                else:
                    row[k] = nv
    return r


def nichols_dims(space, N):
    comp, _ = space
    n_basis = len(comp)
    rank_c = max(comp) + 1
    dims = []
    memo = {}
    for n in range(N + 1):
        blocks = {}
        for w in itertools.product(range(n_basis), repeat=n):
            key = tuple(sum(1 for x in w if comp[x] == j) for j in range(rank_c))
            blocks.setdefault(key, []).append(w)
        total = 0
        for words in blocks.values():
            total += rank([symmetrizer(space, w, memo) for w in words])
        dims.append(total)
    return dims


# -------------------------------------------------------------- PBW series

t = sympy.symbols("t")


def pbw_series(gens, N):
    """gens: list of (degree, bounded)."""
    expr = sympy.Integer(1)
    for d, bounded in gens:
        expr *= (1 + t**d) if bounded else 1 / (1 - t**d)
    s = sympy.series(expr, t, 0, N + 1).removeO()
    return [int(s.coeff(t, n)) for n in range(N + 1)]


B, U = True, False
PBW = {
    "E3-": [(1, B), (1, B), (1, B), (3, B), (2, U), (2, U), (1, B)],
    "E3+": [(1, B), (1, B), (1, B), (3, U), (2, B), (5, B), (4, U), (2, U), (3, B), (1, U)],
    "E+": [(1, B), (1, B), (1, U), (2, B)],
    "E-": [(1, B), (1, B), (1, B), (2, U)],
    "Estar": [(1, B), (2, U), (3, B), (4, U), (1, B), (2, B), (1, B)],
    "Emn(+,+)": [(1, B), (1, B), (1, U), (2, B), (1, U), (2, B)],
    "Emn(+,-)": [(1, B), (1, B), (1, U), (2, B), (1, B), (2, U)],
    "Emn(-,+)": [(1, B), (1, B), (1, B), (2, U), (1, U), (2, B)],
    "Emn(-,-)": [(1, B), (1, B), (1, B), (2, U), (1, B), (2, U)],
    "Einf": [(1, U), (2, B), (3, B), (4, B), (8, U), (4, U), (5, B), (6, B), (7, U),
             (1, B), (2, B), (3, B), (1, B), (2, B), (1, B)],
    "S20": [(1, B), (2, U), (1, B), (2, U), (1, B), (1, B)],
    "S1p(-1/2)": [(1, U), (1, U), (2, B), (2, B), (1, B), (1, B)],
    "S1p(-1)": [(1, U), (1, U), (3, B), (3, B), (2, B), (4, U), (2, U), (1, B), (1, B)],
    "S1m": [(1, B), (2, U), (1, U), (3, B), (3, B), (2, U), (2, U), (1, B), (1, B)],
}

DIM_N = 10


def main():
    q, q13, q23 = F(2, 3), F(5, 7), F(3, 11)
    spaces = {
        "E3-": (space_e3(q, F(-1)), 5),
        "E3+": (space_e3(q, F(1)), 4),
        "Emn(+,+)": (space_three(q, q13, q23, 1 / q, 1 / q13, 1 / q23, F(1), F(1), F(-4, 5)), 3),
        "S20": (space_two_block(q, 1 / q, F(-1), F(-1), F(1), F(0)), 4),
        "E+": (space_pale_point(q, 1 / q, F(1)), 5),
        "S1p(-1/2)": (space_two_block(q, 1 / q, F(-1), F(1), F(-1, 2), F(1)), 4),
        "V(-1,3)": (space_jordan(F(-1), 3), 6),
        "V(-1,2)": (space_jordan(F(-1), 2), 6),
        "V(1,2)": (space_jordan(F(1), 2), 6),
    }
    print("// Generated by tests/oracle/nichols_oracle.py; do not edit.")
    print("// Symmetrizer ranks at q = 2/3, q13 = 5/7, q23 = 3/11, a = -4/5;")
    print("// PBW series by sympy expansion.")
    print("#pragma once")
    print()
    print("#include <map>")
    print("#include <string>")
    print("#include <vector>")
    print()
    print("namespace frozen {")
    print()
    print("inline const std::map<std::string, std::vector<long long>> symmetrizer_dims = {")
    for name, (sp, N) in spaces.items():
        dims = nichols_dims(sp, N)
        print('    {"%s", {%s}},' % (name, ", ".join(map(str, dims))))
        sys.stderr.write("%s %s\n" % (name, dims))
    print("};")
    print()
    print("inline const std::map<std::string, std::vector<long long>> pbw_series = {")
    for name, gens in PBW.items():
        print('    {"%s", {%s}},' % (name, ", ".join(map(str, pbw_series(gens, DIM_N)))))
    print("};")
    print()
    print("} // namespace frozen")


if __name__ == "__main__":
    main()
