"""Independent reference computations built directly on sympy matrices.

Nothing here imports opcalc: algebras are given by raw structure constants
``table[i][j] = [c_0, .., c_{d-1}]`` with basis element 0 the unit.
"""

import itertools

import sympy


def mult_matrix(table, left):
    """Matrix of a -> left * a in the given basis."""
    d = len(table)
    cols = []
    for j in range(d):
        col = [0] * d
        for i, c in enumerate(left):
            for k in range(d):
                col[k] += c * table[i][j][k]
        cols.append(col)
    return sympy.Matrix(d, d, lambda r, c: cols[c][r])


def periodic_resolution_hh(table, x_index, fprime, max_degree):
    """dim HH_n of k[x]/(f) from the 2-periodic resolution.

    After tensoring with A the complex is A <-0- A <-f'(x)- A <-0- A <- ...,
    so odd differentials vanish and even ones are multiplication by f'(x).
    ``fprime`` is f'(x) as a coordinate vector.
    """
    d = len(table)
    zero = sympy.zeros(d, d)
    even = mult_matrix(table, fprime)

    def diff(n):
        if n <= 0:
            return sympy.zeros(d, d)
        return zero if n % 2 else even

    return [d - diff(n).rank() - diff(n + 1).rank() for n in range(max_degree + 1)]


def _mul(table, u, v):
    d = len(table)
    out = [0] * d
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b:
                    for k in range(d):
                        out[k] += a * b * table[i][j][k]
    return out


def _basis_tensors(d, n):
    return list(itertools.product(range(d), repeat=n + 1))


def _unit(d, i):
    v = [0] * d
    v[i] = 1
    return v


def textbook_b(table, n):
    """Matrix of b: C_n -> C_{n-1}, written from the usual face-sum formula."""
    d = len(table)
    src, tgt = _basis_tensors(d, n), _basis_tensors(d, n - 1)
    pos = {t: k for k, t in enumerate(tgt)}
    m = sympy.zeros(len(tgt), len(src))
    for col, a in enumerate(src):
        for i in range(n):
            prod = _mul(table, _unit(d, a[i]), _unit(d, a[i + 1]))
            for k, c in enumerate(prod):
                if c:
                    m[pos[a[:i] + (k,) + a[i + 2:]], col] += (-1) ** i * c
        prod = _mul(table, _unit(d, a[n]), _unit(d, a[0]))
        for k, c in enumerate(prod):
            if c:
                m[pos[(k,) + a[1:n]], col] += (-1) ** n * c
    return m


def separability_homotopy(table, idem, n):
    """h(a_0, .., a_n) = sum_k (u_k, v_k a_0, a_1, .., a_n) for e = sum u_k (x) v_k."""
    d = len(table)
    src, tgt = _basis_tensors(d, n), _basis_tensors(d, n + 1)
    pos = {t: k for k, t in enumerate(tgt)}
    m = sympy.zeros(len(tgt), len(src))
    for col, a in enumerate(src):
        for u, v in idem:
            va = _mul(table, v, _unit(d, a[0]))
            for i, cu in enumerate(u):
                for k, cv in enumerate(va):
                    if cu and cv:
                        m[pos[(i, k) + a[1:]], col] += cu * cv
    return m


def separable_hh(table, idem, max_degree):
    """dim HH_n of a separable algebra.

    Verifies b h + h b = id in degrees 1..max_degree (so HH_n = 0 there) and
    returns HH_0 = A / [A, A] computed from the rank of b_1.
    """
    d = len(table)
    for n in range(1, max_degree + 1):
        bh = textbook_b(table, n + 1) * separability_homotopy(table, idem, n)
        hb = separability_homotopy(table, idem, n - 1) * textbook_b(table, n)
        if bh + hb != sympy.eye(d ** (n + 1)):
            raise AssertionError(f"separability contraction fails in degree {n}")
    return [d - textbook_b(table, 1).rank()] + [0] * max_degree


def hochschild_dims_bar(table, max_degree):
    """dim HH_n straight from the textbook bar complex."""
    d = len(table)
    dims = []
    for n in range(max_degree + 1):
        rank_out = textbook_b(table, n).rank() if n else 0
        rank_in = textbook_b(table, n + 1).rank()
        dims.append(d ** (n + 1) - rank_out - rank_in)
    return dims


def connes_dims(table, max_degree):
    """Cyclic homology from the quotient C_n / (1 - (-1)^n t), with t the rotation
    (a_0, .., a_n) -> (a_n, a_0, .., a_{n-1}); ranks via sympy."""
    d = len(table)

    def rotation(n):
        src = _basis_tensors(d, n)
        pos = {t: k for k, t in enumerate(src)}
        m = sympy.zeros(len(src), len(src))
        for col, a in enumerate(src):
            m[pos[(a[n],) + a[:n]], col] = 1
        return m

    def relations(n):
        return sympy.eye(d ** (n + 1)) - (-1) ** n * rotation(n)

    def quotient_rank(n):
        # rank of the map C_n / R_n -> C_{n-1} / R_{n-1} induced by b
        if n == 0:
            return 0
        r = relations(n - 1)
        return textbook_b(table, n).row_join(r).rank() - r.rank()

    dims = []
    for n in range(max_degree + 1):
        dim_q = d ** (n + 1) - relations(n).rank()
        dims.append(dim_q - quotient_rank(n) - quotient_rank(n + 1))
    return dims


# structure constants of the test algebras, written out by hand
DUAL = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]            # k[x]/(x^2)
GROUP = [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]           # k[x]/(x^2 - 1)
RATIONALS = [[[1]]]


def matrix_units_table():
    """M_2 in the basis 1, e12, e21, e22."""
    mats = [((1, 0), (0, 1)), ((0, 1), (0, 0)), ((0, 0), (1, 0)), ((0, 0), (0, 1))]
    M = [sympy.Matrix(m) for m in mats]
    basis = sympy.Matrix.hstack(*[m.reshape(4, 1) for m in M])
    table = []
    for a in M:
        row = []
        for b in M:
            coords = basis.solve((a * b).reshape(4, 1))
            row.append([int(c) for c in coords])
        table.append(row)
    return table


def matrix_units_idempotent():
    """sum_i e_{i1} (x) e_{1i} in the basis 1, e12, e21, e22 (e11 = 1 - e22)."""
    e11 = [1, 0, 0, -1]
    e12 = [0, 1, 0, 0]
    e21 = [0, 0, 1, 0]
    return [(e11, e11), (e21, e12)]


GROUP_IDEMPOTENT = [([sympy.Rational(1, 2), 0], [1, 0]), ([0, sympy.Rational(1, 2)], [0, 1])]


def textbook_delta(table, p):
    """Matrix of the Hochschild coboundary C^p(A, A) -> C^{p+1}(A, A).

    A cochain is indexed by (argument tuple, output coordinate)."""
    d = len(table)
    src = [(a, k) for a in itertools.product(range(d), repeat=p) for k in range(d)]
    tgt = [(a, k) for a in itertools.product(range(d), repeat=p + 1) for k in range(d)]
    spos = {s: i for i, s in enumerate(src)}
    m = sympy.zeros(len(tgt), len(src))
    for row, (a, k) in enumerate(tgt):
        # a_1 f(a_2..) + sum (-1)^i f(.., a_i a_{i+1}, ..) + (-1)^{p+1} f(a_1..a_p) a_{p+1}
        for j in range(d):
            c = table[a[0]][j][k]
            if c:
                m[row, spos[(a[1:], j)]] += c
            c = table[j][a[p]][k]
            if c:
                m[row, spos[(a[:p], j)]] += (-1) ** (p + 1) * c
        for i in range(1, p + 1):
            for j, c in enumerate(table[a[i - 1]][a[i]]):
                if c:
                    m[row, spos[(a[:i - 1] + (j,) + a[i + 1:], k)]] += (-1) ** i * c
    return m


def hochschild_cohomology_dims(table, max_degree):
    d = len(table)
    dims = []
    for p in range(max_degree + 1):
        rank_out = textbook_delta(table, p).rank()
        rank_in = textbook_delta(table, p - 1).rank() if p else 0
        dims.append(d ** (p + 1) - rank_out - rank_in)
    return dims
