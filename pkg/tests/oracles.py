"""Independent brute-force reference computations for the test suite.

Written from scratch against the raw definitions using only the standard
library — nothing here imports the package under test, so these results can
serve as oracles for it.
"""

import itertools
from math import lcm, prod


def orth_brute_force(factors):
    """All invertible matrices on G+G^ preserving <chi,g>, by exhaustion.

    factors: cyclic factor orders of G.  A matrix is a tuple of rows; row i
    holds the image coordinates of the i-th generator of G+G^ (G coordinates
    first, dual coordinates second), entries reduced mod the factor of the
    coordinate they land in.
    """
    n = len(factors)
    dfac = list(factors) + list(factors)
    N = lcm(*factors)
    order = prod(dfac)
    elements = list(itertools.product(*[range(f) for f in dfac]))

    def q(x):
        # exponent of <chi, g> for x = (g, chi)
        return sum(x[i] * x[n + i] * (N // dfac[i]) for i in range(n)) % N

    def apply(M, x):
        out = [0] * (2 * n)
        for i, c in enumerate(x):
            if c:
                row = M[i]
                for j in range(2 * n):
                    out[j] += c * row[j]
        return tuple(o % f for o, f in zip(out, dfac))

    rows_by_gen = []
    for i in range(2 * n):
        m = dfac[i]
        rows_by_gen.append([x for x in elements
                            if all((m * c) % f == 0 for c, f in zip(x, dfac))])
    results = []
    for rows in itertools.product(*rows_by_gen):
        M = tuple(rows)
        if not all(q(apply(M, x)) == q(x) for x in elements):
            continue
        if len({apply(M, x) for x in elements}) == order:
            results.append(M)
    return results


def compose_matrices(factors, A, B):
    """Matrix of x -> A(B(x)) in the same row encoding as orth_brute_force."""
    n = len(factors)
    dfac = list(factors) + list(factors)

    def apply(M, x):
        out = [0] * (2 * n)
        for i, c in enumerate(x):
            if c:
                for j in range(2 * n):
                    out[j] += c * M[i][j]
        return tuple(o % f for o, f in zip(out, dfac))

    rows = []
    for i in range(2 * n):
        e = [0] * (2 * n)
        e[i] = 1
        rows.append(apply(A, apply(B, tuple(e))))
    return tuple(rows)


def is_abelian(factors, matrices):
    return all(compose_matrices(factors, A, B) == compose_matrices(factors, B, A)
               for A, B in itertools.combinations(matrices, 2))
