"""Pure-Python nested-sum kernels (fallback for the compiled ``_ckernels``).

Coordinate vectors are passed as lists ``z`` indexed by subscript, so that
``z[i]`` is z_i for 3 <= i <= n+1 (slots 0..2 are ignored).  Entries may be
any exact field elements (``Fraction`` or ``Scalar``); ``zero`` and ``one``
supply the matching identities.

The bracket attached to (t, k) is

    bracket(t, k) = sum_{j=1}^{k-1} C(k-1, j) y^j S_j(t, k)

where S_j sums, over nondecreasing chains k+j <= i_1 <= ... <= i_{j-1} <= t,
the product z_{t+3-i_{j-1}} * prod_m z_{i_m+3-i_{m-1}} * z_{i_1+3-(k+j)}.
"""

from itertools import combinations_with_replacement
from math import comb


def chain_sum(z, t, k, j, zero):
    """S_j(t, k) by explicit enumeration of the chains."""
    if j == 1:
        return z[t + 2 - k]
    lo = k + j
    total = zero
    for chain in combinations_with_replacement(range(lo, t + 1), j - 1):
        prod = z[t + 3 - chain[-1]] * z[chain[0] + 3 - lo]
        for m in range(1, j - 1):
            prod = prod * z[chain[m] + 3 - chain[m - 1]]
        total = total + prod
    return total


def bracket_naive(z, t, k, y, zero):
    total = zero
    ypow = y
    for j in range(1, k):
        if t - k - j < 0:
            break
        s = chain_sum(z, t, k, j, zero)
        if s:
            total = total + comb(k - 1, j) * ypow * s
        ypow = ypow * y
    return total


def bracket_table_naive(z, n, y, zero):
    """``table[t][k]`` = bracket(t, k) for 3 <= k < t <= n (other slots ``zero``)."""
    table = [[zero] * (n + 1) for _ in range(n + 1)]
    for t in range(4, n + 1):
        for k in range(3, t):
            table[t][k] = bracket_naive(z, t, k, y, zero)
    return table


def bracket_table_dp(z, n, y, zero):
    """Same table as :func:`bracket_table_naive`, via truncated power series.

    Writing the gaps g_m = i_m - i_{m-1} (with i_0 = k+j, i_j = t), S_j(t, k)
    is the coefficient of x^(t-k-j) in (sum_g z_{g+3} x^g)^j.
    """
    table = [[zero] * (n + 1) for _ in range(n + 1)]
    deg = n - 4
    if deg < 0:
        return table
    base = [z[g + 3] for g in range(deg + 1)]
    # powers[j][d] = coefficient of x^d in (y * Z(x))^j
    ybase = [y * c for c in base]
    powers = [None, ybase]
    for j in range(2, n - 2):
        prev = powers[-1]
        nxt = [zero] * (deg + 1)
        for a in range(deg + 1):
            pa = prev[a]
            if not pa:
                continue
            for b in range(deg + 1 - a):
                if ybase[b]:
                    nxt[a + b] = nxt[a + b] + pa * ybase[b]
        powers.append(nxt)
    for t in range(4, n + 1):
        for k in range(3, t):
            total = zero
            for j in range(1, k):
                d = t - k - j
                if d < 0:
                    break
                c = powers[j][d]
                if c:
                    total = total + comb(k - 1, j) * c
            table[t][k] = total
    return table


def phi_values(z, n, y, table, zero, one, prefactor=False):
    """phi_3..phi_{n+1} from a bracket table; ``out[t]`` holds phi_t.

    ``prefactor=True`` multiplies the phi_{n+1} sum by (1+y); that variant is
    kept only as a negative control.
    """
    out = [zero] * (n + 2)
    one_y = one + y
    for t in range(3, n + 1):
        acc = one_y * z[t]
        row = table[t]
        for k in range(3, t):
            if row[k]:
                acc = acc - row[k] * out[k]
        out[t] = acc
    s = zero
    row = table[n]
    for k in range(3, n):
        if row[k]:
            s = s + row[k] * out[k]
    if prefactor:
        s = one_y * s
    out[n + 1] = z[n + 1] + y * z[n] - s
    return out
