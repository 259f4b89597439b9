"""Pure-Python compute kernels for the hot loops.

The compiled twin ``_kernel_cy`` implements the same functions over the same
data layout; ``_backend`` picks one at import time.  Keep the two files in
lockstep: parity is enforced by tests.

Data layout (plain tuples and dicts, nothing package-specific):

* field element ("entry"): tuple of ints ``(n0, ..., n_{phi-1}, den)``
  holding the polynomial ``(n0 + n1*z + ... ) / den`` reduced modulo the
  minimal polynomial of ``z``.  Always ``den >= 1`` and
  ``gcd(n0, ..., den) == 1``.  The zero element is never stored as a tuple;
  it is represented by ``None`` or by a missing dict key.
* sparse vector ("row"): dict mapping column index -> entry; no zero entries.
* reduction table ``red``: tuple of int tuples; ``red[m - phi]`` holds the
  fully reduced coefficients of ``z**m`` for ``phi <= m <= 2*phi - 2``.
* word letter: ``(index_numerator, index_denominator, power)`` with a
  canonical positive denominator.

All functions treat their arguments as immutable and are deterministic:
identical inputs give bit-identical outputs on either backend.
"""

from math import gcd


def _normalize(nums, den):
    # Canonical entry from raw integer data; None when the value is zero.
    g = den if den > 0 else -den
    nonzero = False
    for v in nums:
        if v:
            nonzero = True
            g = gcd(g, v)
    if not nonzero:
        return None
    if den < 0:
        nums = [-v for v in nums]
        den = -den
    if g > 1:
        nums = [v // g for v in nums]
        den //= g
    return (*nums, den)


def ent_add(a, b, phi):
    da = a[phi]
    db = b[phi]
    if da == db:
        return _normalize([a[i] + b[i] for i in range(phi)], da)
    return _normalize([a[i] * db + b[i] * da for i in range(phi)], da * db)


def ent_sub(a, b, phi):
    da = a[phi]
    db = b[phi]
    if da == db:
        return _normalize([a[i] - b[i] for i in range(phi)], da)
    return _normalize([a[i] * db - b[i] * da for i in range(phi)], da * db)


def ent_neg(a):
    return tuple(-v for v in a[:-1]) + (a[-1],)


def ent_mul(a, b, phi, red):
    if phi == 1:
        return _normalize([a[0] * b[0]], a[1] * b[1])
    conv = [0] * (2 * phi - 1)
    for i in range(phi):
        ai = a[i]
        if ai:
            for j in range(phi):
                bj = b[j]
                if bj:
                    conv[i + j] += ai * bj
    for m in range(2 * phi - 2, phi - 1, -1):
        t = conv[m]
        if t:
            row = red[m - phi]
            for j in range(phi):
                rj = row[j]
                if rj:
                    conv[j] += t * rj
    return _normalize(conv[:phi], a[phi] * b[phi])


def row_canonical(row, phi):
    """Scale a row to its unique canonical form.

    All entries become integer (denominator 1), the gcd of every numerator
    across the row is 1, and the first nonzero numerator of the lowest-column
    entry is positive.  Scaling a row by a nonzero rational does not change
    the information it carries in rank/nullspace computations.
    """
    if not row:
        return row
    lcm_den = 1
    for e in row.values():
        d = e[phi]
        if d > 1:
            lcm_den = lcm_den // gcd(lcm_den, d) * d
    content = 0
    for e in row.values():
        s = lcm_den // e[phi]
        for i in range(phi):
            v = e[i]
            if v:
                content = gcd(content, v * s)
    lead = row[min(row)]
    sign = 1
    for i in range(phi):
        if lead[i]:
            sign = 1 if lead[i] > 0 else -1
            break
    if lcm_den == 1 and content == 1 and sign == 1:
        return row
    out = {}
    for c, e in row.items():
        s = sign * (lcm_den // e[phi])
        out[c] = tuple(v * s // content for v in e[:phi]) + (1,)
    return out


def row_scale(row, c, phi, red):
    # c is a nonzero entry, so no products vanish.
    return {col: ent_mul(e, c, phi, red) for col, e in row.items()}


def row_eliminate(row, piv_col, piv_row, phi, red):
    """Return ``piv*row - r*piv_row`` canonicalized, where ``piv`` and ``r``
    are the entries of ``piv_row`` and ``row`` at ``piv_col``.

    Cross-multiplied elimination avoids field inversions in the inner loop;
    the result has no entry at ``piv_col``.
    """
    piv = piv_row[piv_col]
    r = row[piv_col]
    out = {}
    for c, e in row.items():
        if c != piv_col:
            out[c] = ent_mul(e, piv, phi, red)
    for c, e in piv_row.items():
        if c == piv_col:
            continue
        t = ent_mul(e, r, phi, red)
        cur = out.get(c)
        if cur is None:
            out[c] = ent_neg(t)
        else:
            s = ent_sub(cur, t, phi)
            if s is None:
                del out[c]
            else:
                out[c] = s
    return row_canonical(out, phi)


def row_reduce(row, ech, phi, red):
    """Residual of ``row`` after eliminating against the pivot rows in
    ``ech`` (a dict pivot column -> row).  Canonical on output."""
    while row:
        c = min(row)
        piv = ech.get(c)
        if piv is None:
            break
        row = row_eliminate(row, c, piv, phi, red)
    return row_canonical(row, phi)


def mat_mul(rows_a, rows_b, phi, red):
    out = []
    for arow in rows_a:
        acc = {}
        for k, a in arow.items():
            for j, b in rows_b[k].items():
                t = ent_mul(a, b, phi, red)
                cur = acc.get(j)
                if cur is None:
                    acc[j] = t
                else:
                    s = ent_add(cur, t, phi)
                    if s is None:
                        del acc[j]
                    else:
                        acc[j] = s
        out.append(acc)
    return out


def word_normal_form(letters, order):
    """Sort a word of generator powers into the ordered normal form.

    Passing a power ``b`` leftward through a power ``a`` of a larger-index
    generator contributes ``a*b`` to the accumulated twist exponent; equal
    indices merge by adding powers modulo ``order`` (dropping the factor when
    the sum vanishes, no twist).  Returns ``(twist, factors)`` with factors
    strictly increasing and powers in ``1..order-1``.
    """
    factors = []
    phase = 0
    for an, ad, p in letters:
        p %= order
        if p == 0:
            continue
        pos = len(factors)
        merged = False
        while pos > 0:
            f = factors[pos - 1]
            s = an * f[1] - f[0] * ad
            if s < 0:
                phase += p * f[2]
                pos -= 1
            elif s == 0:
                e = (f[2] + p) % order
                if e:
                    f[2] = e
                else:
                    del factors[pos - 1]
                merged = True
                break
            else:
                break
        if not merged:
            factors.insert(pos, [an, ad, p])
    return phase % order, tuple((f[0], f[1], f[2]) for f in factors)
