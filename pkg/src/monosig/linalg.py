"""Exact matrix rank over the rationals or a prime field.

Matrices are lists of rows of Python ints. Over the rationals we use
fraction-free (Bareiss) elimination, so every intermediate stays an integer.
"""

from __future__ import annotations


def parse_field(value) -> int:
    """Field as its characteristic: ``"q"``/``"QQ"``/0 -> 0, ``"p=7"``/7 -> 7."""
    if isinstance(value, int):
        c = value
    else:
        s = str(value).strip().lower()
        if s in ("q", "qq", "0", "rationals"):
            return 0
        if s.startswith("p="):
            s = s[2:]
        try:
            c = int(s)
        except ValueError:
            raise ValueError(f"unknown field {value!r}; use 'q' or 'p=<prime>'") from None
    if c != 0 and (c < 2 or any(c % k == 0 for k in range(2, int(c ** 0.5) + 1))):
        raise ValueError(f"{c} is not prime")
    return c


def field_name(char: int) -> str:
    return "QQ" if char == 0 else f"GF({char})"


def rank(matrix, char: int = 0) -> int:
    rows = [list(r) for r in matrix if any(r)]
    if not rows:
        return 0
    if char:
        return _rank_mod_p(rows, char)
    return _rank_bareiss(rows)


def _rank_bareiss(m) -> int:
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            a = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def _rank_mod_p(m, p: int) -> int:
    m = [[x % p for x in row] for row in m]
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        row_r = [x * inv % p for x in m[r]]
        m[r] = row_r
        for i in range(r + 1, nrows):
            a = m[i][c]
            if a:
                m[i] = [(x - a * y) % p for x, y in zip(m[i], row_r)]
        r += 1
        if r == nrows:
            break
    return r
