"""Pure-Python kernels for the two hot loops.

`bernint._ckernels` is the Cython translation of this module; the two are
interchangeable and `bernint.kernels` picks whichever is importable.  Both
work on plain Python ints (num, den pairs with den > 0) so the arithmetic
stays exact at arbitrary precision.
"""

from __future__ import annotations

from math import gcd

__all__ = ["closed_form_sum", "convolve"]


def convolve(a: list[int], b: list[int]) -> list[int]:
    """Coefficient convolution of two integer polynomials."""
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return []
    out = [0] * (la + lb - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj != 0:
                out[i + j] += ai * bj
    return out


def _pascal_rows(n: int) -> list[list[int]]:
    rows = [[1]]
    for _ in range(n):
        prev = rows[-1]
        rows.append([1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1])
    return rows


def closed_form_sum(
    ks: tuple[int, ...],
    xnum: list[int],
    xden: list[int],
    onum: list[int],
    oden: list[int],
) -> tuple[int, int]:
    """Scaled integral of B_{k_1}(z)...B_{k_r}(z) from 0 to x as (num, den).

    The tables give B_k(x)/k! (xnum/xden) and B_k/k! (onum/oden) for
    k = 0 .. sum(ks) + 1.  The sum runs over the box
    0 <= i_j <= k_j (j < r), each cell weighted by (-1)^a times the
    multinomial coefficient of (i_1, ..., i_{r-1}) where a is the cell's
    index sum; the cell value is the scaled boundary term with indices
    (k_1 - i_1, ..., k_{r-1} - i_{r-1}, k_r + a + 1).  Cells outside the
    box carry multinomial weight 0 and are never visited.
    """
    heads = ks[:-1]
    kr = ks[-1]
    pascal = _pascal_rows(sum(heads))

    acc_n, acc_d = 0, 1

    def walk(j: int, a: int, w: int, pxn: int, pxd: int, pon: int, pod: int) -> None:
        nonlocal acc_n, acc_d
        if j == len(heads):
            m = kr + a + 1
            tn = pxn * xnum[m]
            td = pxd * xden[m]
            un = pon * onum[m]
            ud = pod * oden[m]
            num = w * (tn * ud - un * td)
            if num == 0:
                return
            if a & 1:
                num = -num
            den = td * ud
            acc_n = acc_n * den + num * acc_d
            acc_d = acc_d * den
            g = gcd(acc_n, acc_d)
            if g > 1:
                acc_n //= g
                acc_d //= g
            return
        kj = heads[j]
        row_a = a
        for i in range(kj + 1):
            m = kj - i
            xn = xnum[m]
            on = onum[m]
            if xn == 0 and on == 0:
                continue
            a2 = row_a + i
            walk(
                j + 1,
                a2,
                w * pascal[a2][i],
                pxn * xn,
                pxd * xden[m],
                pon * on,
                pod * oden[m],
            )

    walk(0, 0, 1, 1, 1, 1, 1)
    g = gcd(acc_n, acc_d)
    if g > 1:
        acc_n //= g
        acc_d //= g
    return acc_n, acc_d
