# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled kernels; functional twin of bernint._kernels.

Values stay arbitrary-precision Python ints; Cython removes the interpreter
overhead of the box walk and convolution loops.
"""

from math import gcd


def convolve(list a, list b):
    """Coefficient convolution of two integer polynomials."""
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t i, j
    if la == 0 or lb == 0:
        return []
    out = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(lb):
            bj = b[j]
            if bj != 0:
                out[i + j] = out[i + j] + ai * bj
    return out


cdef list _pascal_rows(Py_ssize_t n):
    cdef list rows = [[1]]
    cdef list prev, row
    cdef Py_ssize_t i, m
    for m in range(n):
        prev = rows[m]
        row = [1]
        for i in range(m):
            row.append(prev[i] + prev[i + 1])
        row.append(1)
        rows.append(row)
    return rows


def closed_form_sum(tuple ks, list xnum, list xden, list onum, list oden):
    """Scaled integral of B_{k_1}(z)...B_{k_r}(z) from 0 to x as (num, den).

    Same contract as the pure twin: walk the box 0 <= i_j <= k_j over the
    leading r-1 indices, weight each cell by the signed multinomial
    coefficient, and accumulate the scaled boundary-term values built from
    the B_k(x)/k! and B_k/k! tables.
    """
    cdef Py_ssize_t h = len(ks) - 1
    cdef Py_ssize_t kr = ks[h]
    cdef Py_ssize_t j, m, total
    cdef Py_ssize_t a

    total = 0
    for j in range(h):
        total += <Py_ssize_t> ks[j]
    cdef list pascal = _pascal_rows(total)

    # per-level odometer state; slot j holds the state after choices i_0..i_{j-1}
    cdef list idx = [0] * (h + 1)
    cdef list a_ = [0] * (h + 1)
    cdef list w_ = [1] * (h + 1)
    cdef list pxn = [1] * (h + 1)
    cdef list pxd = [1] * (h + 1)
    cdef list pon = [1] * (h + 1)
    cdef list pod = [1] * (h + 1)

    acc_n = 0
    acc_d = 1

    cdef Py_ssize_t i, kj
    j = 0
    idx[0] = 0
    while True:
        if j < h:
            i = idx[j]
            kj = <Py_ssize_t> ks[j]
            if i <= kj:
                idx[j] = i + 1
                m = kj - i
                xn = xnum[m]
                on = onum[m]
                if xn == 0 and on == 0:
                    continue
                a = <Py_ssize_t> a_[j] + i
                a_[j + 1] = a
                w_[j + 1] = w_[j] * pascal[a][i]
                pxn[j + 1] = pxn[j] * xn
                pxd[j + 1] = pxd[j] * xden[m]
                pon[j + 1] = pon[j] * on
                pod[j + 1] = pod[j] * oden[m]
                j += 1
                idx[j] = 0
            else:
                j -= 1
                if j < 0:
                    break
        else:
            a = <Py_ssize_t> a_[h]
            m = kr + a + 1
            tn = pxn[h] * xnum[m]
            td = pxd[h] * xden[m]
            un = pon[h] * onum[m]
            ud = pod[h] * oden[m]
            num = w_[h] * (tn * ud - un * td)
            if num != 0:
                if a & 1:
                    num = -num
                den = td * ud
                acc_n = acc_n * den + num * acc_d
                acc_d = acc_d * den
                g = gcd(acc_n, acc_d)
                if g > 1:
                    acc_n = acc_n // g
                    acc_d = acc_d // g
            j -= 1
            if j < 0:
                break

    g = gcd(acc_n, acc_d)
    if g > 1:
        acc_n = acc_n // g
        acc_d = acc_d // g
    return acc_n, acc_d
