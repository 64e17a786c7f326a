# cython: language_level=3
"""Compiled exponent kernel; behavioural twin of ``_kernel_py``."""


def total_degree(a):
    cdef Py_ssize_t i, n = len(a)
    cdef long s = 0
    for i in range(n):
        s += <long> a[i]
    return s


def exp_add(a, b):
    cdef Py_ssize_t i, n = len(a)
    out = [0] * n
    for i in range(n):
        out[i] = (<long> a[i]) + (<long> b[i])
    return tuple(out)


def exp_sub(a, b):
    cdef Py_ssize_t i, n = len(a)
    out = [0] * n
    for i in range(n):
        out[i] = (<long> a[i]) - (<long> b[i])
    return tuple(out)


def exp_max(a, b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    out = [0] * n
    for i in range(n):
        x = <long> a[i]
        y = <long> b[i]
        out[i] = x if x >= y else y
    return tuple(out)


def divides(a, b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if (<long> a[i]) > (<long> b[i]):
            return False
    return True


def deglex_key(a):
    cdef Py_ssize_t i, n = len(a)
    cdef long s = 0
    out = [0] * (n + 1)
    for i in range(n):
        s += <long> a[i]
        out[i + 1] = a[i]
    out[0] = s
    return tuple(out)


def degrevlex_key(a):
    cdef Py_ssize_t i, n = len(a)
    cdef long s = 0
    out = [0] * (n + 1)
    for i in range(n):
        s += <long> a[i]
        out[n - i] = -(<long> a[i])
    out[0] = s
    return tuple(out)


def block_key(a, mask):
    cdef Py_ssize_t i, n = len(a)
    cdef long fdeg = 0, rdeg = 0, x
    front = []
    rest = []
    for i in range(n):
        x = <long> a[i]
        if mask[i]:
            front.append(x)
            fdeg += x
        else:
            rest.append(x)
            rdeg += x
    return (fdeg,) + tuple(front) + (rdeg,) + tuple(rest)


def find_divisor(leads, target, Py_ssize_t start=0):
    cdef Py_ssize_t i, j, n = len(leads), k = len(target)
    cdef bint ok
    for i in range(start, n):
        lead = leads[i]
        ok = True
        for j in range(k):
            if (<long> lead[j]) > (<long> target[j]):
                ok = False
                break
        if ok:
            return i
    return -1
