"""Pure-Python exponent kernel.

Exponents are tuples of non-negative ints. All functions here have an
identical compiled twin in ``_kernel_c``; keep the two in sync (the test
suite asserts parity on random inputs).

Order keys are flat int tuples that compare lexicographically:
deglex -> (|a|, a1, ..., an); degrevlex -> (|a|, -an, ..., -a1);
block  -> deglex key of the front slice followed by the deglex key of
the rest, front selected by a 0/1 mask.
"""


def total_degree(a):
    return sum(a)


def exp_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def exp_max(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def divides(a, b):
    """Componentwise a <= b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def deglex_key(a):
    return (sum(a),) + tuple(a)


def degrevlex_key(a):
    return (sum(a),) + tuple(-x for x in reversed(a))


def block_key(a, mask):
    front = []
    rest = []
    fdeg = 0
    rdeg = 0
    for x, m in zip(a, mask):
        if m:
            front.append(x)
            fdeg += x
        else:
            rest.append(x)
            rdeg += x
    return (fdeg,) + tuple(front) + (rdeg,) + tuple(rest)


def find_divisor(leads, target, start=0):
    """Index of the first exponent in ``leads`` dividing ``target``, or -1."""
    n = len(leads)
    i = start
    while i < n:
        if divides(leads[i], target):
            return i
        i += 1
    return -1
