"""Slow reference implementations used as test oracles."""
from functools import lru_cache
from itertools import combinations


def subsets(xs, min_size=0):
    xs = list(xs)
    for k in range(min_size, len(xs) + 1):
        yield from combinations(xs, k)


def meet_independent_naive(L, Y):
    """Definition verbatim: every nonempty S in Y and x in Y \\ S give meet(S) v x = 1."""
    Y = tuple(Y)
    for S in subsets(Y, 1):
        m = L.top
        for s in S:
            m = L.meet(m, s)
        for x in Y:
            if x not in S and L.join(m, x) != L.top:
                return False
    return True


@lru_cache(maxsize=None)
def _independence_table(L):
    proper = [x for x in L if x != L.top]
    return {Y: meet_independent_naive(L, Y) for Y in subsets(proper)}


def independence_table(L):
    return _independence_table(L)


def hollow_dimension_naive(L):
    return max(len(Y) for Y, ok in independence_table(L).items() if ok)


def adjoint_naive(gc):
    A, B = gc.A, gc.B
    return all((B.leq(gc.alpha[a], b)) == A.leq(a, gc.beta[b]) for a in A for b in B)


def quasi_projective_by_structure(cyclic_orders):
    """A finite abelian group is quasi-projective over Z iff each p-part is homogeneous.

    Homogeneous means all cyclic factors of that p-part have the same order.
    """
    parts = {}
    for n in cyclic_orders:
        m, p = n, 2
        while m > 1:
            if m % p == 0:
                e = 1
                while m % p == 0:
                    m //= p
                    e *= p
                parts.setdefault(p, set()).add(e)
            p += 1
    return all(len(v) == 1 for v in parts.values())
