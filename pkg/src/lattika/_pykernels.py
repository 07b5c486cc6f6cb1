"""NumPy implementations of the table kernels.

These are the fallback when the compiled ``_ckernels`` extension is not
available. Both modules expose exactly the same functions with the same
argument and return conventions; ``lattika.kernels`` picks one at import.
"""
import numpy as np


def transitive_closure(adj):
    """Reflexive-transitive closure of a 0/1 adjacency matrix (Warshall)."""
    r = np.array(adj, dtype=bool)
    n = r.shape[0]
    r |= np.eye(n, dtype=bool)
    for k in range(n):
        r |= r[:, k : k + 1] & r[k : k + 1, :]
    return r.astype(np.uint8)


def _bound_table(leq):
    # leq[c, a] == 1 means c <= a; returns the greatest common lower bound
    # of every pair, or -1 where it does not exist.
    n = leq.shape[0]
    down_size = leq.sum(axis=0)
    out = np.full((n, n), -1, dtype=np.int32)
    for a in range(n):
        lower = leq[:, a][:, None] & leq  # lower[c, b]: c <= a and c <= b
        cnt = lower.sum(axis=0)
        hit = lower & (down_size[:, None] == cnt[None, :])
        found = hit.any(axis=0)
        out[a, found] = hit.argmax(axis=0)[found]
    return out


def meet_join_tables(leq):
    """Meet and join tables from an order matrix; -1 marks a missing bound."""
    leq = np.asarray(leq, dtype=bool)
    return _bound_table(leq), _bound_table(leq.T.copy())


def cosmall_matrix(leq, join, top):
    """cs[a, b] = 1 iff a <= b and b is cosmall in [a, 1]."""
    leq = np.asarray(leq, dtype=bool)
    t = np.asarray(join) == top
    viol = t.astype(np.int32) @ (~t).astype(np.int32).T  # viol[b, a]
    return (leq & (viol.T == 0)).astype(np.uint8)


def modular_violation(leq, meet, join):
    """First (a, b, c) with a <= c and a v (b ^ c) != (a v b) ^ c, else (-1, -1, -1)."""
    leq = np.asarray(leq, dtype=bool)
    meet = np.asarray(meet)
    join = np.asarray(join)
    n = leq.shape[0]
    for a in range(n):
        cs = np.flatnonzero(leq[a])
        if cs.size == 0:
            continue
        lhs = join[a][meet[:, cs]]  # lhs[b, k] = a v (b ^ c_k)
        rhs = meet[join[a][:, None], cs[None, :]]
        bad = lhs != rhs
        if bad.any():
            b, k = np.argwhere(bad)[0]
            return int(a), int(b), int(cs[k])
    return -1, -1, -1


def meet_independent(meet, join, top, ys):
    """Full-definition meet-independence of the element list ``ys``.

    For every nonempty subset S of ys and every x in ys outside S the join
    (meet of S) v x must be top.
    """
    k = len(ys)
    if k > 30:
        raise ValueError("meet_independent supports at most 30 elements")
    meets = [0] * (1 << k)
    for mask in range(1, 1 << k):
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        meets[mask] = ys[i] if rest == 0 else int(meet[meets[rest], ys[i]])
        m = meets[mask]
        for j in range(k):
            if not mask >> j & 1 and join[m, ys[j]] != top:
                return False
    return True
