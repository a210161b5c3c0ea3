"""Pure-Python Kauffman state enumeration (fallback for the compiled kernel)."""


def state_histogram(n_arcs, unders_in, overs_a, unders_out, overs_b):
    """Count smoothing states by (number of A-smoothings, number of loops).

    Crossing i is ``X[a, b, c, d]`` with arcs renumbered 0..n_arcs-1; the
    A-smoothing joins a-b and c-d, the B-smoothing a-d and b-c.  Returns a
    dict ``{(k, loops): count}``.
    """
    n = len(unders_in)
    a_, b_, c_, d_ = unders_in, overs_a, unders_out, overs_b
    hist = {}
    for state in range(1 << n):
        parent = list(range(n_arcs))
        comps = n_arcs
        k = 0
        for i in range(n):
            if state >> i & 1:
                k += 1
                pairs = ((a_[i], b_[i]), (c_[i], d_[i]))
            else:
                pairs = ((a_[i], d_[i]), (b_[i], c_[i]))
            for u, v in pairs:
                while parent[u] != u:
                    parent[u] = parent[parent[u]]
                    u = parent[u]
                while parent[v] != v:
                    parent[v] = parent[parent[v]]
                    v = parent[v]
                if u != v:
                    parent[u] = v
                    comps -= 1
        key = (k, comps)
        hist[key] = hist.get(key, 0) + 1
    return hist
