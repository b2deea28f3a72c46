"""Independent brute-force oracle used to freeze expected values in the C++ tests.

Shares no code with the library: paths are enumerated as raw step tuples, and
the quicksort is a direct transcription of the two classification rules.
"""
from fractions import Fraction
from itertools import permutations, product
from math import comb


def path_stats(start, steps):
    h = [start]
    for st in steps:
        h.append(h[-1] + st)
    n = len(steps)
    zeros = sum(1 for x in h if x == 0)
    up = sum(1 for i in range(1, n + 1) if h[i] == 0 and h[i - 1] == -1)
    down = sum(1 for i in range(0, n) if h[i] == 0 and h[i + 1] == -1)
    return zeros, up, down


def enumerate_model(n):
    """Yields (start, steps, probability) for the fixed-length model."""
    for steps in product((1, -1), repeat=n):
        start = -sum(steps)
        downs = steps.count(-1)
        yield start, steps, Fraction(1, (n + 1) * comb(n, downs))


def model_expectations(n):
    ez = eu = ed = Fraction(0)
    dist = {}
    for s, st, p in enumerate_model(n):
        z, u, d = path_stats(s, st)
        ez += p * z
        eu += p * u
        ed += p * d
        dist[z] = dist.get(z, 0) + p
    return ez, eu, ed, dist


def sort_count(a, strategy):
    n = len(a)
    if n <= 1:
        return 0
    c = 1
    p, q = min(a[0], a[-1]), max(a[0], a[-1])
    rest = a[1:-1]
    s_tot = sum(1 for x in rest if x < p)
    l_tot = sum(1 for x in rest if x > q)
    S, M, L = [], [], []
    s_seen = l_seen = 0
    for x in rest:
        if strategy == "cv":
            p_first = (s_tot - s_seen) >= (l_tot - l_seen)
        else:
            p_first = s_seen >= l_seen
        if p_first:
            c += 1
            if x < p:
                S.append(x)
            else:
                c += 1
                (L if x > q else M).append(x)
        else:
            c += 1
            if x > q:
                L.append(x)
            else:
                c += 1
                (S if x < p else M).append(x)
        s_seen += x < p
        l_seen += x > q
    return c + sort_count(S, strategy) + sort_count(M, strategy) + sort_count(L, strategy)


def mean_cost(n, strategy):
    tot = 0
    cnt = 0
    for perm in permutations(range(1, n + 1)):
        tot += sort_count(list(perm), strategy)
        cnt += 1
    return Fraction(tot, cnt)


def varlen_expectations(n):
    """E up / E down for the variable-length model by enumerating pivot pairs."""
    eu = ed = Fraction(0)
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    for a, b in pairs:
        length = n - 1 - (b - a)
        _, u, d, _ = model_expectations(length)
        eu += Fraction(1, len(pairs)) * u
        ed += Fraction(1, len(pairs)) * d
    return eu, ed


def partition_additional(n, strategy):
    """Mean additional comparisons of the first partitioning step over all n! inputs."""
    tot = 0
    cnt = 0
    for perm in permutations(range(1, n + 1)):
        p, q = min(perm[0], perm[-1]), max(perm[0], perm[-1])
        rest = perm[1:-1]
        s_tot = sum(1 for x in rest if x < p)
        l_tot = sum(1 for x in rest if x > q)
        s_seen = l_seen = 0
        for x in rest:
            if strategy == "cv":
                p_first = (s_tot - s_seen) >= (l_tot - l_seen)
            else:
                p_first = s_seen >= l_seen
            tot += (x > q and p_first) or (x < p and not p_first)
            s_seen += x < p
            l_seen += x > q
        cnt += 1
    return Fraction(tot, cnt)


if __name__ == "__main__":
    for n in range(0, 7):
        ez, eu, ed, dist = model_expectations(n)
        print(f"paths n={n}: E[zeros]={ez} E[up]={eu} E[down]={ed} dist={sorted(dist.items())}")
    for n in range(2, 9):
        print(f"cost n={n}: cv={mean_cost(n, 'cv')} ct={mean_cost(n, 'ct')}")
    for n in range(2, 9):
        eu, ed = varlen_expectations(n)
        print(f"varlen n={n}: E[up]={eu} E[down]={ed}")
    for n in range(2, 8):
        print(f"additional n={n}: cv={partition_additional(n, 'cv')} ct={partition_additional(n, 'ct')}")
