"""
Classical formulas for X_0(N) and X_1(N) and brute-force counts, written
without the package so the code can be checked against something it does
not share.
"""
from fractions import Fraction
from itertools import combinations
from math import gcd


def _primes(n):
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _phi(n):
    result = n
    for p in _primes(n):
        result = result // p * (p - 1)
    return result


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def projective_line_size(n):
    """|P^1(Z/N)| by counting primitive pairs (c, d) mod N up to units."""
    if n == 1:
        return 1
    pairs = sum(1 for c in range(n) for d in range(n) if gcd(gcd(c, d), n) == 1)
    return pairs // _phi(n)


def mu_brute(n, delta_order):
    return projective_line_size(n) * _phi(n) // delta_order


def genus_x0(n):
    mu = n
    for p in _primes(n):
        mu = mu // p * (p + 1)
    if n % 4 == 0:
        e2 = 0
    else:
        e2 = 1
        for p in _primes(n):
            if p != 2:
                e2 *= 1 + (1 if p % 4 == 1 else -1)
    if n % 9 == 0:
        e3 = 0
    else:
        e3 = 1
        for p in _primes(n):
            if p != 3:
                e3 *= 1 + (1 if p % 3 == 1 else -1)
    cusps = sum(_phi(gcd(d, n // d)) for d in _divisors(n))
    g = 1 + Fraction(mu, 12) - Fraction(e2, 4) - Fraction(e3, 3) - Fraction(cusps, 2)
    return int(g)


def genus_x1(n):
    if n <= 4:
        return 0
    mu = Fraction(n * n, 2)
    for p in _primes(n):
        mu *= 1 - Fraction(1, p * p)
    cusps = Fraction(sum(_phi(d) * _phi(n // d) for d in _divisors(n)), 2)
    return int(1 + mu / 12 - cusps / 2)


def subgroups_brute(n):
    """Residue tuples of every subgroup of (Z/N)* containing -1, by testing subsets of ± pairs."""
    if n <= 2:
        return [(1,)]
    pairs = [(u, n - u) for u in range(2, n) if gcd(u, n) == 1 and u < n - u]
    found = []
    for k in range(len(pairs) + 1):
        for chosen in combinations(pairs, k):
            members = {1, n - 1}.union(*chosen)
            if all(a * b % n in members for a in members for b in members):
                found.append(tuple(sorted(members)))
    return sorted(found, key=lambda t: (len(t), t))
