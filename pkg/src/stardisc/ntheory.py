"""Small integer helpers: deterministic primality and prime powers."""

# Deterministic for n < 3.3e24 with these witnesses.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    n = int(n)
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def first_primes(k: int) -> list[int]:
    out, n = [], 2
    while len(out) < k:
        if is_prime(n):
            out.append(n)
        n += 1
    return out


def primes_up_to(n: int) -> list[int]:
    return [q for q in range(2, n + 1) if is_prime(q)]


def prime_power_base(q: int):
    """Return the prime p with q = p**e (e >= 1), or None."""
    q = int(q)
    if q < 2:
        return None
    for p in range(2, int(q ** 0.5) + 2):
        if q % p == 0:
            while q % p == 0:
                q //= p
            return p if q == 1 else None
    return q  # q itself is prime
