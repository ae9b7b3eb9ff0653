"""Closed-form and recursive fire counts for chip-firing on the k-ary tree.

Each quantity is implemented at least twice (closed form, recursion, and for
the difference sequences a digit-replacement construction as well).  The
composite entry points (`a_seq`, `b_seq`, `d0`, `D_diff`) cross-check their
routes on every call; the test suite additionally checks everything against
the simulation engine.

Conventions: N is the initial pile at the root, k >= 2 the branching factor,
n = height_index(N, k), and layer indices i run 0..n-1 with layer index i
naming the tree layer i+1 (so i = 0 is the root).
"""

from __future__ import annotations

from dataclasses import dataclass

from .numerics import exact_div, height_index, nu, repunit, stable_config


@dataclass(frozen=True)
class FireProfile:
    """Fires per vertex by layer plus the grand total for one pile."""

    N: int
    k: int
    n: int
    f: tuple[int, ...]
    total: int


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _layer_fires(c: tuple[int, ...], k: int, i: int) -> int:
    n = len(c)
    return sum(repunit(j, k) * c[i + j] for j in range(1, n - i))


def _check_layer(i: int, n: int, upper_slack: int = 1) -> None:
    if not 0 <= i <= n - upper_slack:
        raise ValueError(f"layer index {i} out of range for height index {n}")


def vertex_fires(N: int, k: int, i: int) -> int:
    """Fires of each vertex on layer i+1: sum of repunit(j) * c_(i+j)."""
    cfg = stable_config(N, k)
    _check_layer(i, cfg.n)
    return _layer_fires(cfg.c, k, i)


def fires_difference(N: int, k: int, i: int) -> int:
    """vertex_fires(N,k,i) - vertex_fires(N,k,i+1), from the chip counts alone.

    Equals the chips held by the descendants of one layer-(i+1) vertex in the
    stable configuration, divided by k.
    """
    cfg = stable_config(N, k)
    _check_layer(i, cfg.n, upper_slack=2)
    return sum(k ** (j - i - 1) * cfg.c[j] for j in range(i + 1, cfg.n))


def vertex_fires_via_root(N: int, k: int, i: int) -> int:
    """Layer fires reduced to root fires of the pile truncated to n-i digits."""
    n = height_index(N, k)
    _check_layer(i, n)
    shifted = (N - repunit(n, k)) // k**i + repunit(n - i, k)
    return root_fires(shifted, k)


def root_fires(N: int, k: int) -> int:
    """Closed form for the number of root fires."""
    cfg = stable_config(N, k)
    s = sum((k**j - 1) * cfg.c[j] for j in range(1, cfg.n))
    return exact_div(s, k - 1)


def root_fires_rec(N: int, k: int) -> int:
    """Root fires by the recursion f0(N) = ceil(N/k) - 1 + f0(ceil(N/k) - 1)."""
    if N < 0:
        raise ValueError(f"chip count must be >= 0, got {N}")
    total = 0
    x = N
    while x > 0:
        x = _ceil_div(x, k) - 1
        total += x
    return total


def total_fires(N: int, k: int) -> int:
    """Closed form for the total number of fires across all vertices."""
    cfg = stable_config(N, k)
    s = sum((m * k ** (m + 1) - (m + 1) * k**m + 1) * cfg.c[m]
            for m in range(1, cfg.n))
    return exact_div(s, (k - 1) ** 2)


def total_fires_rec(N: int, k: int) -> int:
    """Total fires by the recursion F(N) = f0(N) + k * F(ceil(N/k) - 1).

    Stays inside the recursive family (uses root_fires_rec) so that it is a
    path independent of the closed forms.
    """
    if N < 0:
        raise ValueError(f"chip count must be >= 0, got {N}")
    total = 0
    weight = 1
    x = N
    while x > 0:
        total += weight * root_fires_rec(x, k)
        weight *= k
        x = _ceil_div(x, k) - 1
    return total


def fire_profile(N: int, k: int) -> FireProfile:
    """All per-layer fire counts and the total, from the closed forms."""
    cfg = stable_config(N, k)
    f = tuple(_layer_fires(cfg.c, k, i) for i in range(cfg.n))
    return FireProfile(N=N, k=k, n=cfg.n, f=f, total=total_fires(N, k))


# --- the all-ones pile N = repunit(n, k) -----------------------------------

def special_vertex_fires(n: int, k: int, i: int) -> int:
    """vertex_fires at N = repunit(n, k), where every layer holds one chip."""
    _check_layer(i, n)
    m = n - i
    return exact_div(k**m - k * m + m - 1, (k - 1) ** 2)


def special_root_fires(n: int, k: int) -> int:
    """root_fires at N = repunit(n, k)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return exact_div(k**n - n * k + (n - 1), (k - 1) ** 2)


def special_total_fires(n: int, k: int) -> int:
    """total_fires at N = repunit(n, k)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return exact_div((k * (n - 1) - n - 1) * k**n + k * (n + 1) - n + 1,
                     (k - 1) ** 3)


def divisibility_check(j: int, k: int) -> bool:
    """Whether 2(k+1) divides total_fires(repunit(2j+1, k), k).  Always true."""
    if j < 0:
        raise ValueError(f"need j >= 0, got {j}")
    return special_total_fires(2 * j + 1, k) % (2 * (k + 1)) == 0


# --- the unique-difference-value sequences a and b --------------------------

def a_seq(n: int, k: int) -> int:
    """a(n,k) = k*a(n-1,k) + n with a(1,k) = 1; closed form cross-checked.

    These are the distinct values taken by the total-fires difference D, and
    in base k their digit strings concatenate 1, 2, ..., n for n < k.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    closed = exact_div(k ** (n + 1) - (k - 1) * n - k, (k - 1) ** 2)
    a = 1
    for j in range(2, n + 1):
        a = k * a + j
    if a != closed:
        raise AssertionError(f"a({n},{k}): recursion {a} != closed form {closed}")
    return a


def b_seq(n: int, k: int) -> int:
    """b(n,k) = n*k^(n-1) + b(n-1,k) with b(1,k) = 1; closed form cross-checked.

    Partial sums of b reproduce special_total_fires with the index shifted by
    one: sum(b(1..n)) == special_total_fires(n+1, k).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    closed = exact_div(k**n * ((k - 1) * n - 1) + 1, (k - 1) ** 2)
    b = 1
    for j in range(2, n + 1):
        b = j * k ** (j - 1) + b
    if b != closed:
        raise AssertionError(f"b({n},{k}): recursion {b} != closed form {closed}")
    return b


# --- difference sequences d0 and D ------------------------------------------

def d0_formula(m: int, k: int) -> int:
    """Root-fires difference via trailing-zero counting.

    d0(m,k) is n when m == repunit(n,k) and nu_k((k-1)m + 1) + 1 otherwise.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    n = height_index(m, k)
    if m == repunit(n, k):
        return n
    return nu((k - 1) * m + 1, k) + 1


def d0_recursive(m: int, k: int) -> int:
    """Root-fires difference via d0(m) = d0((m-1)/k) + 1 when k | m-1, else 1.

    The chain bottoms out at d0(0) = 0 (both g0(1) and g0(0) vanish).
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    depth = 0
    while m > 0 and (m - 1) % k == 0:
        depth += 1
        m = (m - 1) // k
    return depth if m == 0 else depth + 1


def d0_by_replacement(count: int, k: int) -> list[int]:
    """First `count` terms of d0(., k) by the digit-replacement construction.

    Start from all ones; replace every kth occurrence of x-1 with x, starting
    with the (k+1)th occurrence, for x = 2, 3, ... until a pass changes
    nothing.
    """
    if count < 1:
        raise ValueError(f"need count >= 1, got {count}")
    seq = [1] * count
    x = 2
    while True:
        occurrences = 0
        changed = False
        for idx, v in enumerate(seq):
            if v == x - 1:
                occurrences += 1
                if occurrences > k and (occurrences - 1) % k == 0:
                    seq[idx] = x
                    changed = True
        if not changed:
            return seq
        x += 1


def d0(m: int, k: int) -> int:
    """Difference of consecutive root-fire blocks, g0(m+1,k) - g0(m,k)."""
    value = d0_formula(m, k)
    rec = d0_recursive(m, k)
    if value != rec:
        raise AssertionError(f"d0({m},{k}): formula {value} != recursion {rec}")
    return value


def D_recursive(m: int, k: int) -> int:
    """Total-fires difference via D(m) = d0(m) + k*D((m-1)/k) when k | m-1."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    total = 0
    weight = 1
    x = m
    while x > 0:
        if (x - 1) % k != 0:
            total += weight
            break
        total += weight * d0(x, k)
        weight *= k
        x = (x - 1) // k
    return total


def D_via_a_seq(m: int, k: int) -> int:
    """Total-fires difference as a_seq evaluated at the d0 value."""
    return a_seq(d0(m, k), k)


def D_explicit(m: int, k: int) -> int:
    """Total-fires difference straight from a trailing-zero count.

    j is n when m == repunit(n,k), else nu_k(m - repunit(n,k)) + 1, and the
    value is the a-sequence closed form at j.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    n = height_index(m, k)
    r = repunit(n, k)
    j = n if m == r else nu(m - r, k) + 1
    return exact_div(k ** (j + 1) - (k - 1) * j - k, (k - 1) ** 2)


def D_diff(m: int, k: int) -> int:
    """Difference of consecutive total-fire blocks, G(m+1,k) - G(m,k)."""
    value = D_via_a_seq(m, k)
    rec = D_recursive(m, k)
    explicit = D_explicit(m, k)
    if not value == rec == explicit:
        raise AssertionError(
            f"D({m},{k}): a-composition {value}, recursion {rec}, "
            f"explicit {explicit} disagree")
    return value
