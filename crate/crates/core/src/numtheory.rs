//! Small-integer arithmetic helpers.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factors of `n` in ascending order, with multiplicity.
pub fn factorize(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        while n.is_multiple_of(d) {
            out.push(d);
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `(prime, exponent)` pairs in ascending prime order.
pub fn prime_powers(n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    for p in factorize(n) {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// `(p, e)` if `n = p^e` with `e ≥ 1`.
pub fn as_prime_power(n: u64) -> Option<(u64, u32)> {
    match prime_powers(n).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

pub fn pow_mod(r: usize, e: usize, q: usize) -> usize {
    (0..e).fold(1 % q, |acc, _| acc * r % q)
}

/// Smallest `r > 1` with `gcd(r, q) = 1` and `r^d ≡ 1 (mod q)`: the default
/// twist for `C_q ⋊ C_d`.
pub fn default_twist(q: usize, d: usize) -> Option<usize> {
    (2..q).find(|&r| gcd(r as u64, q as u64) == 1 && pow_mod(r, d, q) == 1)
}

/// Partitions of `n` into parts in non-decreasing order, lexicographically.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rem: u32, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in min..=rem {
            cur.push(part);
            go(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut out);
    out
}
