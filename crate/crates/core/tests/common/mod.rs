//! Independent reference implementations. Nothing here calls into the
//! library's counting code; definitions are transcribed directly.

#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// All permutations of `1..=n` in one-line notation.
pub fn permutations(n: usize) -> Vec<Vec<i64>> {
    fn go(rest: &mut Vec<i64>, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            cur.push(v);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=n as i64).collect(), &mut Vec::new(), &mut out);
    out
}

/// All signed permutations of `[n]`, as windows.
pub fn signed_permutations(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for p in permutations(n) {
        for mask in 0..(1u32 << n) {
            out.push(
                p.iter()
                    .enumerate()
                    .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                    .collect(),
            );
        }
    }
    out
}

pub fn exc(p: &[i64]) -> usize {
    (0..p.len()).filter(|&i| p[i] > i as i64 + 1).count()
}

pub fn des(p: &[i64]) -> usize {
    p.windows(2).filter(|w| w[0] > w[1]).count()
}

/// Sign via cycle count: a permutation is even iff `n - cycles` is even.
pub fn is_even(p: &[i64]) -> bool {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for s in 0..n {
        if !seen[s] {
            cycles += 1;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = (p[i] - 1) as usize;
            }
        }
    }
    (n - cycles).is_multiple_of(2)
}

pub fn is_derangement(p: &[i64]) -> bool {
    (0..p.len()).all(|i| p[i] != i as i64 + 1)
}

/// `pi(j)` for signed `j`, using `pi(-j) = -pi(j)`.
fn apply_b(w: &[i64], j: i64) -> i64 {
    if j > 0 {
        w[(j - 1) as usize]
    } else {
        -w[(-j - 1) as usize]
    }
}

pub fn exc_b(w: &[i64]) -> usize {
    let mut count = 0;
    for i in 1..=w.len() as i64 {
        let pi = apply_b(w, i);
        if apply_b(w, pi.abs()) > pi {
            count += 1;
        }
        if pi == -i {
            count += 1;
        }
    }
    count
}

pub fn des_b(w: &[i64]) -> usize {
    let mut full = vec![0];
    full.extend_from_slice(w);
    des(&full)
}

/// Coxeter length of a signed permutation: `inv(window) - sum of negative entries`.
pub fn length_b(w: &[i64]) -> usize {
    let inv = (0..w.len())
        .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| w[i] > w[j])
        .count();
    let neg: i64 = w.iter().filter(|&&v| v < 0).map(|v| -v).sum();
    inv + neg as usize
}

/// Histogram of `stat` over `items`, with `len` bins.
pub fn histogram<T>(
    items: &[T],
    len: usize,
    keep: impl Fn(&T) -> bool,
    stat: impl Fn(&T) -> usize,
) -> Vec<u64> {
    let mut h = vec![0u64; len];
    for x in items.iter().filter(|x| keep(x)) {
        h[stat(x)] += 1;
    }
    h
}

pub fn big(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut r = BigUint::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Closed form `A(n,k) = sum_j (-1)^j C(n+1,j) (k+1-j)^n`.
pub fn eulerian_closed(n: usize, k: usize) -> BigUint {
    let mut s = BigInt::zero();
    for j in 0..=k {
        let term =
            BigInt::from(binomial(n as u64 + 1, j as u64)) * BigInt::from(k + 1 - j).pow(n as u32);
        if j % 2 == 0 {
            s += term;
        } else {
            s -= term;
        }
    }
    s.to_biguint().expect("non-negative")
}

/// Closed form `B(n,k) = sum_j (-1)^(k-j) C(n+1,k-j) (2j+1)^n`.
pub fn eulerian_b_closed(n: usize, k: usize) -> BigUint {
    let mut s = BigInt::zero();
    for j in 0..=k {
        let term = BigInt::from(binomial(n as u64 + 1, (k - j) as u64))
            * BigInt::from(2 * j + 1).pow(n as u32);
        if (k - j).is_multiple_of(2) {
            s += term;
        } else {
            s -= term;
        }
    }
    s.to_biguint().expect("non-negative")
}

/// Gamma vector of a palindromic polynomial of degree `d`, by repeatedly
/// subtracting `g_k t^k (1+t)^(d-2k)` from the lowest remaining term.
pub fn peel_gamma(coeffs: &[BigUint], d: usize) -> Vec<BigInt> {
    let mut rest: Vec<BigInt> = coeffs.iter().map(|c| BigInt::from(c.clone())).collect();
    rest.resize(d + 1, BigInt::zero());
    let mut gamma = Vec::new();
    for k in 0..=d / 2 {
        let g = rest[k].clone();
        let m = d - 2 * k;
        for j in 0..=m {
            rest[k + j] -= &g * BigInt::from(binomial(m as u64, j as u64));
        }
        gamma.push(g);
    }
    assert!(
        rest.iter().all(|r| r.is_zero()),
        "polynomial was not palindromic"
    );
    gamma
}

/// Stirling permutations of `{1,1,...,n,n}` by filtering all multiset
/// arrangements: every entry between the two copies of `i` exceeds `i`.
pub fn stirling_permutations(n: usize) -> Vec<Vec<u8>> {
    fn go(counts: &mut [u8], cur: &mut Vec<u8>, total: usize, out: &mut Vec<Vec<u8>>) {
        if cur.len() == total {
            out.push(cur.clone());
            return;
        }
        for v in 0..counts.len() {
            if counts[v] > 0 {
                counts[v] -= 1;
                cur.push(v as u8 + 1);
                go(counts, cur, total, out);
                cur.pop();
                counts[v] += 1;
            }
        }
    }
    let mut all = Vec::new();
    go(&mut vec![2; n], &mut Vec::new(), 2 * n, &mut all);
    all.retain(|s| {
        (1..=n as u8).all(|i| {
            let first = s.iter().position(|&x| x == i).unwrap();
            let last = s.iter().rposition(|&x| x == i).unwrap();
            s[first + 1..last].iter().all(|&x| x > i)
        })
    });
    all
}

/// Descents of `s` with a trailing 0 appended, so the count lies in `1..=n`.
pub fn stirling_descents(s: &[u8]) -> usize {
    let mut full = s.to_vec();
    full.push(0);
    full.windows(2).filter(|w| w[0] > w[1]).count()
}

pub fn double_factorial_odd(n: usize) -> BigUint {
    (1..=n as u64).map(|i| BigUint::from(2 * i - 1)).product()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

/// Every sequence of `S(a, b)` is log-concave, by listing all of them.
pub fn all_mixtures_log_concave(a: &[u64], b: &[u64]) -> bool {
    let m = a.len();
    (0..1u32 << m).all(|mask| {
        let c: Vec<u128> = (0..m)
            .map(|i| if mask >> i & 1 == 1 { b[i] } else { a[i] } as u128)
            .collect();
        (1..m.saturating_sub(1)).all(|k| c[k] * c[k] >= c[k - 1] * c[k + 1])
    })
}

/// `min(a_k,b_k)^2 >= max(a_{k-1},b_{k-1}) max(a_{k+1},b_{k+1})`, transcribed.
pub fn strong_sync_naive(a: &[BigUint], b: &[BigUint]) -> bool {
    (1..a.len().saturating_sub(1)).all(|k| {
        let lo = a[k].clone().min(b[k].clone());
        let l = a[k - 1].clone().max(b[k - 1].clone());
        let r = a[k + 1].clone().max(b[k + 1].clone());
        &lo * &lo >= l * r
    })
}
