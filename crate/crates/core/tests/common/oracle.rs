//! Independent reference computations, using only integer arithmetic.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};

pub fn squarefree(d: u64) -> bool {
    (2..).take_while(|k| k * k <= d).all(|k| d % (k * k) != 0)
}

/// `(x, y)` with `x + y√d` the fundamental unit of `Z[√d]`, from the period of the classical continued fraction of `√d`.
pub fn classical_unit(d: u64) -> (BigInt, BigInt, i32) {
    let a0 = d.sqrt();
    assert!(a0 * a0 != d);
    let (mut m, mut q, mut a) = (0u64, 1u64, a0);
    let (mut p0, mut p1) = (BigInt::from(1), BigInt::from(a0));
    let (mut q0, mut q1) = (BigInt::from(0), BigInt::from(1));
    let mut len = 0;
    loop {
        m = q * a - m;
        q = (d - m * m) / q;
        a = (a0 + m) / q;
        len += 1;
        if a == 2 * a0 {
            break;
        }
        let p2 = BigInt::from(a) * &p1 + &p0;
        let q2 = BigInt::from(a) * &q1 + &q0;
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
    }
    let norm = if len % 2 == 0 { 1 } else { -1 };
    (p1, q1, norm)
}

pub fn split_primes(d: u64, bound: u64) -> Vec<u64> {
    (3..=bound)
        .filter(|&p| (2..p).all(|k| p % k != 0))
        .filter(|&p| d % p != 0 && (1..p).any(|r| (r * r + d) % p == 0))
        .collect()
}

/// Smallest `ν ≥ 1` with a coprime solution of the Pell-like equation of `Q(√−d)` at `p`.
pub fn min_pell_exponent(d: u64, p: u64, max_nu: u32) -> Option<u32> {
    (1..=max_nu).find(|&nu| !pell_brute(d, p, nu).is_empty())
}

/// Coprime `(x, y)` with `x² + dy² = p^{2ν}`, or `4x² − 4xy + (1+d)y² = 4p^{2ν}` when `d ≡ 3 mod 4`.
pub fn pell_brute(d: u64, p: u64, nu: u32) -> Vec<(i64, i64)> {
    let d = d as i128;
    let rhs = (p as i128).pow(2 * nu);
    let mut out = vec![];
    if d % 4 == 3 {
        // (2x − y)² + d y² = 4 p^{2ν}
        let r4 = 4 * rhs;
        let ymax = ((r4 / d) as u128).sqrt() as i128;
        for y in -ymax..=ymax {
            let rest = r4 - d * y * y;
            if rest < 0 {
                continue;
            }
            let s = (rest as u128).sqrt() as i128;
            if s * s != rest {
                continue;
            }
            for t in [s, -s] {
                if (t + y) % 2 == 0 {
                    let x = (t + y) / 2;
                    if x.gcd(&y) == 1 && !out.contains(&(x as i64, y as i64)) {
                        out.push((x as i64, y as i64));
                    }
                }
            }
        }
    } else {
        let ymax = ((rhs / d) as u128).sqrt() as i128;
        for y in -ymax..=ymax {
            let rest = rhs - d * y * y;
            let s = (rest as u128).sqrt() as i128;
            if s * s != rest {
                continue;
            }
            for x in [s, -s] {
                if x.gcd(&y) == 1 && !out.contains(&(x as i64, y as i64)) {
                    out.push((x as i64, y as i64));
                }
            }
        }
    }
    out
}

/// Order of the class of a prime above `p`: the least `ℓ` with an integral `α`, `N(α) = p^ℓ`, `p ∤ α`.
pub fn ideal_order_brute(d: u64, p: u64, max_l: u32) -> Option<u32> {
    let dd = d as i128;
    let pp = p as i128;
    (1..=max_l).find(|&l| {
        let n = pp.pow(l);
        if d % 4 == 3 {
            // α = (X + Y√−d)/2 with X ≡ Y mod 2
            let n4 = 4 * n;
            let ymax = ((n4 / dd) as u128).sqrt() as i128;
            (0..=ymax).any(|y| {
                let rest = n4 - dd * y * y;
                let x = (rest as u128).sqrt() as i128;
                x * x == rest && (x - y) % 2 == 0 && !(x % pp == 0 && y % pp == 0)
            })
        } else {
            let ymax = ((n / dd) as u128).sqrt() as i128;
            (0..=ymax).any(|y| {
                let rest = n - dd * y * y;
                let x = (rest as u128).sqrt() as i128;
                x * x == rest && !(x % pp == 0 && y % pp == 0)
            })
        }
    })
}
