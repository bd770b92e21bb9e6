//! Factorization of rational polynomials: Berlekamp-free Zassenhaus
//! (distinct/equal degree factoring modulo a small prime, Hensel lifting,
//! subset recombination).

use crate::poly::{primitive_integer, qpoly_from_bigints, QPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

type Fp = Vec<u64>;

fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut nt, mut r, mut nr) = (0i128, 1i128, p as i128, a as i128);
    while nr != 0 {
        let q = r / nr;
        (t, nt) = (nt, t - q * nt);
        (r, nr) = (nr, r - q * nr);
    }
    assert_eq!(r, 1, "not invertible mod p");
    t.rem_euclid(p as i128) as u64
}

fn fp_sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).unwrap_or(&0) + p - b.get(i).unwrap_or(&0)) % p).collect())
}

fn fp_mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x * y % p) % p;
        }
    }
    trim(r)
}

fn fp_divrem(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    let mut r = a.clone();
    if r.len() <= db {
        return (vec![], trim(r));
    }
    let mut q = vec![0u64; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db] * inv % p;
        q[k] = c;
        if c != 0 {
            for (j, &y) in b.iter().enumerate() {
                r[k + j] = (r[k + j] + p - c * y % p) % p;
            }
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

fn fp_monic(a: &Fp, p: u64) -> Fp {
    let inv = inv_mod(*a.last().unwrap(), p);
    a.iter().map(|x| x * inv % p).collect()
}

fn fp_gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = fp_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        fp_monic(&a, p)
    }
}

fn fp_powmod(base: &Fp, mut e: u128, m: &Fp, p: u64) -> Fp {
    let mut result: Fp = vec![1];
    let mut b = fp_divrem(base, m, p).1;
    while e > 0 {
        if e & 1 == 1 {
            result = fp_divrem(&fp_mul(&result, &b, p), m, p).1;
        }
        b = fp_divrem(&fp_mul(&b, &b, p), m, p).1;
        e >>= 1;
    }
    result
}

fn fp_derivative(a: &Fp, p: u64) -> Fp {
    trim(a.iter().enumerate().skip(1).map(|(i, &x)| (i as u64 % p) * x % p).collect())
}

fn reduce_mod(f: &[BigInt], p: u64) -> Fp {
    let pb = BigInt::from(p);
    trim(f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

/// Distinct-degree factorization of a monic square-free polynomial.
fn ddf(f: &Fp, p: u64) -> Vec<(Fp, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x: Fp = vec![0, 1];
    let mut h = x.clone();
    let mut d = 0;
    while f.len() > 1 {
        d += 1;
        if 2 * d > f.len() - 1 {
            out.push((f.clone(), f.len() - 1));
            break;
        }
        h = fp_powmod(&h, p as u128, &f, p);
        let g = fp_gcd(&fp_sub(&h, &x, p), &f, p);
        if g.len() > 1 {
            f = fp_divrem(&f, &g, p).0;
            h = fp_divrem(&h, &f, p).1;
            out.push((g, d));
        }
    }
    out
}

/// Split a product of distinct monic irreducibles of degree `d` (p odd).
fn edf(g: &Fp, d: usize, p: u64) -> Vec<Fp> {
    let k = g.len() - 1;
    if k == d {
        return vec![g.clone()];
    }
    let e = (((p as u128).pow(d as u32)) - 1) / 2;
    // deterministic probe sequence: x + c, then x^2 + a x + c, ...
    let mut probes: Vec<Fp> = (0..p).map(|c| vec![c, 1]).collect();
    for a in 0..p {
        for c in 0..p.min(16) {
            probes.push(vec![c, a, 1]);
        }
    }
    for t in probes {
        let s = fp_powmod(&t, e, g, p);
        let u = fp_gcd(&fp_sub(&s, &vec![1], p), g, p);
        if u.len() > 1 && u.len() < g.len() {
            let w = fp_divrem(g, &u, p).0;
            let mut r = edf(&u, d, p);
            r.extend(edf(&fp_monic(&w, p), d, p));
            return r;
        }
    }
    panic!("equal-degree splitting failed");
}

fn factor_mod_p(f: &Fp, p: u64) -> Vec<Fp> {
    let mut out = Vec::new();
    for (g, d) in ddf(&fp_monic(f, p), p) {
        out.extend(edf(&g, d, p));
    }
    out
}

// ---------- integer polynomials modulo m ----------

type Zp = Vec<BigInt>;

fn zm(a: &[BigInt], m: &BigInt) -> Zp {
    let mut v: Zp = a.iter().map(|x| x.mod_floor(m)).collect();
    while v.last().map_or(false, |x| x.is_zero()) {
        v.pop();
    }
    v
}

fn z_mul(a: &[BigInt], b: &[BigInt]) -> Zp {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    r
}

fn z_sub(a: &[BigInt], b: &[BigInt]) -> Zp {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
        .collect()
}

fn to_fp(a: &[BigInt], p: u64) -> Fp {
    reduce_mod(a, p)
}

fn from_fp(a: &Fp) -> Zp {
    a.iter().map(|&x| BigInt::from(x)).collect()
}

/// Extended gcd over F_p: s*a + t*b = 1.
fn fp_xgcd(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (Fp, Fp) = (vec![1], vec![]);
    let (mut t0, mut t1): (Fp, Fp) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t2 = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    assert_eq!(r0.len(), 1, "factors not coprime mod p");
    let inv = inv_mod(r0[0], p);
    let sc = |v: &Fp| trim(v.iter().map(|x| x * inv % p).collect());
    (sc(&s0), sc(&t0))
}

/// Lift `f ≡ g h (mod p)`, g monic, to `f ≡ G H (mod p^k)`.
fn hensel_pair(f: &Zp, g: &Fp, h: &Fp, p: u64, k: u32) -> (Zp, Zp) {
    let (s, t) = fp_xgcd(g, h, p);
    let pb = BigInt::from(p);
    let mut gz = from_fp(g);
    let mut hz = from_fp(h);
    let mut pj = pb.clone();
    for _ in 1..k {
        let err = z_sub(f, &z_mul(&gz, &hz));
        let mpj1 = &pj * &pb;
        let err = zm(&err, &mpj1);
        let e: Zp = err.iter().map(|x| x / &pj).collect();
        let e = to_fp(&e, p);
        // dg = t*e mod g, dh = (e - dg*h)/g
        let dg = fp_divrem(&fp_mul(&t, &e, p), g, p).1;
        let dh = fp_divrem(&fp_sub(&e, &fp_mul(&dg, h, p), p), g, p).0;
        let dgz: Zp = from_fp(&dg).iter().map(|x| x * &pj).collect();
        let dhz: Zp = from_fp(&dh).iter().map(|x| x * &pj).collect();
        gz = zm(&z_add(&gz, &dgz), &mpj1);
        hz = zm(&z_add(&hz, &dhz), &mpj1);
        pj = mpj1;
    }
    let _ = s;
    (gz, hz)
}

fn z_add(a: &[BigInt], b: &[BigInt]) -> Zp {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
        .collect()
}

/// Lift all monic factors mod p of `f` (lc(f) coprime to p) to mod p^k.
fn hensel_all(f: &Zp, factors: &[Fp], p: u64, k: u32) -> Vec<Zp> {
    if factors.len() == 1 {
        // the monic associate of f modulo p^k
        let m = BigInt::from(p).pow(k);
        let lc = f.last().unwrap().mod_floor(&m);
        let inv = lc.modinv(&m).expect("leading coefficient invertible");
        return vec![zm(&f.iter().map(|x| x * &inv).collect::<Vec<_>>(), &m)];
    }
    let g = &factors[0];
    let mut h: Fp = to_fp(&[f.last().unwrap().clone()], p);
    for u in &factors[1..] {
        h = fp_mul(&h, u, p);
    }
    let (gz, hz) = hensel_pair(f, g, &h, p, k);
    let mut out = vec![gz];
    out.extend(hensel_all(&hz, &factors[1..], p, k));
    out
}

fn symmetric(a: &[BigInt], m: &BigInt) -> Zp {
    let half = m / 2;
    a.iter()
        .map(|x| {
            let r = x.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

fn exact_div_z(f: &[BigInt], g: &[BigInt]) -> Option<Zp> {
    let fq = qpoly_from_bigints(f);
    let gq = qpoly_from_bigints(g);
    let (q, r) = fq.divrem(&gq);
    if !r.is_zero() {
        return None;
    }
    q.coeffs().iter().map(|c| if c.is_integer() { Some(c.to_integer()) } else { None }).collect()
}

fn primitive(v: Zp) -> Zp {
    primitive_integer(&qpoly_from_bigints(&v))
}

const PRIMES: [u64; 40] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
];

/// Irreducible factors of a square-free primitive integer polynomial with positive leading coefficient.
pub fn zassenhaus(f: &[BigInt]) -> Vec<Zp> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    // pick the admissible prime with the fewest modular factors among the first few
    let mut best: Option<(u64, Vec<Fp>)> = None;
    let mut tried = 0;
    for &p in PRIMES.iter() {
        let fp = reduce_mod(f, p);
        if fp.len() != f.len() {
            continue;
        }
        let g = fp_gcd(&fp, &fp_derivative(&fp, p), p);
        if g.len() > 1 {
            continue;
        }
        let facs = factor_mod_p(&fp, p);
        if facs.len() == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().map_or(true, |(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 6 {
            break;
        }
    }
    let (p, facs) = best.expect("no admissible prime");
    let lc = f.last().unwrap().clone();
    let norm1: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound = BigInt::from(2) * lc.abs() * (BigInt::one() << n) * norm1;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    while pb.pow(k) <= bound {
        k += 1;
    }
    let m = pb.pow(k);
    let mut lifted = hensel_all(&f.to_vec(), &facs, p, k);
    let mut remaining = f.to_vec();
    let mut out = Vec::new();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut found = false;
        for subset in combinations(lifted.len(), s) {
            let lcr = remaining.last().unwrap().clone();
            let mut g: Zp = vec![lcr.clone()];
            for &i in &subset {
                g = zm(&z_mul(&g, &lifted[i]), &m);
            }
            let g = primitive(symmetric(&g, &m));
            if let Some(q) = exact_div_z(&remaining, &g) {
                out.push(g);
                remaining = primitive(q);
                let keep: Vec<Zp> = lifted
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, v)| v.clone())
                    .collect();
                lifted = keep;
                found = true;
                break;
            }
        }
        if !found {
            s += 1;
        }
    }
    if remaining.len() > 1 {
        out.push(remaining);
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Monic irreducible factors over Q with multiplicities, in a deterministic order.
pub fn factor(p: &QPoly) -> Vec<(QPoly, usize)> {
    let mut out = Vec::new();
    for (i, sf) in p.squarefree_decomposition().iter().enumerate() {
        if sf.deg_or_zero() == 0 {
            continue;
        }
        for g in zassenhaus(&primitive_integer(sf)) {
            out.push((qpoly_from_bigints(&g).monic(), i + 1));
        }
    }
    out.sort_by(|a, b| {
        a.0.deg_or_zero()
            .cmp(&b.0.deg_or_zero())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    out
}

pub fn is_irreducible(p: &QPoly) -> bool {
    let f = factor(p);
    f.len() == 1 && f[0].1 == 1
}
