//! Dense univariate polynomials over an exact ordered field.
//!
//! The same code serves rationals and elements of a real number field, so the
//! Sturm machinery here decides signs through [`Scalar::sign`] only.

use crate::realalg::interval::Interval;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Exact ordered field elements.
pub trait Scalar: Clone + fmt::Debug {
    fn nil() -> Self;
    fn unity() -> Self;
    fn from_q(q: &BigRational) -> Self;
    fn is_nil(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn recip(&self) -> Self;
    /// Exact sign.
    fn sign(&self) -> Ordering;
    /// Certified enclosure of width roughly 2^-bits.
    fn enclose(&self, bits: u32) -> Interval;
    /// Exact floor.
    fn floor_int(&self) -> BigInt;

    fn is_unity(&self) -> bool {
        self.minus(&Self::unity()).is_nil()
    }
    fn scale_q(&self, q: &BigRational) -> Self {
        self.times(&Self::from_q(q))
    }
}

impl Scalar for BigRational {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unity() -> Self {
        One::one()
    }
    fn from_q(q: &BigRational) -> Self {
        q.clone()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self.clone()
    }
    fn recip(&self) -> Self {
        assert!(!Zero::is_zero(self), "division by zero");
        <BigRational as One>::one() / self
    }
    fn sign(&self) -> Ordering {
        self.cmp(&<BigRational as Zero>::zero())
    }
    fn enclose(&self, _bits: u32) -> Interval {
        Interval::point(self.clone())
    }
    fn floor_int(&self) -> BigInt {
        self.floor().to_integer()
    }
}

/// Coefficients from low to high degree, no trailing zeros.
#[derive(Clone, Debug)]
pub struct Poly<T> {
    c: Vec<T>,
}

/// Points at which Sturm sign variations are counted.
#[derive(Clone, Debug)]
pub enum At<'a> {
    NegInf,
    Q(&'a BigRational),
    PosInf,
}

pub type QPoly = Poly<BigRational>;

impl<T: Scalar> Poly<T> {
    pub fn new(mut c: Vec<T>) -> Self {
        while c.last().map_or(false, |x| x.is_nil()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: vec![] }
    }

    pub fn constant(a: T) -> Self {
        Poly::new(vec![a])
    }

    pub fn monomial(a: T, k: usize) -> Self {
        let mut c = vec![T::nil(); k];
        c.push(a);
        Poly::new(c)
    }

    pub fn x() -> Self {
        Poly::new(vec![T::nil(), T::unity()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> T {
        self.c.get(i).cloned().unwrap_or_else(T::nil)
    }

    pub fn lead(&self) -> T {
        self.c.last().cloned().unwrap_or_else(T::nil)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::nil();
        for a in self.c.iter().rev() {
            acc = acc.times(x).plus(a);
        }
        acc
    }

    pub fn eval_q(&self, x: &BigRational) -> T {
        let mut acc = T::nil();
        for a in self.c.iter().rev() {
            acc = acc.scale_q(x).plus(a);
        }
        acc
    }

    /// Enclosure of every value on `x`, coefficients enclosed to `bits`.
    pub fn eval_interval(&self, x: &Interval, bits: u32) -> Interval {
        let mut acc = Interval::point(BigRational::zero());
        for a in self.c.iter().rev() {
            acc = acc.mul(x).add(&a.enclose(bits)).round_out(bits + 8);
        }
        acc
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let mut r = Vec::with_capacity(n);
        for i in 0..n {
            r.push(match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a.plus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                _ => unreachable!(),
            });
        }
        Poly::new(r)
    }

    pub fn neg(&self) -> Self {
        Poly { c: self.c.iter().map(|a| a.negated()).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut r = vec![T::nil(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_nil() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                r[i + j] = r[i + j].plus(&a.times(b));
            }
        }
        Poly::new(r)
    }

    pub fn scale(&self, a: &T) -> Self {
        Poly::new(self.c.iter().map(|x| x.times(a)).collect())
    }

    pub fn scale_q(&self, q: &BigRational) -> Self {
        Poly::new(self.c.iter().map(|x| x.scale_q(q)).collect())
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![T::nil(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    /// Euclidean division; panics when dividing by zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lead().recip();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![T::nil(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = r[k + dd].times(&inv);
            if !coef.is_nil() {
                for (j, b) in d.c.iter().enumerate() {
                    r[k + j] = r[k + j].minus(&coef.times(b));
                }
            }
            q[k] = coef;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().recip())
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Bezout: returns (g, s, t) with s*self + t*o = g monic.
    pub fn xgcd(&self, o: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Poly::constant(T::unity()), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::constant(T::unity()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lead().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn derivative(&self) -> Self {
        let mut r = Vec::new();
        for (i, a) in self.c.iter().enumerate().skip(1) {
            r.push(a.scale_q(&BigRational::from_integer(BigInt::from(i))));
        }
        Poly::new(r)
    }

    /// `self(x + a)`.
    pub fn taylor_shift(&self, a: &T) -> Self {
        let mut acc = Poly::zero();
        let lin = Poly::new(vec![a.clone(), T::unity()]);
        for c in self.c.iter().rev() {
            acc = acc.mul(&lin).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// Yun's square-free decomposition: `self = c * prod f_i^i`, entry i-1 holds f_i.
    pub fn squarefree_decomposition(&self) -> Vec<Self> {
        let mut out = Vec::new();
        if self.deg_or_zero() == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.divrem(&a).0;
        let mut c = df.divrem(&a).0;
        let mut d = c.sub(&b.derivative());
        loop {
            let g = b.gcd(&d);
            out.push(g.clone());
            b = b.divrem(&g).0;
            if b.deg_or_zero() == 0 {
                break;
            }
            c = d.divrem(&g).0;
            d = c.sub(&b.derivative());
            a = a.divrem(&g).0;
        }
        let _ = a;
        while out.last().map_or(false, |p| p.deg_or_zero() == 0) {
            out.pop();
        }
        out
    }

    pub fn squarefree_part(&self) -> Self {
        if self.deg_or_zero() == 0 {
            return Poly::constant(T::unity());
        }
        let f = self.monic();
        f.divrem(&f.gcd(&f.derivative())).0
    }

    /// Product of the odd-multiplicity square-free factors: the roots where the sign changes.
    pub fn odd_part(&self) -> Self {
        let mut r = Poly::constant(T::unity());
        for (i, f) in self.squarefree_decomposition().iter().enumerate() {
            if i % 2 == 0 {
                r = r.mul(f);
            }
        }
        r
    }

    /// Strip the factor x^k, returning (k, cofactor).
    pub fn strip_x(&self) -> (usize, Self) {
        let k = self.c.iter().take_while(|a| a.is_nil()).count();
        (k, Poly { c: self.c[k..].to_vec() })
    }

    pub fn sign_at(&self, at: &At<'_>) -> Ordering {
        match at {
            At::Q(x) => self.eval_q(x).sign(),
            At::PosInf => self.lead().sign(),
            At::NegInf => {
                let s = self.lead().sign();
                if self.deg_or_zero() % 2 == 1 {
                    s.reverse()
                } else {
                    s
                }
            }
        }
    }

    /// Sturm chain; entries are rescaled by positive constants to keep them small.
    pub fn sturm_chain(&self) -> Vec<Self> {
        let mut seq = vec![self.clone()];
        if self.deg_or_zero() == 0 {
            return seq;
        }
        seq.push(self.derivative());
        loop {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]).neg();
            if r.is_zero() {
                break;
            }
            let l = r.lead();
            let r = match l.sign() {
                Ordering::Less => r.scale(&l.negated().recip()),
                _ => r.scale(&l.recip()),
            };
            seq.push(r);
        }
        seq
    }

    pub fn cauchy_bound(&self) -> BigRational {
        let n = self.degree().expect("zero polynomial has no root bound");
        let mut bits = 16;
        let lead = loop {
            let e = self.c[n].enclose(bits);
            if !e.contains_zero() {
                break e.abs_lower();
            }
            bits *= 2;
        };
        let mut m = BigRational::zero();
        for a in &self.c[..n] {
            let u = a.enclose(16).abs_upper() / &lead;
            if u > m {
                m = u;
            }
        }
        let b = m + BigRational::one();
        // round up to a power of two
        let mut p = BigRational::one();
        while p < b {
            p = p * BigRational::from_integer(BigInt::from(2));
        }
        p
    }
}

pub fn variations<T: Scalar>(seq: &[Poly<T>], at: &At<'_>) -> usize {
    let mut last = Ordering::Equal;
    let mut v = 0;
    for p in seq {
        let s = p.sign_at(at);
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

/// Distinct real roots in (a, b]; `seq` is a Sturm chain of a square-free polynomial.
pub fn count_roots<T: Scalar>(seq: &[Poly<T>], a: &At<'_>, b: &At<'_>) -> usize {
    let va = variations(seq, a);
    let vb = variations(seq, b);
    va.saturating_sub(vb)
}

/// Disjoint open intervals (a, b) each holding exactly one root of the square-free `p`
/// in (lo, hi), with p nonzero at every endpoint. Requires p(lo), p(hi) != 0.
pub fn isolate_roots<T: Scalar>(
    p: &Poly<T>,
    lo: &BigRational,
    hi: &BigRational,
) -> Vec<(BigRational, BigRational)> {
    let seq = p.sturm_chain();
    let mut out = Vec::new();
    let vl = variations(&seq, &At::Q(lo));
    let vh = variations(&seq, &At::Q(hi));
    isolate_rec(p, &seq, lo.clone(), hi.clone(), vl, vh, &mut out);
    out
}

fn split_point<T: Scalar>(p: &Poly<T>, a: &BigRational, b: &BigRational) -> BigRational {
    let w = b - a;
    let mut den = 2i64;
    loop {
        for num in 1..den {
            if num.gcd(&den) != 1 || (den > 2 && num * 2 == den) {
                continue;
            }
            let m = a + &w * BigRational::new(num.into(), den.into());
            if !p.eval_q(&m).is_nil() {
                return m;
            }
        }
        den *= 2;
    }
}

fn isolate_rec<T: Scalar>(
    p: &Poly<T>,
    seq: &[Poly<T>],
    a: BigRational,
    b: BigRational,
    va: usize,
    vb: usize,
    out: &mut Vec<(BigRational, BigRational)>,
) {
    let n = va.saturating_sub(vb);
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push((a, b));
        return;
    }
    let m = split_point(p, &a, &b);
    let vm = variations(seq, &At::Q(&m));
    isolate_rec(p, seq, a, m.clone(), va, vm, out);
    isolate_rec(p, seq, m, b, vm, vb, out);
}

// ---------- integer-coefficient helpers ----------

pub fn qpoly_from_ints(c: &[i64]) -> QPoly {
    Poly::new(c.iter().map(|&x| BigRational::from_integer(x.into())).collect())
}

pub fn qpoly_from_bigints(c: &[BigInt]) -> QPoly {
    Poly::new(c.iter().map(|x| BigRational::from_integer(x.clone())).collect())
}

/// Primitive integer polynomial with positive leading coefficient, proportional to `p`.
pub fn primitive_integer(p: &QPoly) -> Vec<BigInt> {
    if p.is_zero() {
        return vec![];
    }
    let mut l = BigInt::one();
    for a in p.coeffs() {
        l = l.lcm(a.denom());
    }
    let mut v: Vec<BigInt> =
        p.coeffs().iter().map(|a| (a * BigRational::from_integer(l.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for a in &v {
        g = g.gcd(a);
    }
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    for a in v.iter_mut() {
        *a = &*a / &g;
    }
    v
}

/// Parse `x^3 - 2`, `x^4 + 3*x + 1`, `-x^2 + 2x`: integer coefficients in one variable `x`.
pub fn parse_poly(s: &str) -> crate::Result<QPoly> {
    use crate::Error;
    let bad = |m: &str| Error::Parse(format!("polynomial {s:?}: {m}"));
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(bad("empty"));
    }
    let mut terms: Vec<BigRational> = Vec::new();
    let b = t.as_bytes();
    let mut i = 0;
    while i < b.len() {
        let mut neg = false;
        if b[i] == b'+' || b[i] == b'-' {
            neg = b[i] == b'-';
            i += 1;
        } else if i > 0 {
            return Err(bad("expected + or -"));
        }
        let start = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        let coef: Option<BigInt> = if i > start { Some(t[start..i].parse().unwrap()) } else { None };
        let mut deg = 0usize;
        if i < b.len() && b[i] == b'*' {
            if coef.is_none() {
                return Err(bad("dangling *"));
            }
            i += 1;
            if i >= b.len() || b[i] != b'x' {
                return Err(bad("expected x after *"));
            }
        }
        if i < b.len() && b[i] == b'x' {
            i += 1;
            deg = 1;
            if i < b.len() && b[i] == b'^' {
                i += 1;
                let s0 = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                if i == s0 {
                    return Err(bad("missing exponent"));
                }
                deg = t[s0..i].parse().map_err(|_| bad("exponent too large"))?;
            }
        } else if coef.is_none() {
            return Err(bad("expected a term"));
        }
        let mut c = BigRational::from_integer(coef.unwrap_or_else(BigInt::one));
        if neg {
            c = -c;
        }
        if terms.len() <= deg {
            terms.resize(deg + 1, BigRational::zero());
        }
        terms[deg] += c;
    }
    Ok(Poly::new(terms))
}

impl fmt::Display for Poly<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if Zero::is_zero(a) {
                continue;
            }
            let neg = a.is_negative();
            let mag = a.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let one = mag.is_one();
            match i {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !one {
                        write!(f, "{}*", mag)?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", i)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_roundtrip() {
        let a = qpoly_from_ints(&[1, 2, 3, 4, 5]);
        let b = qpoly_from_ints(&[-1, 0, 2]);
        let (q, r) = a.divrem(&b);
        assert!(q.mul(&b).add(&r).sub(&a).is_zero());
        assert!(r.deg_or_zero() < 2);
    }

    #[test]
    fn yun_splits_multiplicities() {
        // (x-1)^2 (x+2)^3 (x-5)
        let l1 = qpoly_from_ints(&[-1, 1]);
        let l2 = qpoly_from_ints(&[2, 1]);
        let l3 = qpoly_from_ints(&[-5, 1]);
        let p = l1.mul(&l1).mul(&l2).mul(&l2).mul(&l2).mul(&l3);
        let d = p.squarefree_decomposition();
        assert_eq!(d.len(), 3);
        assert!(d[0].sub(&l3).is_zero());
        assert!(d[1].sub(&l1).is_zero());
        assert!(d[2].sub(&l2).is_zero());
        assert!(p.odd_part().sub(&l3.mul(&l2)).is_zero());
    }

    #[test]
    fn sturm_counts_roots_of_x3_minus_2x() {
        let p = qpoly_from_ints(&[0, -2, 0, 1]);
        let seq = p.sturm_chain();
        assert_eq!(count_roots(&seq, &At::NegInf, &At::PosInf), 3);
        let one = BigRational::one();
        assert_eq!(count_roots(&seq, &At::Q(&one), &At::PosInf), 1);
    }

    #[test]
    fn isolation_separates_close_roots() {
        // (x - 1/1000)(x - 2/1000)(x - 1)
        let a = Poly::new(vec![BigRational::new((-1).into(), 1000.into()), BigRational::one()]);
        let b = Poly::new(vec![BigRational::new((-2).into(), 1000.into()), BigRational::one()]);
        let c = qpoly_from_ints(&[-1, 1]);
        let p = a.mul(&b).mul(&c);
        let bound = p.cauchy_bound();
        let iv = isolate_roots(&p, &(-bound.clone()), &bound);
        assert_eq!(iv.len(), 3);
    }

    #[test]
    fn display_matches_input_syntax() {
        assert_eq!(qpoly_from_ints(&[-2, 0, 0, 1]).to_string(), "x^3 - 2");
        assert_eq!(qpoly_from_ints(&[1, 3, 0, 0, 1]).to_string(), "x^4 + 3*x + 1");
    }
    #[test]
    fn parse_forms() {
        assert_eq!(parse_poly("x^3 - 2").unwrap().coeffs(), qpoly_from_ints(&[-2, 0, 0, 1]).coeffs());
        assert_eq!(parse_poly("x^4 + 3*x + 1").unwrap().coeffs(), qpoly_from_ints(&[1, 3, 0, 0, 1]).coeffs());
        assert_eq!(parse_poly("-x^2+2x").unwrap().coeffs(), qpoly_from_ints(&[0, 2, -1]).coeffs());
        assert_eq!(parse_poly("1").unwrap().coeffs(), qpoly_from_ints(&[1]).coeffs());
        assert!(parse_poly("x^").is_err());
        assert!(parse_poly("2y").is_err());
        assert!(parse_poly("").is_err());
    }
}
