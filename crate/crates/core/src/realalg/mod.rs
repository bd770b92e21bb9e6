//! Certified real arithmetic.
//!
//! Every real quantity the pipeline compares lives in a real number field
//! `L = Q(γ)`, with `γ` pinned down by an isolating interval of its minimal
//! polynomial. Zero testing is exact (coordinates modulo `h`), and signs come
//! from interval refinement with a Sturm-Tarski query as the exact fallback.

pub mod interval;
pub mod roots;

use crate::error::Error;
use crate::poly::{At, Poly, QPoly, Scalar};
use interval::Interval;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, Mutex};

pub use interval::to_f64;
pub use roots::{solve_poly_inequalities, Endpoint, RealRoot, Window};

/// Controls how [`CertReal::sign`] decides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignConfig {
    pub max_bits: u32,
    /// Try interval refinement before the exact query.
    pub interval_fast_path: bool,
    /// Allow the Sturm-Tarski query once `max_bits` is reached.
    pub exact_fallback: bool,
}

impl Default for SignConfig {
    fn default() -> Self {
        let max_bits = std::env::var("GCF_MAX_BITS")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(4096);
        SignConfig { max_bits, interval_fast_path: true, exact_fallback: true }
    }
}

impl SignConfig {
    /// Exact queries only; interval enclosures are never trusted for a sign.
    pub fn exact_only() -> Self {
        SignConfig { interval_fast_path: false, ..Default::default() }
    }
}

/// How many sign decisions went through each path on this thread.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SignStats {
    pub by_interval: u64,
    pub by_exact: u64,
    pub trivial: u64,
}

thread_local! {
    static CONFIG: RefCell<SignConfig> = RefCell::new(SignConfig::default());
    static STATS: RefCell<SignStats> = RefCell::new(SignStats::default());
}

pub fn sign_config() -> SignConfig {
    CONFIG.with(|c| *c.borrow())
}

pub fn sign_stats() -> SignStats {
    STATS.with(|s| *s.borrow())
}

pub fn reset_sign_stats() {
    STATS.with(|s| *s.borrow_mut() = SignStats::default());
}

fn bump(f: impl FnOnce(&mut SignStats)) {
    STATS.with(|s| f(&mut s.borrow_mut()));
}

/// Run `f` with a temporary sign configuration on this thread.
pub fn with_sign_config<R>(cfg: SignConfig, f: impl FnOnce() -> R) -> R {
    struct Restore(SignConfig);
    impl Drop for Restore {
        fn drop(&mut self) {
            CONFIG.with(|c| *c.borrow_mut() = self.0);
        }
    }
    let old = CONFIG.with(|c| std::mem::replace(&mut *c.borrow_mut(), cfg));
    let _g = Restore(old);
    f()
}

/// Run `f`, turning a precision-ceiling abort raised deep inside a sign query into an error.
pub fn catch_precision<R>(f: impl FnOnce() -> crate::Result<R>) -> crate::Result<R> {
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)) {
        Ok(r) => r,
        Err(payload) => match payload.downcast::<Error>() {
            Ok(e) => Err(*e),
            Err(other) => std::panic::resume_unwind(other),
        },
    }
}

/// A real number field `Q(γ)`.
pub struct RealField {
    h: QPoly,
    sturm_lo: BigRational,
    sturm_hi: BigRational,
    enclosure: Mutex<Interval>,
    sign_lo: Ordering,
    name: String,
}

impl fmt::Debug for RealField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RealField({} ~ {:?})", self.name, self.enclosure.lock().unwrap())
    }
}

impl RealField {
    /// `h` must be irreducible over Q with exactly one root in the open interval `(lo, hi)`.
    pub fn new(h: &QPoly, lo: BigRational, hi: BigRational) -> Arc<RealField> {
        let h = h.monic();
        assert!(h.deg_or_zero() >= 1);
        let sign_lo = h.eval_q(&lo).sign();
        assert_ne!(sign_lo, Ordering::Equal, "isolating endpoint is a root");
        let name = h.to_string();
        Arc::new(RealField {
            sturm_lo: lo.clone(),
            sturm_hi: hi.clone(),
            enclosure: Mutex::new(Interval::new(lo, hi)),
            sign_lo,
            h,
            name,
        })
    }

    pub fn degree(&self) -> usize {
        self.h.deg_or_zero()
    }

    pub fn min_poly(&self) -> &QPoly {
        &self.h
    }

    /// Certified enclosure of γ of width at most 2^-bits.
    pub fn gamma(&self, bits: u32) -> Interval {
        let target = BigRational::new(BigInt::one(), BigInt::one() << bits as usize);
        let mut e = self.enclosure.lock().unwrap();
        while e.width() > target {
            let m = e.mid();
            match self.h.eval_q(&m).sign() {
                Ordering::Equal => {
                    *e = Interval::point(m);
                    break;
                }
                s if s == self.sign_lo => e.lo = m,
                _ => e.hi = m,
            }
        }
        e.clone()
    }

    pub fn generator(self: &Arc<Self>) -> CertReal {
        let mut c = vec![BigRational::zero(); self.degree()];
        if self.degree() == 1 {
            c[0] = -self.h.coeff(0);
        } else {
            c[1] = BigRational::one();
        }
        CertReal::in_field(self, c)
    }

    fn reduce(&self, mut c: Vec<BigRational>) -> Vec<BigRational> {
        let n = self.degree();
        while c.len() > n {
            let top = c.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = c.len() - n;
            for i in 0..n {
                c[k + i] -= &top * self.h.coeff(i);
            }
        }
        c.resize(n, BigRational::zero());
        c
    }

    /// Sign of `e(γ)` by a Sturm-Tarski query on the isolating interval; `e` must not vanish at γ.
    fn tarski_sign(&self, e: &QPoly) -> Ordering {
        let r = self.h.derivative().mul(e).rem(&self.h);
        let mut seq = vec![self.h.clone(), r];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let next = seq[n - 2].rem(&seq[n - 1]).neg();
            if next.is_zero() {
                break;
            }
            let l = next.lead().abs();
            seq.push(next.scale(&l.recip()));
        }
        let va = crate::poly::variations(&seq, &At::Q(&self.sturm_lo)) as i64;
        let vb = crate::poly::variations(&seq, &At::Q(&self.sturm_hi)) as i64;
        match va - vb {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            v => panic!("Tarski query returned {v} for a nonzero element"),
        }
    }
}

/// An element of a real number field, or a plain rational when `field` is `None`.
#[derive(Clone)]
pub struct CertReal {
    c: Vec<BigRational>,
    field: Option<Arc<RealField>>,
}

impl fmt::Debug for CertReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.10}", self.to_f64())
    }
}

impl CertReal {
    pub fn rational(q: BigRational) -> Self {
        CertReal { c: vec![q], field: None }
    }

    pub fn int(n: i64) -> Self {
        CertReal::rational(BigRational::from_integer(n.into()))
    }

    pub fn in_field(f: &Arc<RealField>, c: Vec<BigRational>) -> Self {
        let c = f.reduce(c);
        CertReal { c, field: Some(f.clone()) }
    }

    /// Evaluate a rational polynomial at γ.
    pub fn from_poly(f: &Arc<RealField>, p: &QPoly) -> Self {
        CertReal::in_field(f, p.coeffs().to_vec())
    }

    pub fn field(&self) -> Option<&Arc<RealField>> {
        self.field.as_ref()
    }

    /// The rational value, if the element is known to be rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.field.is_none() {
            return Some(self.c[0].clone());
        }
        if self.c.iter().skip(1).all(|x| x.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.c
    }

    fn as_poly(&self) -> QPoly {
        Poly::new(self.c.clone())
    }

    fn lift(&self, f: &Arc<RealField>) -> Vec<BigRational> {
        match &self.field {
            Some(g) => {
                debug_assert!(Arc::ptr_eq(f, g), "mixing elements of distinct real fields");
                self.c.clone()
            }
            None => {
                let mut v = vec![BigRational::zero(); f.degree()];
                v[0] = self.c[0].clone();
                v
            }
        }
    }

    fn common(&self, o: &Self) -> Option<Arc<RealField>> {
        match (&self.field, &o.field) {
            (Some(a), Some(b)) => {
                assert!(Arc::ptr_eq(a, b), "mixing elements of distinct real fields");
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.enclose(60).mid())
    }

    /// Floor, decided by exact signs.
    pub fn floor(&self) -> BigInt {
        if let Some(q) = self.as_rational() {
            return q.floor().to_integer();
        }
        let mut bits = 32;
        loop {
            let e = self.enclose(bits);
            let a = e.lo.floor().to_integer();
            let b = e.hi.floor().to_integer();
            if &b - &a <= BigInt::one() {
                let bq = CertReal::rational(BigRational::from_integer(b.clone()));
                return if self.minus(&bq).sign() != Ordering::Less { b } else { a };
            }
            bits *= 2;
        }
    }

    /// Nearest integer with ties rounded up: floor(x + 1/2).
    pub fn round_half_up(&self) -> BigInt {
        self.plus(&CertReal::rational(BigRational::new(1.into(), 2.into()))).floor()
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Ordering::Less {
            self.negated()
        } else {
            self.clone()
        }
    }

    pub fn cmp_q(&self, q: &BigRational) -> Ordering {
        self.minus(&CertReal::rational(q.clone())).sign()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = CertReal::int(1);
        for _ in 0..k {
            r = r.times(self);
        }
        r
    }
}

impl Scalar for CertReal {
    fn nil() -> Self {
        CertReal::int(0)
    }
    fn unity() -> Self {
        CertReal::int(1)
    }
    fn from_q(q: &BigRational) -> Self {
        CertReal::rational(q.clone())
    }
    fn is_nil(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
    fn plus(&self, o: &Self) -> Self {
        match self.common(o) {
            None => CertReal::rational(&self.c[0] + &o.c[0]),
            Some(f) => {
                let a = self.lift(&f);
                let b = o.lift(&f);
                CertReal { c: a.iter().zip(&b).map(|(x, y)| x + y).collect(), field: Some(f) }
            }
        }
    }
    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }
    fn times(&self, o: &Self) -> Self {
        match self.common(o) {
            None => CertReal::rational(&self.c[0] * &o.c[0]),
            Some(f) => {
                if self.field.is_none() {
                    return o.scale_q(&self.c[0]);
                }
                if o.field.is_none() {
                    return self.scale_q(&o.c[0]);
                }
                let p = self.as_poly().mul(&o.as_poly());
                CertReal::in_field(&f, p.into_coeffs())
            }
        }
    }
    fn scale_q(&self, q: &BigRational) -> Self {
        CertReal { c: self.c.iter().map(|x| x * q).collect(), field: self.field.clone() }
    }
    fn negated(&self) -> Self {
        CertReal { c: self.c.iter().map(|x| -x.clone()).collect(), field: self.field.clone() }
    }
    fn recip(&self) -> Self {
        assert!(!Scalar::is_nil(self), "division by zero");
        match &self.field {
            None => CertReal::rational(BigRational::one() / &self.c[0]),
            Some(f) => {
                if let Some(q) = self.as_rational() {
                    return CertReal::in_field(f, vec![BigRational::one() / q]);
                }
                let (g, s, _) = self.as_poly().xgcd(f.min_poly());
                debug_assert_eq!(g.degree(), Some(0));
                CertReal::in_field(f, s.into_coeffs())
            }
        }
    }
    fn sign(&self) -> Ordering {
        let f = match &self.field {
            None => {
                bump(|s| s.trivial += 1);
                return self.c[0].cmp(&BigRational::zero());
            }
            Some(f) => f,
        };
        if Scalar::is_nil(self) {
            bump(|s| s.trivial += 1);
            return Ordering::Equal;
        }
        if let Some(q) = self.as_rational() {
            bump(|s| s.trivial += 1);
            return q.cmp(&BigRational::zero());
        }
        let cfg = sign_config();
        if cfg.interval_fast_path {
            let mut bits = 64;
            while bits <= cfg.max_bits {
                if let Some(s) = self.enclose(bits).strict_sign() {
                    bump(|st| st.by_interval += 1);
                    return s;
                }
                bits *= 2;
            }
            if !cfg.exact_fallback {
                std::panic::resume_unwind(Box::new(Error::PrecisionExhausted(cfg.max_bits)));
            }
        }
        bump(|st| st.by_exact += 1);
        f.tarski_sign(&self.as_poly())
    }
    fn floor_int(&self) -> BigInt {
        self.floor()
    }
    fn enclose(&self, bits: u32) -> Interval {
        match &self.field {
            None => Interval::point(self.c[0].clone()),
            Some(f) => {
                if let Some(q) = self.as_rational() {
                    return Interval::point(q);
                }
                // widen γ's enclosure enough to absorb coefficient growth
                let mag: u64 = self.c.iter().map(|x| x.numer().bits()).max().unwrap_or(0);
                let g0 = f.gamma(8);
                let gmag = g0.abs_upper().ceil().to_integer().bits() as u32;
                let extra = (mag as u32).min(1 << 16) + (gmag + 2) * f.degree() as u32 + 8;
                let g = f.gamma(bits + extra);
                let mut acc = Interval::point(BigRational::zero());
                for a in self.c.iter().rev() {
                    acc = acc.mul(&g).add(&Interval::point(a.clone())).round_out(bits + extra);
                }
                acc
            }
        }
    }
}

impl PartialEq for CertReal {
    fn eq(&self, o: &Self) -> bool {
        Scalar::is_nil(&self.minus(o))
    }
}

/// Real square root enclosure of a nonnegative value.
pub fn sqrt_enclosure(x: &CertReal, bits: u32) -> Interval {
    let e = x.enclose(2 * bits + 4);
    let lo = if e.lo.is_negative() { BigRational::zero() } else { e.lo.clone() };
    Interval::new(lo, e.hi.clone()).sqrt(bits + 2)
}
