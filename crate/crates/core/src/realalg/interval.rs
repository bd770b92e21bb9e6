use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// A closed interval with exact rational endpoints.
#[derive(Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.12}, {:.12}]", to_f64(&self.lo), to_f64(&self.hi))
    }
}

pub fn to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    match q.to_f64() {
        Some(v) if v.is_finite() => v,
        _ => {
            // fall back through a scaled integer for huge numerators / denominators
            let n = q.numer().bits() as i64;
            let d = q.denom().bits() as i64;
            let shift = n - d;
            let scaled = if shift > 0 {
                q / BigRational::from_integer(BigInt::one() << (shift as usize))
            } else {
                q * BigRational::from_integer(BigInt::one() << ((-shift) as usize))
            };
            scaled.to_f64().unwrap_or(0.0) * 2f64.powi(shift as i32)
        }
    }
}

/// Largest multiple of 2^-bits not above q.
pub fn floor_dyadic(q: &BigRational, bits: u32) -> BigRational {
    let s = BigInt::one() << bits as usize;
    let scaled = (q * BigRational::from_integer(s.clone())).floor();
    scaled / BigRational::from_integer(s)
}

/// Smallest multiple of 2^-bits not below q.
pub fn ceil_dyadic(q: &BigRational, bits: u32) -> BigRational {
    let s = BigInt::one() << bits as usize;
    let scaled = (q * BigRational::from_integer(s.clone())).ceil();
    scaled / BigRational::from_integer(s)
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(q: BigRational) -> Self {
        Interval { lo: q.clone(), hi: q }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    /// Sign of every point of the interval, if it is constant and nonzero.
    pub fn strict_sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else {
            None
        }
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn abs_upper(&self) -> BigRational {
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a > b {
            a
        } else {
            b
        }
    }

    /// Lower bound of |x| over the interval (0 if it straddles zero).
    pub fn abs_lower(&self) -> BigRational {
        if self.contains_zero() {
            BigRational::zero()
        } else if self.lo.is_positive() {
            self.lo.clone()
        } else {
            -self.hi.clone()
        }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let mut lo = c[0].clone();
        let mut hi = c[0].clone();
        for v in &c[1..] {
            if *v < lo {
                lo = v.clone();
            }
            if *v > hi {
                hi = v.clone();
            }
        }
        Interval { lo, hi }
    }

    pub fn scale(&self, q: &BigRational) -> Interval {
        let a = &self.lo * q;
        let b = &self.hi * q;
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    /// Square, tight when the interval straddles zero.
    pub fn sqr(&self) -> Interval {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        let hi = if a > b { a.clone() } else { b.clone() };
        let lo = if self.contains_zero() {
            BigRational::zero()
        } else if a < b {
            a
        } else {
            b
        };
        Interval { lo, hi }
    }

    /// Outward rounding onto the 2^-bits grid; keeps endpoint sizes bounded.
    pub fn round_out(&self, bits: u32) -> Interval {
        Interval { lo: floor_dyadic(&self.lo, bits), hi: ceil_dyadic(&self.hi, bits) }
    }

    /// Enclosure of sqrt over a nonnegative interval, rounded outward on the 2^-bits grid.
    pub fn sqrt(&self, bits: u32) -> Interval {
        Interval { lo: sqrt_floor(&self.lo, bits), hi: sqrt_ceil(&self.hi, bits) }
    }
}

fn isqrt(n: &BigInt) -> BigInt {
    if n.is_negative() || n.is_zero() {
        return BigInt::zero();
    }
    n.sqrt()
}

/// Lower bound of sqrt(q) on the 2^-bits grid (0 for q <= 0).
pub fn sqrt_floor(q: &BigRational, bits: u32) -> BigRational {
    if !q.is_positive() {
        return BigRational::zero();
    }
    let s = BigInt::one() << (2 * bits as usize);
    let n = (q * BigRational::from_integer(s)).floor().to_integer();
    BigRational::new(isqrt(&n), BigInt::one() << bits as usize)
}

/// Upper bound of sqrt(q) on the 2^-bits grid.
pub fn sqrt_ceil(q: &BigRational, bits: u32) -> BigRational {
    if !q.is_positive() {
        return BigRational::zero();
    }
    let s = BigInt::one() << (2 * bits as usize);
    let n = (q * BigRational::from_integer(s)).ceil().to_integer();
    let mut r = isqrt(&n);
    if &r * &r < n {
        r += 1;
    }
    BigRational::new(r, BigInt::one() << bits as usize)
}
