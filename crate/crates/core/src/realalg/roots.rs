//! Isolated real roots of polynomials with exact coefficients, and the
//! semialgebraic window solver built on them.

use super::interval::Interval;
use crate::error::{Error, Result};
use crate::poly::{count_roots, isolate_roots, At, Poly, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// A real root of a square-free polynomial, isolated in an open interval `(lo, hi)`,
/// or pinned exactly when `lo == hi`.
#[derive(Clone)]
pub struct RealRoot<T: Scalar> {
    p: Arc<Poly<T>>,
    lo: BigRational,
    hi: BigRational,
    sign_lo: Ordering,
}

impl<T: Scalar> fmt::Debug for RealRoot<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root~{:.8}", self.approx())
    }
}

impl<T: Scalar> RealRoot<T> {
    /// `p` square-free with exactly one root in `(lo, hi)` and nonzero at both ends.
    pub fn new(p: Arc<Poly<T>>, lo: BigRational, hi: BigRational) -> Self {
        let sign_lo = p.eval_q(&lo).sign();
        debug_assert_ne!(sign_lo, Ordering::Equal);
        RealRoot { p, lo, hi, sign_lo }
    }

    pub fn exact(p: Arc<Poly<T>>, q: BigRational) -> Self {
        RealRoot { p, lo: q.clone(), hi: q, sign_lo: Ordering::Equal }
    }

    pub fn poly(&self) -> &Poly<T> {
        &self.p
    }

    pub fn bounds(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// Halve the isolating interval.
    pub fn refine(&mut self) {
        if self.is_exact() {
            return;
        }
        let m = (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2));
        match self.p.eval_q(&m).sign() {
            Ordering::Equal => {
                self.lo = m.clone();
                self.hi = m;
            }
            s if s == self.sign_lo => self.lo = m,
            _ => self.hi = m,
        }
    }

    /// Enclosure of width at most 2^-bits.
    pub fn enclose(&mut self, bits: u32) -> Interval {
        let w = BigRational::new(BigInt::one(), BigInt::one() << bits as usize);
        while &self.hi - &self.lo > w {
            self.refine();
        }
        self.bounds()
    }

    pub fn approx(&self) -> f64 {
        let mut c = self.clone();
        super::to_f64(&c.enclose(60).mid())
    }

    /// Exact comparison with a rational.
    pub fn cmp_q(&mut self, q: &BigRational) -> Ordering {
        loop {
            if self.is_exact() {
                return self.lo.cmp(q);
            }
            if q <= &self.lo {
                return Ordering::Greater;
            }
            if q >= &self.hi {
                return Ordering::Less;
            }
            if self.p.eval_q(q).is_nil() {
                return Ordering::Equal;
            }
            self.refine();
        }
    }

    /// Exact comparison of two roots.
    pub fn cmp_root(&mut self, other: &mut RealRoot<T>) -> Ordering {
        if other.is_exact() {
            return self.cmp_q(&other.lo.clone());
        }
        if self.is_exact() {
            return other.cmp_q(&self.lo.clone()).reverse();
        }
        let mut common: Option<Option<Vec<Poly<T>>>> = None;
        loop {
            if self.is_exact() || other.is_exact() {
                return self.cmp_root(other);
            }
            if self.hi <= other.lo {
                return Ordering::Less;
            }
            if other.hi <= self.lo {
                return Ordering::Greater;
            }
            // overlapping intervals: do they share a root in the overlap?
            let chain = common.get_or_insert_with(|| {
                let g = self.p.gcd(&other.p);
                if g.deg_or_zero() == 0 {
                    None
                } else {
                    Some(g.sturm_chain())
                }
            });
            if let Some(seq) = chain {
                let lo = if self.lo > other.lo { &self.lo } else { &other.lo };
                let hi = if self.hi < other.hi { &self.hi } else { &other.hi };
                if count_roots(seq, &At::Q(lo), &At::Q(hi)) > 0 {
                    return Ordering::Equal;
                }
            }
            self.refine();
            other.refine();
        }
    }
}

/// One end of a window: a root, or the sentinels 0 and +∞.
#[derive(Clone, Debug)]
pub enum Endpoint<T: Scalar> {
    Zero,
    Root(RealRoot<T>),
    Infinity,
}

impl<T: Scalar> Endpoint<T> {
    pub fn cmp(&mut self, other: &mut Endpoint<T>) -> Ordering {
        use Endpoint::*;
        match (self, other) {
            (Zero, Zero) | (Infinity, Infinity) => Ordering::Equal,
            (Zero, _) | (_, Infinity) => Ordering::Less,
            (_, Zero) | (Infinity, _) => Ordering::Greater,
            (Root(a), Root(b)) => a.cmp_root(b),
        }
    }

    pub fn cmp_q(&mut self, q: &BigRational) -> Ordering {
        match self {
            Endpoint::Zero => BigRational::zero().cmp(q),
            Endpoint::Infinity => Ordering::Greater,
            Endpoint::Root(r) => r.cmp_q(q),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Endpoint::Root(_))
    }

    /// Enclosure, for finite endpoints.
    pub fn enclose(&mut self, bits: u32) -> Option<Interval> {
        match self {
            Endpoint::Zero => Some(Interval::point(BigRational::zero())),
            Endpoint::Root(r) => Some(r.enclose(bits)),
            Endpoint::Infinity => None,
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            Endpoint::Zero => 0.0,
            Endpoint::Root(r) => r.approx(),
            Endpoint::Infinity => f64::INFINITY,
        }
    }
}

/// A connected component `[lo, hi]` of a semialgebraic subset of `(0, ∞)`.
#[derive(Clone, Debug)]
pub struct Window<T: Scalar> {
    pub lo: Endpoint<T>,
    pub hi: Endpoint<T>,
}

struct Side<T: Scalar> {
    poly: Arc<Poly<T>>,
    below: Option<(BigRational, BigRational)>,
    above: Option<(BigRational, BigRational)>,
}

fn sign_changes_near<T: Scalar>(p: &Poly<T>, x0: &BigRational) -> Option<Side<T>> {
    let (_, stripped) = p.strip_x();
    if stripped.deg_or_zero() == 0 {
        return None;
    }
    let q = Arc::new(stripped.odd_part());
    if q.deg_or_zero() == 0 {
        return None;
    }
    let zero = BigRational::zero();
    let bound = q.cauchy_bound();
    let below = isolate_roots(&q, &zero, x0).pop();
    let above = if x0 < &bound { isolate_roots(&q, x0, &bound).into_iter().next() } else { None };
    Some(Side { poly: q, below, above })
}

/// The connected component containing `x0` of `{x > 0 : p(x) ≥ 0 for all p}`.
///
/// `x0` must satisfy every inequality strictly.
pub fn solve_poly_inequalities<T: Scalar>(polys: &[Poly<T>], x0: &BigRational) -> Result<Window<T>> {
    let mut lo: Endpoint<T> = Endpoint::Zero;
    let mut hi: Endpoint<T> = Endpoint::Infinity;
    for p in polys {
        if p.is_zero() {
            continue;
        }
        match p.eval_q(x0).sign() {
            Ordering::Less => return Err(Error::NotSatisfiedAtSeed),
            Ordering::Equal => return Err(Error::Degenerate("seed lies on a window boundary".into())),
            Ordering::Greater => {}
        }
        let side = match sign_changes_near(p, x0) {
            Some(s) => s,
            None => continue,
        };
        if let Some((a, b)) = side.below {
            let mut cand = Endpoint::Root(RealRoot::new(side.poly.clone(), a, b));
            if cand.cmp(&mut lo) == Ordering::Greater {
                lo = cand;
            }
        }
        if let Some((a, b)) = side.above {
            let mut cand = Endpoint::Root(RealRoot::new(side.poly.clone(), a, b));
            if cand.cmp(&mut hi) == Ordering::Less {
                hi = cand;
            }
        }
    }
    Ok(Window { lo, hi })
}
