//! Certified complex roots of integer polynomials.
//!
//! Approximations come from an Aberth iteration in `f64`; they are polished by
//! Newton steps in exact Gaussian rationals and accepted only after the
//! inclusion disk `|z - ζ| ≤ n |f(z)/f'(z)|` is shown disjoint from every other
//! disk and from the real axis.

use crate::error::{Error, Result};
use crate::poly::QPoly;
use crate::realalg::interval::{ceil_dyadic, floor_dyadic, sqrt_ceil, to_f64, Interval};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Gaussian rational.
#[derive(Clone, Debug, PartialEq)]
pub struct GQ {
    pub re: BigRational,
    pub im: BigRational,
}

impl GQ {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GQ { re, im }
    }
    pub fn zero() -> Self {
        GQ::new(BigRational::zero(), BigRational::zero())
    }
    pub fn add(&self, o: &GQ) -> GQ {
        GQ::new(&self.re + &o.re, &self.im + &o.im)
    }
    pub fn sub(&self, o: &GQ) -> GQ {
        GQ::new(&self.re - &o.re, &self.im - &o.im)
    }
    pub fn mul(&self, o: &GQ) -> GQ {
        GQ::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
    pub fn abs2(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
    pub fn div(&self, o: &GQ) -> GQ {
        let d = o.abs2();
        let num = self.mul(&GQ::new(o.re.clone(), -o.im.clone()));
        GQ::new(num.re / &d, num.im / d)
    }
    fn round(&self, bits: u32) -> GQ {
        GQ::new(floor_dyadic(&self.re, bits), floor_dyadic(&self.im, bits))
    }
}

fn eval_gq(p: &QPoly, z: &GQ) -> GQ {
    let mut acc = GQ::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(z);
        acc.re += c;
    }
    acc
}

/// Rectangular complex interval.
#[derive(Clone, Debug)]
pub struct CBox {
    pub re: Interval,
    pub im: Interval,
}

impl CBox {
    pub fn point(re: BigRational, im: BigRational) -> Self {
        CBox { re: Interval::point(re), im: Interval::point(im) }
    }
    pub fn add(&self, o: &CBox) -> CBox {
        CBox { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }
    pub fn mul(&self, o: &CBox) -> CBox {
        CBox {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }
    pub fn round_out(&self, bits: u32) -> CBox {
        CBox { re: self.re.round_out(bits), im: self.im.round_out(bits) }
    }
    /// Enclosure of |z|^2.
    pub fn abs2(&self) -> Interval {
        self.re.sqr().add(&self.im.sqr())
    }
}

/// A disk `|z - center| ≤ rad` holding exactly one root, with `im > rad`.
#[derive(Clone, Debug)]
pub struct ComplexRoot {
    pub center: GQ,
    pub rad: BigRational,
}

impl ComplexRoot {
    pub fn enclosure(&self) -> CBox {
        CBox {
            re: Interval::new(&self.center.re - &self.rad, &self.center.re + &self.rad),
            im: Interval::new(&self.center.im - &self.rad, &self.center.im + &self.rad),
        }
    }

    /// A disk of radius at most 2^-bits around the same root.
    pub fn refine(&self, f: &QPoly, bits: u32) -> ComplexRoot {
        let target = BigRational::new(BigInt::one(), BigInt::one() << bits as usize);
        if self.rad <= target {
            return self.clone();
        }
        let df = f.derivative();
        let mut z = self.center.clone();
        let mut prec = 64u32;
        loop {
            let step = eval_gq(f, &z).div(&eval_gq(&df, &z));
            z = z.sub(&step).round(prec);
            let rad = inclusion_radius(f, &df, &z, prec + 8);
            if rad <= target {
                let dz2 = z.sub(&self.center).abs2();
                let slack = &self.rad - &rad;
                if !slack.is_negative() && &slack * &slack >= dz2 {
                    return ComplexRoot { center: z, rad };
                }
            }
            prec = (prec * 2).max(bits + 16);
            if prec > 1 << 20 {
                panic!("complex root refinement diverged");
            }
        }
    }
}

/// Upper bound on `n |f(z)| / |f'(z)|`, rounded up on the 2^-bits grid.
fn inclusion_radius(f: &QPoly, df: &QPoly, z: &GQ, bits: u32) -> BigRational {
    let n = BigRational::from_integer(BigInt::from(f.deg_or_zero()));
    let fz = eval_gq(f, z).abs2();
    let dz = eval_gq(df, z).abs2();
    if dz.is_zero() {
        return BigRational::from_integer(BigInt::from(1) << 64);
    }
    let r2 = &n * &n * fz / dz;
    ceil_dyadic(&sqrt_ceil(&r2, bits), bits)
}

/// All complex roots approximately, by the Aberth-Ehrlich iteration.
pub fn aberth(f: &QPoly) -> Vec<Complex64> {
    let c: Vec<f64> = f.coeffs().iter().map(to_f64).collect();
    let n = c.len() - 1;
    let lead = c[n];
    let c: Vec<f64> = c.iter().map(|x| x / lead).collect();
    let bound = 1.0 + c[..n].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            Complex64::from_polar(0.5 * bound, ang)
        })
        .collect();
    let ev = |x: Complex64| -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for a in c.iter().rev() {
            dp = dp * x + p;
            p = p * x + a;
        }
        (p, dp)
    };
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = ev(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    s += 1.0 / (z[i] - z[j]);
                }
            }
            let w = ratio / (1.0 - ratio * s);
            z[i] -= w;
            moved = moved.max(w.norm());
        }
        if moved < 1e-15 * bound {
            break;
        }
    }
    z
}

/// Certified representatives with positive imaginary part of the `r2` complex-conjugate pairs.
pub fn certify_complex_roots(f: &QPoly, r2: usize) -> Result<Vec<ComplexRoot>> {
    if r2 == 0 {
        return Ok(vec![]);
    }
    let mut approx = aberth(f);
    approx.sort_by(|a, b| b.im.partial_cmp(&a.im).unwrap());
    let mut reps: Vec<Complex64> = approx.into_iter().take(r2).collect();
    reps.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap().then(a.im.partial_cmp(&b.im).unwrap()));
    let df = f.derivative();
    let mut centers: Vec<GQ> = reps
        .iter()
        .map(|z| {
            GQ::new(
                BigRational::from_float(z.re).unwrap_or_else(BigRational::zero),
                BigRational::from_float(z.im).unwrap_or_else(BigRational::zero),
            )
        })
        .collect();
    let mut prec = 64u32;
    for _ in 0..8 {
        for z in centers.iter_mut() {
            for _ in 0..3 {
                let step = eval_gq(f, z).div(&eval_gq(&df, z));
                *z = z.sub(&step).round(prec);
            }
        }
        let rads: Vec<BigRational> = centers.iter().map(|z| inclusion_radius(f, &df, z, prec)).collect();
        let mut ok = true;
        for i in 0..r2 {
            if !centers[i].im.is_positive() || centers[i].im <= rads[i] {
                ok = false;
            }
            for j in i + 1..r2 {
                let d2 = centers[i].sub(&centers[j]).abs2();
                let s = &rads[i] + &rads[j];
                if d2 <= &s * &s {
                    ok = false;
                }
            }
        }
        if ok {
            return Ok(centers
                .into_iter()
                .zip(rads)
                .map(|(center, rad)| ComplexRoot { center, rad })
                .collect());
        }
        prec *= 2;
    }
    Err(Error::CertificateFailure("could not separate complex roots".into()))
}
