//! Number fields `Q[x]/(f)` in the power basis, bases `w`, the embedding
//! `ι_w` and its partial inverse `φ`.

pub mod factor;
pub mod roots;

use crate::error::{Error, Result};
use crate::linalg::{self, QMat};
use crate::poly::{isolate_roots, parse_poly, Poly, QPoly};
use crate::realalg::interval::{to_f64, Interval};
use crate::realalg::RealRoot;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::sync::{Arc, Mutex};

pub use roots::{CBox, ComplexRoot, GQ};

pub struct NumberField {
    f: QPoly,
    n: usize,
    r1: usize,
    r2: usize,
    real: Mutex<Vec<RealRoot<BigRational>>>,
    complex: Mutex<Vec<ComplexRoot>>,
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({})", self.f)
    }
}

/// Certified image of an element at one archimedean place.
#[derive(Clone, Debug)]
pub enum Embedded {
    Real(Interval),
    Complex(CBox),
}

impl Embedded {
    pub fn width(&self) -> BigRational {
        match self {
            Embedded::Real(i) => i.width(),
            Embedded::Complex(b) => {
                let (a, c) = (b.re.width(), b.im.width());
                if a > c {
                    a
                } else {
                    c
                }
            }
        }
    }

    pub fn approx(&self) -> Complex64 {
        match self {
            Embedded::Real(i) => Complex64::new(to_f64(&i.mid()), 0.0),
            Embedded::Complex(b) => Complex64::new(to_f64(&b.re.mid()), to_f64(&b.im.mid())),
        }
    }

    /// Enclosure of |z|^2.
    pub fn abs2(&self) -> Interval {
        match self {
            Embedded::Real(i) => i.sqr(),
            Embedded::Complex(b) => b.abs2(),
        }
    }
}

impl NumberField {
    pub fn new(poly: &QPoly) -> Result<Arc<NumberField>> {
        let n = poly.degree().unwrap_or(0);
        if n < 2 {
            return Err(Error::Degenerate(format!("degree {n} < 2")));
        }
        if !poly.lead().is_one() || poly.coeffs().iter().any(|c| !c.is_integer()) {
            return Err(Error::Parse("defining polynomial must be monic with integer coefficients".into()));
        }
        if !factor::is_irreducible(poly) {
            return Err(Error::Reducible);
        }
        let fa = Arc::new(poly.clone());
        let b = poly.cauchy_bound();
        let real: Vec<RealRoot<BigRational>> = isolate_roots(poly, &-b.clone(), &b)
            .into_iter()
            .map(|(lo, hi)| RealRoot::new(fa.clone(), lo, hi))
            .collect();
        let r1 = real.len();
        let r2 = (n - r1) / 2;
        let complex = roots::certify_complex_roots(poly, r2)?;
        Ok(Arc::new(NumberField {
            f: poly.clone(),
            n,
            r1,
            r2,
            real: Mutex::new(real),
            complex: Mutex::new(complex),
        }))
    }

    pub fn parse(s: &str) -> Result<Arc<NumberField>> {
        NumberField::new(&parse_poly(s)?)
    }

    pub fn defining_poly(&self) -> &QPoly {
        &self.f
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn signature(&self) -> (usize, usize) {
        (self.r1, self.r2)
    }

    pub fn num_places(&self) -> usize {
        self.r1 + self.r2
    }

    pub fn is_real_place(&self, place: usize) -> bool {
        place < self.r1
    }

    /// Enclosure of the `i`-th real root (ascending), width ≤ 2^-bits.
    pub fn real_root(&self, i: usize, bits: u32) -> Interval {
        self.real.lock().unwrap()[i].enclose(bits)
    }

    /// A handle on the `i`-th real root for exact comparisons.
    pub fn real_root_handle(&self, i: usize) -> RealRoot<BigRational> {
        self.real.lock().unwrap()[i].clone()
    }

    /// Disk around the `i`-th complex representative, radius ≤ 2^-bits.
    pub fn complex_root(&self, i: usize, bits: u32) -> ComplexRoot {
        let mut c = self.complex.lock().unwrap();
        let r = c[i].refine(&self.f, bits);
        c[i] = r.clone();
        r
    }

    /// Approximate image of θ at a place.
    pub fn root_approx(&self, place: usize) -> Complex64 {
        if place < self.r1 {
            Complex64::new(to_f64(&self.real_root(place, 60).mid()), 0.0)
        } else {
            let c = self.complex_root(place - self.r1, 60);
            Complex64::new(to_f64(&c.center.re), to_f64(&c.center.im))
        }
    }

    pub fn element(self: &Arc<Self>, coords: Vec<BigRational>) -> FieldElement {
        FieldElement::new(self, coords)
    }

    pub fn from_q(self: &Arc<Self>, q: BigRational) -> FieldElement {
        self.element(vec![q])
    }

    pub fn from_int(self: &Arc<Self>, k: i64) -> FieldElement {
        self.from_q(BigRational::from_integer(k.into()))
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        self.from_int(0)
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_int(1)
    }

    pub fn theta(self: &Arc<Self>) -> FieldElement {
        self.from_poly(&Poly::x())
    }

    /// Image of a rational polynomial evaluated at θ.
    pub fn from_poly(self: &Arc<Self>, p: &QPoly) -> FieldElement {
        self.element(p.coeffs().to_vec())
    }

    /// `[c0, c1, ...]` (numbers or strings such as `"3/2"`) or a polynomial in `x`.
    pub fn parse_element(self: &Arc<Self>, s: &str) -> Result<FieldElement> {
        let t = s.trim();
        if t.starts_with('[') {
            let v: Vec<serde_json::Value> =
                serde_json::from_str(t).map_err(|e| Error::Parse(format!("element: {e}")))?;
            if v.len() > self.n {
                return Err(Error::Parse(format!("element has more than {} coordinates", self.n)));
            }
            let c = v.iter().map(parse_rational_value).collect::<Result<Vec<_>>>()?;
            Ok(self.element(c))
        } else {
            Ok(self.from_poly(&parse_poly(t)?))
        }
    }

    pub fn power_basis(self: &Arc<Self>) -> QBasis {
        let b = (0..self.n).map(|k| self.theta().pow_u(k as u32)).collect();
        QBasis::new(b).expect("power basis")
    }

    /// `(θ^{n-1}, ..., θ, 1)`.
    pub fn default_basis(self: &Arc<Self>) -> QBasis {
        let b = (0..self.n).rev().map(|k| self.theta().pow_u(k as u32)).collect();
        QBasis::new(b).expect("power basis")
    }

    /// disc(f) = (-1)^{n(n-1)/2} N(f'(θ)).
    pub fn discriminant(self: &Arc<Self>) -> BigInt {
        let d = self.from_poly(&self.f.derivative()).norm().to_integer();
        if (self.n * (self.n - 1) / 2) % 2 == 1 {
            -d
        } else {
            d
        }
    }

    /// Polynomial whose roots are the pairwise sums `θ_i + θ_j`, `i < j`.
    pub fn pair_sum_poly(self: &Arc<Self>) -> QPoly {
        let n = self.n;
        let m = self.theta().mult_matrix_power();
        // column action: T e_j = Σ_i m^T[i][j] e_i
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let idx = |a: usize, b: usize| pairs.iter().position(|&p| p == (a, b)).unwrap();
        let np = pairs.len();
        let mut s = vec![vec![BigRational::zero(); np]; np];
        for (col, &(a, b)) in pairs.iter().enumerate() {
            for i in 0..n {
                // T e_a ∧ e_b
                let t = &m[a][i];
                if !t.is_zero() && i != b {
                    let (row, sg) = if i < b { (idx(i, b), 1) } else { (idx(b, i), -1) };
                    if sg > 0 {
                        s[row][col] += t;
                    } else {
                        s[row][col] -= t;
                    }
                }
                // e_a ∧ T e_b
                let t = &m[b][i];
                if !t.is_zero() && i != a {
                    let (row, sg) = if a < i { (idx(a, i), 1) } else { (idx(i, a), -1) };
                    if sg > 0 {
                        s[row][col] += t;
                    } else {
                        s[row][col] -= t;
                    }
                }
            }
        }
        linalg::charpoly(&s)
    }

    /// Certified image of `a` at a place, width ≤ 2^-bits.
    pub fn embed(&self, a: &FieldElement, place: usize, bits: u32) -> Embedded {
        let p = a.as_poly();
        if p.deg_or_zero() == 0 {
            return Embedded::Real(Interval::point(p.coeff(0)));
        }
        let target = BigRational::new(BigInt::one(), BigInt::one() << bits as usize);
        let mut b = bits + 16;
        loop {
            let e = if place < self.r1 {
                let x = self.real_root(place, b);
                Embedded::Real(p.eval_interval(&x, b + 8))
            } else {
                let z = self.complex_root(place - self.r1, b).enclosure();
                let mut acc = CBox::point(BigRational::zero(), BigRational::zero());
                for c in p.coeffs().iter().rev() {
                    acc = acc.mul(&z).add(&CBox::point(c.clone(), BigRational::zero())).round_out(b + 8);
                }
                Embedded::Complex(acc)
            };
            if e.width() <= target {
                return e;
            }
            b += 32.max(b / 2);
        }
    }

    /// The element whose embeddings approximate `targets` (one per place), if its coordinates times
    /// `den` round to integers. The result is only a candidate; callers verify it exactly.
    pub fn element_near(self: &Arc<Self>, targets: &[Complex64], den: &BigInt) -> Option<FieldElement> {
        let n = self.n;
        let mut rows: Vec<Vec<f64>> = Vec::with_capacity(n);
        let mut rhs = Vec::with_capacity(n);
        for (place, t) in targets.iter().enumerate() {
            let z = self.root_approx(place);
            let pw: Vec<Complex64> = (0..n).map(|k| z.powu(k as u32)).collect();
            rows.push(pw.iter().map(|w| w.re).collect());
            rhs.push(t.re);
            if place >= self.r1 {
                rows.push(pw.iter().map(|w| w.im).collect());
                rhs.push(t.im);
            }
        }
        let x = solve_f64(rows, rhs)?;
        let d = den.to_f64()?;
        let mut c = Vec::with_capacity(n);
        for v in x {
            let s = v * d;
            if !s.is_finite() || (s - s.round()).abs() > 0.25 {
                return None;
            }
            c.push(BigRational::new(BigInt::from(s.round() as i64), den.clone()));
        }
        Some(self.element(c))
    }

    /// A root of `q` in F, found from embedding data and verified exactly.
    pub fn find_root(self: &Arc<Self>, q: &QPoly) -> Option<FieldElement> {
        let qr = roots::aberth(q);
        let real_q: Vec<Complex64> = qr.iter().filter(|z| z.im.abs() < 1e-9).map(|z| Complex64::new(z.re, 0.0)).collect();
        let nplaces = self.num_places();
        let choices: Vec<&[Complex64]> =
            (0..nplaces).map(|p| if p < self.r1 { &real_q[..] } else { &qr[..] }).collect();
        let den = self.discriminant().abs() * primitive_lead(q);
        let mut idx = vec![0usize; nplaces];
        if choices.iter().any(|c| c.is_empty()) {
            return None;
        }
        loop {
            let t: Vec<Complex64> = idx.iter().enumerate().map(|(p, &i)| choices[p][i]).collect();
            if let Some(g) = self.element_near(&t, &den) {
                if g.eval_poly(q).is_zero() {
                    return Some(g);
                }
            }
            // next assignment
            let mut p = 0;
            loop {
                if p == nplaces {
                    return None;
                }
                idx[p] += 1;
                if idx[p] < choices[p].len() {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
        }
    }
}

fn primitive_lead(q: &QPoly) -> BigInt {
    let v = crate::poly::primitive_integer(q);
    v.last().cloned().unwrap_or_else(BigInt::one).abs()
}

fn parse_rational_value(v: &serde_json::Value) -> Result<BigRational> {
    let s = match v {
        serde_json::Value::Number(n) => n.to_string(),
        serde_json::Value::String(s) => s.clone(),
        _ => return Err(Error::Parse(format!("not a rational: {v}"))),
    };
    parse_rational(&s)
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn solve_f64(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())?;
        if a[piv][col].abs() < 1e-300 {
            return None;
        }
        a.swap(piv, col);
        b.swap(piv, col);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let mut s = b[r];
        for c in r + 1..n {
            s -= a[r][c] * x[c];
        }
        x[r] = s / a[r][r];
    }
    Some(x)
}

/// An element of a number field, by its coordinates in the power basis.
#[derive(Clone)]
pub struct FieldElement {
    c: Vec<BigRational>,
    field: Arc<NumberField>,
}

impl PartialEq for FieldElement {
    fn eq(&self, o: &Self) -> bool {
        self.c == o.c && (Arc::ptr_eq(&self.field, &o.field) || self.field.f.coeffs() == o.field.f.coeffs())
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Ascending powers of θ, e.g. `-1+θ^2+θ^3`.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let m = a.abs();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mag = if m.is_integer() { m.to_string() } else { format!("({m})") };
            match k {
                0 => out.push_str(&mag),
                _ => {
                    if !m.is_one() {
                        out.push_str(&mag);
                    }
                    out.push('θ');
                    if k > 1 {
                        out.push_str(&format!("^{k}"));
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}

impl FieldElement {
    pub fn new(field: &Arc<NumberField>, coords: Vec<BigRational>) -> Self {
        FieldElement { c: reduce(&field.f, coords), field: field.clone() }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.c
    }

    pub fn as_poly(&self) -> QPoly {
        Poly::new(self.c.clone())
    }

    /// Coordinates as exact strings, the JSON form.
    pub fn to_strings(&self) -> Vec<String> {
        self.c.iter().map(|x| x.to_string()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|x| x.is_zero())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.c[1..].iter().all(|x| x.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    pub fn is_integral_coords(&self) -> bool {
        self.c.iter().all(|x| x.is_integer())
    }

    pub fn add(&self, o: &Self) -> Self {
        let c = self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect();
        FieldElement { c, field: self.field.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let c = self.c.iter().zip(&o.c).map(|(a, b)| a - b).collect();
        FieldElement { c, field: self.field.clone() }
    }

    pub fn neg(&self) -> Self {
        FieldElement { c: self.c.iter().map(|a| -a).collect(), field: self.field.clone() }
    }

    pub fn scale_q(&self, q: &BigRational) -> Self {
        FieldElement { c: self.c.iter().map(|a| a * q).collect(), field: self.field.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.c.len();
        let mut r = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    r[i + j] += a * b;
                }
            }
        }
        FieldElement::new(&self.field, r)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Singular);
        }
        let (g, s, _) = self.as_poly().xgcd(&self.field.f);
        debug_assert_eq!(g.deg_or_zero(), 0);
        Ok(FieldElement::new(&self.field, s.into_coeffs()))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow_u(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = FieldElement::new(&self.field, vec![BigRational::one()]);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            Ok(self.pow_u(k as u32))
        } else {
            Ok(self.inv()?.pow_u((-k) as u32))
        }
    }

    /// `q(self)` for a rational polynomial `q`.
    pub fn eval_poly(&self, q: &QPoly) -> Self {
        let mut acc = self.field.zero();
        for c in q.coeffs().iter().rev() {
            acc = acc.mul(self);
            acc.c[0] += c;
        }
        acc
    }

    /// Row `k` holds the coordinates of `self·θ^k`.
    pub fn mult_matrix_power(&self) -> QMat {
        let n = self.c.len();
        let mut rows = Vec::with_capacity(n);
        let mut cur = self.clone();
        let theta = self.field.theta();
        for _ in 0..n {
            rows.push(cur.c.clone());
            cur = cur.mul(&theta);
        }
        rows
    }

    pub fn norm(&self) -> BigRational {
        linalg::det(&self.mult_matrix_power())
    }

    pub fn trace(&self) -> BigRational {
        linalg::trace(&self.mult_matrix_power())
    }

    pub fn charpoly(&self) -> QPoly {
        linalg::charpoly(&self.mult_matrix_power())
    }

    /// Monic minimal polynomial over Q.
    pub fn min_poly(&self) -> QPoly {
        self.charpoly().squarefree_part().monic()
    }

    pub fn embed(&self, place: usize, bits: u32) -> Embedded {
        self.field.embed(self, place, bits)
    }

    /// Approximate images at every place.
    pub fn approx_embeddings(&self) -> Vec<Complex64> {
        (0..self.field.num_places()).map(|p| self.embed(p, 60).approx()).collect()
    }
}

fn reduce(f: &QPoly, mut c: Vec<BigRational>) -> Vec<BigRational> {
    let n = f.deg_or_zero();
    while c.len() > n {
        let top = c.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let k = c.len() - n;
        for i in 0..n {
            let fi = f.coeff(i);
            if !fi.is_zero() {
                c[k + i] -= &top * fi;
            }
        }
    }
    c.resize(n, BigRational::zero());
    c
}

/// A Q-basis `w = (w_1, ..., w_n)` of F.
#[derive(Clone, Debug)]
pub struct QBasis {
    elems: Vec<FieldElement>,
    w: QMat,
    w_inv: QMat,
}

impl QBasis {
    pub fn new(elems: Vec<FieldElement>) -> Result<QBasis> {
        let n = elems.first().map(|e| e.field.n).unwrap_or(0);
        if elems.len() != n {
            return Err(Error::Degenerate(format!("basis needs {n} elements, got {}", elems.len())));
        }
        let w: QMat = elems.iter().map(|e| e.c.clone()).collect();
        let w_inv = linalg::inverse(&w).map_err(|_| Error::Degenerate("elements are linearly dependent".into()))?;
        Ok(QBasis { elems, w, w_inv })
    }

    /// Comma-separated polynomials in `x`.
    pub fn parse(field: &Arc<NumberField>, s: &str) -> Result<QBasis> {
        let elems = s.split(',').map(|t| field.parse_element(t)).collect::<Result<Vec<_>>>()?;
        QBasis::new(elems)
    }

    pub fn elements(&self) -> &[FieldElement] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.elems[0].field
    }

    /// Coordinate matrix, row i = coordinates of w_i.
    pub fn matrix(&self) -> &QMat {
        &self.w
    }

    /// Coordinates of `a` in this basis: `a = Σ x_i w_i`.
    pub fn coords_of(&self, a: &FieldElement) -> Vec<BigRational> {
        let row = vec![a.c.clone()];
        linalg::mat_mul(&row, &self.w_inv).remove(0)
    }

    /// The basis `γ·w`, for an integer matrix `γ`.
    pub fn transform(&self, g: &linalg::IMat) -> Result<QBasis> {
        let q = linalg::to_qmat(g);
        let rows = linalg::mat_mul(&q, &self.w);
        let f = self.field().clone();
        QBasis::new(rows.into_iter().map(|r| f.element(r)).collect())
    }
}

/// The matrix `M` with `M·w = a·w`.
pub fn mult_matrix(a: &FieldElement, w: &QBasis) -> QMat {
    let r = a.mult_matrix_power();
    linalg::mat_mul(&linalg::mat_mul(&w.w, &r), &w.w_inv)
}

/// `λ` with `A·w = λ·w`, when it exists.
pub fn phi(a: &QMat, w: &QBasis) -> Result<FieldElement> {
    let n = w.len();
    if a.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::NotInImage);
    }
    let f = w.field();
    let aw: Vec<FieldElement> = a
        .iter()
        .map(|row| {
            let mut acc = f.zero();
            for (x, e) in row.iter().zip(&w.elems) {
                if !x.is_zero() {
                    acc = acc.add(&e.scale_q(x));
                }
            }
            acc
        })
        .collect();
    // any w_i is nonzero; use the first
    let lambda = aw[0].div(&w.elems[0])?;
    for (i, e) in w.elems.iter().enumerate() {
        if lambda.mul(e) != aw[i] {
            return Err(Error::NotInImage);
        }
    }
    Ok(lambda)
}

/// `F` viewed as a quadratic extension of `F' = Q(g)`.
#[derive(Clone, Debug)]
pub struct RelativeQuadratic {
    g: FieldElement,
    m: usize,
    basis_inv: QMat,
    /// θ² = X + Yθ with X, Y ∈ F'.
    x: FieldElement,
    y: FieldElement,
}

impl RelativeQuadratic {
    pub fn new(g: &FieldElement) -> Result<RelativeQuadratic> {
        let f = g.field.clone();
        let n = f.n;
        let m = g.min_poly().deg_or_zero();
        if n % 2 != 0 || 2 * m != n {
            return Err(Error::NotQuadraticOver);
        }
        let theta = f.theta();
        let mut rows = Vec::with_capacity(n);
        let gp: Vec<FieldElement> = (0..m).map(|i| g.pow_u(i as u32)).collect();
        for e in &gp {
            rows.push(e.c.clone());
        }
        for e in &gp {
            rows.push(e.mul(&theta).c.clone());
        }
        let basis_inv = linalg::inverse(&rows).map_err(|_| Error::NotQuadraticOver)?;
        let mut rq = RelativeQuadratic { g: g.clone(), m, basis_inv, x: f.zero(), y: f.zero() };
        let (x, y) = rq.split(&theta.mul(&theta));
        rq.x = x;
        rq.y = y;
        Ok(rq)
    }

    pub fn generator(&self) -> &FieldElement {
        &self.g
    }

    /// `(A, B)` in F' with `a = A + Bθ`.
    pub fn split(&self, a: &FieldElement) -> (FieldElement, FieldElement) {
        let v = linalg::mat_mul(&[a.c.clone()], &self.basis_inv).remove(0);
        let f = &self.g.field;
        let mut aa = f.zero();
        let mut bb = f.zero();
        for i in 0..self.m {
            let gi = self.g.pow_u(i as u32);
            aa = aa.add(&gi.scale_q(&v[i]));
            bb = bb.add(&gi.scale_q(&v[self.m + i]));
        }
        (aa, bb)
    }

    /// True iff `a ∈ F'`.
    pub fn contains(&self, a: &FieldElement) -> bool {
        self.split(a).1.is_zero()
    }

    /// The nontrivial automorphism of F over F'.
    pub fn conj(&self, a: &FieldElement) -> FieldElement {
        let (aa, bb) = self.split(a);
        aa.add(&bb.mul(&self.y.sub(&self.g.field.theta())))
    }

    /// s(θ) = Y - θ.
    pub fn conj_theta(&self) -> FieldElement {
        self.y.sub(&self.g.field.theta())
    }

    /// `a·s(a)`.
    pub fn norm(&self, a: &FieldElement) -> FieldElement {
        let (aa, bb) = self.split(a);
        // A² + ABY - B²X
        aa.mul(&aa).add(&aa.mul(&bb).mul(&self.y)).sub(&bb.mul(&bb).mul(&self.x))
    }
}

/// `a·s(a)` for the nontrivial automorphism `s` of F over `Q(subfield_gen)`.
pub fn relative_norm(a: &FieldElement, subfield_gen: &FieldElement) -> Result<FieldElement> {
    Ok(RelativeQuadratic::new(subfield_gen)?.norm(a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn signatures() {
        assert_eq!(NumberField::parse("x^2 - 2").unwrap().signature(), (2, 0));
        assert_eq!(NumberField::parse("x^3 - 2").unwrap().signature(), (1, 1));
        assert_eq!(NumberField::parse("x^4 + 2").unwrap().signature(), (0, 2));
        assert_eq!(NumberField::parse("x^4 - 2").unwrap().signature(), (2, 1));
    }

    #[test]
    fn rejects_bad_polys() {
        assert!(matches!(NumberField::parse("x^2 - 4"), Err(Error::Reducible)));
        assert!(matches!(NumberField::parse("x - 4"), Err(Error::Degenerate(_))));
        assert!(matches!(NumberField::parse("x^4 + 4"), Err(Error::Reducible)));
    }

    #[test]
    fn mult_matrix_examples() {
        let f = NumberField::parse("x^2 - 2").unwrap();
        let w = f.default_basis();
        let m = mult_matrix(&f.theta(), &w);
        assert_eq!(m, linalg::to_qmat(&linalg::imat(&[&[0, 2], &[1, 0]])));
        let u = f.element(vec![q(-3), q(-2)]);
        let m = mult_matrix(&u, &w);
        assert_eq!(m, linalg::to_qmat(&linalg::imat(&[&[-3, -4], &[-2, -3]])));
        assert_eq!(phi(&m, &w).unwrap(), u);
        let bad = linalg::to_qmat(&linalg::imat(&[&[1, 1], &[0, 1]]));
        assert!(matches!(phi(&bad, &w), Err(Error::NotInImage)));
        assert!(mult_matrix(&f.one(), &w) == linalg::identity::<BigRational>(2));
    }

    #[test]
    fn norms() {
        let f = NumberField::parse("x^2 - 2").unwrap();
        assert_eq!(f.element(vec![q(3), q(2)]).norm(), q(1));
        let c = NumberField::parse("x^3 - 2").unwrap();
        assert_eq!(c.element(vec![q(1), q(1), q(1)]).norm(), q(1));
        assert_eq!(c.theta().trace(), q(0));
        assert_eq!(c.discriminant(), BigInt::from(-108));
    }

    #[test]
    fn inverse_and_display() {
        let f = NumberField::parse("x^4 + 2").unwrap();
        let u = f.parse_element("[-1,0,1,1]").unwrap();
        assert_eq!(u.to_string(), "-1+θ^2+θ^3");
        let v = u.inv().unwrap();
        assert!(u.mul(&v).is_one());
        assert_eq!(f.parse_element("[\"1/2\", 0, 0, -3]").unwrap().to_string(), "(1/2)-3θ^3");
    }

    #[test]
    fn relative_norm_examples() {
        let f = NumberField::parse("x^4 - 2").unwrap();
        let g = f.find_root(&crate::poly::parse_poly("x^2 - 2").unwrap()).unwrap();
        let rn = relative_norm(&f.theta(), &g).unwrap();
        assert_eq!(rn, f.theta().pow_u(2).neg());
        let u = f.parse_element("3+2x+2x^2+2x^3").unwrap();
        let rq = RelativeQuadratic::new(&g).unwrap();
        assert!(rq.contains(&rq.norm(&u)));
        assert!(relative_norm(&f.one(), &g).unwrap().is_one());
        assert!(matches!(relative_norm(&u, &f.theta()), Err(Error::NotQuadraticOver)));
        assert!(f.find_root(&crate::poly::parse_poly("x^2 - 3").unwrap()).is_none());
    }

    #[test]
    fn embeddings() {
        let f = NumberField::parse("x^2 - 2").unwrap();
        match f.embed(&f.theta(), 1, 53) {
            Embedded::Real(i) => {
                assert!(i.width() <= BigRational::new(1.into(), BigInt::one() << 53usize));
                assert!((to_f64(&i.mid()) - 2f64.sqrt()).abs() < 1e-12);
            }
            _ => panic!(),
        }
        let c = NumberField::parse("x^3 - 2").unwrap();
        match c.embed(&c.theta().pow_u(2), 0, 20) {
            Embedded::Real(i) => assert!((to_f64(&i.mid()) - 1.587401).abs() < 1e-5),
            _ => panic!(),
        }
        match f.embed(&f.one(), 0, 53) {
            Embedded::Real(i) => assert!(i.width().is_zero() && i.contains(&q(1))),
            _ => panic!(),
        }
    }

    #[test]
    fn pair_sums() {
        let f = NumberField::parse("x^4 + 2").unwrap();
        let p = f.pair_sum_poly();
        assert_eq!(p.deg_or_zero(), 6);
        // β + (-β) = 0 twice
        assert!(p.coeff(0).is_zero() && p.coeff(1).is_zero());
    }
}
