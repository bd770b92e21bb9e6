//! Flat geodesics `Q(τ) = Σ M_k τ^{e_k}` in Gram form, the Heegner geodesics of
//! rank-one fields and of χ-components, and their LLL windows.
//!
//! All matrix entries live in one real number field `L` holding the images of
//! θ at the archimedean places involved, so every comparison is exact.

use crate::error::{Error, Result};
use crate::halfspace::{b_index, c_index, GramPoint};
use crate::linalg::{iinverse, IMat, Mat};
use crate::numberfield::{factor, Embedded, FieldElement, NumberField, QBasis, RelativeQuadratic};
use crate::poly::{isolate_roots, Poly, QPoly, Scalar};
use crate::realalg::interval::Interval;
use crate::realalg::{solve_poly_inequalities, CertReal, Endpoint, RealField, Window};
use num_rational::BigRational;
use num_traits::Zero;
use std::cmp::Ordering;
use std::sync::Arc;

pub type CPoly = Poly<CertReal>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    RankOne,
    Chi,
}

/// Image of θ at one place: a real number, or a conjugate pair `y² - u·y + v`.
#[derive(Clone, Debug)]
pub enum PlaceImage {
    Real(CertReal),
    Complex { u: CertReal, v: CertReal },
}

impl PlaceImage {
    /// `Σ` contribution of this place to the Gram matrix of `w`.
    pub fn gram(&self, w: &QBasis) -> Mat<CertReal> {
        let n = w.len();
        match self {
            PlaceImage::Real(a) => {
                let vals: Vec<CertReal> = w.elements().iter().map(|e| eval_at(&e.as_poly(), a)).collect();
                (0..n).map(|i| (0..n).map(|j| vals[i].times(&vals[j])).collect()).collect()
            }
            PlaceImage::Complex { u, v } => {
                let q = Quad { u: u.clone(), v: v.clone() };
                let vals: Vec<(CertReal, CertReal)> = w.elements().iter().map(|e| q.eval(&e.as_poly())).collect();
                let conj: Vec<(CertReal, CertReal)> = vals.iter().map(|x| q.conj(x)).collect();
                let half = BigRational::new(1.into(), 2.into());
                (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                let (a, b) = q.mul(&vals[i], &conj[j]);
                                a.times(&CertReal::int(2)).plus(&b.times(u)).scale_q(&half)
                            })
                            .collect()
                    })
                    .collect()
            }
        }
    }

    /// |σ(a)|² as an element of L.
    pub fn abs2(&self, a: &FieldElement) -> CertReal {
        match self {
            PlaceImage::Real(x) => {
                let y = eval_at(&a.as_poly(), x);
                y.times(&y)
            }
            PlaceImage::Complex { u, v } => {
                let q = Quad { u: u.clone(), v: v.clone() };
                let z = q.eval(&a.as_poly());
                let (s, t) = q.mul(&z, &q.conj(&z));
                s.times(&CertReal::int(2)).plus(&t.times(u)).scale_q(&BigRational::new(1.into(), 2.into()))
            }
        }
    }
}

/// Arithmetic in `L[y]/(y² - u·y + v)`, elements `a + b·y`.
struct Quad {
    u: CertReal,
    v: CertReal,
}

impl Quad {
    fn mul(&self, x: &(CertReal, CertReal), y: &(CertReal, CertReal)) -> (CertReal, CertReal) {
        // y² = u·y - v
        let bb = x.1.times(&y.1);
        let a = x.0.times(&y.0).minus(&bb.times(&self.v));
        let b = x.0.times(&y.1).plus(&x.1.times(&y.0)).plus(&bb.times(&self.u));
        (a, b)
    }

    fn eval(&self, p: &QPoly) -> (CertReal, CertReal) {
        let mut acc = (CertReal::int(0), CertReal::int(0));
        let y = (CertReal::int(0), CertReal::int(1));
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, &y);
            acc.0 = acc.0.plus(&CertReal::rational(c.clone()));
        }
        acc
    }

    /// Image under y ↦ u - y.
    fn conj(&self, x: &(CertReal, CertReal)) -> (CertReal, CertReal) {
        (x.0.plus(&x.1.times(&self.u)), x.1.negated())
    }
}

pub fn eval_at(p: &QPoly, x: &CertReal) -> CertReal {
    let mut acc = CertReal::int(0);
    for c in p.coeffs().iter().rev() {
        acc = acc.times(x).plus(&CertReal::rational(c.clone()));
    }
    acc
}

/// Where a Heegner geodesic came from.
#[derive(Clone, Debug)]
pub struct Provenance {
    pub field: Arc<NumberField>,
    pub basis: QBasis,
    pub variant: Variant,
    pub subfield: Option<RelativeQuadratic>,
    /// The real field holding all Gram entries.
    pub l: Arc<RealField>,
    /// Images of θ, in the order of `terms`.
    pub places: Vec<PlaceImage>,
}

#[derive(Clone, Debug)]
pub struct FlatGeodesic {
    /// `(e_k, M_k)` with `Q(τ) = Σ M_k τ^{e_k}`.
    pub terms: Vec<(usize, Mat<CertReal>)>,
    pub provenance: Option<Provenance>,
}

impl FlatGeodesic {
    pub fn dim(&self) -> usize {
        self.terms[0].1.len()
    }

    /// `diag(τ^{e_1}, ..., τ^{e_n})`.
    pub fn diagonal(exps: &[usize]) -> FlatGeodesic {
        let n = exps.len();
        let terms = exps
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                let m = (0..n)
                    .map(|a| (0..n).map(|b| CertReal::int((a == i && b == i) as i64)).collect())
                    .collect();
                (e, m)
            })
            .collect();
        FlatGeodesic { terms, provenance: None }
    }

    pub fn poly_matrix(&self) -> Mat<CPoly> {
        let n = self.dim();
        let mut q = vec![vec![CPoly::zero(); n]; n];
        for (e, m) in &self.terms {
            for i in 0..n {
                for j in 0..n {
                    q[i][j] = q[i][j].add(&CPoly::monomial(m[i][j].clone(), *e));
                }
            }
        }
        q
    }

    pub fn at(&self, tau: &BigRational) -> Mat<CertReal> {
        eval_matrix(&self.poly_matrix(), tau)
    }

    /// The geodesic `τ ↦ τ^{e_max}·Q(1/τ)`, traversed in the opposite direction.
    pub fn reversed(&self) -> FlatGeodesic {
        let emax = self.terms.iter().map(|t| t.0).max().unwrap_or(0);
        FlatGeodesic {
            terms: self.terms.iter().map(|(e, m)| (emax - e, m.clone())).collect(),
            provenance: self.provenance.clone(),
        }
    }

    pub fn scaled(&self, q: &BigRational) -> FlatGeodesic {
        FlatGeodesic {
            terms: self
                .terms
                .iter()
                .map(|(e, m)| (*e, m.iter().map(|r| r.iter().map(|x| x.scale_q(q)).collect()).collect()))
                .collect(),
            provenance: self.provenance.clone(),
        }
    }

    /// Degree bound `Σ n_i d_i` of the window polynomials.
    pub fn degree_bound(&self) -> usize {
        self.terms.iter().map(|(e, m)| e * rank_upper(m)).sum()
    }
}

fn rank_upper(m: &Mat<CertReal>) -> usize {
    // rank of a PSD real/complex place block: 1 or 2
    let n = m.len();
    let mut best = 0;
    for k in 1..=n.min(2) {
        let idxs: Vec<Vec<usize>> = subsets(n, k);
        if idxs.iter().any(|s| {
            let sub: Mat<CertReal> = s.iter().map(|&a| s.iter().map(|&b| m[a][b].clone()).collect()).collect();
            !crate::linalg::det(&sub).is_nil()
        }) {
            best = k;
        }
    }
    best
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for mut rest in subsets(n, k - 1) {
            if rest.iter().all(|&r| r > first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
    }
    out
}

pub fn eval_matrix(q: &Mat<CPoly>, tau: &BigRational) -> Mat<CertReal> {
    q.iter().map(|r| r.iter().map(|p| p.eval_q(tau)).collect()).collect()
}

/// `g·Q·gᵗ` on a polynomial matrix.
pub fn poly_act(g: &IMat, q: &Mat<CPoly>) -> Mat<CPoly> {
    let n = q.len();
    let gq: Vec<Vec<BigRational>> =
        g.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let mut tmp = vec![vec![CPoly::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = CPoly::zero();
            for (k, gik) in gq[i].iter().enumerate() {
                if !gik.is_zero() {
                    acc = acc.add(&q[k][j].scale_q(gik));
                }
            }
            tmp[i][j] = acc;
        }
    }
    let mut out = vec![vec![CPoly::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let mut acc = CPoly::zero();
            for (k, gjk) in gq[j].iter().enumerate() {
                if !gjk.is_zero() {
                    acc = acc.add(&tmp[i][k].scale_q(gjk));
                }
            }
            out[j][i] = acc.clone();
            out[i][j] = acc;
        }
    }
    out
}

/// Determinant of a polynomial matrix by cofactor expansion.
pub fn poly_det(m: &[Vec<CPoly>]) -> CPoly {
    let n = m.len();
    match n {
        0 => CPoly::constant(CertReal::int(1)),
        1 => m[0][0].clone(),
        2 => m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0])),
        _ => {
            let mut acc = CPoly::zero();
            for (c, a) in m[0].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<CPoly>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect())
                    .collect();
                let t = a.mul(&poly_det(&minor));
                acc = if c % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            }
            acc
        }
    }
}

fn sub_poly(q: &[Vec<CPoly>], rows: &[usize], cols: &[usize]) -> Vec<Vec<CPoly>> {
    rows.iter().map(|&r| cols.iter().map(|&c| q[r][c].clone()).collect()).collect()
}

/// The determinant polynomials of a translated geodesic and the membership inequalities.
#[derive(Clone, Debug)]
pub struct WindowPolys {
    /// `((i, j), B_ij)` for `i ≤ j`, 0-based.
    pub b: Vec<((usize, usize), CPoly)>,
    /// `(i, C_{i+1})` for `i < n-1`.
    pub c: Vec<(usize, CPoly)>,
    /// Each must be ≥ 0.
    pub conditions: Vec<CPoly>,
}

impl WindowPolys {
    pub fn from_matrix(q: &Mat<CPoly>, omega: &BigRational) -> WindowPolys {
        let n = q.len();
        let mut b = Vec::new();
        for j in 0..n {
            for i in 0..=j {
                let (r, c) = b_index(n, i, j);
                b.push(((i, j), poly_det(&sub_poly(q, &r, &c))));
            }
        }
        let bget = |i: usize, j: usize| b.iter().find(|e| e.0 == (i, j)).unwrap().1.clone();
        let mut c = Vec::new();
        for i in 0..n.saturating_sub(1) {
            let idx = c_index(n, i);
            c.push((i, poly_det(&sub_poly(q, &idx, &idx))));
        }
        let mut conditions = Vec::new();
        let two = BigRational::from_integer(2.into());
        for j in 1..n {
            let bjj = bget(j, j);
            for i in 0..j {
                let bij = bget(i, j).scale_q(&two);
                conditions.push(bjj.sub(&bij));
                conditions.push(bjj.add(&bij));
            }
        }
        for (i, ci) in &c {
            conditions.push(ci.sub(&bget(i + 1, i + 1).scale_q(omega)));
        }
        WindowPolys { b, c, conditions }
    }

    pub fn max_degree(&self) -> usize {
        self.b.iter().map(|e| e.1.deg_or_zero()).chain(self.c.iter().map(|e| e.1.deg_or_zero())).max().unwrap_or(0)
    }
}

/// Window polynomials of `γ⁻¹·Q(τ)·γ⁻ᵗ`.
pub fn window_polys(geod: &FlatGeodesic, gamma: &IMat, omega: &BigRational) -> Result<WindowPolys> {
    let gi = iinverse(gamma)?;
    Ok(WindowPolys::from_matrix(&poly_act(&gi, &geod.poly_matrix()), omega))
}

/// The τ-component containing `tau0` of the LLL-membership set of `γ⁻¹·Q(τ)·γ⁻ᵗ`.
pub fn window(geod: &FlatGeodesic, gamma: &IMat, omega: &BigRational, tau0: &BigRational) -> Result<Window<CertReal>> {
    let wp = window_polys(geod, gamma, omega)?;
    solve_poly_inequalities(&wp.conditions, tau0)
}

pub fn window_of_matrix(q: &Mat<CPoly>, omega: &BigRational, tau0: &BigRational) -> Result<Window<CertReal>> {
    solve_poly_inequalities(&WindowPolys::from_matrix(q, omega).conditions, tau0)
}

/// Enclosure of `√τ` for a window endpoint; `None` at +∞.
pub fn t_of(e: &mut Endpoint<CertReal>, bits: u32) -> Option<Interval> {
    e.enclose(2 * bits + 8).map(|i| {
        let lo = if i.lo < BigRational::zero() { BigRational::zero() } else { i.lo.clone() };
        Interval::new(lo, i.hi.clone()).sqrt(bits + 4)
    })
}

// ---------- Heegner constructions ----------

fn real_part_enclosure(f: &Arc<NumberField>, place: usize, bits: u32) -> Interval {
    match f.theta().embed(place, bits) {
        Embedded::Real(i) => i,
        Embedded::Complex(b) => b.re,
    }
}

/// Index of the place with the largest real part of θ.
fn distinguished_place(f: &Arc<NumberField>, places: &[usize]) -> Result<usize> {
    let theta = f.theta();
    let mut bits = 16;
    loop {
        let encl: Vec<Interval> = places
            .iter()
            .map(|&p| match theta.embed(p, bits) {
                Embedded::Real(i) => i,
                Embedded::Complex(b) => b.re,
            })
            .collect();
        for (k, e) in encl.iter().enumerate() {
            if encl.iter().enumerate().all(|(j, o)| j == k || o.hi < e.lo) {
                return Ok(places[k]);
            }
        }
        bits *= 2;
        if bits > 4096 {
            return Err(Error::Degenerate("places with equal real part".into()));
        }
    }
}

/// `L = Q(α)` for the real root at `place`.
fn real_field_at(f: &Arc<NumberField>, place: usize) -> Arc<RealField> {
    let h = f.real_root_handle(place);
    let b = h.bounds();
    RealField::new(f.defining_poly(), b.lo, b.hi)
}

/// Quadratic cofactor `f / Π (y - r)` over L, as `(u, v)` with cofactor `y² - u·y + v`.
fn quadratic_cofactor(f: &QPoly, known: &[CertReal]) -> (CertReal, CertReal) {
    let mut p: CPoly = Poly::new(f.coeffs().iter().map(|c| CertReal::rational(c.clone())).collect());
    for r in known {
        let lin = Poly::new(vec![r.negated(), CertReal::int(1)]);
        let (q, rem) = p.divrem(&lin);
        debug_assert!(rem.is_zero());
        p = q;
    }
    assert_eq!(p.deg_or_zero(), 2);
    let p = p.monic();
    (p.coeff(1).negated(), p.coeff(0))
}

fn build(
    f: &Arc<NumberField>,
    w: &QBasis,
    variant: Variant,
    subfield: Option<RelativeQuadratic>,
    l: Arc<RealField>,
    exps: &[usize],
    places: Vec<PlaceImage>,
) -> FlatGeodesic {
    let terms = exps.iter().zip(&places).map(|(&e, p)| (e, p.gram(w))).collect();
    FlatGeodesic {
        terms,
        provenance: Some(Provenance { field: f.clone(), basis: w.clone(), variant, subfield, l, places }),
    }
}

/// `t ↦ [w^{(1)} t, w^{(2)}/t]`, in Gram form `τ·M_1 + M_0` with `τ = t²`.
pub fn heegner_rank_one(f: &Arc<NumberField>, w: &QBasis) -> Result<FlatGeodesic> {
    let (r1, r2) = f.signature();
    if r1 + r2 != 2 {
        return Err(Error::WrongSignature { r1, r2 });
    }
    let dist = distinguished_place(f, &[0, 1])?;
    let c = f.defining_poly().coeffs();
    if r1 >= 1 {
        // L = Q(α) for a real root α
        let real_place = if r1 == 2 { dist } else { 0 };
        let l = real_field_at(f, real_place);
        let alpha = l.generator();
        let images: [PlaceImage; 2] = if r1 == 2 {
            let a2 = alpha.negated().minus(&CertReal::rational(c[1].clone()));
            [PlaceImage::Real(alpha), PlaceImage::Real(a2)]
        } else {
            let (u, v) = quadratic_cofactor(f.defining_poly(), &[alpha.clone()]);
            let real = PlaceImage::Real(alpha);
            let cx = PlaceImage::Complex { u, v };
            if dist == 0 {
                [real, cx]
            } else {
                [cx, real]
            }
        };
        let [a, b] = images;
        return Ok(build(f, w, Variant::RankOne, None, l, &[1, 0], vec![a, b]));
    }
    // totally imaginary quartic: L = Q(u), u = 2·Re θ at the distinguished place
    let (l, u) = pair_sum_field(f, dist)?;
    let c3 = CertReal::rational(c[3].clone());
    let c2 = CertReal::rational(c[2].clone());
    let c1 = CertReal::rational(c[1].clone());
    let c0 = CertReal::rational(c[0].clone());
    let u2 = c3.negated().minus(&u);
    if u.minus(&u2).is_nil() {
        return Err(Error::Degenerate("complex places with equal real part".into()));
    }
    let s = c2.minus(&u.times(&u2));
    let v = c1.plus(&u.times(&s)).times(&u.minus(&u2).recip());
    let v2 = s.minus(&v);
    if !v.times(&v2).minus(&c0).is_nil() {
        return Err(Error::CertificateFailure("quartic does not split as expected over L".into()));
    }
    let places = vec![PlaceImage::Complex { u, v }, PlaceImage::Complex { u: u2, v: v2 }];
    Ok(build(f, w, Variant::RankOne, None, l, &[1, 0], places))
}

/// The real field generated by `2·Re θ` at a complex place, with that generator.
fn pair_sum_field(f: &Arc<NumberField>, place: usize) -> Result<(Arc<RealField>, CertReal)> {
    let p = f.pair_sum_poly();
    let factors: Vec<QPoly> = factor::factor(&p).into_iter().map(|(g, _)| g).collect();
    let mut cands: Vec<(QPoly, BigRational, BigRational)> = Vec::new();
    for g in &factors {
        let b = g.cauchy_bound();
        for (lo, hi) in isolate_roots(g, &-b.clone(), &b) {
            cands.push((g.clone(), lo, hi));
        }
    }
    let two = BigRational::from_integer(2.into());
    let mut bits = 16;
    loop {
        let e = real_part_enclosure(f, place, bits);
        let target = Interval::new(&e.lo * &two, &e.hi * &two);
        let hits: Vec<usize> =
            (0..cands.len()).filter(|&k| cands[k].1 < target.hi && cands[k].2 > target.lo).collect();
        if hits.len() == 1 {
            let (g, lo, hi) = cands[hits[0]].clone();
            let l = RealField::new(&g, lo, hi);
            let u = l.generator();
            return Ok((l, u));
        }
        if hits.is_empty() {
            return Err(Error::CertificateFailure("no pair sum matches 2·Re θ".into()));
        }
        for &k in &hits {
            let (g, lo, hi) = cands[k].clone();
            let m = (&lo + &hi) / &two;
            let sl = g.eval_q(&lo).cmp(&BigRational::zero());
            match g.eval_q(&m).cmp(&BigRational::zero()) {
                Ordering::Equal => cands[k] = (g, m.clone(), m),
                s if s == sl => cands[k].1 = m,
                _ => cands[k].2 = m,
            }
        }
        bits *= 2;
        if bits > 1 << 14 {
            return Err(Error::Degenerate("pair sums do not separate".into()));
        }
    }
}

/// `[v_11(w) t², v_12(w), v_2(w) t]` in Gram form `τ²·M_2 + τ·M_1 + M_0`.
pub fn heegner_chi(f: &Arc<NumberField>, subfield_gen: &FieldElement, w: &QBasis) -> Result<FlatGeodesic> {
    let rq = RelativeQuadratic::new(subfield_gen)?;
    let (r1, r2) = f.signature();
    // the split place of F' gives two real places of F, the others are complex
    if r1 != 2 || 2 + 2 * r2 != f.degree() {
        return Err(Error::SplittingPatternMismatch);
    }
    if f.degree() != 4 {
        return Err(Error::Degenerate("χ geodesics are implemented for quartic fields".into()));
    }
    let dist = distinguished_place(f, &[0, 1])?;
    let l = real_field_at(f, dist);
    let alpha = l.generator();
    let alpha12 = eval_at(&rq.conj_theta().as_poly(), &alpha);
    if alpha12.minus(&alpha).is_nil() {
        return Err(Error::SplittingPatternMismatch);
    }
    let (u, v) = quadratic_cofactor(f.defining_poly(), &[alpha.clone(), alpha12.clone()]);
    let places = vec![PlaceImage::Real(alpha), PlaceImage::Real(alpha12), PlaceImage::Complex { u, v }];
    Ok(build(f, w, Variant::Chi, Some(rq), l, &[2, 0, 1], places))
}

/// Subfield generator for `chi-unit`: a root in F of the given polynomial.
pub fn subfield_generator(f: &Arc<NumberField>, q: &QPoly) -> Result<FieldElement> {
    if q.deg_or_zero() * 2 != f.degree() || !factor::is_irreducible(q) {
        return Err(Error::NotQuadraticOver);
    }
    f.find_root(q).ok_or(Error::NotQuadraticOver)
}

/// Gram point of the geodesic at `τ`.
pub fn point_at(geod: &FlatGeodesic, tau: &BigRational) -> GramPoint<CertReal> {
    GramPoint::new_unchecked(geod.at(tau))
}
