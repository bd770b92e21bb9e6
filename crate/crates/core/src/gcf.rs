//! The geodesic continued fraction driver, exact period detection and unit certificates.

use crate::error::{Error, Result};
use crate::geodesic::{eval_matrix, poly_act, t_of, window_of_matrix, CPoly, FlatGeodesic, Variant};
use crate::halfspace::GramPoint;
use crate::linalg::{format_imat, idet, iidentity, iinverse, imul, ineg, is_identity, to_qmat, IMat, Mat};
use crate::numberfield::{mult_matrix, phi, FieldElement, QBasis};
use crate::realalg::interval::{ceil_dyadic, Interval};
use crate::realalg::{sqrt_enclosure, to_f64, CertReal, Endpoint, Window};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt::Write as _;

#[derive(Clone, Debug)]
pub struct GcfConfig {
    pub omega: BigRational,
    pub max_steps: usize,
    /// First sample offset is 1/l0 in τ.
    pub l0: u64,
    pub tau0: BigRational,
    /// Stop at the first period; otherwise run all `max_steps` steps.
    pub stop_on_period: bool,
}

impl Default for GcfConfig {
    fn default() -> Self {
        GcfConfig {
            omega: BigRational::new(3.into(), 4.into()),
            max_steps: 512,
            l0: 16,
            tau0: BigRational::one(),
            stop_on_period: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct GcfStep {
    pub k: usize,
    pub a: IMat,
    pub b: IMat,
    /// Window `[s, t]` in τ (of the traversed geodesic).
    pub s: Endpoint<CertReal>,
    pub t: Endpoint<CertReal>,
    /// Sample τ at which `A_k` was found.
    pub u: BigRational,
    /// `v_i / v_n` for `v = B_k⁻¹·w`, `i < n`.
    pub ratios: Vec<FieldElement>,
}

impl GcfStep {
    fn t_bounds(e: &mut Endpoint<CertReal>, reversed: bool, bits: u32) -> Option<Interval> {
        let iv = t_of(e, bits + 4);
        if !reversed {
            return iv;
        }
        match iv {
            None => Some(Interval::point(BigRational::zero())),
            Some(i) if i.lo.is_zero() => None,
            Some(i) => Some(Interval::new(BigRational::one() / &i.hi, BigRational::one() / &i.lo)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Period {
    pub k0: usize,
    pub k1: usize,
    /// Sign matrix with `D·v^{(k0)} = ε·v^{(k1)}`.
    pub d: IMat,
}

#[derive(Clone, Debug)]
pub struct GcfRun {
    pub steps: Vec<GcfStep>,
    pub period: Option<Period>,
    pub reversed: bool,
    pub geod: FlatGeodesic,
}

impl GcfRun {
    pub fn require_period(&self) -> Result<&Period> {
        self.period.as_ref().ok_or(Error::BudgetExhausted(self.steps.len().saturating_sub(1)))
    }

    /// Enclosures of `(s_k, t_k)` in the original parameter `t`; `None` stands for +∞.
    pub fn window_t(&self, k: usize, bits: u32) -> (Option<Interval>, Option<Interval>) {
        let mut st = self.steps[k].clone();
        let s = GcfStep::t_bounds(&mut st.s, self.reversed, bits);
        let t = GcfStep::t_bounds(&mut st.t, self.reversed, bits);
        if self.reversed {
            (t, s)
        } else {
            (s, t)
        }
    }

    pub fn trace(&self) -> String {
        format_trace(self)
    }
}

/// A dyadic rational strictly above the endpoint, roughly `off` beyond it.
fn sample_above(e: &mut Endpoint<CertReal>, off: &BigRational, bits: u32) -> BigRational {
    let hi = e.enclose(bits).map(|i| i.hi).unwrap_or_else(BigRational::zero);
    ceil_dyadic(&(hi + off), bits)
}

fn ratios(v: &[FieldElement]) -> Vec<FieldElement> {
    let last = v.last().unwrap();
    let inv = last.inv().expect("basis vectors are nonzero");
    v[..v.len() - 1].iter().map(|x| x.mul(&inv)).collect()
}

/// `B⁻¹·w` as field elements.
pub fn transformed_basis(b: &IMat, w: &QBasis) -> Vec<FieldElement> {
    let bi = iinverse(b).expect("unimodular");
    let f = w.field();
    bi.iter()
        .map(|row| {
            let mut acc = f.zero();
            for (x, e) in row.iter().zip(w.elements()) {
                if !x.is_zero() {
                    acc = acc.add(&e.scale_q(&BigRational::from_integer(x.clone())));
                }
            }
            acc
        })
        .collect()
}

/// LLL at `tau`, then the window of the candidate, nudging `tau` off window boundaries.
fn try_sample(
    q: &Mat<CPoly>,
    omega: &BigRational,
    mut tau: BigRational,
    nudge: &BigRational,
) -> Result<(IMat, Mat<CPoly>, Window<CertReal>, BigRational)> {
    for _ in 0..16 {
        let p = GramPoint::new_unchecked(eval_matrix(q, &tau));
        let a = p.lll_reduce(omega);
        let qn = poly_act(&iinverse(&a)?, q);
        match window_of_matrix(&qn, omega, &tau) {
            Ok(w) => return Ok((a, qn, w, tau)),
            Err(Error::Degenerate(_)) => tau += nudge,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Degenerate("sample keeps landing on window boundaries".into()))
}

fn no_ratios(geod: &FlatGeodesic, b: &IMat) -> Vec<FieldElement> {
    match &geod.provenance {
        Some(p) => ratios(&transformed_basis(b, &p.basis)),
        None => vec![],
    }
}

/// Forward loop of the algorithm, stopping at the first exact period or after `max_steps` steps.
pub fn run_forward(geod: &FlatGeodesic, cfg: &GcfConfig) -> Result<GcfRun> {
    run(geod, cfg, false)
}

/// Backward loop: the forward loop along `τ ↦ 1/τ`.
pub fn run_backward(geod: &FlatGeodesic, cfg: &GcfConfig) -> Result<GcfRun> {
    let mut c = cfg.clone();
    c.tau0 = BigRational::one() / &cfg.tau0;
    run(&geod.reversed(), &c, true)
}

fn run(geod: &FlatGeodesic, cfg: &GcfConfig, reversed: bool) -> Result<GcfRun> {
    let q0 = geod.poly_matrix();
    let fine = BigRational::new(BigInt::one(), BigInt::one() << 40usize);
    let (b0, mut q, w0, u0) = try_sample(&q0, &cfg.omega, cfg.tau0.clone(), &fine)?;
    let mut steps = vec![GcfStep {
        k: 0,
        ratios: no_ratios(geod, &b0),
        a: b0.clone(),
        b: b0,
        s: w0.lo,
        t: w0.hi,
        u: u0,
    }];
    let mut run = GcfRun { steps: vec![], period: None, reversed, geod: geod.clone() };
    for k in 1..=cfg.max_steps {
        let prev = steps.last_mut().unwrap();
        if !prev.t.is_finite() {
            return Err(Error::Degenerate("window is unbounded above".into()));
        }
        let mut l = cfg.l0;
        let (a, qn, w, u) = loop {
            let off = BigRational::new(BigInt::one(), BigInt::from(l));
            let bits = 64 - l.leading_zeros() + 24;
            let tau = sample_above(&mut prev.t, &off, bits);
            let nudge = &off / BigRational::from_integer(BigInt::from(1u64 << 20));
            let (a, qn, mut w, u) = try_sample(&q, &cfg.omega, tau, &nudge)?;
            if w.lo.cmp(&mut prev.t) != Ordering::Greater {
                break (a, qn, w, u);
            }
            l = l.checked_mul(2).ok_or_else(|| Error::Degenerate("sample offset underflow".into()))?;
        };
        let b = imul(&prev.b, &a);
        q = qn;
        steps.push(GcfStep { k, ratios: no_ratios(geod, &b), a, b, s: w.lo, t: w.hi, u });
        if run.period.is_none() {
            run.period = detect_period(&steps, geod);
            if run.period.is_some() && cfg.stop_on_period {
                break;
            }
        }
    }
    run.steps = steps;
    Ok(run)
}

const TORSION_ORDERS: [u32; 9] = [1, 2, 3, 4, 5, 6, 8, 10, 12];

fn is_torsion(e: &FieldElement) -> bool {
    TORSION_ORDERS.iter().any(|&m| e.pow_u(m).is_one())
}

fn sign_matrix(rk1: &[FieldElement], rk0: &[FieldElement]) -> Option<IMat> {
    let n = rk1.len() + 1;
    let mut d = iidentity(n);
    for i in 0..n - 1 {
        if rk1[i] == rk0[i] {
            continue;
        }
        if rk1[i] == rk0[i].neg() {
            d[i][i] = BigInt::from(-1);
            continue;
        }
        return None;
    }
    if idet(&d).is_negative() {
        if n % 2 == 1 {
            d = ineg(&d);
        } else {
            return None;
        }
    }
    Some(d)
}

/// The candidate unit of the pair `(k0, k1)` when it passes every exact test.
fn period_unit(steps: &[GcfStep], geod: &FlatGeodesic, k0: usize, k1: usize) -> Option<(IMat, IMat, FieldElement)> {
    let prov = geod.provenance.as_ref()?;
    let d = sign_matrix(&steps[k1].ratios, &steps[k0].ratios)?;
    let p = imul(&imul(&steps[k1].b, &d), &iinverse(&steps[k0].b).ok()?);
    if is_identity(&p) || is_identity(&ineg(&p)) {
        return None;
    }
    let eps = phi(&to_qmat(&p), &prov.basis).ok()?;
    if !eps.norm().is_one() || is_torsion(&eps) {
        return None;
    }
    if prov.variant == Variant::Chi {
        let rq = prov.subfield.as_ref()?;
        if !rq.norm(&eps).is_one() {
            return None;
        }
    }
    Some((p, d, eps))
}

/// First `(k0, k1)` in `(k1, k0)` order whose `B_{k1}·D·B_{k0}⁻¹` is a norm-one unit.
pub fn detect_period(steps: &[GcfStep], geod: &FlatGeodesic) -> Option<Period> {
    let k1 = steps.len().checked_sub(1)?;
    (0..k1).find_map(|k0| period_unit(steps, geod, k0, k1).map(|(_, d, _)| Period { k0, k1, d }))
}

/// Exact proof that a unit was found.
#[derive(Clone, Debug)]
pub struct UnitCertificate {
    pub k0: usize,
    pub k1: usize,
    pub p: IMat,
    pub d: IMat,
    pub epsilon: FieldElement,
    /// `|σ(ε)|²` at the distinguished place, exactly, and an enclosure of `|σ(ε)|`.
    pub rho2: CertReal,
    pub rho: Interval,
    pub variant: Variant,
    pub relative_norm: Option<FieldElement>,
}

impl UnitCertificate {
    pub fn log_rho(&self) -> f64 {
        to_f64(&self.rho.mid()).ln()
    }
}

pub fn extract_unit(run: &GcfRun, period: &Period) -> Result<UnitCertificate> {
    let geod = &run.geod;
    let prov = geod.provenance.as_ref().ok_or_else(|| Error::CertificateFailure("no provenance".into()))?;
    let fail = |m: &str| Error::CertificateFailure(m.into());
    let (p, d, eps) =
        period_unit(&run.steps, geod, period.k0, period.k1).ok_or_else(|| fail("period does not give a unit"))?;
    if !idet(&p).is_one() {
        return Err(fail("det P != 1"));
    }
    if mult_matrix(&eps, &prov.basis) != to_qmat(&p) {
        return Err(fail("P·w != ε·w"));
    }
    if !eps.norm().is_one() {
        return Err(fail("norm != 1"));
    }
    let rho2 = prov.places[0].abs2(&eps);
    if rho2 == CertReal::int(1) {
        return Err(fail("ε has absolute value one at the distinguished place"));
    }
    let relative_norm = match prov.variant {
        Variant::Chi => {
            let rn = prov.subfield.as_ref().ok_or_else(|| fail("missing subfield"))?.norm(&eps);
            if !rn.is_one() {
                return Err(fail("relative norm != 1"));
            }
            Some(rn)
        }
        Variant::RankOne => None,
    };
    let rho = sqrt_enclosure(&rho2, 40);
    Ok(UnitCertificate { k0: period.k0, k1: period.k1, p, d, epsilon: eps, rho2, rho, variant: prov.variant, relative_norm })
}

/// Post-processing: `ε = ±η^m` with `m > 1` maximal among products of 2, 3, 5, when such `η` exists.
pub fn root_extract(eps: &FieldElement) -> Option<(FieldElement, u32, i32)> {
    let f = eps.field().clone();
    let den = f.discriminant().abs();
    let mut cur = eps.clone();
    let mut total = 1u32;
    let mut sign = 1i32;
    'outer: loop {
        for m in [2u32, 3, 5] {
            for s in [1i32, -1] {
                let target = if s == 1 { cur.clone() } else { cur.neg() };
                let z = target.approx_embeddings();
                let choices: Vec<Vec<Complex64>> = z
                    .iter()
                    .enumerate()
                    .map(|(place, &x)| {
                        let all: Vec<Complex64> = (0..m)
                            .map(|k| {
                                Complex64::from_polar(
                                    x.norm().powf(1.0 / m as f64),
                                    (x.arg() + 2.0 * std::f64::consts::PI * k as f64) / m as f64,
                                )
                            })
                            .collect();
                        if f.is_real_place(place) {
                            all.into_iter().filter(|c| c.im.abs() < 1e-9).map(|c| Complex64::new(c.re, 0.0)).collect()
                        } else {
                            all
                        }
                    })
                    .collect();
                if choices.iter().any(|c| c.is_empty()) {
                    continue;
                }
                let mut idx = vec![0usize; choices.len()];
                loop {
                    let t: Vec<Complex64> = idx.iter().enumerate().map(|(p, &i)| choices[p][i]).collect();
                    if let Some(eta) = f.element_near(&t, &den) {
                        if eta.pow_u(m) == target {
                            cur = eta;
                            total *= m;
                            if s == -1 {
                                sign = -sign;
                            }
                            continue 'outer;
                        }
                    }
                    let mut p = 0;
                    loop {
                        if p == idx.len() {
                            break;
                        }
                        idx[p] += 1;
                        if idx[p] < choices[p].len() {
                            break;
                        }
                        idx[p] = 0;
                        p += 1;
                    }
                    if p == idx.len() {
                        break;
                    }
                }
            }
        }
        break;
    }
    if total > 1 {
        Some((cur, total, sign))
    } else {
        None
    }
}

/// Six significant digits, trailing zeros removed.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return "Infinity".into();
    }
    let mag = x.abs().log10().floor() as i32;
    let dec = (5 - mag).max(0) as usize;
    let mut s = format!("{:.*}", dec, x);
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

fn fmt_end(e: Option<Interval>) -> String {
    match e {
        None => "Infinity".into(),
        Some(i) => sig6(to_f64(&i.mid())),
    }
}

fn join_ratios(r: &[FieldElement]) -> String {
    r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// The step listing: `{A_k, B_k, ratios}` lines interleaved with `{s_k, t_k}`.
pub fn format_trace(run: &GcfRun) -> String {
    let mut out = String::new();
    let starts: Vec<usize> = run.period.as_ref().map(|p| vec![p.k0, p.k1]).unwrap_or_default();
    for (k, st) in run.steps.iter().enumerate() {
        let mark = if starts.contains(&k) { " :~period start" } else { "" };
        if k == 0 {
            let _ = writeln!(out, "{{preparation; {}, {}}}{}", format_imat(&st.b), join_ratios(&st.ratios), mark);
        } else {
            let _ = writeln!(out, "{{{}, {}, {}}}{}", format_imat(&st.a), format_imat(&st.b), join_ratios(&st.ratios), mark);
        }
        let (s, t) = run.window_t(k, 40);
        let _ = writeln!(out, "{{{},{}}}", fmt_end(s), fmt_end(t));
    }
    out
}
