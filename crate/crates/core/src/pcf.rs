//! The {∞,p}-continued fraction of imaginary quadratic irrationals, norm-one p-units,
//! Pell-like equations and ideal class orders.

use crate::error::{Error, Result};
use crate::linalg::{identity, inverse, mat_mul, QMat};
use crate::numberfield::{FieldElement, NumberField};
use crate::poly::qpoly_from_bigints;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cell::RefCell;
use std::fmt;
use std::sync::Arc;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| p % k != 0)
}

fn is_squarefree(d: u64) -> bool {
    d >= 1 && (2..).take_while(|k| k * k <= d).all(|k| d % (k * k) != 0)
}

/// `p`-adic valuation of a nonzero integer.
fn vp_int(x: &BigInt, p: &BigInt) -> i64 {
    let mut x = x.clone();
    let mut v = 0;
    while (&x % p).is_zero() {
        x /= p;
        v += 1;
    }
    v
}

pub fn vp_rational(x: &BigRational, p: &BigInt) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    Some(vp_int(x.numer(), p) - vp_int(x.denom(), p))
}

fn inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// `x mod p^e` for a rational of nonnegative valuation.
fn rational_mod(x: &BigRational, m: &BigInt) -> BigInt {
    (x.numer() * inv_mod(x.denom(), m)).mod_floor(m)
}

/// `r` with `r² ≡ −d mod p^k` and `r ≡ seed mod p`.
pub fn hensel_sqrt(d: u64, p: u64, seed: u64, k: u32) -> Result<BigInt> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotSplit(format!("{p} is not an odd prime")));
    }
    if d % p == 0 {
        return Err(Error::NotSplit(format!("{p} ramifies in Q(sqrt(-{d}))")));
    }
    let pb = BigInt::from(p);
    let nd = BigInt::from(d);
    let s = BigInt::from(seed).mod_floor(&pb);
    if !((&s * &s + &nd) % &pb).is_zero() {
        let residue = (0..p).any(|r| (r * r + d) % p == 0);
        return Err(Error::NotSplit(if residue {
            format!("{seed} is not a square root of -{d} mod {p}")
        } else {
            format!("-{d} is not a square mod {p}")
        }));
    }
    let mut r = s;
    let mut prec = 1u32;
    while prec < k {
        prec = (2 * prec).min(k);
        let m = pb.pow(prec);
        let f = &r * &r + &nd;
        r = (&r - f * inv_mod(&(BigInt::from(2) * &r), &m)).mod_floor(&m);
    }
    Ok(r.mod_floor(&pb.pow(k.max(1))))
}

/// The embedding `Q(√−d) → Q_p` sending `√−d` to the lift of `root`.
#[derive(Debug)]
pub struct PadicEmbedding {
    pub d: u64,
    pub p: u64,
    pub root: u64,
    lift_cache: RefCell<(u32, BigInt)>,
}

impl Clone for PadicEmbedding {
    fn clone(&self) -> Self {
        PadicEmbedding { d: self.d, p: self.p, root: self.root, lift_cache: RefCell::new(self.lift_cache.borrow().clone()) }
    }
}

impl PadicEmbedding {
    pub fn new(d: u64, p: u64, root: u64) -> Result<Self> {
        let r = hensel_sqrt(d, p, root, 1)?;
        Ok(PadicEmbedding { d, p, root: root % p, lift_cache: RefCell::new((1, r)) })
    }

    /// The other prime above `p`.
    pub fn conjugate(&self) -> Self {
        let r = (self.p - self.root) % self.p;
        PadicEmbedding::new(self.d, self.p, r).expect("conjugate root is a root")
    }

    pub fn prime(&self) -> BigInt {
        BigInt::from(self.p)
    }

    /// `√−d mod p^k`.
    pub fn lift(&self, k: u32) -> BigInt {
        let mut c = self.lift_cache.borrow_mut();
        if c.0 < k {
            *c = (k, hensel_sqrt(self.d, self.p, self.root, k).expect("checked at construction"));
        }
        c.1.mod_floor(&self.prime().pow(k))
    }
}

/// `(v_p(z), z mod p^m)`; the residue is present when `v_p(z) ≥ 0`.
pub fn valuation_and_residue(z: &FieldElement, emb: &PadicEmbedding, m: u32) -> (i64, Option<BigInt>) {
    assert!(!z.is_zero(), "valuation of zero");
    let p = emb.prime();
    let c = z.coords();
    let den = c[0].denom().lcm(c[1].denom());
    let a = c[0].numer() * (&den / c[0].denom());
    let b = c[1].numer() * (&den / c[1].denom());
    let e = vp_int(&den, &p);
    let den_unit = &den / p.pow(e as u32);
    let mut k = (m + e as u32).max(8);
    loop {
        let pk = p.pow(k);
        let x = (&a + &b * emb.lift(k)).mod_floor(&pk);
        if !x.is_zero() {
            let v0 = vp_int(&x, &p);
            let v = v0 - e;
            if v < 0 {
                return (v, None);
            }
            if k >= m + e as u32 {
                let pm = p.pow(m);
                let r = (x / p.pow(e as u32)).mod_floor(&pm) * inv_mod(&den_unit, &pm);
                return (v, Some(r.mod_floor(&pm)));
            }
        }
        k *= 2;
    }
}

/// Elements of `Q(√−d)` in the `√−d` power basis.
pub fn quadratic_field(d: u64) -> Result<Arc<NumberField>> {
    NumberField::new(&qpoly_from_bigints(&[BigInt::from(d), BigInt::zero(), BigInt::one()]))
}

/// The generator of the maximal order.
pub fn ring_generator(f: &Arc<NumberField>, d: u64) -> FieldElement {
    if d % 4 == 3 {
        f.element(vec![BigRational::new((-1).into(), 2.into()), BigRational::new(1.into(), 2.into())])
    } else {
        f.theta()
    }
}

pub fn mobius(m: &QMat, z: &FieldElement) -> FieldElement {
    let num = z.scale_q(&m[0][0]).add(&z.field().from_q(m[0][1].clone()));
    let den = z.scale_q(&m[1][0]).add(&z.field().from_q(m[1][1].clone()));
    num.div(&den).expect("Möbius image of a non-real point")
}

fn re_abs2(z: &FieldElement, d: u64) -> (BigRational, BigRational) {
    let c = z.coords();
    (c[0].clone(), &c[0] * &c[0] + &c[1] * &c[1] * q(d as i64))
}

/// Membership in the standard fundamental domain with its half-open boundary.
pub fn in_fundamental_domain(z: &FieldElement, d: u64) -> bool {
    let (re, n) = re_abs2(z, d);
    let half = BigRational::new(1.into(), 2.into());
    let one = BigRational::one();
    (n > one && re >= -&half && re < half) || (n == one && re >= -half && re <= BigRational::zero())
}

#[derive(Clone, Debug)]
pub struct PcfLoop {
    pub delta: i32,
    pub a: BigInt,
    pub b_list: Vec<BigInt>,
    pub d_mat: QMat,
    pub p_mat: QMat,
    pub q_mat: QMat,
    /// `A_k⁻¹ = Q_k P_k D_k`.
    pub a_inv: QMat,
    pub b_inv: QMat,
    pub x_next: FieldElement,
}

#[derive(Clone, Debug)]
pub struct PcfExpansion {
    pub x1: FieldElement,
    pub loops: Vec<PcfLoop>,
    /// 1-based `(k, l)` with `x_k = x_l`.
    pub period: Option<(usize, usize)>,
}

impl PcfExpansion {
    /// `x_k` for `k ≥ 1`.
    pub fn x(&self, k: usize) -> &FieldElement {
        if k == 1 {
            &self.x1
        } else {
            &self.loops[k - 2].x_next
        }
    }

    pub fn digits(&self) -> String {
        let parts: Vec<String> = self
            .loops
            .iter()
            .map(|l| {
                let bs: Vec<String> = l.b_list.iter().map(|b| b.to_string()).collect();
                format!("{};{};{}", if l.delta > 0 { "+1" } else { "-1" }, l.a, bs.join(","))
            })
            .collect();
        format!("[{}]", parts.join(";"))
    }
}

impl fmt::Display for PcfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.digits())?;
        if let Some((k, l)) = self.period {
            write!(f, " per=({k},{l})")?;
        }
        Ok(())
    }
}

fn qm(a: [[BigRational; 2]; 2]) -> QMat {
    a.into_iter().map(|r| r.to_vec()).collect()
}

/// Expands `z` until some `x_l` repeats an earlier `x_k`.
pub fn pcf_expand(z: &FieldElement, emb: &PadicEmbedding, max_loops: usize) -> Result<PcfExpansion> {
    let e = pcf_expand_partial(z, emb, max_loops)?;
    if e.period.is_none() {
        return Err(Error::BudgetExhausted(max_loops));
    }
    Ok(e)
}

/// At most `max_loops` loops, stopping early at a period.
pub fn pcf_expand_partial(z: &FieldElement, emb: &PadicEmbedding, max_loops: usize) -> Result<PcfExpansion> {
    let d = emb.d;
    if !z.coords()[1].is_positive() {
        return Err(Error::Degenerate("point is not in the upper half plane".into()));
    }
    let p = emb.prime();
    let p2 = &p * &p;
    let pq = BigRational::from_integer(p.clone());
    let mut exp = PcfExpansion { x1: z.clone(), loops: vec![], period: None };
    let mut x = z.clone();
    let mut b_inv = identity::<BigRational>(2);
    for k in 1..=max_loops {
        let (v, _) = valuation_and_residue(&x, emb, 0);
        let (delta, d_mat) = if v >= 0 {
            (1, identity::<BigRational>(2))
        } else {
            (-1, qm([[q(0), q(-1)], [q(1), q(0)]]))
        };
        let zk = mobius(&d_mat, &x);
        let (_, res) = valuation_and_residue(&zk, emb, 2);
        let a = res.expect("z_k is integral");
        let p_mat = qm([[BigRational::one() / &pq, -BigRational::from_integer(a.clone()) / &pq], [q(0), pq.clone()]]);
        let mut zj = mobius(&p_mat, &zk);
        let mut b_list = vec![];
        let mut q_mat = identity::<BigRational>(2);
        while !in_fundamental_domain(&zj, d) {
            let re = zj.coords()[0].clone();
            let b = (re + BigRational::new(1.into(), 2.into())).floor().to_integer();
            let shifted = zj.sub(&zj.field().from_q(BigRational::from_integer(b.clone())));
            // −1/(ρ+b−b) = ρ+1 cycles forever, so land on ρ by translation
            let step = if re_abs2(&shifted, d) == (BigRational::new((-1).into(), 2.into()), BigRational::one()) {
                qm([[q(1), -BigRational::from_integer(b.clone())], [q(0), q(1)]])
            } else {
                qm([[q(0), q(-1)], [q(1), -BigRational::from_integer(b.clone())]])
            };
            zj = mobius(&step, &zj);
            q_mat = mat_mul(&step, &q_mat);
            b_list.push(b);
        }
        debug_assert!((&a - &a.mod_floor(&p2)).is_zero());
        let a_inv = mat_mul(&mat_mul(&q_mat, &p_mat), &d_mat);
        b_inv = mat_mul(&a_inv, &b_inv);
        exp.loops.push(PcfLoop { delta, a, b_list, d_mat, p_mat, q_mat, a_inv, b_inv: b_inv.clone(), x_next: zj.clone() });
        let l = k + 1;
        if let Some(j) = (1..l).find(|&j| exp.x(j) == &zj) {
            exp.period = Some((j, l));
            return Ok(exp);
        }
        x = zj;
    }
    Ok(exp)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PellSolution {
    pub x: BigInt,
    pub y: BigInt,
    pub nu: u64,
}

#[derive(Clone, Debug)]
pub struct PUnitResult {
    pub d: u64,
    pub p: u64,
    pub root: u64,
    pub n: usize,
    pub expansion: PcfExpansion,
    /// `s_N θ + t_N`.
    pub epsilon: FieldElement,
    /// `p^N ε = sθ + t`.
    pub u: FieldElement,
    pub s: BigInt,
    pub t: BigInt,
    pub pell: PellSolution,
    pub ideal_order: usize,
}

fn check_d(d: u64) -> Result<()> {
    if !is_squarefree(d) {
        return Err(Error::Degenerate(format!("d = {d} is not a positive square-free integer")));
    }
    Ok(())
}

/// Fundamental norm-one p-unit from the purely periodic expansion of the ring generator.
pub fn fundamental_p_unit(d: u64, p: u64, seed_root: u64) -> Result<PUnitResult> {
    fundamental_p_unit_with(d, p, seed_root, 256)
}

pub fn fundamental_p_unit_with(d: u64, p: u64, seed_root: u64, max_loops: usize) -> Result<PUnitResult> {
    check_d(d)?;
    let emb = PadicEmbedding::new(d, p, seed_root)?;
    let f = quadratic_field(d)?;
    let theta = ring_generator(&f, d);
    let exp = pcf_expand(&theta, &emb, max_loops)?;
    let (k, l) = exp.period.expect("pcf_expand returns a period");
    if k != 1 {
        return Err(Error::PurePeriodicityViolated);
    }
    let n = l - 1;
    let bi = &exp.loops[n - 1].b_inv;
    let (s_n, t_n) = (bi[1][0].clone(), bi[1][1].clone());
    let epsilon = theta.scale_q(&s_n).add(&f.from_q(t_n.clone()));
    let pn = BigRational::from_integer(emb.prime().pow(n as u32));
    let (s, t) = ((&s_n * &pn), (&t_n * &pn));
    if !s.is_integer() || !t.is_integer() {
        return Err(Error::CertificateFailure("p^N s_N, p^N t_N not integral".into()));
    }
    let (s, t) = (s.to_integer(), t.to_integer());
    if !s.gcd(&t).is_one() {
        return Err(Error::CertificateFailure("s, t not coprime".into()));
    }
    if !epsilon.norm().is_one() {
        return Err(Error::CertificateFailure("norm(ε) != 1".into()));
    }
    let n_i = n as i64;
    if valuation_and_residue(&epsilon, &emb, 0).0 != n_i || valuation_and_residue(&epsilon, &emb.conjugate(), 0).0 != -n_i {
        return Err(Error::CertificateFailure("valuations of ε are not (N, -N)".into()));
    }
    let u = epsilon.scale_q(&pn);
    let mut r = PUnitResult {
        d,
        p,
        root: emb.root,
        n,
        expansion: exp,
        epsilon,
        u,
        pell: PellSolution { x: t.clone(), y: s.clone(), nu: n as u64 },
        s,
        t,
        ideal_order: 0,
    };
    r.ideal_order = ideal_class_order(&r);
    Ok(r)
}

/// The roots of unity of `Q(√−d)`.
pub fn roots_of_unity(f: &Arc<NumberField>, d: u64) -> Vec<FieldElement> {
    let mut v = vec![f.one(), f.one().neg()];
    if d == 1 {
        v.push(f.theta());
        v.push(f.theta().neg());
    }
    if d == 3 {
        let h = BigRational::new(1.into(), 2.into());
        for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            v.push(f.element(vec![&h * q(a), &h * q(b)]));
        }
    }
    v
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer().sqrt(), x.denom().sqrt());
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// Coordinates of `z` in the basis `(1, θ)` of the maximal order.
pub fn order_coords(z: &FieldElement, d: u64) -> (BigRational, BigRational) {
    let c = z.coords();
    if d % 4 == 3 {
        (&c[0] + &c[1], &c[1] * q(2))
    } else {
        (c[0].clone(), c[1].clone())
    }
}

/// Some `x ∈ O_F` with `x² = target`.
pub fn square_root_in_order(target: &FieldElement, d: u64) -> Option<FieldElement> {
    let n = rational_sqrt(&target.norm())?;
    let c = target.coords();
    let a = rational_sqrt(&((&n + &c[0]) / q(2)))?;
    let b = rational_sqrt(&((&n - &c[0]) / (q(2) * q(d as i64))))?;
    let f = target.field();
    for sb in [b.clone(), -b] {
        let x = f.element(vec![a.clone(), sb]);
        let (x0, x1) = order_coords(&x, d);
        if x.mul(&x) == *target && x0.is_integer() && x1.is_integer() {
            return Some(x);
        }
    }
    None
}

/// `N` if `u/x²` is a root of unity for some `x ∈ O_F`, otherwise `2N`.
pub fn ideal_class_order(r: &PUnitResult) -> usize {
    let f = r.u.field();
    let square = roots_of_unity(f, r.d)
        .iter()
        .any(|z| square_root_in_order(&r.u.div(z).expect("unit"), r.d).is_some());
    if square {
        r.n
    } else {
        2 * r.n
    }
}

/// Coprime solutions of the Pell-like equation up to `ν ≤ r_max·N`, from the fundamental p-unit.
pub fn pell_solutions(d: u64, p: u64, r_max: u32) -> Result<Vec<PellSolution>> {
    let root = (1..p).find(|r| (r * r + d) % p == 0).ok_or_else(|| Error::NotSplit(format!("-{d} is not a square mod {p}")))?;
    let r = fundamental_p_unit(d, p, root)?;
    Ok(pell_solutions_from(&r, r_max))
}

/// Left side of the Pell-like equation at `(x, y)`, scaled so that the right side is `p^{2ν}`.
pub fn pell_form(d: u64, x: &BigInt, y: &BigInt) -> BigRational {
    let dd = BigInt::from(d);
    if d % 4 == 3 {
        BigRational::new(x * x * 4 - x * y * 4 + (dd + 1) * y * y, 4.into())
    } else {
        BigRational::from_integer(x * x + dd * y * y)
    }
}

pub fn pell_solutions_from(r: &PUnitResult, r_max: u32) -> Vec<PellSolution> {
    let f = r.u.field();
    let conj = f.element(vec![r.u.coords()[0].clone(), -r.u.coords()[1].clone()]);
    let zetas = roots_of_unity(f, r.d);
    let mut out: Vec<PellSolution> = vec![];
    for k in 1..=r_max {
        let nu = k as u64 * r.n as u64;
        let rhs = BigRational::from_integer(BigInt::from(r.p).pow(2 * nu as u32));
        for base in [&r.u, &conj] {
            let pw = base.pow_u(k);
            for z in &zetas {
                let (x, y) = order_coords(&pw.mul(z), r.d);
                debug_assert!(x.is_integer() && y.is_integer());
                let (x, y) = (x.to_integer(), y.to_integer());
                if pell_form(r.d, &x, &y) != rhs || !x.gcd(&y).is_one() {
                    continue;
                }
                if !out.iter().any(|s| s.x == x && s.y == y && s.nu == nu) {
                    out.push(PellSolution { x, y, nu });
                }
            }
        }
    }
    out.sort_by(|a, b| (a.nu, &a.x, &a.y).cmp(&(b.nu, &b.x, &b.y)));
    out
}

/// `M = p^λ·[[p^ν,0],[0,1]]·[[p^e,u],[0,1]]·R` with `R ∈ GL₂(Z_p)`, `u ∈ (Z/p^e)^×`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicNormalForm {
    pub lambda: i64,
    pub nu: i64,
    pub e: u32,
    pub u: BigInt,
}

pub fn padic_normal_form(m: &QMat, p: u64) -> Result<PadicNormalForm> {
    let pb = BigInt::from(p);
    let v = |x: &BigRational| vp_rational(x, &pb);
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let mut g = m.clone();
    // column operations over Z_p clear the bottom-left entry
    let swap = match (v(&g[1][0]), v(&g[1][1])) {
        (None, _) => false,
        (Some(_), None) => true,
        (Some(c), Some(d)) => c < d,
    };
    if swap {
        for row in g.iter_mut() {
            row.swap(0, 1);
        }
    }
    if !g[1][0].is_zero() {
        let r = &g[1][0] / &g[1][1];
        for row in g.iter_mut() {
            let t = &row[1] * &r;
            row[0] -= t;
        }
    }
    let pow = |k: i64| -> BigRational {
        if k >= 0 {
            BigRational::from_integer(pb.pow(k as u32))
        } else {
            BigRational::new(BigInt::one(), pb.pow((-k) as u32))
        }
    };
    let m_exp = v(&g[1][1]).unwrap();
    let a_exp = v(&g[0][0]).unwrap();
    let lambda = m_exp;
    let k = a_exp - m_exp;
    // unit rescaling of the second column turns g[1][1] into p^λ
    let beta = &g[0][1] / &g[1][1];
    let nu = match v(&beta) {
        Some(vb) if vb < k => vb,
        _ => k,
    };
    let e = (k - nu) as u32;
    let u = if e == 0 { BigInt::zero() } else { rational_mod(&(&beta / pow(nu)), &pb.pow(e)) };
    Ok(PadicNormalForm { lambda, nu, e, u })
}

/// The matrix `p^λ·[[p^{ν+e}, p^ν u],[0,1]]` of a normal form.
pub fn normal_form_matrix(nf: &PadicNormalForm, p: u64) -> QMat {
    let pb = BigRational::from_integer(p.into());
    let pw = |k: i64| if k >= 0 { num_traits::pow(pb.clone(), k as usize) } else { num_traits::pow(pb.recip(), (-k) as usize) };
    let s = pw(nf.lambda);
    qm([
        [&s * pw(nf.nu + nf.e as i64), &s * pw(nf.nu) * BigRational::from_integer(nf.u.clone())],
        [q(0), s.clone()],
    ])
}

/// `M⁻¹ N ∈ GL₂(Z_p)`.
pub fn same_coset(m: &QMat, n: &QMat, p: u64) -> bool {
    let pb = BigInt::from(p);
    let Ok(mi) = inverse(m) else { return false };
    let r = mat_mul(&mi, n);
    let det = &r[0][0] * &r[1][1] - &r[0][1] * &r[1][0];
    r.iter().flatten().all(|x| vp_rational(x, &pb).is_none_or(|k| k >= 0)) && vp_rational(&det, &pb) == Some(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hensel_examples() {
        assert_eq!(hensel_sqrt(1, 5, 2, 1).unwrap(), BigInt::from(2));
        assert_eq!(hensel_sqrt(1, 5, 2, 2).unwrap(), BigInt::from(7));
        assert_eq!(hensel_sqrt(5, 3, 1, 1).unwrap(), BigInt::from(1));
        assert!(matches!(hensel_sqrt(3, 5, 1, 1), Err(Error::NotSplit(_))));
        assert!(matches!(hensel_sqrt(1, 2, 1, 1), Err(Error::NotSplit(_))));
    }

    #[test]
    fn valuations() {
        let f = quadratic_field(1).unwrap();
        let emb = PadicEmbedding::new(1, 5, 2).unwrap();
        assert_eq!(valuation_and_residue(&f.one(), &emb, 1), (0, Some(BigInt::from(1))));
        assert_eq!(valuation_and_residue(&f.theta(), &emb, 2), (0, Some(BigInt::from(7))));
        let e = f.element(vec![BigRational::new(4.into(), 5.into()), BigRational::new(3.into(), 5.into())]);
        assert_eq!(valuation_and_residue(&e, &emb, 0).0, 1);
        assert_eq!(valuation_and_residue(&e, &emb.conjugate(), 0).0, -1);
    }

    #[test]
    fn golden_expansions() {
        let r = fundamental_p_unit(1, 5, 2).unwrap();
        assert_eq!(r.expansion.to_string(), "[+1;7;0,4,1] per=(1,2)");
        assert_eq!((r.n, r.ideal_order), (1, 1));
        assert_eq!((r.pell.x.clone(), r.pell.y.clone()), (4.into(), 3.into()));
        let r = fundamental_p_unit(5, 3, 1).unwrap();
        assert_eq!(r.expansion.digits(), "[+1;7;-1,-2,0]");
        assert_eq!((r.n, r.ideal_order), (1, 2));
        assert_eq!((r.pell.x.clone(), r.pell.y.clone()), ((-2).into(), (-1).into()));
        let r = fundamental_p_unit(14, 3, 2).unwrap();
        assert_eq!(r.expansion.digits(), "[+1;2;0,1,0;+1;1;0,2,0]");
        assert_eq!((r.n, r.ideal_order), (2, 4));
        assert_eq!((r.pell.x.clone(), r.pell.y.clone()), ((-5).into(), (-2).into()));
    }

    #[test]
    fn pell_lists() {
        let s = pell_solutions(1, 5, 2).unwrap();
        let has = |x: i64, y: i64, nu: u64| s.iter().any(|t| t.x == x.into() && t.y == y.into() && t.nu == nu);
        assert!(has(4, 3, 1) && has(7, 24, 2));
        assert!(pell_solutions(1, 5, 0).unwrap().is_empty());
        let s = pell_solutions(14, 3, 1).unwrap();
        assert!(s.iter().any(|t| t.x == 5.into() && t.y == 2.into() && t.nu == 2));
        assert!(matches!(pell_solutions(3, 5, 1), Err(Error::NotSplit(_))));
    }

    #[test]
    fn normal_forms() {
        let id = identity::<BigRational>(2);
        assert_eq!(padic_normal_form(&id, 3).unwrap(), PadicNormalForm { lambda: 0, nu: 0, e: 0, u: 0.into() });
        let m = qm([[q(9), q(0)], [q(0), q(1)]]);
        let nf = padic_normal_form(&m, 3).unwrap();
        assert_eq!((nf.lambda, nf.nu, nf.e), (0, 2, 0));
        let m = qm([[q(3), q(2)], [q(0), q(1)]]);
        let nf = padic_normal_form(&m, 3).unwrap();
        assert_eq!((nf.nu, nf.e, nf.u.clone()), (0, 1, 2.into()));
        assert!(same_coset(&m, &normal_form_matrix(&nf, 3), 3));
        assert!(matches!(padic_normal_form(&qm([[q(1), q(2)], [q(2), q(4)]]), 3), Err(Error::Singular)));
    }
}
