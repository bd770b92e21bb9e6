//! Property suites as plain functions, shared by the `prop_*` tests and the acceptance run.

use super::oracle::{split_primes, squarefree};
use geocf::geodesic::subfield_generator;
use geocf::halfspace::{act_inverse, GramPoint};
use geocf::linalg::{det, imul, is_unimodular, mat_mul, to_qmat, transpose, IMat};
use geocf::numberfield::{mult_matrix, phi, relative_norm, FieldElement, NumberField, RelativeQuadratic};
use geocf::pcf::{in_fundamental_domain, mobius, pcf_expand_partial, quadratic_field, valuation_and_residue, PadicEmbedding};
use geocf::poly::parse_poly;
use geocf::realalg::interval::Interval;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use std::cmp::Ordering;
use std::sync::Arc;

pub const CASES: u32 = 128;

fn check<S: Strategy>(cases: u32, s: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    runner.run(&s, test).map_err(|e| e.to_string())
}

const FIELDS: [&str; 5] = ["x^2 - 2", "x^2 + 7", "x^3 - 2", "x^3 - x - 1", "x^4 + 2"];

fn field(i: usize) -> Arc<NumberField> {
    NumberField::parse(FIELDS[i]).unwrap()
}

fn elem(f: &Arc<NumberField>, c: &[i64], den: i64) -> FieldElement {
    f.element(c[..f.degree()].iter().map(|&x| BigRational::new(x.into(), den.into())).collect())
}

fn coords() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, 4).prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
}

pub fn phi_inverts_iota() -> Result<(), String> {
    check(CASES, (0usize..5, coords(), 1i64..5, any::<bool>()), |(i, c, den, power)| {
        let f = field(i);
        let a = elem(&f, &c, den);
        prop_assume!(!a.is_zero());
        let w = if power { f.power_basis() } else { f.default_basis() };
        prop_assert_eq!(phi(&mult_matrix(&a, &w), &w).unwrap(), a);
        Ok(())
    })
}

pub fn det_of_iota_is_norm() -> Result<(), String> {
    check(CASES, (0usize..5, coords(), 1i64..5), |(i, c, den)| {
        let f = field(i);
        let a = elem(&f, &c, den);
        prop_assert_eq!(det(&mult_matrix(&a, &f.default_basis())), a.norm());
        Ok(())
    })
}

pub fn norm_is_multiplicative() -> Result<(), String> {
    check(CASES, (0usize..5, coords(), coords()), |(i, c, e)| {
        let f = field(i);
        let (a, b) = (elem(&f, &c, 1), elem(&f, &e, 1));
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).norm(), a.norm() * b.norm());
        prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a);
        Ok(())
    })
}

pub fn relative_norm_is_multiplicative() -> Result<(), String> {
    let f = NumberField::parse("x^4 - 2").unwrap();
    let g = subfield_generator(&f, &parse_poly("x^2 - 2").unwrap()).unwrap();
    let rq = RelativeQuadratic::new(&g).unwrap();
    check(CASES, (coords(), coords()), |(c, e)| {
        let (a, b) = (elem(&f, &c, 1), elem(&f, &e, 1));
        let (na, nb) = (relative_norm(&a, &g).unwrap(), relative_norm(&b, &g).unwrap());
        prop_assert!(rq.contains(&na));
        prop_assert_eq!(relative_norm(&a.mul(&b), &g).unwrap(), na.mul(&nb));
        // an element of the subfield has norm N'(·)² over Q
        prop_assert_eq!(na.norm(), a.norm() * a.norm());
        Ok(())
    })
}

pub fn embeddings_are_ring_maps() -> Result<(), String> {
    check(CASES, (0usize..5, coords(), coords()), |(i, c, e)| {
        let f = field(i);
        let (a, b) = (elem(&f, &c, 1), elem(&f, &e, 1));
        for place in 0..f.num_places() {
            let ab = a.mul(&b).embed(place, 60).abs2();
            let prod = a.embed(place, 60).abs2().mul(&b.embed(place, 60).abs2());
            prop_assert!(ab.lo <= prod.hi && prod.lo <= ab.hi, "place {}", place);
        }
        Ok(())
    })
}

fn int_matrix(n: usize) -> impl Strategy<Value = IMat> {
    prop::collection::vec(-9i64..=9, n * n).prop_map(move |v| v.chunks(n).map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
}

fn nonsingular() -> impl Strategy<Value = IMat> {
    (2usize..=4).prop_flat_map(int_matrix).prop_filter("nonsingular", |m| !det(&to_qmat(m)).is_zero())
}

fn gram(m: &IMat) -> GramPoint<BigRational> {
    let q = to_qmat(m);
    GramPoint::new_unchecked(mat_mul(&q, &transpose(&q)))
}

pub fn iwasawa_reconstructs() -> Result<(), String> {
    check(CASES, nonsingular(), |m| {
        let p = GramPoint::new(gram(&m).matrix().clone()).unwrap();
        let n = p.dim();
        let qnn = p.matrix()[n - 1][n - 1].clone();
        let scaled: Vec<Vec<BigRational>> = p.matrix().iter().map(|r| r.iter().map(|x| x / &qnn).collect()).collect();
        let c = p.iwasawa();
        prop_assert_eq!(c.reconstruct(), scaled);
        prop_assert!(c.r2.iter().all(|r| r.is_positive()));
        Ok(())
    })
}

pub fn lll_output_is_reduced() -> Result<(), String> {
    check(CASES, (nonsingular(), 2i64..4), |(m, num)| {
        let omega = BigRational::new(num.into(), 4.into());
        let p = gram(&m);
        let u = p.lll_reduce(&omega);
        prop_assert!(is_unimodular(&u));
        prop_assert!(act_inverse(&u, &p).membership_lll(&omega));
        Ok(())
    })
}

pub fn action_is_associative() -> Result<(), String> {
    let triple = (2usize..=4).prop_flat_map(|n| (int_matrix(n), int_matrix(n), int_matrix(n)));
    check(CASES, triple, |(m, g, h)| {
        let p = gram(&m);
        let (lhs, rhs) = (p.act(&g).act(&h), p.act(&imul(&h, &g)));
        prop_assert_eq!(lhs.matrix(), rhs.matrix());
        Ok(())
    })
}

fn rat() -> impl Strategy<Value = BigRational> {
    (-1000i64..1000, 1i64..200).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

pub fn interval_ops_are_sound() -> Result<(), String> {
    check(CASES, (rat(), rat(), rat(), rat()), |(a, b, e, f)| {
        let ia = Interval::new(&a - e.abs(), &a + e.abs());
        let ib = Interval::new(&b - f.abs(), &b + f.abs());
        prop_assert!(ia.add(&ib).contains(&(&a + &b)));
        prop_assert!(ia.sub(&ib).contains(&(&a - &b)));
        prop_assert!(ia.mul(&ib).contains(&(&a * &b)));
        prop_assert!(ia.sqr().contains(&(&a * &a)));
        prop_assert!(ia.round_out(16).contains(&a));
        Ok(())
    })
}

pub fn sqrt_encloses() -> Result<(), String> {
    check(CASES, (rat(), 4u32..80), |(a, bits)| {
        let a = a.abs();
        let s = Interval::point(a.clone()).sqrt(bits);
        prop_assert!(&s.lo * &s.lo <= a && a <= &s.hi * &s.hi);
        Ok(())
    })
}

fn pcf_cases() -> Vec<(u64, u64)> {
    (1..=30).filter(|&d| squarefree(d)).flat_map(|d| split_primes(d, 13).into_iter().map(move |p| (d, p))).collect()
}

/// `x_{k+1} = B_k⁻¹·x_1`, `det = 1`, digit ranges, the mod `p²` condition and `x_{k+1} ∈ 𝒟`.
pub fn pcf_loops_are_consistent() -> Result<(), String> {
    let all = pcf_cases();
    check(CASES, (prop::sample::select(all), -40i64..40, 1i64..40, 1i64..12), |((d, p), x, y, den)| {
        let root = (1..p).find(|r| (r * r + d) % p == 0).unwrap();
        let emb = PadicEmbedding::new(d, p, root).unwrap();
        let f = quadratic_field(d).unwrap();
        let z = f.element(vec![BigRational::new(x.into(), den.into()), BigRational::new(y.into(), den.into())]);
        let e = pcf_expand_partial(&z, &emb, 6).unwrap();
        let p2 = BigInt::from(p * p);
        for (k, l) in e.loops.iter().enumerate() {
            prop_assert_eq!(&mobius(&l.b_inv, &z), &l.x_next);
            prop_assert!(det(&l.a_inv).is_one() && det(&l.b_inv).is_one());
            prop_assert!(!l.a.is_negative() && l.a < p2);
            let zk = mobius(&l.d_mat, e.x(k + 1));
            let shifted = zk.sub(&f.from_q(BigRational::from_integer(l.a.clone())));
            prop_assert!(shifted.is_zero() || valuation_and_residue(&shifted, &emb, 0).0 >= 2);
            prop_assert!(in_fundamental_domain(&l.x_next, d));
        }
        Ok(())
    })
}

/// `t_{k−1} < u_k ≤ t_k`, `s_k ≤ t_{k−1}` and `B_k = B_{k−1}·A_k`, exactly.
pub fn gcf_windows_advance() -> Result<(), String> {
    let d = (2u64..60).prop_filter("squarefree", |&d| squarefree(d));
    check(CASES, (d, 4usize..8), |(d, steps)| {
        let run = super::forward(&format!("x^2 - {d}"), None, Some(steps));
        let mut st = run.steps.clone();
        for k in 1..st.len() {
            prop_assert_eq!(&st[k].b, &imul(&st[k - 1].b, &st[k].a));
            let u = st[k].u.clone();
            prop_assert_eq!(st[k - 1].t.cmp_q(&u), Ordering::Less);
            prop_assert_ne!(st[k].t.cmp_q(&u), Ordering::Less);
            let (prev, cur) = st.split_at_mut(k);
            prop_assert_ne!(cur[0].s.cmp(&mut prev[k - 1].t), Ordering::Greater);
            prop_assert_eq!(prev[k - 1].t.cmp(&mut cur[0].t), Ordering::Less);
        }
        Ok(())
    })
}

/// The same for complex cubic fields, with fewer cases since each run is slower.
pub fn gcf_cubic_windows_advance(cases: u32) -> Result<(), String> {
    check(cases, (prop::sample::select(vec![2u64, 3, 5, 6, 7]), 3usize..5), |(d, steps)| {
        let run = super::forward(&format!("x^3 - {d}"), None, Some(steps));
        let mut st = run.steps.clone();
        for k in 1..st.len() {
            prop_assert_eq!(&st[k].b, &imul(&st[k - 1].b, &st[k].a));
            let u = st[k].u.clone();
            prop_assert_eq!(st[k - 1].t.cmp_q(&u), Ordering::Less);
            let (prev, cur) = st.split_at_mut(k);
            prop_assert_eq!(prev[k - 1].t.cmp(&mut cur[0].t), Ordering::Less);
        }
        Ok(())
    })
}

/// Every suite, in a fixed order.
pub fn all() -> Vec<(&'static str, fn() -> Result<(), String>)> {
    vec![
        ("phi∘iota identity", phi_inverts_iota as fn() -> Result<(), String>),
        ("det∘iota = norm", det_of_iota_is_norm),
        ("norm multiplicativity", norm_is_multiplicative),
        ("relative norm multiplicativity", relative_norm_is_multiplicative),
        ("embeddings", embeddings_are_ring_maps),
        ("Iwasawa reconstruction", iwasawa_reconstructs),
        ("LLL post-verified membership", lll_output_is_reduced),
        ("action associativity", action_is_associative),
        ("interval soundness", interval_ops_are_sound),
        ("sqrt enclosure", sqrt_encloses),
        ("pcf Möbius consistency", pcf_loops_are_consistent),
        ("t_k monotonicity", gcf_windows_advance),
    ]
}
