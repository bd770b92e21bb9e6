#![allow(dead_code)]

pub mod golden;
pub mod oracle;
pub mod props;

use geocf::gcf::{run_forward, GcfConfig, GcfRun};
use geocf::geodesic::{heegner_chi, heegner_rank_one, subfield_generator};
use geocf::linalg::IMat;
use geocf::numberfield::NumberField;
use geocf::poly::parse_poly;
use num_bigint::BigInt;

pub fn imat(rows: &[&[i64]]) -> IMat {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Forward run with the default basis; `chi` names the subfield polynomial.
pub fn forward(poly: &str, chi: Option<&str>, steps: Option<usize>) -> GcfRun {
    let f = NumberField::parse(poly).unwrap();
    let w = f.default_basis();
    let g = match chi {
        None => heegner_rank_one(&f, &w).unwrap(),
        Some(s) => heegner_chi(&f, &subfield_generator(&f, &parse_poly(s).unwrap()).unwrap(), &w).unwrap(),
    };
    let mut cfg = GcfConfig::default();
    if let Some(n) = steps {
        cfg.max_steps = n;
        cfg.stop_on_period = false;
    }
    run_forward(&g, &cfg).unwrap()
}

use geocf::gcf::extract_unit;
use geocf::numberfield::FieldElement;
use geocf::pcf::{fundamental_p_unit, pell_solutions_from};
use num_rational::BigRational;

/// Smallest `k ≤ 6` with `ε = ±u^{±k}`, `u` the classical fundamental unit of `Z[√d]`.
pub fn quadratic_index(d: u64) -> Result<u32, String> {
    let run = forward(&format!("x^2 - {d}"), None, None);
    let period = run.require_period().map_err(|e| e.to_string())?;
    let eps = extract_unit(&run, period).map_err(|e| e.to_string())?.epsilon;
    let (x, y, _) = oracle::classical_unit(d);
    let u = FieldElement::new(eps.field(), vec![BigRational::from_integer(x), BigRational::from_integer(y)]);
    let inv = eps.inv().map_err(|e| e.to_string())?;
    let mut pk = u.clone();
    for k in 1..=6 {
        if [&eps, &inv].iter().any(|e| pk == **e || pk == e.neg()) {
            return Ok(k);
        }
        pk = pk.mul(&u);
    }
    Err(format!("d = {d}: ε = {eps} is not ±u^±k for k ≤ 6"))
}

/// Compares `fundamental_p_unit` against the brute-force Pell and principality searches.
pub fn check_p_unit(d: u64, p: u64) -> Result<(usize, usize), String> {
    let root = (1..p).find(|r| (r * r + d) % p == 0).unwrap();
    let r = fundamental_p_unit(d, p, root).map_err(|e| format!("d={d} p={p}: {e}"))?;
    let brute_ord = oracle::ideal_order_brute(d, p, 2 * r.n as u32 + 1).ok_or(format!("d={d} p={p}: no principal power"))?;
    if brute_ord as usize != r.ideal_order {
        return Err(format!("d={d} p={p}: ord {} vs brute {brute_ord}", r.ideal_order));
    }
    let nu = oracle::min_pell_exponent(d, p, r.n as u32).ok_or(format!("d={d} p={p}: no Pell solution with ν ≤ N = {}", r.n))?;
    if nu as usize != r.n {
        return Err(format!("d={d} p={p}: N = {} vs brute ν = {nu}", r.n));
    }
    let mut ours: Vec<(i64, i64)> = pell_solutions_from(&r, 1).iter().map(|s| (s.x.to_string().parse().unwrap(), s.y.to_string().parse().unwrap())).collect();
    let mut brute = oracle::pell_brute(d, p, nu);
    ours.sort();
    brute.sort();
    if ours != brute {
        return Err(format!("d={d} p={p}: Pell solutions {ours:?} vs brute {brute:?}"));
    }
    Ok((r.n, r.ideal_order))
}
