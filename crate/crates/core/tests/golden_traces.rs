mod common;

use common::golden::*;
use common::{forward, imat};
use geocf::gcf::sig6;
use geocf::linalg::{format_imat, iinverse, imul};
use geocf::realalg::to_f64;

fn is_sign_diagonal(d: &[Vec<num_bigint::BigInt>]) -> bool {
    d.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, x)| if i == j { x.magnitude() == &1u32.into() } else { x == &0.into() }))
}

/// `exact`: every `A_k`, `B_k` equal; otherwise `B_k` equal up to a right factor `diag(±1)`.
fn compare(poly: &str, chi: Option<&str>, l: &Listing, exact: bool) {
    let run = forward(poly, chi, Some(l.steps.len()));
    assert_eq!(run.steps[0].b, imat(l.b0), "{poly}: preparation");
    for (k, (a, b)) in l.steps.iter().enumerate() {
        let st = &run.steps[k + 1];
        if exact {
            assert_eq!(st.a, imat(a), "{poly}: A_{}", k + 1);
            assert_eq!(st.b, imat(b), "{poly}: B_{}", k + 1);
        } else {
            let d = imul(&iinverse(&st.b).unwrap(), &imat(b));
            assert!(is_sign_diagonal(&d), "{poly}: B_{} differs by {}", k + 1, format_imat(&d));
        }
    }
    for (k, (s, t)) in l.windows.iter().enumerate() {
        let (ws, wt) = run.window_t(k, 40);
        let show = |x: Option<geocf::realalg::interval::Interval>| x.map(|i| sig6(to_f64(&i.mid()))).unwrap_or("Infinity".into());
        assert_eq!((show(ws).as_str(), show(wt).as_str()), (*s, *t), "{poly}: window {k}");
    }
}

#[test]
fn quadratic_two() {
    compare("x^2 - 2", None, &QUAD2, true);
}

#[test]
fn quadratic_three() {
    compare("x^2 - 3", None, &QUAD3, true);
}

#[test]
fn cubic_two() {
    compare("x^3 - 2", None, &CUBIC2, false);
}

#[test]
fn cubic_three() {
    compare("x^3 - 3", None, &CUBIC3, false);
}

#[test]
fn quartic_two() {
    compare("x^4 + 2", None, &QUARTIC2, false);
}

#[test]
fn chi_quartic_two() {
    compare("x^4 - 2", Some("x^2 - 2"), &CHI2, false);
}
