//! Iwasawa coordinates and exact LLL reduction of a positive definite Gram matrix.

use geocf::halfspace::{rational_gram, GramPoint};
use geocf::linalg::{format_imat, format_mat};
use num_rational::BigRational;

fn main() -> geocf::Result<()> {
    let omega = BigRational::new(3.into(), 4.into());
    let q = GramPoint::new(rational_gram(&[&[29, 17, 5], &[17, 11, 3], &[5, 3, 2]]))?;
    let iw = q.iwasawa();
    println!("x = {}", format_mat(&iw.x));
    println!("r^2 = {}", iw.r2.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "));
    println!("reduced already? {}", q.membership_lll(&omega));

    let g = q.lll_reduce(&omega);
    let r = q.act(&geocf::linalg::iinverse(&g)?);
    println!("g = {}", format_imat(&g));
    println!("g^-1 Q g^-T = {}", format_mat(r.matrix()));
    println!("reduced now? {}", r.membership_lll(&omega));
    Ok(())
}
