//! Normal forms of GL2(Q_3) cosets.

use geocf::pcf::{normal_form_matrix, padic_normal_form, same_coset};
use num_rational::BigRational;

fn main() -> geocf::Result<()> {
    let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    let ms = [
        vec![vec![r(9, 1), r(0, 1)], vec![r(0, 1), r(1, 1)]],
        vec![vec![r(3, 1), r(2, 1)], vec![r(0, 1), r(1, 1)]],
        vec![vec![r(1, 2), r(5, 3)], vec![r(7, 1), r(2, 9)]],
    ];
    for m in &ms {
        let nf = padic_normal_form(m, 3)?;
        let n = normal_form_matrix(&nf, 3);
        println!("{nf:?}  same coset: {}", same_coset(m, &n, 3));
    }
    Ok(())
}
