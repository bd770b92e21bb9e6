//! Exact arithmetic in Q(2^{1/3}): norms, inverses, embeddings and the multiplication embedding.

use geocf::linalg::format_mat;
use geocf::numberfield::{mult_matrix, phi, NumberField};

fn main() -> geocf::Result<()> {
    let f = NumberField::parse("x^3 - 2")?;
    println!("signature {:?}, discriminant {}", f.signature(), f.discriminant());

    let a = f.parse_element("x^2 + x + 1")?;
    println!("a = {a}, N(a) = {}, Tr(a) = {}", a.norm(), a.trace());
    println!("a^-1 = {}", a.inv()?);

    for (place, z) in a.approx_embeddings().iter().enumerate() {
        println!("place {place}: {z:.6}");
    }

    let w = f.default_basis();
    let m = mult_matrix(&a, &w);
    println!("matrix of a on (θ^2, θ, 1): {}", format_mat(&m));
    println!("recovered from the matrix: {}", phi(&m, &w)?);
    Ok(())
}
