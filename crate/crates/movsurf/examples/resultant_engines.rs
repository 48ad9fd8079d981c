//! Compute one resultant three ways: as the determinant of the Koszul
//! complex, as a Dixon determinant (tensor case) and as a Macaulay minor
//! ratio (triangular case). The engines agree up to sign on every input.
//!
//! ```text
//! cargo run --example resultant_engines
//! ```

use movsurf::parse_poly;
use movsurf::rat::rat_string;
use movsurf::resultant::{dixon_matrix, macaulay_res, res_bihom, res_tri};
use movsurf::VarSet;

fn main() -> Result<(), movsurf::Error> {
    // Bidegree (1,1) forms on P1 x P1.
    let f1 = parse_poly("s*t-u*v", VarSet::Tensor)?;
    let f2 = parse_poly("s*v", VarSet::Tensor)?;
    let f3 = parse_poly("u*t", VarSet::Tensor)?;
    let koszul = res_bihom(&f1, &f2, &f3)?;
    let dixon = dixon_matrix(&f1, &f2, &f3)?.det()?;
    println!("Res_(1,1)(s*t-u*v, s*v, u*t):");
    println!("  koszul complex: {}", rat_string(&koszul));
    println!("  dixon matrix:   {}", rat_string(&dixon));

    // A triple with the common root (0:1),(0:1) has vanishing resultant.
    let g1 = parse_poly("s*t", VarSet::Tensor)?;
    let zero = res_bihom(&g1, &f2, &f3)?;
    println!(
        "Res_(1,1)(s*t, s*v, u*t) = {} (common root)\n",
        rat_string(&zero)
    );

    // Ternary cubics on P2.
    let h1 = parse_poly("s^3", VarSet::Triangular)?;
    let h2 = parse_poly("t^3", VarSet::Triangular)?;
    let h3 = parse_poly("u^3", VarSet::Triangular)?;
    let koszul3 = res_tri(&h1, &h2, &h3)?;
    let macaulay = macaulay_res(&h1, &h2, &h3)?;
    println!("Res_3(s^3, t^3, u^3):");
    println!("  koszul complex:  {}", rat_string(&koszul3));
    println!("  macaulay matrix: {}", rat_string(&macaulay));
    Ok(())
}
