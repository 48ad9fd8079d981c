//! Solve for the moving planes and moving quadrics that follow a surface.
//!
//! ```text
//! cargo run --example moving_spaces
//! ```

use movsurf::input::parse_surface;
use movsurf::moving::moving_space_basis;
use movsurf::Sigma;

fn main() -> Result<(), movsurf::Error> {
    let surface = parse_surface(include_str!("../samples/tensor_bilinear.txt"))?;

    println!("surface: x1=s*t+u*v  x2=s*v  x3=u*t  x4=s*v+u*t+u*v\n");

    for (d, sigma, what) in [
        (1, Sigma::Bi(1, 0), "moving planes of bidegree (1,0)"),
        (1, Sigma::Bi(1, 1), "moving planes of bidegree (1,1)"),
        (2, Sigma::Bi(1, 1), "moving quadrics of bidegree (1,1)"),
    ] {
        let basis = moving_space_basis(&surface, d, sigma)?;
        println!("{}: dimension {}", what, basis.len());
        if basis.len() <= 4 {
            for (i, b) in basis.iter().enumerate() {
                println!("  b{} = {}", i + 1, b);
                assert!(b.follows(&surface));
            }
        }
        println!();
    }

    let cubic = parse_surface(include_str!("../samples/triangular_cubic.txt"))?;
    let constants = moving_space_basis(&cubic, 1, Sigma::Tri(0))?;
    println!(
        "planar cubic, moving planes of degree 0: dimension {}",
        constants.len()
    );
    for b in &constants {
        println!("  {}", b);
    }
    Ok(())
}
