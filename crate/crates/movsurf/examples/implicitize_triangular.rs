//! A non-proper parametrization: the planar cubic (s^3, t^3, u^3,
//! s^3+t^3+u^3) covers its image plane nine-to-one, and the computed
//! implicit polynomial is the ninth power of the plane.
//!
//! ```text
//! cargo run --example implicitize_triangular
//! ```

use movsurf::implicitize::{implicit_direct_resultant, implicit_moving_quadrics};
use movsurf::input::parse_surface;

fn main() -> Result<(), movsurf::Error> {
    let surface = parse_surface(include_str!("../samples/triangular_cubic.txt"))?;

    // The moving-quadric route needs a nonsingular restricted matrix; this
    // surface has six moving planes of degree 2 instead of three, so the
    // hypothesis fails and the method refuses.
    match implicit_moving_quadrics(&surface) {
        Err(e) => println!("moving quadrics: {}", e),
        Ok(_) => println!("moving quadrics unexpectedly succeeded"),
    }

    let out = implicit_direct_resultant(&surface)?;
    println!(
        "direct resultant: degree {} polynomial",
        out.f.total_degree()
    );
    println!("F = constant * ({})^{}", out.base, out.exponent);
    Ok(())
}
