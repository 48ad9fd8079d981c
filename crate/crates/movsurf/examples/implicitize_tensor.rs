//! Implicitize a tensor-product surface by moving quadrics and by the
//! direct resultant, and validate the result on random surface points.
//!
//! ```text
//! cargo run --example implicitize_tensor
//! ```

use movsurf::implicitize::{
    implicit_direct_resultant, implicit_moving_quadrics, validate_on_surface,
};
use movsurf::input::parse_surface;

fn main() -> Result<(), movsurf::Error> {
    let surface = parse_surface(include_str!("../samples/tensor_bilinear.txt"))?;

    let mq = implicit_moving_quadrics(&surface)?;
    println!("moving quadrics:   F = {}", mq.f);

    let dr = implicit_direct_resultant(&surface)?;
    println!("direct resultant:  F = {}", dr.f);
    println!("same irreducible part: {}", mq.base == dr.base);

    let report = validate_on_surface(&mq.f, &surface, 25, 7)?;
    println!(
        "validation: {}/{} random image points vanish exactly",
        report.zeros, report.trials
    );
    Ok(())
}
