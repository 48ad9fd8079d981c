//! Build the moving-surface coefficient matrices MP, MQ^2, MS^2, MT^2 and
//! print them with their row/column labels.
//!
//! ```text
//! cargo run --example matrices
//! ```

use movsurf::input::parse_surface;
use movsurf::moving::{build_mp, build_mqd, build_msd, build_mtd};
use movsurf::verify::render_matrix;

fn main() -> Result<(), movsurf::Error> {
    let surface = parse_surface(include_str!("../samples/tensor_bilinear.txt"))?;

    let mp = build_mp(&surface);
    print!("{}", render_matrix("MP", &mp));
    println!("|MP| = {}\n", movsurf::rat::rat_string(&mp.det()?));

    let mq2 = build_mqd(&surface, 2)?;
    println!(
        "MQ^2 is {} x {} (kernel = moving quadrics of bidegree (0,0))",
        mq2.rows(),
        mq2.cols()
    );
    println!("nullity(MQ^2) = {}\n", mq2.nullspace().len());

    print!("{}", render_matrix("MS^2", &build_msd(&surface, 2, None)?));
    println!();
    print!("{}", render_matrix("MT^2", &build_mtd(&surface, 2, None)?));
    Ok(())
}
