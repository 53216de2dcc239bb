//! Exact elimination over the rationals, and the generic rank of a matrix
//! whose rows are `A_i x` for symbolic `x`.
//!
//!     cargo run --example exact_linalg

use siegel_aut::exact_linalg::{evaluation_matrix, format_rational, int, rat, Matrix, RealMatrix};

fn main() {
    let m = Matrix::from_rows(3, vec![vec![int(1), rat(1, 2), int(0)], vec![int(2), int(1), int(0)]]);
    println!("rank = {}", m.rank());
    for v in m.nullspace_basis() {
        let v: Vec<String> = v.iter().map(format_rational).collect();
        println!("kernel vector ({})", v.join(", "));
    }

    // scalars alone sweep out a line through x, never an open set
    let scalars = [RealMatrix::identity(2)];
    let diagonal = [RealMatrix::diagonal(vec![int(1), int(0)]), RealMatrix::diagonal(vec![int(0), int(1)])];
    println!("generic rank of scalars  = {}", evaluation_matrix(&scalars, 2).generic_rank());
    println!("generic rank of diagonal = {}", evaluation_matrix(&diagonal, 2).generic_rank());
}
