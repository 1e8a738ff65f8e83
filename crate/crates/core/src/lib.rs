//! Munarini graphs, generalized Pell graphs, and the machinery around them.
//!
//! For an arity `k >= 1` the Munarini graph `M(n, k)` has as vertices the
//! length-`n` words over `{0, ..., k}` whose maximal runs of the top symbol
//! `k` all have even length, with edges given by replacing a single `0` by
//! some `i` in `{1, ..., k-1}` (or back) or a factor `00` by `kk` (or back).
//! `M(n, 1)` is the Fibonacci cube of order `n - 1` and `M(n, 2)` is the
//! Pell graph of order `n`. The companion family, the generalized Pell
//! graph `Pi(n, k)` for `k >= 2`, keeps the vertex set but swaps the edge
//! rules: a single symbol moves by one (`i <-> i+1`, `i <= k-2`) or a
//! factor `(k-1)(k-1)` flips to `kk`.
//!
//! The crate is organized around four modules:
//!
//! - [`strings`]: the underlying words, their lexicographic enumeration,
//!   and the binary block encoding into Fibonacci strings of length `k*n`.
//! - [`graphs`]: adjacency construction for both families plus the small
//!   companion graphs (Fibonacci cubes, Pell graphs, hypercubes, stars),
//!   the fundamental decomposition, explicit isomorphisms, and
//!   serialization (edge list, DOT, JSON).
//! - [`embedding`]: hypercube embeddings — isometry, daisy (downward
//!   closure), and median checks, and censuses of induced subcubes.
//! - [`poly`]: exact integer polynomials and rational series, and the
//!   weight / cube / distance-cube / maximal-cube polynomials of the two
//!   families.
//!
//! With the default `parallel` feature the census-style scans fan out over
//! rayon; results are merged in index order, so enabling or disabling the
//! feature never changes any output.

pub mod embedding;
pub mod error;
mod exec;
pub mod graphs;
pub mod poly;
pub mod strings;

pub use error::{Error, Result};
