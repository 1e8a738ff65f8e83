//! Exact integer polynomials, rational generating functions, and the
//! counting polynomials of the two graph families.
//!
//! Everything here is computed over arbitrary-precision integers; no
//! floating point is involved anywhere. The counting polynomials come in
//! at least two independently implemented routes each (closed recurrence,
//! coefficient formula, generating-function expansion) so the test suite
//! can cross-check them:
//!
//! - weight polynomial `W(n, k)`: coefficient of `x^d` counts vertices of
//!   weight d; satisfies `W_n = (1 + (k-1)x) W_(n-1) + x W_(n-2)` and has
//!   generating function `1 / (1 - t - (k-1)xt - xt^2)`.
//! - cube polynomial `C(n, k) = W(n, k)(x + 1)`: coefficient of `x^p`
//!   counts induced p-dimensional subcubes.
//! - distance cube polynomial `D(n, k)(x, q) = W(x + q)`: coefficient of
//!   `x^p q^d` counts induced p-cubes whose bottom vertex sits at distance
//!   d from the all-zero string.
//! - maximal cube polynomial `H(n, k)` (k >= 2): coefficient of `x^p`
//!   counts maximal induced p-cubes; `h_p = (k-1)^(2p-n) * C(p, n-p)`.
//! - cube number `q(n, k) = C(n, k)(1)`, with generating function
//!   `1 / (1 - (2k-1)t - 2t^2)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graphs;

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, stored ascending with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_bigints(vec![c.into()])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Self::from_coeffs(&[0, 1])
    }

    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_bigints(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_bigints(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_bigints(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Self {
        Self::from_bigints(self.coeffs.iter().map(|a| -a).collect())
    }

    /// Evaluates at an integer point by Horner's rule.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_bigints(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i as i64 + 1))
                .collect(),
        )
    }

    /// Substitutes `x + c` for x (Horner in polynomial arithmetic).
    pub fn shifted(&self, c: i64) -> Self {
        let lin = Self::from_coeffs(&[c, 1]);
        let mut acc = Self::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(coeff.clone());
        }
        acc
    }

    /// Substitutes a bivariate argument for x (Horner again); used to form
    /// `W(x + q)` and `C(x + q - 1)`.
    pub fn compose_bipoly(&self, arg: &BiPoly) -> BiPoly {
        let mut acc = BiPoly::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = acc.mul(arg).add(&BiPoly::constant(coeff.clone()));
        }
        acc
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_bigints((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_bigints((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_bigints(out)
    }
}

impl fmt::Display for IntPoly {
    /// Canonical ascending text form: `1 + 5*x + 4*x^2`. Zero terms are
    /// skipped; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, &BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c))
            .collect();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (pos, (exp, coeff)) in terms.iter().enumerate() {
            if pos == 0 {
                if coeff.is_negative() {
                    f.write_str("-")?;
                }
            } else if coeff.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            write!(f, "{}", coeff.abs())?;
            match exp {
                0 => {}
                1 => f.write_str("*x")?,
                e => write!(f, "*x^{e}")?,
            }
        }
        Ok(())
    }
}

/// Sparse bivariate polynomial in x and q, keyed by (x exponent,
/// q exponent) in a sorted map; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = Self::default();
        p.add_term(0, 0, c.into());
        p
    }

    pub fn x() -> Self {
        let mut p = Self::default();
        p.add_term(1, 0, BigInt::one());
        p
    }

    pub fn q() -> Self {
        let mut p = Self::default();
        p.add_term(0, 1, BigInt::one());
        p
    }

    pub fn add_term(&mut self, xe: usize, qe: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((xe, qe)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(xe, qe));
        }
    }

    pub fn coeff(&self, xe: usize, qe: usize) -> BigInt {
        self.terms.get(&(xe, qe)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates terms in ascending (x exponent, q exponent) order.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(xe, qe), c) in &rhs.terms {
            out.add_term(xe, qe, c.clone());
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::default();
        for (&(xa, qa), a) in &self.terms {
            for (&(xb, qb), b) in &rhs.terms {
                out.add_term(xa + xb, qa + qb, a * b);
            }
        }
        out
    }

    /// Substitutes a numeric value for q, leaving a polynomial in x.
    pub fn eval_q(&self, q: &BigInt) -> IntPoly {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (&(xe, qe), c) in &self.terms {
            if coeffs.len() <= xe {
                coeffs.resize(xe + 1, BigInt::zero());
            }
            let mut term = c.clone();
            for _ in 0..qe {
                term *= q;
            }
            coeffs[xe] += term;
        }
        IntPoly::from_bigints(coeffs)
    }

    pub fn eval(&self, x: &BigInt, q: &BigInt) -> BigInt {
        self.eval_q(q).eval(x)
    }
}

impl fmt::Display for BiPoly {
    /// Ascending (x exponent, q exponent) text form, e.g.
    /// `1 + 5*q + 4*q^2 + 5*x + 8*x*q + 4*x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (pos, (&(xe, qe), coeff)) in self.terms.iter().enumerate() {
            if pos == 0 {
                if coeff.is_negative() {
                    f.write_str("-")?;
                }
            } else if coeff.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            write!(f, "{}", coeff.abs())?;
            match xe {
                0 => {}
                1 => f.write_str("*x")?,
                e => write!(f, "*x^{e}")?,
            }
            match qe {
                0 => {}
                1 => f.write_str("*q")?,
                e => write!(f, "*q^{e}")?,
            }
        }
        Ok(())
    }
}

/// A rational generating function in t with `IntPoly` coefficients:
/// `num(t) / den(t)` where the entries of `num` and `den` are polynomials
/// in x. Expansion extracts the linear recurrence the denominator encodes
/// rather than performing long division.
#[derive(Clone, Debug)]
pub struct RationalSeries {
    num: Vec<IntPoly>,
    den: Vec<IntPoly>,
}

impl RationalSeries {
    /// The constant term of the denominator must be a unit (+1 or -1) so
    /// the series expansion stays over the integers.
    pub fn new(num: Vec<IntPoly>, den: Vec<IntPoly>) -> Result<Self> {
        let d0 = den.first().cloned().unwrap_or_default();
        if d0 != IntPoly::one() && d0 != IntPoly::constant(-1) {
            return Err(Error::UnsupportedParameter(
                "series denominator constant term must be +1 or -1".into(),
            ));
        }
        Ok(Self { num, den })
    }

    pub fn num(&self) -> &[IntPoly] {
        &self.num
    }

    pub fn den(&self) -> &[IntPoly] {
        &self.den
    }

    /// Coefficients of `t^0 ... t^order`. With denominator
    /// `d0 + d1 t + ...`, the coefficients satisfy
    /// `d0 a_m = num_m - sum_(j>=1) d_j a_(m-j)`.
    pub fn expand(&self, order: usize) -> Vec<IntPoly> {
        let negate = self.den[0] == IntPoly::constant(-1);
        let mut out: Vec<IntPoly> = Vec::with_capacity(order + 1);
        for m in 0..=order {
            let mut acc = self.num.get(m).cloned().unwrap_or_default();
            for j in 1..self.den.len().min(m + 1) {
                acc = &acc - &(&self.den[j] * &out[m - j]);
            }
            if negate {
                acc = acc.neg();
            }
            out.push(acc);
        }
        out
    }
}

/// `1 / (1 - kt - t^2)`: coefficient of `t^n` is the vertex count
/// `F(n+1, k)`.
pub fn order_series(k: u8) -> RationalSeries {
    RationalSeries::new(
        vec![IntPoly::one()],
        vec![
            IntPoly::one(),
            IntPoly::constant(-(k as i64)),
            IntPoly::constant(-1),
        ],
    )
    .expect("unit denominator")
}

/// `t / (1 - kt - t^2)`: coefficient of `t^n` is `F(n, k)`.
pub fn fib_series(k: u8) -> RationalSeries {
    RationalSeries::new(
        vec![IntPoly::zero(), IntPoly::one()],
        vec![
            IntPoly::one(),
            IntPoly::constant(-(k as i64)),
            IntPoly::constant(-1),
        ],
    )
    .expect("unit denominator")
}

/// `((k-1)t + t^2) / (1 - kt - t^2)^2`: coefficient of `t^n` is the edge
/// count of `M(n, k)`.
pub fn edge_series(k: u8) -> RationalSeries {
    let kk = k as i64;
    RationalSeries::new(
        vec![IntPoly::zero(), IntPoly::constant(kk - 1), IntPoly::one()],
        // (1 - kt - t^2)^2 expanded.
        vec![
            IntPoly::one(),
            IntPoly::constant(-2 * kk),
            IntPoly::constant(kk * kk - 2),
            IntPoly::constant(2 * kk),
            IntPoly::one(),
        ],
    )
    .expect("unit denominator")
}

/// `1 / (1 - t - (k-1)xt - xt^2)`: coefficient of `t^n` is the weight
/// polynomial `W(n, k)`.
pub fn weight_gf(k: u8) -> RationalSeries {
    RationalSeries::new(
        vec![IntPoly::one()],
        vec![
            IntPoly::one(),
            IntPoly::from_coeffs(&[-1, -(k as i64 - 1)]),
            IntPoly::from_coeffs(&[0, -1]),
        ],
    )
    .expect("unit denominator")
}

/// `1 / (1 - kt - (k-1)xt - (1+x)t^2)`: coefficient of `t^n` is the cube
/// polynomial `C(n, k)`.
pub fn cube_gf(k: u8) -> RationalSeries {
    RationalSeries::new(
        vec![IntPoly::one()],
        vec![
            IntPoly::one(),
            IntPoly::from_coeffs(&[-(k as i64), -(k as i64 - 1)]),
            IntPoly::from_coeffs(&[-1, -1]),
        ],
    )
    .expect("unit denominator")
}

/// `1 / (1 - (k-1)xt - xt^2)` (k >= 2): coefficient of `t^n` is the
/// maximal cube polynomial `H(n, k)`, shared by both families.
pub fn maximal_cube_gf(k: u8) -> Result<RationalSeries> {
    if k < 2 {
        return Err(Error::UnsupportedParameter(
            "maximal cube polynomial is defined for arity >= 2".into(),
        ));
    }
    RationalSeries::new(
        vec![IntPoly::one()],
        vec![
            IntPoly::one(),
            IntPoly::from_coeffs(&[0, -(k as i64 - 1)]),
            IntPoly::from_coeffs(&[0, -1]),
        ],
    )
}

/// `1 / (1 - (2k-1)t - 2t^2)`: coefficient of `t^n` is the cube number
/// `q(n, k) = C(n, k)(1)`.
pub fn cube_number_gf(k: u8) -> RationalSeries {
    RationalSeries::new(
        vec![IntPoly::one()],
        vec![
            IntPoly::one(),
            IntPoly::constant(-(2 * k as i64 - 1)),
            IntPoly::constant(-2),
        ],
    )
    .expect("unit denominator")
}

/// k-Fibonacci numbers: `F(n) = k F(n-1) + F(n-2)`, `F(0) = 0`,
/// `F(1) = 1`. `F(n+1, k)` counts the generalized Pell strings of
/// length n; k = 1 gives the Fibonacci numbers and k = 2 the Pell
/// numbers.
pub fn fib_k(n: usize, k: u8) -> BigInt {
    let kk = BigInt::from(k as i64);
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    for _ in 0..n {
        let c = &kk * &b + &a;
        a = b;
        b = c;
    }
    a
}

/// Binomial coefficient with out-of-range arguments returning 0 silently
/// (`b < 0`, `b > a`, or `a < 0`), which keeps the coefficient formulas
/// free of explicit boundary cases.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || b > a || a < 0 {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut result = BigInt::one();
    for i in 1..=b {
        result = result * BigInt::from(a - b + i) / BigInt::from(i);
    }
    result
}

fn ipow(base: i64, exp: usize) -> BigInt {
    let mut result = BigInt::one();
    let base = BigInt::from(base);
    for _ in 0..exp {
        result *= &base;
    }
    result
}

/// Weight polynomial via its recurrence
/// `W_n = (1 + (k-1)x) W_(n-1) + x W_(n-2)`, `W_0 = 1` (and `W_(-1) = 0`).
pub fn weight_poly(n: usize, k: u8) -> IntPoly {
    let mult = IntPoly::from_coeffs(&[1, k as i64 - 1]);
    let x = IntPoly::x();
    let mut prev = IntPoly::zero();
    let mut cur = IntPoly::one();
    for _ in 0..n {
        let next = &(&mult * &cur) + &(&x * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Weight polynomial via the closed coefficient formula
/// `w_d = sum_j C(d, j) C(n-j, d) (k-1)^(d-j)`.
pub fn weight_poly_by_formula(n: usize, k: u8) -> IntPoly {
    let mut coeffs = Vec::with_capacity(n + 1);
    for d in 0..=n {
        let mut c = BigInt::zero();
        for j in 0..=d {
            c += binomial(d as i64, j as i64)
                * binomial(n as i64 - j as i64, d as i64)
                * ipow(k as i64 - 1, d - j);
        }
        coeffs.push(c);
    }
    IntPoly::from_bigints(coeffs)
}

/// Cube polynomial, defined as the weight polynomial shifted by one:
/// `C(x) = W(x + 1)`. Its coefficient of `x^p` counts induced p-cubes;
/// `C(0)` is the vertex count and the linear coefficient the edge count.
pub fn cube_poly(n: usize, k: u8) -> IntPoly {
    weight_poly(n, k).shifted(1)
}

/// Cube polynomial via the double-sum coefficient formula
/// `c_p = sum_(d=p..n) sum_j C(d, p) C(d, j) C(n-j, d) (k-1)^(d-j)`.
pub fn cube_poly_by_formula(n: usize, k: u8) -> IntPoly {
    let mut coeffs = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let mut c = BigInt::zero();
        for d in p..=n {
            for j in 0..=d {
                c += binomial(d as i64, p as i64)
                    * binomial(d as i64, j as i64)
                    * binomial(n as i64 - j as i64, d as i64)
                    * ipow(k as i64 - 1, d - j);
            }
        }
        coeffs.push(c);
    }
    IntPoly::from_bigints(coeffs)
}

/// Distance cube polynomial `D(x, q) = W(x + q)`; the coefficient of
/// `x^p q^d` counts induced p-cubes whose bottom vertex lies at distance d
/// from the all-zero string. Equivalently `C(x + q - 1)`.
pub fn distance_cube_poly(n: usize, k: u8) -> BiPoly {
    let arg = BiPoly::x().add(&BiPoly::q());
    weight_poly(n, k).compose_bipoly(&arg)
}

/// Maximal cube polynomial via its recurrence
/// `H_n = (k-1)x H_(n-1) + x H_(n-2)`, `H_0 = 1`; defined for k >= 2 and
/// identical for the Munarini and generalized Pell graphs of equal order.
pub fn maximal_cube_poly(n: usize, k: u8) -> Result<IntPoly> {
    if k < 2 {
        return Err(Error::UnsupportedParameter(
            "maximal cube polynomial is defined for arity >= 2".into(),
        ));
    }
    let mult = IntPoly::from_coeffs(&[0, k as i64 - 1]);
    let x = IntPoly::x();
    let mut prev = IntPoly::zero();
    let mut cur = IntPoly::one();
    for _ in 0..n {
        let next = &(&mult * &cur) + &(&x * &prev);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Maximal cube polynomial via the closed coefficient formula
/// `h_p = (k-1)^(2p-n) C(p, n-p)`, zero whenever `2p < n`.
pub fn maximal_cube_poly_by_formula(n: usize, k: u8) -> Result<IntPoly> {
    if k < 2 {
        return Err(Error::UnsupportedParameter(
            "maximal cube polynomial is defined for arity >= 2".into(),
        ));
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (p, c) in coeffs.iter_mut().enumerate() {
        if 2 * p >= n {
            *c = ipow(k as i64 - 1, 2 * p - n) * binomial(p as i64, n as i64 - p as i64);
        }
    }
    Ok(IntPoly::from_bigints(coeffs))
}

/// Total number of induced subcubes of all dimensions: `C(n, k)(1)`.
pub fn cube_number(n: usize, k: u8) -> BigInt {
    cube_poly(n, k).eval(&BigInt::one())
}

/// First `order + 1` cube numbers via the generating function
/// `1 / (1 - (2k-1)t - 2t^2)`.
pub fn cube_number_series(k: u8, order: usize) -> Result<Vec<BigInt>> {
    if k == 0 {
        return Err(Error::UnsupportedParameter("arity must be at least 1".into()));
    }
    cube_number_gf(k)
        .expand(order)
        .into_iter()
        .map(|p| match p.degree() {
            None | Some(0) => Ok(p.coeff(0)),
            Some(d) => Err(Error::Internal(format!(
                "cube number series produced a degree-{d} coefficient"
            ))),
        })
        .collect()
}

/// Total weight of all vertices, `W'(1)`, which equals the edge count of
/// the Munarini graph.
pub fn total_weight(n: usize, k: u8) -> BigInt {
    weight_poly(n, k).derivative().eval(&BigInt::one())
}

/// The degree data used to separate the two families: the weight
/// polynomial forces maximum degree `kn - 1` on any daisy cube with these
/// counting polynomials, while the measured maximum degree of
/// `Pi(n, k)` is `2n` for k >= 3 — so those generalized Pell graphs are
/// not daisy cubes.
#[derive(Clone, Debug)]
pub struct MaxDegreeWitness {
    pub n: usize,
    pub k: u8,
    /// Linear coefficient of the weight polynomial; equals `kn - 1` for
    /// n >= 1 and is the degree of the all-zero vertex in any daisy cube
    /// with this weight polynomial.
    pub weight_linear_coeff: BigInt,
    /// Measured degree of `0^n` in the built Munarini graph.
    pub zero_vertex_degree: usize,
    /// Measured maximum degree of the built generalized Pell graph
    /// (`None` for k = 1, where the family is not defined).
    pub genpell_max_degree: Option<usize>,
}

impl MaxDegreeWitness {
    /// `Some(true)` when the measured generalized Pell maximum degree
    /// contradicts the daisy-cube degree forced by the weight polynomial.
    pub fn degree_conflict(&self) -> Option<bool> {
        self.genpell_max_degree
            .map(|d| BigInt::from(d as i64) != self.weight_linear_coeff)
    }
}

/// Builds both graphs and reports the measured degrees next to the weight
/// polynomial's linear coefficient. Defined for n >= 1.
pub fn max_degree_witness(n: usize, k: u8) -> Result<MaxDegreeWitness> {
    if n == 0 {
        return Err(Error::UnsupportedParameter(
            "degree witness is defined for n >= 1".into(),
        ));
    }
    let w = weight_poly(n, k);
    let munarini = graphs::build_munarini(n, k)?;
    let zero = munarini
        .vertex_index_of_pell(&crate::strings::PellString::zeros(n, k))
        .ok_or_else(|| Error::Internal("all-zero vertex missing".into()))?;
    let genpell_max_degree = if k >= 2 {
        let pi = graphs::build_generalized_pell(n, k)?;
        Some(pi.max_degree())
    } else {
        None
    };
    Ok(MaxDegreeWitness {
        n,
        k,
        weight_linear_coeff: w.coeff(1),
        zero_vertex_degree: munarini.degree(zero),
        genpell_max_degree,
    })
}

/// Compares two polynomials and reports the first differing coefficient;
/// used by the verification suites for readable failure output.
pub fn first_coeff_mismatch(a: &IntPoly, b: &IntPoly) -> Option<(usize, BigInt, BigInt)> {
    let n = a.coeffs.len().max(b.coeffs.len());
    for i in 0..n {
        let (ca, cb) = (a.coeff(i), b.coeff(i));
        match ca.cmp(&cb) {
            Ordering::Equal => {}
            _ => return Some((i, ca, cb)),
        }
    }
    None
}
